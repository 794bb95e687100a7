"""Propositional layer: CNF theories, a plain DPLL solver, DIMACS export.

Literals are `(atom_id, polarity)` pairs.  The solver is deliberately
minimal — unit propagation plus chronological backtracking with a fixed
branching order (lowest unassigned atom id, false first) — so model
orders are reproducible and golden tests stay byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .core import AtomTable, Program, ResourceLimitError, interpretation_key

# (atom id, polarity); (3, False) reads "atom 3 is false".
Literal = tuple


@dataclass(frozen=True)
class CnfClause:
    """Disjunction of literals; tautologies never reach this type."""

    literals: frozenset


def make_clause(literals: Iterable[Literal]) -> CnfClause | None:
    """Normalize a literal collection; None when the clause is a tautology."""
    lits = frozenset(literals)
    for atom, polarity in lits:
        if (atom, not polarity) in lits:
            return None
    return CnfClause(lits)


class CnfTheory:
    """Duplicate-free clause list over a shared atom table.

    Tautological input clauses are dropped silently; clause order is
    otherwise preserved, first occurrence winning.
    """

    __slots__ = ("atoms", "clauses")

    def __init__(self, atoms: AtomTable, clauses: Iterable[CnfClause | None]):
        atoms.freeze()
        seen: set[CnfClause] = set()
        kept: list[CnfClause] = []
        for clause in clauses:
            if clause is None or clause in seen:
                continue
            seen.add(clause)
            kept.append(clause)
        self.atoms = atoms
        self.clauses: tuple[CnfClause, ...] = tuple(kept)

    @classmethod
    def from_literals(cls, atoms: AtomTable,
                      clause_lists: Iterable[Iterable[Literal]]) -> "CnfTheory":
        return cls(atoms, (make_clause(lits) for lits in clause_lists))


def clause_satisfied(clause: CnfClause, members: frozenset[int]) -> bool:
    return any((atom in members) == polarity for atom, polarity in clause.literals)


def theory_satisfied(theory: CnfTheory, members: frozenset[int]) -> bool:
    return all(clause_satisfied(c, members) for c in theory.clauses)


def program_to_cnf(program: Program) -> CnfTheory:
    """One clause per program clause: break the body, assert the head."""
    clause_lists = []
    for clause in program.clauses:
        lits = [(q, False) for q in clause.pos_body]
        lits += [(r, True) for r in clause.neg_body]
        lits.append((clause.head, True))
        clause_lists.append(lits)
    return CnfTheory.from_literals(program.atoms, clause_lists)


def subequation_to_cnf(atom: int, guard: frozenset[int] | None) -> list[CnfClause]:
    """Clauses for `-p` (guard None), `p` (empty guard), or `p <-> -S`."""
    if guard is None:
        return [CnfClause(frozenset([(atom, False)]))]
    if not guard:
        return [CnfClause(frozenset([(atom, True)]))]
    clauses = [CnfClause(frozenset([(atom, False), (r, False)])) for r in sorted(guard)]
    back = frozenset([(atom, True)] + [(r, True) for r in guard])
    clauses.append(CnfClause(back))
    return clauses


def equation_to_cnf(atom: int, supports: tuple,
                    max_expansion: int = 200_000) -> list[CnfClause]:
    """Clauses for `p <-> (-S1 | -S2 | ...)` over a support antichain.

    The forward direction distributes a DNF of negated conjunctions, so
    the expansion is capped: the product of support sizes must stay under
    `max_expansion`.
    """
    if not supports:
        return [CnfClause(frozenset([(atom, False)]))]
    if supports == (frozenset(),):
        return [CnfClause(frozenset([(atom, True)]))]
    clauses: list[CnfClause | None] = []
    for support in supports:
        clauses.append(make_clause([(atom, True)] + [(r, True) for r in support]))
    combos = 1
    for support in supports:
        combos *= len(support)
        if combos > max_expansion:
            raise ResourceLimitError(
                f"defining equation for atom id {atom} expands past {max_expansion} clauses")
    for combo in product(*(sorted(s) for s in supports)):
        clauses.append(make_clause([(atom, False)] + [(r, False) for r in combo]))
    return [c for c in clauses if c is not None]


def _unit_propagate(clauses: Iterable[CnfClause], assign: dict) -> CnfClause | None:
    """Extend `assign` to unit closure; return a falsified clause or None."""
    changed = True
    while changed:
        changed = False
        for clause in clauses:
            unassigned: Literal | None = None
            unassigned_count = 0
            satisfied = False
            for atom, polarity in clause.literals:
                value = assign.get(atom)
                if value is None:
                    unassigned = (atom, polarity)
                    unassigned_count += 1
                elif value == polarity:
                    satisfied = True
                    break
            if satisfied:
                continue
            if unassigned_count == 0:
                return clause
            if unassigned_count == 1:
                atom, polarity = unassigned
                assign[atom] = polarity
                changed = True
    return None


def dpll_solve(theory: CnfTheory,
               assumptions: Mapping[int, bool] | None = None) -> dict | None:
    """A total satisfying assignment extending `assumptions`, or None.

    Deterministic: propagate to closure, then branch on the lowest
    unassigned atom id with false first.
    """
    n = len(theory.atoms)
    clauses = theory.clauses

    def search(assign: dict) -> dict | None:
        if _unit_propagate(clauses, assign) is not None:
            return None
        var = next((v for v in range(n) if v not in assign), None)
        if var is None:
            return assign
        for value in (False, True):
            result = search({**assign, var: value})
            if result is not None:
                return result
        return None

    return search(dict(assumptions or {}))


def enumerate_models(theory: CnfTheory) -> list[frozenset[int]]:
    """All models, via DPLL with blocking clauses, in ascending bitmask order."""
    n = len(theory.atoms)
    if n == 0:
        return [] if any(not c.literals for c in theory.clauses) else [frozenset()]
    clauses = list(theory.clauses)
    models: list[frozenset[int]] = []
    while True:
        assignment = dpll_solve(CnfTheory(theory.atoms, clauses))
        if assignment is None:
            break
        model = frozenset(a for a, value in assignment.items() if value)
        models.append(model)
        blocking = CnfClause(frozenset((a, not assignment[a]) for a in range(n)))
        clauses.append(blocking)
    models.sort(key=interpretation_key)
    return models


def export_dimacs(theory: CnfTheory) -> str:
    """Standard DIMACS text: name-map comments, header, one clause per line.

    Variables are 1-based in atom-id order; literals within a clause are
    sorted by atom id.
    """
    n = len(theory.atoms)
    lines = [f"c {i + 1} {name}" for i, name in enumerate(theory.atoms.names)]
    lines.append(f"p cnf {n} {len(theory.clauses)}")
    for clause in theory.clauses:
        lits = sorted(clause.literals)
        encoded = [str(atom + 1 if polarity else -(atom + 1)) for atom, polarity in lits]
        lines.append(" ".join(encoded + ["0"]))
    return "".join(line + "\n" for line in lines)


def parse_dimacs(text: str) -> CnfTheory:
    """Parse DIMACS CNF back into a theory; `c <idx> <name>` comments name atoms."""
    names: dict[int, str] = {}
    clause_lists: list[list[Literal]] = []
    var_count: int | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) == 3 and parts[1].isdigit():
                names[int(parts[1]) - 1] = parts[2]
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"malformed DIMACS header: {line!r}")
            var_count = int(parts[2])
            continue
        values = [int(tok) for tok in line.split()]
        if not values or values[-1] != 0:
            raise ValueError(f"clause line does not end with 0: {line!r}")
        clause_lists.append(
            [(abs(v) - 1, v > 0) for v in values[:-1]])
    if var_count is None:
        raise ValueError("missing DIMACS header")
    table = AtomTable(names.get(i, f"v{i + 1}") for i in range(var_count))
    return CnfTheory.from_literals(table, clause_lists)
