"""Shared test fixtures: random generators and independent oracles.

The oracles here deliberately avoid the code paths they check: truth
tables instead of DPLL, unpruned saturation instead of antichains, and
a direct propositional reading of clause satisfaction.
"""

from __future__ import annotations

import random
from itertools import product

from guardres import AtomTable, Clause, CnfTheory, Program, parse_program

EXAMPLE_TEXT = "p :- t, not q.\np :- not r.\nq :- not s.\nt.\n"

_NAMES = "abcdefghijkl"


def example_program() -> Program:
    """The four-clause walkthrough program used across the suite."""
    return parse_program(EXAMPLE_TEXT)


def prog(text: str) -> Program:
    return parse_program(text)


def names_of(program: Program, members) -> frozenset:
    return frozenset(program.atoms.name(a) for a in members)


def members_of(program: Program, *names: str) -> frozenset:
    return frozenset(program.atoms.id_of(n) for n in names)


def random_program(rng: random.Random, max_atoms: int = 8,
                   max_clauses: int = 12) -> Program:
    # Skew toward the upper bound; tiny programs exercise little.
    n = rng.randint(max(1, max_atoms // 2), max_atoms)
    table = AtomTable(_NAMES[:n])
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        head = rng.randrange(n)
        pos_size = min(rng.choices([0, 1, 2], weights=[5, 3, 2])[0], n)
        neg_size = min(rng.choices([0, 1, 2], weights=[4, 4, 2])[0], n)
        clauses.append(Clause(
            head,
            frozenset(rng.sample(range(n), k=pos_size)),
            frozenset(rng.sample(range(n), k=neg_size))))
    return Program(table, clauses)


def random_tight_program(rng: random.Random, max_atoms: int = 8,
                         max_clauses: int = 12) -> Program:
    """Tight by construction: positive bodies only reach lower-ranked atoms."""
    n = rng.randint(max(1, max_atoms // 2), max_atoms)
    table = AtomTable(_NAMES[:n])
    rank = {a: rng.randrange(4) for a in range(n)}
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        head = rng.randrange(n)
        lower = [a for a in range(n) if rank[a] < rank[head]]
        pos_size = min(rng.choices([0, 1, 2], weights=[4, 4, 2])[0], len(lower))
        neg_size = min(rng.choices([0, 1, 2], weights=[4, 4, 2])[0], n)
        clauses.append(Clause(
            head,
            frozenset(rng.sample(lower, k=pos_size)),
            frozenset(rng.sample(range(n), k=neg_size))))
    return Program(table, clauses)


def random_cnf(rng: random.Random, max_vars: int = 12) -> CnfTheory:
    # Clause count scales with the variable count so model counts stay at
    # desk scale (blocking-clause enumeration is quadratic in them).
    n = rng.randint(1, max_vars)
    table = AtomTable(f"x{i}" for i in range(n))
    clause_lists = []
    for _ in range(rng.randint(max(2, n), n + 6)):
        width = rng.randint(1, min(3, n))
        atoms = rng.sample(range(n), k=width)
        clause_lists.append([(a, rng.random() < 0.5) for a in atoms])
    return CnfTheory.from_literals(table, clause_lists)


def truth_table_models(theory: CnfTheory) -> list:
    """All models by exhaustive evaluation, ascending bitmask order.

    Independent of the DPLL path: each variable's truth pattern over all
    2^n assignments is a single big integer, and clause/theory evaluation
    is bitwise algebra on those.
    """
    n = len(theory.atoms)
    assignments = 1 << n
    full = (1 << assignments) - 1
    var_true = [
        full ^ (full // ((1 << (1 << i)) + 1))
        for i in range(n)
    ]
    satisfied = full
    for clause in theory.clauses:
        bits = 0
        for atom, polarity in clause.literals:
            bits |= var_true[atom] if polarity else (~var_true[atom] & full)
        satisfied &= bits
    models = []
    while satisfied:
        mask = (satisfied & -satisfied).bit_length() - 1
        models.append(frozenset(i for i in range(n) if (mask >> i) & 1))
        satisfied &= satisfied - 1
    return models


def all_supports(program: Program) -> dict:
    """Every derivable support per atom, with no antichain pruning."""
    supports = {a: set() for a in range(len(program.atoms))}
    for clause in program.clauses:
        if not clause.pos_body:
            supports[clause.head].add(clause.neg_body)
    changed = True
    while changed:
        changed = False
        for clause in program.clauses:
            if not clause.pos_body:
                continue
            pools = [tuple(supports[b]) for b in sorted(clause.pos_body)]
            if not all(pools):
                continue
            for combo in product(*pools):
                guard = clause.neg_body.union(*combo)
                if guard not in supports[clause.head]:
                    supports[clause.head].add(guard)
                    changed = True
    return supports


def minimal_family(guards) -> set:
    uniq = set(guards)
    return {g for g in uniq if not any(h < g for h in uniq)}


def direct_clause_value(members, clause) -> bool:
    """The clause read as a plain disjunction, evaluated literal by literal."""
    return (any(q not in members for q in clause.pos_body)
            or any(r in members for r in clause.neg_body)
            or clause.head in members)
