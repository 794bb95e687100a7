"""Defining equations, their models, and the purely negative transform.

Each atom gets one equation over its minimal supports — `p` when the
empty guard supports it, `-p` when nothing does, and `p <-> -S1 | -S2 |
...` otherwise — and the models of the resulting theory are exactly the
stable models.  Dropping non-minimal supports is sound because avoiding
a set means avoiding all its subsets, so dominated disjuncts are
subsumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import AtomTable, Clause, Program, ResourceLimitError
from .guarded import DEFAULT_SUPPORT_CAP, saturate_supports
from .sat import CnfTheory, enumerate_models, equation_to_cnf
from .semantics import brute_force_stable


class EquationShape(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    EQUIV = "equiv"


@dataclass(frozen=True)
class Equation:
    """Defining equation of one atom over its minimal-support antichain."""

    atom: int
    supports: tuple

    @property
    def shape(self) -> EquationShape:
        if not self.supports:
            return EquationShape.NEGATIVE
        if self.supports == (frozenset(),):
            # The empty guard subsumes everything, so it is the whole antichain.
            return EquationShape.POSITIVE
        return EquationShape.EQUIV

    def holds_in(self, members: frozenset[int]) -> bool:
        """Direct semantic reading: the atom holds iff some support is avoided."""
        admitted = any(not (s & members) for s in self.supports)
        return (self.atom in members) == admitted


def format_equation(equation: Equation, table: AtomTable) -> str:
    name = table.name(equation.atom)
    shape = equation.shape
    if shape is EquationShape.NEGATIVE:
        return f"-{name}."
    if shape is EquationShape.POSITIVE:
        return f"{name}."
    disjuncts = [
        " & ".join(f"-{table.name(a)}" for a in sorted(support))
        for support in equation.supports
    ]
    return f"{name} <-> " + " | ".join(disjuncts)


@dataclass(frozen=True)
class CompletionTheory:
    """One equation per atom of the program, in atom-id order."""

    program: Program
    equations: tuple

    def format(self) -> str:
        table = self.program.atoms
        return "".join(format_equation(eq, table) + "\n" for eq in self.equations)


def build_completion(program: Program, *,
                     max_supports_per_atom: int = DEFAULT_SUPPORT_CAP,
                     max_derivations: int | None = None) -> CompletionTheory:
    """Saturate supports and assemble the per-atom equation theory."""
    table = saturate_supports(
        program,
        max_supports_per_atom=max_supports_per_atom,
        max_derivations=max_derivations)
    equations = tuple(
        Equation(atom, table.supports(atom)) for atom in range(len(program.atoms)))
    return CompletionTheory(program, equations)


def models_of_completion(theory: CompletionTheory, cap: int = 20) -> list[frozenset[int]]:
    """All interpretations satisfying every equation, via the SAT layer."""
    n = len(theory.program.atoms)
    if n > cap:
        raise ResourceLimitError(
            f"completion-model enumeration over {n} atoms exceeds the cap of {cap}")
    clauses = []
    for equation in theory.equations:
        clauses.extend(equation_to_cnf(equation.atom, equation.supports))
    return enumerate_models(CnfTheory(theory.program.atoms, clauses))


def dung_transform(program: Program, *,
                   max_supports_per_atom: int = DEFAULT_SUPPORT_CAP,
                   max_derivations: int | None = None) -> Program:
    """Equivalent purely negative program: one clause per minimal support."""
    table = saturate_supports(
        program,
        max_supports_per_atom=max_supports_per_atom,
        max_derivations=max_derivations)
    clauses = [
        Clause(atom, frozenset(), support)
        for atom in range(len(program.atoms))
        for support in table.supports(atom)
    ]
    return Program(program.atoms, clauses)


def _stable_name_sets(program: Program, cap: int) -> set:
    name = program.atoms.name
    return {
        frozenset(name(a) for a in model)
        for model in brute_force_stable(program, cap)
    }


def equivalent(program: Program, other: Program, cap: int = 20) -> bool:
    """Same stable models, compared by atom name across the two tables."""
    return _stable_name_sets(program, cap) == _stable_name_sets(other, cap)
