"""Reference semantics: reducts, least models, stability, levels, tightness.

This module is the slow-but-obviously-correct side of the package.  The
reduct/least-model route *defines* stability, brute-force subset
enumeration provides the oracle every other engine is checked against,
and rank functions certify stability (levels) or syntactic acyclicity
(tightness).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .core import (
    AtomTable,
    Program,
    ResourceLimitError,
    all_interpretations,
    satisfies_program,
)

# Partial map atom id -> natural number.
RankFunction = dict


@dataclass(frozen=True)
class HornClause:
    head: int
    body: frozenset[int]


@dataclass(frozen=True)
class HornProgram:
    """Definite clauses only; what survives a reduct."""

    atoms: AtomTable
    clauses: tuple[HornClause, ...]


def gl_reduct(program: Program, members: frozenset[int]) -> HornProgram:
    """Drop clauses whose negative body meets `members`; strip the rest."""
    kept = tuple(
        HornClause(c.head, c.pos_body)
        for c in program.clauses
        if not (c.neg_body & members))
    return HornProgram(program.atoms, kept)


def derivation_levels(horn: HornProgram) -> dict:
    """First forward-chaining round per derivable atom, facts at round 0.

    Counter-based unit propagation: each clause keeps a count of
    still-underived body atoms and fires when it reaches zero, so the
    whole computation is linear in total body size.
    """
    clauses = horn.clauses
    remaining = [len(c.body) for c in clauses]
    occurs: dict[int, list[int]] = defaultdict(list)
    for idx, clause in enumerate(clauses):
        for atom in clause.body:
            occurs[atom].append(idx)
    level: dict = {}
    frontier: list[int] = []
    for idx, clause in enumerate(clauses):
        if remaining[idx] == 0 and clause.head not in level:
            level[clause.head] = 0
            frontier.append(clause.head)
    round_no = 0
    while frontier:
        next_frontier: list[int] = []
        for atom in frontier:
            for idx in occurs[atom]:
                remaining[idx] -= 1
                if remaining[idx] == 0:
                    head = clauses[idx].head
                    if head not in level:
                        level[head] = round_no + 1
                        next_frontier.append(head)
        round_no += 1
        frontier = next_frontier
    return level


def least_model(horn: HornProgram) -> frozenset[int]:
    """Least fixpoint of the one-step provability operator."""
    return frozenset(derivation_levels(horn))


def gl_operator(program: Program, members: frozenset[int]) -> frozenset[int]:
    return least_model(gl_reduct(program, members))


def is_stable(program: Program, members: frozenset[int]) -> bool:
    return gl_operator(program, members) == members


def brute_force_stable(program: Program, cap: int = 20) -> list[frozenset[int]]:
    """All stable models, in ascending bitmask order over atom ids.

    Refuses programs with more than `cap` atoms: this is the exhaustive
    oracle, not a solver.
    """
    n = len(program.atoms)
    if n > cap:
        raise ResourceLimitError(
            f"brute-force enumeration over {n} atoms exceeds the cap of {cap}")
    return [m for m in all_interpretations(n) if is_stable(program, m)]


def is_supported(program: Program, members: frozenset[int]) -> bool:
    """Model where every member has a clause with satisfied body behind it."""
    if not satisfies_program(members, program):
        return False
    for atom in members:
        if not any(
                c.pos_body <= members and not (c.neg_body & members)
                for c in program.clauses_for(atom)):
            return False
    return True


def compute_levels(program: Program, members: frozenset[int]) -> dict | None:
    """Rank certificate for `members`, or None when no levels exist.

    Ranks are the reduct's derivation rounds (facts at 0); a certificate
    exists exactly when `members` is stable.  The result is audited with
    `check_levels` before being returned.
    """
    if not satisfies_program(members, program):
        return None
    levels = derivation_levels(gl_reduct(program, members))
    if frozenset(levels) != members:
        return None
    if not check_levels(program, members, levels):
        raise RuntimeError("derived rank function failed its own audit")
    return dict(levels)


def check_levels(program: Program, members: frozenset[int], ranks: dict) -> bool:
    """Audit a rank certificate: model, ranked members, decreasing bodies."""
    if not satisfies_program(members, program):
        return False
    if not members <= ranks.keys():
        return False
    for atom in members:
        ok = any(
            c.pos_body <= members
            and not (c.neg_body & members)
            and all(q in ranks and ranks[q] < ranks[atom] for q in c.pos_body)
            for c in program.clauses_for(atom))
        if not ok:
            return False
    return True


def is_tight(program: Program) -> dict | None:
    """Topological ranks over the positive dependency graph, None on a cycle.

    The graph has an edge q -> head for every clause and q in its positive
    body; ranks are longest-path depths, so every positive body atom ranks
    strictly below its head.
    """
    n = len(program.atoms)
    succs: list[set[int]] = [set() for _ in range(n)]
    for clause in program.clauses:
        for q in clause.pos_body:
            succs[q].add(clause.head)
    pred_count = [0] * n
    for q in range(n):
        for head in succs[q]:
            pred_count[head] += 1
    rank = [0] * n
    queue = [a for a in range(n) if pred_count[a] == 0]
    done = 0
    i = 0
    while i < len(queue):
        q = queue[i]
        i += 1
        done += 1
        for head in sorted(succs[q]):
            rank[head] = max(rank[head], rank[q] + 1)
            pred_count[head] -= 1
            if pred_count[head] == 0:
                queue.append(head)
    if done != n:
        return None
    return {a: rank[a] for a in range(n)}


def is_tight_on(program: Program, members: frozenset[int],
                restricted: bool = True) -> dict | None:
    """Rank function on `members` decreasing into positive bodies, or None.

    `restricted` (the default) constrains only clauses whose full body
    holds under `members`, so ranks are always defined where needed.  The
    literal reading constrains every clause whose head is in `members`
    and fails outright when such a clause needs an atom outside `members`
    (no rank exists there).
    """
    succs: dict[int, set[int]] = {a: set() for a in members}
    for clause in program.clauses:
        if clause.head not in members:
            continue
        if restricted:
            if not (clause.pos_body <= members and not (clause.neg_body & members)):
                continue
        elif not clause.pos_body <= members:
            return None
        for q in clause.pos_body:
            succs[q].add(clause.head)
    pred_count = {a: 0 for a in members}
    for q in members:
        for head in succs[q]:
            pred_count[head] += 1
    rank = {a: 0 for a in members}
    queue = [a for a in sorted(members) if pred_count[a] == 0]
    i = 0
    while i < len(queue):
        q = queue[i]
        i += 1
        for head in sorted(succs[q]):
            rank[head] = max(rank[head], rank[q] + 1)
            pred_count[head] -= 1
            if pred_count[head] == 0:
                queue.append(head)
    if len(queue) != len(members):
        return None
    return rank
