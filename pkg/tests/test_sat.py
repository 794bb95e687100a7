import random

from guardres import (
    AtomTable,
    CnfTheory,
    dpll_solve,
    enumerate_models,
    export_dimacs,
    parse_dimacs,
    program_to_cnf,
    subequation_to_cnf,
)
from guardres.sat import clause_satisfied, equation_to_cnf, make_clause, _unit_propagate

from corpus import example_program, random_cnf, truth_table_models


def _clause_name_sets(theory):
    name = theory.atoms.name
    return {
        frozenset((name(a), pol) for a, pol in clause.literals)
        for clause in theory.clauses
    }


def test_program_to_cnf_worked_example():
    program = example_program()
    theory = program_to_cnf(program)
    assert _clause_name_sets(theory) == {
        frozenset({("t", False), ("q", True), ("p", True)}),
        frozenset({("r", True), ("p", True)}),
        frozenset({("s", True), ("q", True)}),
        frozenset({("t", True)}),
    }
    assert len(theory.clauses) == 4
    assert len(theory.atoms) == 5


def test_make_clause_drops_tautologies():
    assert make_clause([(0, True), (0, False)]) is None
    assert make_clause([(0, True), (1, False)]) is not None


def test_theory_dedups_clauses():
    table = AtomTable(["p", "q"])
    theory = CnfTheory.from_literals(
        table, [[(0, True)], [(0, True)], [(0, True), (0, False)]])
    assert len(theory.clauses) == 1


def test_subequation_to_cnf_shapes():
    # -p
    negative = subequation_to_cnf(0, None)
    assert [set(c.literals) for c in negative] == [{(0, False)}]
    # p <-> -{r}: two clauses
    biconditional = subequation_to_cnf(0, frozenset([1]))
    assert {frozenset(c.literals) for c in biconditional} == {
        frozenset({(0, False), (1, False)}),
        frozenset({(0, True), (1, True)}),
    }
    # p <-> -{} is just p
    positive = subequation_to_cnf(0, frozenset())
    assert [set(c.literals) for c in positive] == [{(0, True)}]


def test_equation_to_cnf_self_guard_is_unsat():
    theory = CnfTheory(AtomTable(["p"]), equation_to_cnf(0, (frozenset([0]),)))
    assert dpll_solve(theory) is None


def _candidate_theory(program, chosen):
    """Program CNF plus subequation clauses for the worked example."""
    clauses = list(program_to_cnf(program).clauses)
    for name, guard_names in chosen.items():
        atom = program.atoms.id_of(name)
        guard = None if guard_names is None else frozenset(
            program.atoms.id_of(g) for g in guard_names)
        clauses.extend(subequation_to_cnf(atom, guard))
    return CnfTheory(program.atoms, clauses)


def test_dpll_worked_example_candidates():
    program = example_program()
    inconsistent = _candidate_theory(program, {
        "p": None, "q": frozenset({"s"}), "t": frozenset(), "r": None, "s": None,
    })
    assert dpll_solve(inconsistent) is None

    consistent = _candidate_theory(program, {
        "p": frozenset({"r"}), "q": frozenset({"s"}),
        "t": frozenset(), "r": None, "s": None,
    })
    assignment = dpll_solve(consistent)
    assert assignment is not None
    model = frozenset(a for a, v in assignment.items() if v)
    assert model == frozenset(program.atoms.id_of(n) for n in "pqt")
    assert enumerate_models(consistent) == [model]


def test_dpll_empty_theory_is_all_false():
    table = AtomTable(["a", "b"])
    theory = CnfTheory(table, [])
    assert dpll_solve(theory) == {0: False, 1: False}


def test_dpll_respects_assumptions():
    table = AtomTable(["a", "b"])
    theory = CnfTheory.from_literals(table, [[(0, True), (1, True)]])
    assignment = dpll_solve(theory, {0: False})
    assert assignment == {0: False, 1: True}
    unit = CnfTheory.from_literals(table, [[(0, True)]])
    assert dpll_solve(unit, {0: False}) is None


def test_enumerate_models_examples():
    table = AtomTable(["p", "q"])
    unit_p = CnfTheory.from_literals(table, [[(0, True)]])
    assert enumerate_models(unit_p) == [frozenset([0]), frozenset([0, 1])]

    exactly_one = CnfTheory.from_literals(
        table, [[(0, True), (1, True)], [(0, False), (1, False)]])
    assert enumerate_models(exactly_one) == [frozenset([0]), frozenset([1])]


def test_unit_propagation_closure():
    table = AtomTable(["a", "b", "c"])
    theory = CnfTheory.from_literals(
        table, [[(0, True)], [(0, False), (1, True)], [(1, False), (2, True)]])
    assign = {}
    conflict = _unit_propagate(theory.clauses, assign)
    assert conflict is None
    assert assign == {0: True, 1: True, 2: True}
    # After closure no clause is unit or falsified under the assignment.
    for clause in theory.clauses:
        undecided = [lit for lit in clause.literals if lit[0] not in assign]
        satisfied = any(assign.get(a) == pol for a, pol in clause.literals
                        if a in assign)
        assert satisfied or len(undecided) > 1


def test_dpll_agrees_with_truth_tables():
    rng = random.Random(60601)
    for _ in range(300):
        theory = random_cnf(rng)
        expected = truth_table_models(theory)
        found = enumerate_models(theory)
        assert found == expected
        assignment = dpll_solve(theory)
        if expected:
            assert assignment is not None
            model = frozenset(a for a, v in assignment.items() if v)
            assert all(clause_satisfied(c, model) for c in theory.clauses)
        else:
            assert assignment is None


def test_export_dimacs_offset_rule():
    table = AtomTable(["a", "b", "c", "t", "e"])
    theory = CnfTheory.from_literals(table, [[(3, True)]])
    text = export_dimacs(theory)
    assert "p cnf 5 1\n4 0\n" in text
    assert "c 4 t" in text


def test_export_dimacs_empty_theory():
    table = AtomTable(["a", "b", "c"])
    assert export_dimacs(CnfTheory(table, [])).endswith("p cnf 3 0\n")


def test_export_dimacs_worked_example():
    theory = program_to_cnf(example_program())
    text = export_dimacs(theory)
    assert text == (
        "c 1 p\nc 2 t\nc 3 q\nc 4 r\nc 5 s\n"
        "p cnf 5 4\n"
        "1 -2 3 0\n"
        "1 4 0\n"
        "3 5 0\n"
        "2 0\n"
    )


def test_dimacs_roundtrip_preserves_models():
    rng = random.Random(11)
    for _ in range(50):
        theory = random_cnf(rng, max_vars=8)
        back = parse_dimacs(export_dimacs(theory))
        assert back.atoms.names == theory.atoms.names
        assert enumerate_models(back) == enumerate_models(theory)
