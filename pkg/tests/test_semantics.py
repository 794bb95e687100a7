import random

import pytest

from guardres import (
    AtomTable,
    Program,
    ResourceLimitError,
    all_interpretations,
    brute_force_stable,
    check_levels,
    compute_levels,
    gl_operator,
    gl_reduct,
    is_stable,
    is_supported,
    is_tight,
    is_tight_on,
    least_model,
)
from guardres.semantics import HornClause, HornProgram, derivation_levels

from corpus import example_program, members_of, prog, random_program, random_tight_program


def _horn_signature(horn):
    name = horn.atoms.name
    return {(name(c.head), frozenset(name(a) for a in c.body)) for c in horn.clauses}


def test_reduct_worked_example():
    program = example_program()
    reduct = gl_reduct(program, members_of(program, "p", "q", "t"))
    assert _horn_signature(reduct) == {
        ("p", frozenset()),   # p :- not r survives, stripped
        ("q", frozenset()),
        ("t", frozenset()),
    }


def test_reduct_of_empty_interpretation_keeps_everything():
    program = example_program()
    reduct = gl_reduct(program, frozenset())
    assert len(reduct.clauses) == len(program.clauses)
    assert all(not c.body or c.body for c in reduct.clauses)
    assert _horn_signature(reduct) == {
        ("p", frozenset({"t"})),
        ("p", frozenset()),
        ("q", frozenset()),
        ("t", frozenset()),
    }


def test_reduct_drops_self_blocking_clause():
    program = prog("p :- not p.")
    assert gl_reduct(program, members_of(program, "p")).clauses == ()


def test_least_model_of_facts():
    table = AtomTable(["p", "q", "t"])
    horn = HornProgram(table, tuple(HornClause(i, frozenset()) for i in range(3)))
    assert least_model(horn) == frozenset({0, 1, 2})


def test_least_model_empty_program():
    assert least_model(HornProgram(AtomTable(), ())) == frozenset()


def test_least_model_positive_loop_unproductive():
    table = AtomTable(["a", "b"])
    horn = HornProgram(table, (HornClause(0, frozenset([1])),
                               HornClause(1, frozenset([0]))))
    assert least_model(horn) == frozenset()


def test_derivation_levels_chain():
    table = AtomTable(["a", "b", "c"])
    horn = HornProgram(table, (
        HornClause(0, frozenset()),
        HornClause(1, frozenset([0])),
        HornClause(2, frozenset([0, 1])),
    ))
    assert derivation_levels(horn) == {0: 0, 1: 1, 2: 2}


def test_gl_operator_examples():
    program = example_program()
    model = members_of(program, "p", "q", "t")
    assert gl_operator(program, model) == model

    odd = prog("p :- not p.")
    assert gl_operator(odd, frozenset()) == members_of(odd, "p")
    assert gl_operator(odd, members_of(odd, "p")) == frozenset()


def test_is_stable_examples():
    program = example_program()
    assert is_stable(program, members_of(program, "p", "q", "t"))
    assert not is_stable(program, frozenset())

    odd = prog("p :- not p.")
    assert not is_stable(odd, frozenset())
    assert not is_stable(odd, members_of(odd, "p"))


def test_brute_force_worked_example():
    program = example_program()
    assert brute_force_stable(program) == [members_of(program, "p", "q", "t")]


def test_brute_force_empty_program():
    assert brute_force_stable(Program(AtomTable(), [])) == [frozenset()]


def test_brute_force_two_models_in_bitmask_order():
    program = prog("p :- not q.\nq :- not p.")
    assert brute_force_stable(program) == [
        members_of(program, "p"),
        members_of(program, "q"),
    ]


def test_brute_force_cap_refusal():
    table = AtomTable(f"a{i}" for i in range(21))
    program = Program(table, [])
    with pytest.raises(ResourceLimitError):
        brute_force_stable(program)
    # The cap is an override, in both directions.
    small = Program(AtomTable(["a", "b", "c"]), [])
    with pytest.raises(ResourceLimitError):
        brute_force_stable(small, cap=2)
    assert brute_force_stable(small, cap=3) == [frozenset()]


def test_is_supported_examples():
    program = example_program()
    assert is_supported(program, members_of(program, "p", "q", "t"))

    self_loop = prog("p :- p.")
    # Supported but not stable: the classic separating witness.
    assert is_supported(self_loop, members_of(self_loop, "p"))
    assert not is_stable(self_loop, members_of(self_loop, "p"))

    constraintish = prog("a :- not b.")
    assert not is_supported(constraintish, frozenset())  # not even a model
    assert is_supported(prog("a :- b."), frozenset())


def test_compute_levels_worked_example():
    program = example_program()
    model = members_of(program, "p", "q", "t")
    ranks = compute_levels(program, model)
    assert ranks == {a: 0 for a in model}  # all three are facts of the reduct
    assert check_levels(program, model, ranks)


def test_compute_levels_absent_for_self_support():
    program = prog("p :- p.")
    assert compute_levels(program, members_of(program, "p")) is None


def test_compute_levels_empty_model():
    program = prog("a :- b.")
    assert compute_levels(program, frozenset()) == {}


def test_levels_iff_stable_on_random_corpus():
    rng = random.Random(99)
    for _ in range(60):
        program = random_program(rng, max_atoms=6, max_clauses=10)
        for members in all_interpretations(len(program.atoms)):
            stable = is_stable(program, members)
            ranks = compute_levels(program, members)
            assert stable == (ranks is not None)
            if ranks is not None:
                assert check_levels(program, members, ranks)


def test_is_tight_worked_example():
    program = example_program()
    ranks = is_tight(program)
    name = program.atoms.name
    assert ranks is not None
    assert {name(a): r for a, r in ranks.items()} == {
        "p": 1, "t": 0, "q": 0, "r": 0, "s": 0,
    }


def test_is_tight_self_loop_absent():
    assert is_tight(prog("p :- p.")) is None


def test_purely_negative_programs_are_tight_with_zero_ranks():
    program = prog("a :- not b.\nb :- not c.\nc :- not a.")
    ranks = is_tight(program)
    assert ranks == {a: 0 for a in range(3)}


def test_is_tight_on_worked_example():
    program = example_program()
    model = members_of(program, "p", "q", "t")
    ranks = is_tight_on(program, model)
    assert ranks is not None
    assert set(ranks) == set(model)


def test_is_tight_on_readings_agree_on_satisfied_self_loop():
    program = prog("p :- p.\np.")
    model = members_of(program, "p")
    # The self-loop clause has a satisfied body, so both readings reject.
    assert is_tight_on(program, model, restricted=True) is None
    assert is_tight_on(program, model, restricted=False) is None


def test_is_tight_on_readings_differ_on_unsatisfied_body():
    program = prog("p :- q.")
    model = members_of(program, "p")
    assert is_tight_on(program, model, restricted=True) == {0: 0}
    assert is_tight_on(program, model, restricted=False) is None


def test_is_tight_on_empty_interpretation():
    assert is_tight_on(example_program(), frozenset()) == {}


def test_gl_operator_antimonotone_on_random_corpus():
    rng = random.Random(4242)
    for _ in range(80):
        program = random_program(rng)
        n = len(program.atoms)
        larger = frozenset(rng.sample(range(n), k=rng.randint(0, n)))
        smaller = frozenset(a for a in larger if rng.random() < 0.5)
        assert gl_operator(program, larger) <= gl_operator(program, smaller)


def test_stable_models_are_supported_on_random_corpus():
    rng = random.Random(333)
    for _ in range(60):
        program = random_program(rng, max_atoms=6, max_clauses=10)
        for members in brute_force_stable(program):
            assert is_supported(program, members)


def test_fages_on_random_tight_programs():
    rng = random.Random(777)
    for _ in range(60):
        program = random_tight_program(rng, max_atoms=6, max_clauses=10)
        assert is_tight(program) is not None
        supported = [m for m in all_interpretations(len(program.atoms))
                     if is_supported(program, m)]
        assert supported == brute_force_stable(program)


def test_tight_on_supported_implies_stable_on_random_corpus():
    rng = random.Random(555)
    for _ in range(60):
        program = random_program(rng, max_atoms=6, max_clauses=10)
        for members in all_interpretations(len(program.atoms)):
            if is_supported(program, members) and \
                    is_tight_on(program, members) is not None:
                assert is_stable(program, members)
