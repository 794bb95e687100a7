"""Tightness, supportedness, and level certificates.

Supported models only demand a satisfied clause behind every member;
stable models demand non-circular derivations.  `p :- p.` separates the
two.  When the positive dependency graph is acyclic (*tight*), the gap
closes and supported = stable; the per-interpretation variant of the
test (*tight on M*) closes it model by model.  Stability itself is
certified by a rank function: members stratify into derivation levels.
"""

from guardres import (
    all_interpretations,
    brute_force_stable,
    compute_levels,
    format_interpretation,
    interpretation,
    is_stable,
    is_supported,
    is_tight,
    is_tight_on,
    parse_program,
)


def show_ranks(program, ranks):
    name = program.atoms.name
    return "{" + ", ".join(f"{name(a)}: {r}" for a, r in sorted(
        ranks.items(), key=lambda item: name(item[0]))) + "}"


loop = parse_program("p :- p.")
member = interpretation(loop.atoms, ["p"])
print("`p :- p.` with M = {p}: the classic separating witness")
print(f"  supported: {is_supported(loop, member)}")
print(f"  stable:    {is_stable(loop, member)}")
print(f"  tight:     {is_tight(loop) is not None}")
print(f"  levels:    {compute_levels(loop, member)}")
print()

program = parse_program("p :- t, not q.\np :- not r.\nq :- not s.\nt.\n")
ranks = is_tight(program)
print("the four-clause program is tight; topological ranks:")
print(f"  {show_ranks(program, ranks)}")
print("so its supported and stable models coincide:")
n = len(program.atoms)
supported = [m for m in all_interpretations(n) if is_supported(program, m)]
print(f"  supported = {[format_interpretation(program.atoms, m) for m in supported]}")
print(f"  stable    = "
      f"{[format_interpretation(program.atoms, m) for m in brute_force_stable(program)]}")
print()

model = interpretation(program.atoms, ["p", "q", "t"])
print(f"level certificate for {format_interpretation(program.atoms, model)}:")
print(f"  {show_ranks(program, compute_levels(program, model))}")
print("(all three atoms are facts of the reduct, hence rank 0)")
print()

mixed = parse_program("a :- a.\na :- not b.\nb :- not a.\n")
print("`a :- a.  a :- not b.  b :- not a.` is not tight (self-loop on a).")
print("tight-on is a one-way certificate: it proves {b} stable outright,")
print("while {a} needs the level certificate instead:")
for members in (interpretation(mixed.atoms, ["a"]), interpretation(mixed.atoms, ["b"])):
    on = is_tight_on(mixed, members)
    label = format_interpretation(mixed.atoms, members)
    verdict = "yes, ranks " + show_ranks(mixed, on) if on is not None else "no"
    print(f"  M = {label}: supported {is_supported(mixed, members)}, "
          f"tight-on {verdict}, stable {is_stable(mixed, members)}, "
          f"levels {show_ranks(mixed, compute_levels(mixed, members))}")
