"""
Value-range hypergraphs
=======================

A coalition rarely pins a variable down to one value.  What it can do is
commit to an action and thereby shrink the set of values still possible.
"""

from vcl import fixture_ex1, parse_formula, evaluate
from vcl.projection import (
    format_set,
    generator_witnesses,
    projected_effectivity,
    quotient_game_form,
    range_hypergraph,
    residual_indeterminacy,
    transversal_dual,
)

m = fixture_ex1()
dom = m.sig.domain("x")

# The game at s, read through x only.  Rows are agent 1, columns agent 2.
for row in quotient_game_form(m, "s", "x").matrix():
    print("  ".join(row))

# Each action of agent 1 leaves a range of values open.
ranges = range_hypergraph(m, "s", "x", ["1"])
print("ranges of agent 1:", sorted(format_set(dom, r) for r in ranges))

for gen, profile in generator_witnesses(m, "s", "x", ["1"]).items():
    print(f"  {profile} keeps x in {format_set(dom, gen)}")

# The effectivity family is the upward closure of those ranges.
fam = projected_effectivity(m, "s", "x", ["1"])
print("family:", fam, "with", fam.size(), "members")

# No singleton is forceable, so the residual indeterminacy is 2.
for c in dom:
    print(f"  [1](x={c}) at s:", evaluate(m, "s", parse_formula(f"[1](x={c})", m.sig)))
print("iota:", residual_indeterminacy(m, "s", "x", ["1"]))

# Agent 2 acts independently of agent 1, so every region agent 2 forces
# meets every region agent 1 forces: agent 2's family sits inside the dual.
print("transversal dual:", transversal_dual(fam, dom))
print("agent 2 family:  ", projected_effectivity(m, "s", "x", ["2"]))
