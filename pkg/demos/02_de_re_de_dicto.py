"""
De re and de dicto value control
================================

Agent 2 decides whether x becomes a or b.  Agent 1 has a single action.
"""

from vcl import evaluate, fixture_ex2, render_formula
from vcl.projection import de_dicto_formula, de_re_formula, projected_effectivity
from vcl.syntax import And, Coal, implies

m, psis = fixture_ex2()
sig = m.sig

# psi_a = psi_b = T and psi_c = F: "x ends up at a or b".
print("psi:", [render_formula(p) for p in psis])

dicto = de_dicto_formula(sig, ["1"], "x", psis)
print("de dicto:", render_formula(dicto))
print("  holds at s:", evaluate(m, "s", dicto))

# De re: agent 1 would have to name the value in advance.
for c, psi in zip(sig.domain("x"), psis):
    f = Coal(("1",), And(sig.atom("x", c), psi))
    print(f"  {render_formula(f)} at s:", evaluate(m, "s", f))

# The implication from de re to de dicto holds everywhere.  Its converse fails at s.
re_ = de_re_formula(sig, ["1"], "x", psis)
print("de re -> de dicto valid:", all(evaluate(m, s, implies(re_, dicto)) for s in m.states))
print("de dicto -> de re at s:", evaluate(m, "s", implies(dicto, re_)))

# Same story at the level of value regions.
print("agent 1 forces:", projected_effectivity(m, "s", "x", ["1"]))
