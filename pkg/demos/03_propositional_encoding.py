"""
Typed assignments versus propositional letters
==============================================

Every typed model has a propositional twin with one letter p_x^c per value.
The twin is always coherent, and coherent propositional models come back.
"""

from vcl import fixture_ex1, parse_formula, render_formula
from vcl.correspondence import back_translate, coherence_formula, is_coherent, to_prop_model, to_vcl_model, translate
from vcl.models import GameModel, evaluate

m = fixture_ex1()
n = to_prop_model(m)
for s in n.states:
    print(s, sorted(f"{a.variable}={a.value}" for a in n.valuation[s]))

print("coherence constraint:", render_formula(coherence_formula(m.sig)))
print("coherent:", is_coherent(n).coherent)
print("round trip gives the original model:", to_vcl_model(n) == m)

# Formulas translate atom by atom, and truth is preserved.
f = parse_formula("[1](x in {a,b}) & ~[2](x=c)", m.sig)
g = translate(f)
print(render_formula(f), "|", evaluate(m, "s", f))
print(render_formula(g), "|", evaluate(n, "s", g))
print("back translation:", back_translate(g, m.sig) == f)

# Break coherence by hand: s now carries two values of x.
broken = dict(n.valuation)
broken["s"] = n.valuation["s"] | {m.sig.atom("x", "b", "prop")}
bad = GameModel(n.sig, n.states, n.actions, n.outcome, valuation=broken)
for w in is_coherent(bad).witnesses:
    print("witness:", w.state, w.variable, w.kind, w.atoms)
