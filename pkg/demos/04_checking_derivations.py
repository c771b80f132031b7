"""
Checking Hilbert-style derivations
==================================

Derivations are JSON files.  Each line names its rule; the checker reports
the first line that does not follow.
"""

from vcl.fixtures import bundled
from vcl.io import load_derivation
from vcl.proofs import check_derivation, translate_derivation
from vcl.syntax import render_formula

for name in ("c3.json", "re_p1.json", "mp.json", "v1_v2.json"):
    d, sig = load_derivation(bundled(f"derivations/{name}"))
    print(f"{name}: {check_derivation(d, sig).ok}")
    for k, line in enumerate(d.lines, start=1):
        print(f"  {k}. {render_formula(line.formula):32s} {line.justification}")

# Broken variants: each fails at a specific line.
for name in ("bad_schema_tag.json", "bad_mp_reference.json", "bad_re_coalition.json", "bad_v1_missing_value.json"):
    d, sig = load_derivation(bundled(f"derivations/{name}"))
    res = check_derivation(d, sig)
    print(f"{name}: line {res.line}: {res.reason}")

# A derivation carries over to the propositional system line by line.
d, sig = load_derivation(bundled("derivations/mp.json"))
t = translate_derivation(d)
print(t.system, check_derivation(t, sig).ok)
