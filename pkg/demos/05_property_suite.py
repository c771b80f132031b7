"""
Randomised property checks
==========================

The structural laws are checked on seeded random models.  A deliberately
broken evaluator shows that the checks have teeth.
"""

import vcl.models
from vcl.generators import GeneratorConfig
from vcl.properties import run_property_suite
from vcl.soundness import PLANTED_BAD, soundness_harness

cfg = GeneratorConfig(seed=1)
report = run_property_suite(cfg, trials=10)
print(report.summary())

# Soundness: sampled axiom instances against random models.
sound = soundness_harness(seed=1, n_models=100, n_instances=200, n_signatures=2)
print("evaluations:", sound.evaluations, "failures:", sound.failures)
bad = soundness_harness(seed=1, n_models=20, n_instances=20, schemata=PLANTED_BAD)
print("planted schema falsified", bad.failures, "times; e.g.", bad.counterexamples[0]["formula"])

# Weaken the coalition modality: "some completion" instead of "every completion".
original = vcl.models._can_force
vcl.models._can_force = lambda groups, row, holds: any(any(holds(row[g]) for g in grp) for grp in groups)
try:
    mutant = run_property_suite(cfg, trials=10, names=["singleton_exclusion", "set_valued_exclusion", "soundness"])
    print(mutant.summary())
finally:
    vcl.models._can_force = original
