"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v -s`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import subprocess
import sys
import time
from dataclasses import replace

from vcl.correspondence import back_translate, to_prop_model, to_vcl_model, translate
from vcl.fixtures import bundled, fixture_ex2
from vcl.generators import (
    GeneratorConfig,
    Rng,
    random_coalition,
    random_coherent_prop_model,
    random_formula,
    random_model,
    random_signature,
)
from vcl.io import derivation_from_dict, load_derivation, load_json
from vcl.models import evaluate, extension
from vcl.projection import de_dicto_formula, de_re_formula, projected_effectivity, projected_effectivity_direct
from vcl.proofs import check_derivation
from vcl.properties import run_property_suite
from vcl.soundness import PLANTED_BAD, soundness_harness
from vcl.syntax import And, Coal, implies, parse_formula, render_formula

SEED = 20240611
CFG = GeneratorConfig(seed=SEED)

STRUCTURAL = [
    "liveness_safety",
    "value_monotonicity",
    "coalition_monotonicity",
    "meet_superadditivity",
    "set_valued_exclusion",
    "singleton_exclusion",
    "transversal_polarity",
    "generator_transversal",
    "boundary_duality",
    "indeterminacy_operational",
    "indeterminacy_basic",
]


def report(capsys, number: int, title: str, ok: bool, detail: str, elapsed: float) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail}; {elapsed:.2f}s)"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def _vcl(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "vcl", *args], capture_output=True, text=True)


def test_criterion_1_ex1_projection(capsys):
    t = time.perf_counter()
    ex1 = str(bundled("ex1.json"))
    proc = _vcl(
        "project", "--model", ex1, "--state", "s", "--var", "x", "--coalition", "1",
        "--member", "a", "--member", "b", "--member", "c", "--member", "a,b,c", "--format", "json",
    )
    elapsed = time.perf_counter() - t
    doc = json.loads(proc.stdout)
    membership = {tuple(e["region"]): e["member"] for e in doc["membership"]}
    ok = (
        proc.returncode == 0
        and doc["generators"] == [["a", "b"], ["b", "c"]]
        and membership == {("a",): False, ("b",): False, ("c",): False, ("a", "b", "c"): True}
        and doc["indeterminacy"] == 2
        and elapsed < 1.0
    )
    report(capsys, 1, "EX1 value-range hypergraph", ok, f"generators {doc['generators']}, iota {doc['indeterminacy']}", elapsed)
    assert ok, proc.stdout + proc.stderr


def test_criterion_2_ex2_de_re_de_dicto(capsys):
    t = time.perf_counter()
    m, psis = fixture_ex2()
    sig = m.sig
    dicto = de_dicto_formula(sig, ("1",), "x", psis)
    re_ = de_re_formula(sig, ("1",), "x", psis)
    disjuncts = [Coal(("1",), And(sig.atom("x", c), psi)) for c, psi in zip(sig.domain("x"), psis)]
    ok = evaluate(m, "s", dicto)
    ok &= not any(evaluate(m, "s", d) for d in disjuncts)
    ok &= not evaluate(m, "s", re_)
    ok &= extension(m, implies(re_, dicto)) == m.tables.all_states
    elapsed = time.perf_counter() - t
    ok &= elapsed < 1.0
    report(capsys, 2, "EX2 de re implies de dicto", ok, "dicto true, 3 de re disjuncts false", elapsed)
    assert ok


def test_criterion_3_dual_oracle(capsys):
    t = time.perf_counter()
    n, mismatches = 0, []
    for i in range(500):
        rng = Rng(SEED, "dual-oracle", i)
        sig = random_signature(CFG, rng, min_variables=1)
        m = random_model(CFG, rng, sig)
        s = rng.choice(m.states)
        x = rng.choice(sig.variables)
        c = random_coalition(sig, rng)
        closure = projected_effectivity(m, s, x, c)
        direct = projected_effectivity_direct(m, s, x, c)
        n += 1
        if set(closure.members()) != set(direct.members()) or closure != direct:
            mismatches.append((i, s, x, c))
    elapsed = time.perf_counter() - t
    ok = n >= 500 and not mismatches and elapsed < 60
    report(capsys, 3, "closure route = direct route", ok, f"{n} tuples, {len(mismatches)} mismatches", elapsed)
    assert ok, mismatches[:5]


def test_criterion_4_correspondence(capsys):
    t = time.perf_counter()
    n_models = n_pairs = 0
    failures = []
    for i in range(500):
        rng = Rng(SEED, "correspondence", i)
        m = random_model(CFG, rng)
        ms = to_prop_model(m)
        n_models += 1
        if to_vcl_model(ms) != m:
            failures.append(("near-inverse (M*)dagger", i))
        n = random_coherent_prop_model(CFG, rng)
        if to_prop_model(to_vcl_model(n)) != n:
            failures.append(("near-inverse (N dagger)*", i))
        for _ in range(4):
            f = random_formula(CFG, m.sig, "vcl", rng)
            g = translate(f)
            if back_translate(g, m.sig) != f:
                failures.append(("back translation", i, render_formula(f)))
            for s in m.states:
                n_pairs += 1
                if evaluate(m, s, f) != evaluate(ms, s, g):
                    failures.append(("truth", i, s, render_formula(f)))
    elapsed = time.perf_counter() - t
    ok = n_models >= 500 and n_pairs >= 2000 and not failures
    report(capsys, 4, "correspondence suite", ok, f"{n_models} models, {n_pairs} pairs, {len(failures)} failures", elapsed)
    assert ok, failures[:5]


def test_criterion_5_structural_suite(capsys):
    t = time.perf_counter()
    rep = run_property_suite(CFG, trials=500, names=STRUCTURAL)
    elapsed = time.perf_counter() - t
    ok = rep.ok and {r.name for r in rep.results} == set(STRUCTURAL) and all(r.trials >= 500 for r in rep.results)
    report(capsys, 5, "structural-theorem suite", ok, f"{len(rep.results)} properties x 500 models, {rep.n_failures} failures", elapsed)
    assert ok, rep.summary()


def test_criterion_6_soundness(capsys):
    t = time.perf_counter()
    sound = soundness_harness(SEED, n_models=1000, n_instances=1000, n_signatures=5)
    bad = soundness_harness(SEED, n_models=1000, n_instances=1000, n_signatures=5, schemata=PLANTED_BAD)
    elapsed = time.perf_counter() - t
    per_instance = sound.evaluations // sound.n_instances
    ok = (
        sound.ok
        and sound.n_instances >= 1000
        and per_instance >= 200
        and set(sound.per_schema) == {"P1", "C1", "C2", "C3", "C4", "C5", "V1", "V2"}
        and bad.failures > 0
    )
    detail = (
        f"{sound.n_instances} instances x {per_instance} models, {sound.failures} failures; "
        f"planted schema falsified {bad.failures} times"
    )
    report(capsys, 6, "soundness harness", ok, detail, elapsed)
    assert ok, sound.as_dict()["counterexamples"][:2]


def _corrupt(name: str, edit) -> dict:
    doc = load_json(bundled(f"derivations/{name}"))
    edit(doc["lines"])
    return doc


CORRUPTIONS = {
    "wrong schema tag": (lambda: _corrupt("c3.json", lambda ls: ls[0].update(schema="C2")), 1),
    "wrong MP reference": (lambda: _corrupt("mp.json", lambda ls: ls[2].update({"from": [2, 1]})), 3),
    "RE coalition mismatch": (lambda: _corrupt("re_p1.json", lambda ls: ls[1].update(coalition=["2"])), 2),
    "V1 with a value omitted": (lambda: _corrupt("v1_v2.json", lambda ls: ls[0].update(formula="x=a | x=b")), 1),
}


def test_criterion_7_proof_checker(capsys):
    t = time.perf_counter()
    problems = []
    for name in ("c3.json", "re_p1.json", "mp.json", "v1_v2.json"):
        d, sig = load_derivation(bundled(f"derivations/{name}"))
        if not check_derivation(d, sig).ok:
            problems.append(f"{name} rejected")
    for label, (make, line) in CORRUPTIONS.items():
        d, sig = derivation_from_dict(make())
        res = check_derivation(d, sig)
        if res.ok or res.line != line:
            problems.append(f"{label}: got {res.line}, want {line}")
    bundled_bad = {
        "bad_schema_tag.json": 1,
        "bad_mp_reference.json": 3,
        "bad_re_coalition.json": 2,
        "bad_v1_missing_value.json": 1,
    }
    for name, line in bundled_bad.items():
        d, sig = load_derivation(bundled(f"derivations/{name}"))
        res = check_derivation(d, sig)
        if res.ok or res.line != line:
            problems.append(f"{name}: got {res.line}, want {line}")
    elapsed = time.perf_counter() - t
    ok = not problems
    report(capsys, 7, "proof checker", ok, f"4 accepted, {len(CORRUPTIONS) + len(bundled_bad)} corruptions located", elapsed)
    assert ok, problems


def test_criterion_8_roundtrip_and_determinism(capsys):
    t = time.perf_counter()
    cfg = replace(CFG, formula_depth=4)
    bad = []
    for i in range(1000):
        rng = Rng(SEED, "roundtrip", i)
        sig = random_signature(cfg, rng)
        lang = "prop" if i % 2 else "vcl"
        f = random_formula(cfg, sig, lang, rng)
        text = render_formula(f)
        g = parse_formula(text, sig, lang)
        if g != f or render_formula(g) != text:
            bad.append(text)
    first = run_property_suite(GeneratorConfig(seed=5), trials=3).to_json()
    second = run_property_suite(GeneratorConfig(seed=5), trials=3).to_json()
    cli = [_vcl("props", "--seed", "5", "--trials", "2", "--format", "json").stdout for _ in range(2)]
    snd = [json.dumps(soundness_harness(5, 20, 40).as_dict(), sort_keys=True) for _ in range(2)]
    elapsed = time.perf_counter() - t
    identical = first.encode() == second.encode() and cli[0] == cli[1] and cli[0] and snd[0] == snd[1]
    ok = not bad and identical
    report(capsys, 8, "round trip and determinism", ok, f"1000 formulas, {len(bad)} non-fixed; reports identical: {bool(identical)}", elapsed)
    assert ok, bad[:5]


if __name__ == "__main__":
    failed = 0
    for fn in [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]:
        try:
            fn(None)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
