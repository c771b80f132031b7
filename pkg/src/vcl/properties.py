"""Randomised property suite: one named check per structural result.

Each property runs ``trials`` independent trials.  Trial ``i`` of property
``name`` draws everything from the stream ``(seed, name, i)``, so any single
trial can be rerun in isolation and the report is a pure function of the
configuration.  Failures embed the model and formulas involved, which is
enough to replay them without the seed.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Callable

from . import setfamily
from .correspondence import (
    back_translate,
    coherence_formula,
    is_coherent,
    to_prop_model,
    to_vcl_model,
    translate,
)
from .fixtures import fixture_ex1, fixture_ex2
from .generators import (
    GeneratorConfig,
    random_coalition,
    random_coherent_prop_model,
    random_formula,
    random_model,
    random_prop_model,
    random_signature,
)
from .io import model_to_dict
from .models import (
    enumerate_profiles,
    evaluate,
    extension,
    merge_profiles,
    successors,
)
from .projection import (
    exclusion_formula,
    game_form_effectivity,
    one_step_value_range,
    projected_effectivity,
    projected_effectivity_direct,
    quotient_game_form,
    range_hypergraph,
    residual_indeterminacy,
    to_mask,
    transversal_dual,
    de_dicto_formula,
    de_re_formula,
)
from .proofs import Axiom, Derivation, Line, MP, RE, check_derivation, back_translate_derivation, translate_derivation
from .soundness import soundness_harness
from .syntax import (
    BOTTOM,
    And,
    Coal,
    Neg,
    iff,
    implies,
    lor,
    parse_formula,
    region_formula,
    render_formula,
)

FORMULAS_PER_TRIAL = 4


@dataclass
class PropertyResult:
    name: str
    anchor: str
    trials: int
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class PropertyReport:
    seed: int
    trials: int
    results: list[PropertyResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def n_failures(self) -> int:
        return sum(len(r.failures) for r in self.results)

    def result(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self, timing: bool = False) -> dict:
        props = []
        for r in self.results:
            entry = {"name": r.name, "anchor": r.anchor, "trials": r.trials, "failures": r.failures}
            if timing:
                entry["elapsed"] = round(r.elapsed, 6)
            props.append(entry)
        return {"seed": self.seed, "trials": self.trials, "ok": self.ok, "properties": props}

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), ensure_ascii=False, indent=2, sort_keys=True)

    def summary(self) -> str:
        width = max(len(r.name) for r in self.results)
        lines = []
        for r in self.results:
            status = "ok  " if r.ok else "FAIL"
            lines.append(f"{status} {r.name:<{width}}  {r.trials:>4} trials  {len(r.failures)} failures  [{r.anchor}]")
        lines.append(f"{'all properties hold' if self.ok else f'{self.n_failures} failures'}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# drawing helpers


def _model(cfg, rng, with_variable=False):
    sig = random_signature(cfg, rng, min_variables=1 if with_variable else 0)
    return random_model(cfg, rng, sig)


def _formulas(cfg, sig, rng, lang="vcl", k=FORMULAS_PER_TRIAL):
    return [random_formula(cfg, sig, lang, rng) for _ in range(k)]


def _fail(m=None, **detail):
    out = dict(detail)
    if m is not None:
        out["model"] = model_to_dict(m)
    return out


def _coalition_pairs(sig):
    """All (C, E) with C and E disjoint."""
    n = len(sig.agents)
    for c in range(1 << n):
        rest = ((1 << n) - 1) & ~c
        e = rest
        while True:
            yield sig.coalition_from_mask(c), sig.coalition_from_mask(e)
            if e == 0:
                break
            e = (e - 1) & rest


def _subset_pairs(sig):
    masks = range(1 << len(sig.agents))
    for c, e in itertools.product(masks, masks):
        if c & ~e == 0:
            yield sig.coalition_from_mask(c), sig.coalition_from_mask(e)


# ---------------------------------------------------------------------------
# models and syntax


def p_assignment_coherence(cfg, rng):
    m = _model(cfg, rng)
    out = []
    sig = m.sig
    for x in sig.variables:
        dom = sig.domain(x)
        checks = [region_formula(x, dom, sig)]
        checks += [implies(sig.atom(x, c), Neg(sig.atom(x, d))) for c in dom for d in dom if c != d]
        for s in m.states:
            true_values = [c for c in dom if evaluate(m, s, sig.atom(x, c))]
            if len(true_values) != 1:
                out.append(_fail(m, state=s, variable=x, true_values=true_values))
            for f in checks:
                if not evaluate(m, s, f):
                    out.append(_fail(m, state=s, formula=render_formula(f)))
    return out


def p_successor_monotonicity(cfg, rng):
    m = _model(cfg, rng)
    sig = m.sig
    out = []
    c = random_coalition(sig, rng)
    rest = [a for a in sig.agents if a not in c]
    e = tuple(a for a in rest if rng.coin())
    for p in enumerate_profiles(m, c):
        for q in enumerate_profiles(m, e):
            pq = merge_profiles(p, q, sig)
            for s in m.states:
                if not successors(m, s, pq) <= successors(m, s, p):
                    out.append(_fail(m, state=s, profile=str(p), extension=str(pq)))
    return out


def p_evaluation_agreement(cfg, rng):
    m = _model(cfg, rng)
    out = []
    for f in _formulas(cfg, m.sig, rng):
        ext = extension(m, f)
        for i, s in enumerate(m.states):
            if evaluate(m, s, f) != bool(ext >> i & 1):
                out.append(_fail(m, state=s, formula=render_formula(f)))
    return out


def p_parse_render_roundtrip(cfg, rng):
    sig = random_signature(cfg, rng)
    out = []
    for lang in ("vcl", "prop"):
        for f in _formulas(cfg, sig, rng, lang, k=8):
            text = render_formula(f)
            try:
                back = parse_formula(text, sig, lang)
            except Exception as exc:  # reported, not raised
                out.append({"formula": text, "error": str(exc)})
                continue
            if back != f or render_formula(back) != text:
                out.append({"formula": text, "reparsed": render_formula(back)})
    return out


def p_desugaring(cfg, rng):
    m = _model(cfg, rng)
    sig = m.sig
    out = []
    a, b = _formulas(cfg, sig, rng, k=2)
    for s in m.states:
        va, vb = evaluate(m, s, a), evaluate(m, s, b)
        expect = {
            "or": (lor(a, b), va or vb),
            "implies": (implies(a, b), (not va) or vb),
            "iff": (iff(a, b), va == vb),
            "bottom": (BOTTOM, False),
        }
        for name, (f, want) in expect.items():
            if evaluate(m, s, f) != want:
                out.append(_fail(m, state=s, connective=name, left=render_formula(a), right=render_formula(b)))
        for x in sig.variables:
            dom = sig.domain(x)
            region = rng.subset(dom)
            want = m.assignment[s][x] in region
            if evaluate(m, s, region_formula(x, region, sig)) != want:
                out.append(_fail(m, state=s, variable=x, region=region))
    return out


# ---------------------------------------------------------------------------
# correspondence


def p_truth_correspondence(cfg, rng):
    m = _model(cfg, rng)
    ms = to_prop_model(m)
    out = []
    for f in _formulas(cfg, m.sig, rng):
        g = translate(f)
        if extension(m, f) != extension(ms, g):
            out.append(_fail(m, formula=render_formula(f)))
        s = rng.choice(m.states)
        if evaluate(m, s, f) != evaluate(ms, s, g):
            out.append(_fail(m, state=s, formula=render_formula(f)))
    return out


def p_dual_truth_correspondence(cfg, rng):
    n = random_coherent_prop_model(cfg, rng)
    nd = to_vcl_model(n)
    out = []
    for f in _formulas(cfg, n.sig, rng):
        if extension(n, translate(f)) != extension(nd, f):
            out.append(_fail(n, formula=render_formula(f)))
    return out


def p_near_inverse(cfg, rng):
    m = _model(cfg, rng)
    n = random_coherent_prop_model(cfg, rng)
    out = []
    if to_vcl_model(to_prop_model(m)) != m:
        out.append(_fail(m, direction="(M*)dagger"))
    if to_prop_model(to_vcl_model(n)) != n:
        out.append(_fail(n, direction="(N dagger)*"))
    return out


def p_associated_models(cfg, rng):
    m = _model(cfg, rng)
    out = []
    ms = to_prop_model(m)
    coh = coherence_formula(m.sig)
    if not is_coherent(ms).coherent or extension(ms, coh) != ms.tables.all_states:
        out.append(_fail(m, detail="associated propositional model is not coherent"))
    raw = random_prop_model(cfg, rng)
    report = is_coherent(raw)
    bad_states = {w.state for w in report.witnesses}
    sat = set(raw.states_of(extension(raw, coherence_formula(raw.sig))))
    if bad_states != set(raw.states) - sat:
        out.append(_fail(raw, detail="coherence witnesses disagree with the coherence formula"))
    return out


def p_validity_transfer(cfg, rng):
    m = _model(cfg, rng)
    n = random_coherent_prop_model(cfg, rng)
    out = []
    for f in _formulas(cfg, m.sig, rng):
        ms = to_prop_model(m)
        for s in m.states_of(m.tables.all_states & ~extension(m, f)):
            if evaluate(ms, s, translate(f)):
                out.append(_fail(m, state=s, formula=render_formula(f)))
    nd = to_vcl_model(n)
    for f in _formulas(cfg, n.sig, rng):
        for s in n.states_of(n.tables.all_states & ~extension(n, translate(f))):
            if evaluate(nd, s, f):
                out.append(_fail(n, state=s, formula=render_formula(f)))
    return out


def p_back_translation(cfg, rng):
    sig = random_signature(cfg, rng)
    out = []
    for f in _formulas(cfg, sig, rng, k=8):
        if back_translate(translate(f), sig) != f:
            out.append({"formula": render_formula(f)})
    for g in _formulas(cfg, sig, rng, "prop", k=8):
        if translate(back_translate(g, sig)) != g:
            out.append({"formula": render_formula(g)})
    return out


# ---------------------------------------------------------------------------
# projection


def _projection_cases(cfg, rng):
    """A model with a variable; yields (state, variable) pairs."""
    m = _model(cfg, rng, with_variable=True)
    return m, [(s, x) for s in m.states for x in m.sig.variables]


def p_value_quotient_representation(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    for s, x in cases:
        g = quotient_game_form(m, s, x)
        for c in m.sig.all_coalitions():
            if game_form_effectivity(g, c) != projected_effectivity_direct(m, s, x, c):
                out.append(_fail(m, state=s, variable=x, coalition=list(c)))
    return out


def p_operational_hypergraph(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    for s, x in cases:
        for c in m.sig.all_coalitions():
            if projected_effectivity(m, s, x, c) != projected_effectivity_direct(m, s, x, c):
                out.append(_fail(m, state=s, variable=x, coalition=list(c)))
    return out


def p_minimal_ranges(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    for s, x in cases:
        dom = m.sig.domain(x)
        for c in m.sig.all_coalitions():
            hyper = [to_mask(dom, r) for r in range_hypergraph(m, s, x, c)]
            fam = projected_effectivity(m, s, x, c)
            closure = setfamily.upset_members(hyper, len(dom))
            brute_min = sorted(a for a in closure if not any(b != a and b & ~a == 0 for b in closure))
            if sorted(fam.masks) != brute_min or not setfamily.is_antichain(fam.masks):
                out.append(_fail(m, state=s, variable=x, coalition=list(c)))
    return out


def _direct_members(m, s, x, c, cache):
    key = (s, x, c)
    if key not in cache:
        fam = projected_effectivity_direct(m, s, x, c)
        cache[key] = set(setfamily.upset_members(fam.masks, len(m.sig.domain(x))))
    return cache[key]


def p_value_monotonicity(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    cache = {}
    for s, x in cases:
        n = len(m.sig.domain(x))
        for c in m.sig.all_coalitions():
            members = _direct_members(m, s, x, c, cache)
            for a in members:
                for b in range(1 << n):
                    if a & ~b == 0 and b not in members:
                        out.append(_fail(m, state=s, variable=x, coalition=list(c), a=a, b=b))
    return out


def p_coalition_monotonicity(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    cache = {}
    for s, x in cases:
        for c, e in _subset_pairs(m.sig):
            if not _direct_members(m, s, x, c, cache) <= _direct_members(m, s, x, e, cache):
                out.append(_fail(m, state=s, variable=x, smaller=list(c), larger=list(e)))
    return out


def p_liveness_safety(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    for s, x in cases:
        dom = m.sig.domain(x)
        for c in m.sig.all_coalitions():
            live = evaluate(m, s, Coal(c, region_formula(x, dom, m.sig)))
            safe = not evaluate(m, s, Coal(c, region_formula(x, (), m.sig)))
            fam = projected_effectivity(m, s, x, c)
            if not (live and safe and set(dom) in fam and set() not in fam):
                out.append(_fail(m, state=s, variable=x, coalition=list(c)))
    return out


def p_meet_superadditivity(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    cache = {}
    for s, x in cases:
        for c, e in _coalition_pairs(m.sig):
            union = m.sig.coalition(c + e)
            joint = _direct_members(m, s, x, union, cache)
            for a in _direct_members(m, s, x, c, cache):
                for b in _direct_members(m, s, x, e, cache):
                    if a & b not in joint:
                        out.append(_fail(m, state=s, variable=x, c=list(c), e=list(e), a=a, b=b))
    return out


def p_set_valued_exclusion(cfg, rng):
    m = _model(cfg, rng, with_variable=True)
    sig = m.sig
    out = []
    full = m.tables.all_states
    for x in sig.variables:
        dom = sig.domain(x)
        for c, e in _coalition_pairs(sig):
            for _ in range(6):
                a, b = [], []
                for v in dom:
                    k = rng.below(3)
                    (a if k == 0 else b if k == 1 else []).append(v)
                f = exclusion_formula(sig, x, c, a, e, b)
                if extension(m, f) != full:
                    out.append(_fail(m, formula=render_formula(f)))
    return out


def p_singleton_exclusion(cfg, rng):
    m = _model(cfg, rng, with_variable=True)
    sig = m.sig
    out = []
    full = m.tables.all_states
    for x in sig.variables:
        dom = sig.domain(x)
        for c, e in _coalition_pairs(sig):
            for v, w in itertools.permutations(dom, 2):
                f = implies(Coal(c, sig.atom(x, v)), Neg(Coal(e, sig.atom(x, w))))
                if extension(m, f) != full:
                    out.append(_fail(m, formula=render_formula(f)))
    return out


def p_transversal_polarity(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    cache = {}
    for s, x in cases:
        dom = m.sig.domain(x)
        for c, e in _coalition_pairs(m.sig):
            dual_c = transversal_dual(projected_effectivity(m, s, x, c), dom)
            for b in _direct_members(m, s, x, e, cache):
                if not setfamily.in_upset(dual_c.masks, b):
                    out.append(_fail(m, state=s, variable=x, c=list(c), e=list(e), region=b))
    return out


def p_generator_transversal(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    for s, x in cases:
        for c, e in _coalition_pairs(m.sig):
            gc = projected_effectivity(m, s, x, c).masks
            ge = projected_effectivity(m, s, x, e).masks
            if any(not (g & h) for g in gc for h in ge):
                out.append(_fail(m, state=s, variable=x, c=list(c), e=list(e)))
    return out


def p_boundary_duality(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    cache = {}
    for s, x in cases:
        dom = m.sig.domain(x)
        n = len(dom)
        r = to_mask(dom, one_step_value_range(m, s, x))
        empty = _direct_members(m, s, x, (), cache)
        grand = _direct_members(m, s, x, m.sig.agents, cache)
        ok = empty == {a for a in range(1 << n) if r & ~a == 0}
        ok &= grand == {a for a in range(1 << n) if a & r}
        fam_empty = projected_effectivity(m, s, x, ())
        fam_grand = projected_effectivity(m, s, x, m.sig.agents)
        ok &= transversal_dual(fam_empty, dom) == fam_grand
        ok &= transversal_dual(fam_grand, dom) == fam_empty
        if not ok:
            out.append(_fail(m, state=s, variable=x))
    return out


def p_indeterminacy_operational(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    out = []
    cache = {}
    for s, x in cases:
        for c in m.sig.all_coalitions():
            direct = min(a.bit_count() for a in _direct_members(m, s, x, c, cache))
            if residual_indeterminacy(m, s, x, c) != direct:
                out.append(_fail(m, state=s, variable=x, coalition=list(c)))
    return out


def p_indeterminacy_basic(cfg, rng):
    m, cases = _projection_cases(cfg, rng)
    sig = m.sig
    out = []
    for s, x in cases:
        dom = sig.domain(x)
        iota = {c: residual_indeterminacy(m, s, x, c) for c in sig.all_coalitions()}
        for c, v in iota.items():
            singleton = any(evaluate(m, s, Coal(c, sig.atom(x, d))) for d in dom)
            if not 1 <= v <= len(dom) or (v == 1) != singleton:
                out.append(_fail(m, state=s, variable=x, coalition=list(c), iota=v))
        for c, e in _subset_pairs(sig):
            if iota[e] > iota[c]:
                out.append(_fail(m, state=s, variable=x, smaller=list(c), larger=list(e)))
        if iota[()] != len(one_step_value_range(m, s, x)) or iota[sig.agents] != 1:
            out.append(_fail(m, state=s, variable=x, detail="boundary values"))
    return out


def p_de_re_de_dicto(cfg, rng):
    m = _model(cfg, rng, with_variable=True)
    sig = m.sig
    out = []
    for x in sig.variables:
        c = random_coalition(sig, rng)
        psis = [random_formula(cfg, sig, "vcl", rng, depth=rng.between(0, 2)) for _ in sig.domain(x)]
        f = implies(de_re_formula(sig, c, x, psis), de_dicto_formula(sig, c, x, psis))
        if extension(m, f) != m.tables.all_states:
            out.append(_fail(m, formula=render_formula(f)))
    return out


# ---------------------------------------------------------------------------
# proof system


def p_soundness(cfg, rng):
    seed = rng.below(1 << 31)
    rep = soundness_harness(seed, n_models=4, n_instances=24)
    return rep.counterexamples + [dict(m, kind="misclassified") for m in rep.misclassified]


def random_derivation(cfg, sig, rng, n_axioms: int = 6) -> Derivation:
    """An accepted ``vcl_theta`` derivation mixing sampled axioms, MP and RE steps."""
    from .soundness import INSTANCE_SAMPLERS

    names = [n for n in INSTANCE_SAMPLERS if n not in ("V1", "V2")]
    if any(len(d) > 1 for d in sig.domains):
        names += ["V1", "V2"]
    elif sig.variables:
        names += ["V1"]
    lines: list[Line] = []
    for _ in range(n_axioms):
        name = rng.choice(names)
        lines.append(Line(INSTANCE_SAMPLERS[name](sig, rng, cfg), Axiom(name)))
        # weaken: from phi, via phi -> (psi -> phi), derive psi -> phi
        phi = lines[-1].formula
        psi = random_formula(cfg, sig, "vcl", rng, depth=1)
        lines.append(Line(implies(phi, implies(psi, phi)), Axiom("P1")))
        lines.append(Line(implies(psi, phi), MP(len(lines) - 1, len(lines))))
    # congruence under a modality
    chi = random_formula(cfg, sig, "vcl", rng, depth=2)
    c = random_coalition(sig, rng)
    lines.append(Line(iff(chi, Neg(Neg(chi))), Axiom("P1")))
    lines.append(Line(iff(Coal(c, chi), Coal(c, Neg(Neg(chi)))), RE(len(lines), c)))
    return Derivation("vcl_theta", tuple(lines))


def p_syntactic_correspondence(cfg, rng):
    sig = random_signature(cfg, rng, min_variables=1)
    d = random_derivation(cfg, sig, rng)
    out = []
    if not check_derivation(d, sig):
        out.append({"detail": "sampled derivation rejected", "result": check_derivation(d, sig).as_dict()})
        return out
    t = translate_derivation(d)
    if not check_derivation(t, sig):
        out.append({"detail": "translated derivation rejected", "result": check_derivation(t, sig).as_dict()})
    if back_translate_derivation(t, sig) != d:
        out.append({"detail": "back translation does not restore the derivation"})
    m = random_model(cfg, rng, sig)
    for k, line in enumerate(d.lines, start=1):
        if extension(m, line.formula) != m.tables.all_states:
            out.append(_fail(m, line=k, formula=render_formula(line.formula)))
    return out


# ---------------------------------------------------------------------------
# fixtures


def p_fixture_ex1(cfg, rng):
    m = fixture_ex1()
    out = []
    g = quotient_game_form(m, "s", "x")
    if g.matrix() != [["a", "b"], ["b", "c"]]:
        out.append({"detail": "quotient matrix", "got": g.matrix()})
    want = {frozenset("ab"), frozenset("bc")}
    if range_hypergraph(m, "s", "x", ("1",)) != want:
        out.append({"detail": "range hypergraph"})
    fam = projected_effectivity(m, "s", "x", ("1",))
    if set(fam.generators) != want or fam != projected_effectivity_direct(m, "s", "x", ("1",)):
        out.append({"detail": "generators"})
    if any({v} in fam for v in "abc") or set("abc") not in fam:
        out.append({"detail": "membership"})
    if residual_indeterminacy(m, "s", "x", ("1",)) != 2:
        out.append({"detail": "indeterminacy"})
    return out


def p_fixture_ex2(cfg, rng):
    m, psis = fixture_ex2()
    sig = m.sig
    out = []
    if not evaluate(m, "s", de_dicto_formula(sig, ("1",), "x", psis)):
        out.append({"detail": "de dicto formula should hold at s"})
    for c, psi in zip(sig.domain("x"), psis):
        if evaluate(m, "s", Coal(("1",), And(sig.atom("x", c), psi))):
            out.append({"detail": f"de re disjunct for {c} should fail at s"})
    f = implies(de_re_formula(sig, ("1",), "x", psis), de_dicto_formula(sig, ("1",), "x", psis))
    if extension(m, f) != m.tables.all_states:
        out.append({"detail": "de re -> de dicto should hold everywhere"})
    return out


# name -> (anchor, check, runs once)
PROPERTIES: dict[str, tuple[str, Callable, bool]] = {
    "assignment_coherence": ("Assignment coherence", p_assignment_coherence, False),
    "successor_monotonicity": ("Truth definition", p_successor_monotonicity, False),
    "evaluation_agreement": ("Truth definition", p_evaluation_agreement, False),
    "parse_render_roundtrip": ("VCL formulas", p_parse_render_roundtrip, False),
    "desugaring": ("VCL formulas", p_desugaring, False),
    "truth_correspondence": ("Truth correspondence", p_truth_correspondence, False),
    "dual_truth_correspondence": ("Truth correspondence", p_dual_truth_correspondence, False),
    "near_inverse": ("Near-inverse correspondence", p_near_inverse, False),
    "associated_models": ("Associated models", p_associated_models, False),
    "validity_transfer": ("Validity correspondence", p_validity_transfer, False),
    "back_translation": ("Syntactic correspondence", p_back_translation, False),
    "value_quotient_representation": ("Value-quotient representation", p_value_quotient_representation, False),
    "operational_hypergraph": ("Operational hypergraph representation", p_operational_hypergraph, False),
    "minimal_ranges": ("Minimal strategic ranges", p_minimal_ranges, False),
    "value_monotonicity": ("Basic laws of projected value-effectivity", p_value_monotonicity, False),
    "coalition_monotonicity": ("Basic laws of projected value-effectivity", p_coalition_monotonicity, False),
    "liveness_safety": ("Basic laws of projected value-effectivity", p_liveness_safety, False),
    "meet_superadditivity": ("Basic laws of projected value-effectivity", p_meet_superadditivity, False),
    "set_valued_exclusion": ("Set-valued strategic exclusion", p_set_valued_exclusion, False),
    "singleton_exclusion": ("Singleton strategic exclusion", p_singleton_exclusion, False),
    "transversal_polarity": ("Strategic transversal polarity", p_transversal_polarity, False),
    "generator_transversal": ("Generator-level transversal constraint", p_generator_transversal, False),
    "boundary_duality": ("Boundary transversal duality", p_boundary_duality, False),
    "indeterminacy_operational": ("Operational characterisation of residual indeterminacy", p_indeterminacy_operational, False),
    "indeterminacy_basic": ("Basic properties of residual indeterminacy", p_indeterminacy_basic, False),
    "de_re_de_dicto": ("De re implies de dicto", p_de_re_de_dicto, False),
    "soundness": ("Soundness", p_soundness, False),
    "syntactic_correspondence": ("Syntactic correspondence", p_syntactic_correspondence, False),
    "fixture_ex1": ("Example: value-range hypergraph", p_fixture_ex1, True),
    "fixture_ex2": ("De re implies de dicto", p_fixture_ex2, True),
}


def run_property_suite(cfg: GeneratorConfig | None = None, trials: int = 20, names=None) -> PropertyReport:
    """Run every property (or those in ``names``) and collect failures.

    Results and their failures are ordered by property name, then trial.
    """
    cfg = cfg or GeneratorConfig()
    selected = sorted(names) if names is not None else sorted(PROPERTIES)
    results = []
    for name in selected:
        anchor, check, once = PROPERTIES[name]
        n = 1 if once else trials
        res = PropertyResult(name, anchor, n)
        start = time.perf_counter()
        for i in range(n):
            for failure in check(cfg, cfg.rng(name, i)):
                res.failures.append({"trial": i, **failure})
        res.elapsed = time.perf_counter() - start
        results.append(res)
    return PropertyReport(cfg.seed, trials, results)
