import itertools

import pytest

from vcl.correspondence import (
    back_translate,
    coherence_formula,
    coherence_formula_for,
    is_coherent,
    to_prop_model,
    to_vcl_model,
    translate,
)
from vcl.errors import IncoherentModelError, UnknownNameError
from vcl.fixtures import fixture_ex1, fixture_ex2
from vcl.generators import GeneratorConfig, Rng, random_coherent_prop_model, random_formula, random_model
from vcl.models import GameModel, evaluate, extension
from vcl.syntax import TOP, And, Coal, Neg, PropAtom, TypedSignature, ValueAtom, big_and, implies, lor


def test_translate_examples():
    assert translate(ValueAtom("x", "c")) == PropAtom("x", "c")
    assert translate(Coal(("1",), Neg(ValueAtom("x", "a")))) == Coal(("1",), Neg(PropAtom("x", "a")))
    assert translate(TOP) == TOP


def test_back_translate_examples():
    sig = fixture_ex1().sig
    assert back_translate(PropAtom("x", "a"), sig) == ValueAtom("x", "a")
    with pytest.raises(UnknownNameError):
        back_translate(PropAtom("q", "a"), sig)


def test_back_translation_is_left_inverse():
    cfg = GeneratorConfig(seed=4, formula_depth=4)
    for i in range(200):
        rng = Rng(4, "bt", i)
        m = random_model(cfg, rng)
        f = random_formula(cfg, m.sig, "vcl", rng)
        assert back_translate(translate(f), m.sig) == f


def test_coherence_formula_two_values():
    sig = TypedSignature.build(["1"], {"x": ["a", "b"]})
    pa, pb = PropAtom("x", "a"), PropAtom("x", "b")
    assert coherence_formula_for(sig, "x") == big_and([lor(pa, pb), implies(pa, Neg(pb)), implies(pb, Neg(pa))])


def test_coherence_formula_shapes():
    assert coherence_formula(TypedSignature.build(["1"], {})) == TOP
    sig = TypedSignature.build(["1"], {"x": ["a"], "y": ["a", "b"]})
    assert coherence_formula(sig) == And(coherence_formula_for(sig, "x"), coherence_formula_for(sig, "y"))


def test_coherence_formula_means_exactly_one():
    sig = TypedSignature.build(["1"], {"x": ["a", "b", "c"]})
    atoms = sig.atoms("prop")
    labels = [frozenset(a for a, on in zip(atoms, bits) if on) for bits in itertools.product([0, 1], repeat=3)]
    states = tuple(f"s{i}" for i in range(len(labels)))
    n = GameModel(sig, states, {"1": ("a",)}, {s: {("a",): s} for s in states},
                  valuation=dict(zip(states, labels)))
    ext = extension(n, coherence_formula(sig))
    for k, label in enumerate(labels):
        assert bool(ext >> k & 1) == (len(label) == 1)


def test_associated_model_of_ex2():
    m, _ = fixture_ex2()
    n = to_prop_model(m)
    assert n.valuation == {
        "s": frozenset({PropAtom("x", "c")}),
        "s_a": frozenset({PropAtom("x", "a")}),
        "s_b": frozenset({PropAtom("x", "b")}),
    }
    assert is_coherent(n).coherent


def test_near_inverse_on_ex1():
    m = fixture_ex1()
    assert to_vcl_model(to_prop_model(m)) == m


def _relabel(n, label):
    valuation = dict(n.valuation)
    valuation["s"] = frozenset(label)
    return GameModel(n.sig, n.states, n.actions, n.outcome, valuation=valuation)


def test_incoherent_witnesses():
    n = to_prop_model(fixture_ex1())
    multi = _relabel(n, {PropAtom("x", "a"), PropAtom("x", "b")})
    rep = is_coherent(multi)
    assert [(w.state, w.variable, w.kind) for w in rep.witnesses] == [("s", "x", "multi-value")]
    with pytest.raises(IncoherentModelError):
        to_vcl_model(multi)
    none = _relabel(n, set())
    assert [w.kind for w in is_coherent(none).witnesses] == ["no-value"]


def test_all_empty_valuation():
    n = to_prop_model(fixture_ex1())
    empty = GameModel(n.sig, n.states, n.actions, n.outcome, valuation={s: frozenset() for s in n.states})
    rep = is_coherent(empty)
    assert sorted(w.state for w in rep.witnesses) == sorted(n.states)
    assert all(w.kind == "no-value" for w in rep.witnesses)


def test_without_variables_always_coherent():
    cfg = GeneratorConfig(seed=2, n_variables=0)
    for i in range(20):
        m = random_model(cfg, Rng(2, "novar", i))
        assert is_coherent(to_prop_model(m)).coherent


@pytest.mark.parametrize("seed", [1, 2])
def test_truth_correspondence_both_ways(seed):
    cfg = GeneratorConfig(seed=seed)
    for i in range(60):
        rng = Rng(seed, "truth", i)
        m = random_model(cfg, rng)
        ms = to_prop_model(m)
        n = random_coherent_prop_model(cfg, rng)
        nd = to_vcl_model(n)
        assert to_prop_model(nd) == n
        for _ in range(4):
            f = random_formula(cfg, m.sig, "vcl", rng)
            assert extension(m, f) == extension(ms, translate(f))
            g = random_formula(cfg, n.sig, "vcl", rng)
            for s in n.states:
                assert evaluate(nd, s, g) == evaluate(n, s, translate(g))
