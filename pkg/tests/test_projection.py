import itertools

import pytest

from vcl.errors import ResourceError
from vcl.fixtures import fixture_ex1, fixture_ex2
from vcl.generators import GeneratorConfig, Rng, random_coalition, random_model, random_signature
from vcl.models import JointProfile, evaluate
from vcl.projection import (
    EffectivityFamily,
    exclusion_formula,
    game_form_effectivity,
    generator_witnesses,
    minimal_generators,
    one_step_value_range,
    projected_effectivity,
    projected_effectivity_direct,
    quotient_game_form,
    range_hypergraph,
    residual_indeterminacy,
    transversal_dual,
    value_range,
)
from vcl.syntax import TypedSignature

S = frozenset
D = ("a", "b", "c")


def brute_ranges(m, s, x, coalition):
    """Strategic value ranges straight from the outcome dictionary."""
    agents = m.sig.agents
    others = [a for a in agents if a not in coalition]
    ranges = set()
    for mine in itertools.product(*(m.actions[a] for a in coalition)):
        choice = dict(zip(coalition, mine))
        reached = set()
        for theirs in itertools.product(*(m.actions[a] for a in others)):
            choice.update(zip(others, theirs))
            reached.add(m.assignment[m.outcome[s][tuple(choice[a] for a in agents)]][x])
        ranges.add(S(reached))
    return ranges


def brute_family(m, s, x, coalition):
    dom = m.sig.domain(x)
    ranges = brute_ranges(m, s, x, coalition)
    subsets = [S(c for c, on in zip(dom, bits) if on) for bits in itertools.product([0, 1], repeat=len(dom))]
    return {a for a in subsets if any(r <= a for r in ranges)}


def test_ex1_quotient_matrix():
    g = quotient_game_form(fixture_ex1(), "s", "x")
    assert g.matrix() == [["a", "b"], ["b", "c"]]
    assert g.outcome(("α2", "β1")) == "b"


def test_ex2_quotient_matrix():
    m, _ = fixture_ex2()
    assert quotient_game_form(m, "s", "x").matrix() == [["a", "b"]]


def test_ex1_game_form_effectivity():
    g = quotient_game_form(fixture_ex1(), "s", "x")
    assert set(game_form_effectivity(g, ["1"]).generators) == {S("ab"), S("bc")}
    assert set(game_form_effectivity(g, []).generators) == {S("abc")}
    assert set(game_form_effectivity(g, ["1", "2"]).generators) == {S("a"), S("b"), S("c")}


def test_ex1_value_ranges():
    m = fixture_ex1()
    assert value_range(m, "s", "x", ["1"], JointProfile(("1",), ("α1",))) == S("ab")
    assert value_range(m, "s", "x", ["1"], JointProfile(("1",), ("α2",))) == S("bc")
    for p in itertools.product(("α1", "α2"), ("β1", "β2")):
        assert len(value_range(m, "s", "x", ["1", "2"], JointProfile(("1", "2"), p))) == 1


def test_range_hypergraphs():
    m = fixture_ex1()
    assert range_hypergraph(m, "s", "x", ["1"]) == {S("ab"), S("bc")}
    assert range_hypergraph(m, "s", "x", []) == {S("abc")}
    m2, _ = fixture_ex2()
    assert range_hypergraph(m2, "s", "x", ["1"]) == {S("ab")}


def test_ex1_projected_family():
    m = fixture_ex1()
    fam = projected_effectivity(m, "s", "x", ["1"])
    assert fam.generators == (S("ab"), S("bc"))
    assert S("abc") in fam and S("ab") in fam
    assert not any(S(c) in fam for c in D)
    assert S() not in fam
    assert residual_indeterminacy(m, "s", "x", ["1"]) == 2
    assert one_step_value_range(m, "s", "x") == S("abc")
    wit = generator_witnesses(m, "s", "x", ["1"])
    assert wit == {S("ab"): JointProfile(("1",), ("α1",)), S("bc"): JointProfile(("1",), ("α2",))}


def test_ex2_values():
    m, _ = fixture_ex2()
    assert one_step_value_range(m, "s", "x") == S("ab")
    assert residual_indeterminacy(m, "s", "x", ["1"]) == 2
    assert residual_indeterminacy(m, "s", "x", ["2"]) == 1


def test_minimal_generators():
    assert set(minimal_generators([S("ab"), S("bc"), S("abc")], D)) == {S("ab"), S("bc")}
    assert minimal_generators([S("b")], D) == (S("b"),)


def test_transversal_dual_examples():
    dual = transversal_dual([S("ab"), S("bc")], D)
    assert set(dual.generators) == {S("b"), S("ac")}
    assert set(dual.members()) == {a for a in EffectivityFamily.from_sets(D, [S()]).members() if "b" in a or {"a", "c"} <= a}
    full = transversal_dual([S(D)], D)
    assert set(full.members()) == {a for a in EffectivityFamily.from_sets(D, [S()]).members() if a}
    empty = transversal_dual(EffectivityFamily(D, ()), D)
    assert empty.size() == 8 and S() in empty


def test_direct_route_cap():
    sig = TypedSignature.build(["1"], {"x": [f"v{i}" for i in range(17)]})
    from vcl.models import GameModel

    m = GameModel(sig, ("s",), {"1": ("a",)}, {"s": {("a",): "s"}}, assignment={"s": {"x": "v0"}})
    assert projected_effectivity(m, "s", "x", ["1"]).generators == (S({"v0"}),)
    with pytest.raises(ResourceError):
        projected_effectivity_direct(m, "s", "x", ["1"])


def _cases(seed, n):
    cfg = GeneratorConfig(seed=seed)
    for i in range(n):
        rng = Rng(seed, "proj", i)
        sig = random_signature(cfg, rng, min_variables=1)
        m = random_model(cfg, rng, sig)
        yield m, rng.choice(m.states), rng.choice(sig.variables), random_coalition(sig, rng)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_projection_matches_brute_force(seed):
    for m, s, x, c in _cases(seed, 80):
        fam = projected_effectivity(m, s, x, c)
        want = brute_family(m, s, x, c)
        assert set(fam.members()) == want
        assert set(projected_effectivity_direct(m, s, x, c).members()) == want
        assert set(fam.generators) == {a for a in want if not any(b < a for b in want)}
        assert range_hypergraph(m, s, x, c) == brute_ranges(m, s, x, c)
        assert game_form_effectivity(quotient_game_form(m, s, x), c) == fam
        assert residual_indeterminacy(m, s, x, c) == min(len(a) for a in want)


@pytest.mark.parametrize("seed", [4, 5])
def test_grand_and_empty_coalitions(seed):
    for m, s, x, _ in _cases(seed, 60):
        reach = one_step_value_range(m, s, x)
        grand = projected_effectivity(m, s, x, m.sig.agents)
        assert set(grand.generators) == {S({c}) for c in reach}
        assert residual_indeterminacy(m, s, x, m.sig.agents) == 1
        assert residual_indeterminacy(m, s, x, ()) == len(reach)


def test_exclusion_formula_valid_on_ex1():
    m = fixture_ex1()
    f = exclusion_formula(m.sig, "x", ["1"], ["a", "b"], ["2"], ["c"])
    assert all(evaluate(m, s, f) for s in m.states)
