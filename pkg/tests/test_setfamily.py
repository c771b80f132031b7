from hypothesis import given, settings
from hypothesis import strategies as st

from vcl import setfamily as sf

N = 5
masks = st.integers(min_value=0, max_value=(1 << N) - 1)
families = st.lists(masks, max_size=7)


def brute_upset(gens, n):
    return {a for a in range(1 << n) if any(g & ~a == 0 for g in gens)}


def brute_minimal(sets):
    sets = set(sets)
    return {a for a in sets if not any(b != a and b & ~a == 0 for b in sets)}


def brute_dual(family_members, n):
    return {b for b in range(1 << n) if all(a & b for a in family_members)}


def test_minimal_examples():
    ab, bc, abc = 0b011, 0b110, 0b111
    assert set(sf.minimal([ab, bc, abc])) == {ab, bc}
    assert sf.minimal([0b010]) == (0b010,)


def test_transversal_example():
    # F = up{{a,b},{b,c}} over {a,b,c}: its dual is up{{b},{a,c}}
    dual = sf.minimal_transversals([0b011, 0b110])
    assert set(dual) == {0b010, 0b101}


def test_transversal_edge_cases():
    assert sf.minimal_transversals([]) == (0,)
    assert sf.minimal_transversals([0]) == ()
    full = 0b111
    assert set(sf.transversal_members([full], 3)) == set(range(1, 8))
    assert set(sf.transversal_members([], 3)) == set(range(8))


def test_canonical_order():
    assert sf.canonical([0b110, 0b001, 0b011]) == (0b001, 0b011, 0b110)


@settings(max_examples=200, deadline=None)
@given(families)
def test_minimal_is_antichain_with_same_upset(gens):
    mins = sf.minimal(gens)
    assert sf.is_antichain(mins)
    assert set(mins) == brute_minimal(gens)
    assert brute_upset(mins, N) == brute_upset(gens, N)
    assert set(sf.minimal(brute_upset(gens, N))) == set(mins)


@settings(max_examples=200, deadline=None)
@given(families, masks)
def test_upset_membership_and_size(gens, probe):
    up = brute_upset(gens, N)
    assert sf.in_upset(gens, probe) == (probe in up)
    assert set(sf.upset_members(gens, N)) == up
    assert sf.upset_size(gens, N) == len(up)
    assert sf.upset_size(gens, N, enumerate_limit=0) == len(up)


@settings(max_examples=200, deadline=None)
@given(families)
def test_berge_matches_brute_force(edges):
    members = brute_upset(edges, N)
    dual = brute_dual(members, N)
    gens = sf.minimal_transversals(edges)
    assert brute_upset(gens, N) == dual
    assert set(gens) == brute_minimal(dual)
    assert set(sf.transversal_members(edges, N)) == dual


@settings(max_examples=100, deadline=None)
@given(families)
def test_dual_is_an_involution_on_upsets(edges):
    once = sf.minimal_transversals(edges)
    twice = sf.minimal_transversals(once)
    assert set(twice) == set(sf.minimal(edges))
