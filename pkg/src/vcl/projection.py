"""Value-level views of coalitional ability.

For a state ``s`` and variable ``x``, the one-step game at ``s`` is projected
onto the domain of ``x``.  The enforceable value regions of a coalition are
computed two ways: from the ranges left open by its concrete actions
(:func:`projected_effectivity`) and by model checking ``[C](x in A)`` for
every region ``A`` (:func:`projected_effectivity_direct`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence

from . import setfamily
from .errors import ResourceError, UnknownNameError
from .models import GameModel, JointProfile, _profile_group, _state_idx, coalition_groups, enumerate_profiles, evaluate
from .syntax import And, Coal, Formula, TypedSignature, big_or, implies, Neg, region_formula

DIRECT_CAP = 16


@dataclass(frozen=True)
class EffectivityFamily:
    """An upward-closed family of subsets of ``domain``, stored by its minimal members."""

    domain: tuple[str, ...]
    masks: tuple[int, ...]

    @classmethod
    def from_sets(cls, domain: Sequence[str], sets: Iterable[AbstractSet[str]]) -> "EffectivityFamily":
        domain = tuple(domain)
        return cls(domain, setfamily.minimal(to_mask(domain, A) for A in sets))

    @classmethod
    def from_masks(cls, domain: Sequence[str], masks: Iterable[int]) -> "EffectivityFamily":
        return cls(tuple(domain), setfamily.minimal(masks))

    @property
    def generators(self) -> tuple[frozenset[str], ...]:
        return tuple(to_set(self.domain, g) for g in self.masks)

    def __contains__(self, values) -> bool:
        return setfamily.in_upset(self.masks, to_mask(self.domain, values))

    def size(self) -> int:
        return setfamily.upset_size(self.masks, len(self.domain))

    def members(self) -> list[frozenset[str]]:
        if len(self.domain) > DIRECT_CAP:
            raise ResourceError(f"refusing to list subsets of a {len(self.domain)}-element domain")
        return [to_set(self.domain, a) for a in setfamily.upset_members(self.masks, len(self.domain))]

    def min_cardinality(self) -> int:
        return min(g.bit_count() for g in self.masks)

    def __str__(self):
        return "up{" + ", ".join(format_set(self.domain, g) for g in self.masks) + "}"


def to_mask(domain: Sequence[str], values: Iterable[str]) -> int:
    mask = 0
    for c in values:
        try:
            mask |= 1 << domain.index(c)
        except ValueError:
            raise UnknownNameError(f"value {c!r} is not in the domain {list(domain)}") from None
    return mask


def to_set(domain: Sequence[str], mask: int) -> frozenset[str]:
    return frozenset(c for i, c in enumerate(domain) if mask >> i & 1)


def format_set(domain: Sequence[str], values) -> str:
    mask = values if isinstance(values, int) else to_mask(domain, values)
    return "{" + ",".join(c for i, c in enumerate(domain) if mask >> i & 1) + "}"


@dataclass(frozen=True)
class QuotientGameForm:
    """The one-step game at a state with outcomes replaced by values of one variable.

    ``value_outcome[g]`` is the value reached under the ``g``-th full profile
    (mixed radix over ``agents``, first agent most significant).
    """

    variable: str
    values: tuple[str, ...]
    agents: tuple[str, ...]
    actions: tuple[tuple[str, ...], ...]
    value_outcome: tuple[str, ...]

    def outcome(self, profile: Sequence[str]) -> str:
        g = 0
        for acts, c in zip(self.actions, profile):
            g = g * len(acts) + acts.index(c)
        return self.value_outcome[g]

    def matrix(self) -> list[list[str]]:
        """Rows for the first agent's actions, flattened profiles of the rest as columns."""
        width = len(self.value_outcome) // len(self.actions[0])
        return [list(self.value_outcome[r * width:(r + 1) * width]) for r in range(len(self.actions[0]))]


def _var_row(m: GameModel, x: str) -> list[int]:
    try:
        return m.tables.values[x]
    except KeyError:
        raise UnknownNameError(f"unknown variable {x!r}") from None


def quotient_game_form(m: GameModel, s: str, x: str) -> QuotientGameForm:
    t = m.tables
    row = t.out[_state_idx(m, s)]
    vals = _var_row(m, x)
    dom = m.sig.domain(x)
    return QuotientGameForm(
        variable=x,
        values=dom,
        agents=m.sig.agents,
        actions=tuple(t.action_lists),
        value_outcome=tuple(dom[vals[row[g]]] for g in range(t.n_profiles)),
    )


def game_form_effectivity(g: QuotientGameForm, coalition: Iterable[str]) -> EffectivityFamily:
    """Ordinary effectivity of a coalition in a value-outcome game form."""
    members = set(coalition)
    unknown = members - set(g.agents)
    if unknown:
        raise UnknownNameError(f"unknown agent(s): {sorted(unknown)}")
    radices = [len(a) for a in g.actions]
    positions = [i for i, a in enumerate(g.agents) if a in members]
    ranges = []
    for group in coalition_groups(radices, positions):
        ranges.append(to_mask(g.values, {g.value_outcome[k] for k in group}))
    return EffectivityFamily.from_masks(g.values, ranges)


def _range_masks(m: GameModel, s: str, x: str, coalition: Iterable[str]) -> list[int]:
    t = m.tables
    row = t.out[_state_idx(m, s)]
    vals = _var_row(m, x)
    groups = t.groups(m.sig.coalition_mask(coalition))
    out = []
    for group in groups:
        r = 0
        for g in group:
            r |= 1 << vals[row[g]]
        out.append(r)
    return out


def value_range(m: GameModel, s: str, x: str, coalition: Iterable[str], profile: JointProfile) -> frozenset[str]:
    """Values of ``x`` still possible after ``coalition`` commits to ``profile``."""
    members = m.sig.coalition(coalition)
    if profile.coalition != members:
        raise UnknownNameError(f"profile is over {list(profile.coalition)}, not {list(members)}")
    t = m.tables
    row = t.out[_state_idx(m, s)]
    vals = _var_row(m, x)
    dom = m.sig.domain(x)
    return frozenset(dom[vals[row[g]]] for g in _profile_group(m, profile))


def range_hypergraph(m: GameModel, s: str, x: str, coalition: Iterable[str]) -> set[frozenset[str]]:
    dom = m.sig.domain(x)
    return {to_set(dom, r) for r in _range_masks(m, s, x, coalition)}


def generator_witnesses(m: GameModel, s: str, x: str, coalition: Iterable[str]) -> dict[frozenset[str], JointProfile]:
    """One profile per minimal generator: the first, in enumeration order, whose range it is."""
    dom = m.sig.domain(x)
    masks = _range_masks(m, s, x, coalition)
    gens = set(setfamily.minimal(masks))
    profiles = enumerate_profiles(m, coalition)
    out = {}
    for p, r in zip(profiles, masks):
        if r in gens and to_set(dom, r) not in out:
            out[to_set(dom, r)] = p
    return out


def minimal_generators(family: Iterable[AbstractSet[str]] | EffectivityFamily, domain: Sequence[str] | None = None) -> tuple[frozenset[str], ...]:
    """Inclusion-minimal members of a nonempty family, canonically ordered."""
    if isinstance(family, EffectivityFamily):
        if not family.masks:
            raise ValueError("empty family has no minimal generators")
        return family.generators
    family = [frozenset(A) for A in family]
    if not family:
        raise ValueError("empty family has no minimal generators")
    if domain is None:
        domain = sorted(set().union(*family))
    domain = tuple(domain)
    return tuple(to_set(domain, g) for g in setfamily.minimal(to_mask(domain, A) for A in family))


def projected_effectivity(m: GameModel, s: str, x: str, coalition: Iterable[str]) -> EffectivityFamily:
    """Enforceable regions as the upward closure of the coalition's value ranges."""
    return EffectivityFamily.from_masks(m.sig.domain(x), _range_masks(m, s, x, coalition))


def projected_effectivity_direct(m: GameModel, s: str, x: str, coalition: Iterable[str], cap: int = DIRECT_CAP) -> EffectivityFamily:
    """Enforceable regions by evaluating ``[C](x in A)`` at ``s`` for every ``A``."""
    dom = m.sig.domain(x)
    if len(dom) > cap:
        raise ResourceError(
            f"domain of {x} has {len(dom)} values; direct enumeration is capped at {cap}, use projected_effectivity"
        )
    members = m.sig.coalition(coalition)
    true_regions = []
    for a in range(1 << len(dom)):
        f = Coal(members, region_formula(x, to_set(dom, a), m.sig))
        if evaluate(m, s, f):
            true_regions.append(a)
    return EffectivityFamily.from_masks(dom, true_regions)


def transversal_dual(family: Iterable[AbstractSet[str]] | EffectivityFamily, domain: Sequence[str]) -> EffectivityFamily:
    """All subsets of ``domain`` meeting every member of ``family``.

    The result is upward closed.  The dual of the empty family is the whole
    power set, the empty set included; a family containing the empty set has
    an empty dual.
    """
    domain = tuple(domain)
    if isinstance(family, EffectivityFamily):
        edges = [to_mask(domain, A) for A in family.generators]
    else:
        edges = [to_mask(domain, A) for A in family]
    return EffectivityFamily(domain, setfamily.minimal_transversals(edges))


def one_step_value_range(m: GameModel, s: str, x: str) -> frozenset[str]:
    t = m.tables
    row = t.out[_state_idx(m, s)]
    vals = _var_row(m, x)
    dom = m.sig.domain(x)
    return frozenset(dom[vals[j]] for j in set(row))


def residual_indeterminacy(m: GameModel, s: str, x: str, coalition: Iterable[str]) -> int:
    """Fewest values a coalition can confine ``x`` to: the smallest range of its actions."""
    return min(r.bit_count() for r in _range_masks(m, s, x, coalition))


def exclusion_formula(sig: TypedSignature, x: str, c1: Iterable[str], a: Iterable[str], c2: Iterable[str], b: Iterable[str]) -> Formula:
    """``[C](x in A) -> ~[E](x in B)``."""
    return implies(
        Coal(sig.coalition(c1), region_formula(x, a, sig)),
        Neg(Coal(sig.coalition(c2), region_formula(x, b, sig))),
    )


def de_re_formula(sig: TypedSignature, coalition: Iterable[str], x: str, psis: Sequence[Formula]) -> Formula:
    """Disjunction over values c of ``[C]((x=c) & psi_c)``; ``psis`` follow domain order."""
    members = sig.coalition(coalition)
    dom = sig.domain(x)
    _check_psis(dom, psis)
    return big_or([Coal(members, And(sig.atom(x, c), psi)) for c, psi in zip(dom, psis)])


def de_dicto_formula(sig: TypedSignature, coalition: Iterable[str], x: str, psis: Sequence[Formula]) -> Formula:
    """``[C]`` of the disjunction over values c of ``(x=c) & psi_c``."""
    members = sig.coalition(coalition)
    dom = sig.domain(x)
    _check_psis(dom, psis)
    return Coal(members, big_or([And(sig.atom(x, c), psi) for c, psi in zip(dom, psis)]))


def _check_psis(dom, psis):
    if len(psis) != len(dom):
        raise ValueError(f"need one formula per value ({len(dom)}), got {len(psis)}")
