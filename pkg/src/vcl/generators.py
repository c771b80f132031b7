"""Seeded random signatures, models and formulas.

Randomness comes from MT19937 and is consumed only through 32-bit draws,
with bounded integers taken by rejection sampling.  A stream is keyed by a
string such as ``"7:truth_correspondence:12"``: the SHA-256 digest of its
UTF-8 bytes, read as eight little-endian 32-bit words, is the key passed to
the reference ``init_by_array`` (trailing zero words dropped, as CPython
does).  Any MT19937 implementation can therefore replay a stream.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .models import GameModel
from .syntax import (
    TOP,
    And,
    Coal,
    Formula,
    Neg,
    PropAtom,
    TypedSignature,
    ValueAtom,
    implies,
    lor,
)

VARIABLE_NAMES = ("x", "y", "z")
VALUE_NAMES = ("a", "b", "c", "d")

_BOUNDS = {
    "n_agents": (1, 4),
    "actions_per_agent": (1, 3),
    "n_states": (1, 6),
    "n_variables": (0, 3),
    "domain_size": (1, 4),
    "formula_depth": (0, 4),
}


class Rng:
    """Small deterministic sampler on top of MT19937."""

    def __init__(self, *key):
        digest = hashlib.sha256(":".join(str(k) for k in key).encode("utf-8")).digest()
        # an int seed is split into 32-bit words, least significant first, for init_by_array
        self._mt = random.Random(int.from_bytes(digest, "little"))

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``, n < 2**32."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 32) - (1 << 32) % n
        while True:
            r = self._mt.getrandbits(32)
            if r < limit:
                return r % n

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]

    def coin(self) -> bool:
        return self.below(2) == 1

    def subset(self, seq: Sequence) -> list:
        return [v for v in seq if self.coin()]


@dataclass(frozen=True)
class GeneratorConfig:
    """Upper bounds for sampled artifacts; each draw picks sizes up to these."""

    seed: int = 1
    n_agents: int = 3
    actions_per_agent: int = 3
    n_states: int = 5
    n_variables: int = 2
    domain_size: int = 4
    formula_depth: int = 3

    def __post_init__(self):
        for name, (lo, hi) in _BOUNDS.items():
            v = getattr(self, name)
            if not lo <= v <= hi:
                raise ValueError(f"{name}={v} outside [{lo}, {hi}]")

    def rng(self, *stream) -> Rng:
        return Rng(self.seed, *stream)


def random_signature(cfg: GeneratorConfig, rng: Rng, min_variables: int = 0) -> TypedSignature:
    n_agents = rng.between(1, cfg.n_agents)
    lo = min(min_variables, cfg.n_variables)
    n_vars = rng.between(lo, cfg.n_variables)
    domains = {}
    for x in VARIABLE_NAMES[:n_vars]:
        domains[x] = VALUE_NAMES[: rng.between(1, cfg.domain_size)]
    return TypedSignature.build([str(i + 1) for i in range(n_agents)], domains)


def _strategic_part(cfg: GeneratorConfig, rng: Rng, sig: TypedSignature):
    states = tuple(f"s{i}" for i in range(rng.between(1, cfg.n_states)))
    actions = {a: tuple(f"a{a}_{j}" for j in range(rng.between(1, cfg.actions_per_agent))) for a in sig.agents}
    profiles = list(itertools.product(*(actions[a] for a in sig.agents)))
    outcome = {s: {p: rng.choice(states) for p in profiles} for s in states}
    return states, actions, outcome


def random_model(cfg: GeneratorConfig, rng: Rng | None = None, sig: TypedSignature | None = None) -> GameModel:
    """A uniformly sampled valid typed-assignment model within ``cfg``'s bounds."""
    rng = rng or cfg.rng("model")
    sig = sig or random_signature(cfg, rng)
    states, actions, outcome = _strategic_part(cfg, rng, sig)
    assignment = {s: {x: rng.choice(sig.domain(x)) for x in sig.variables} for s in states}
    return GameModel(sig, states, actions, outcome, assignment=assignment)


def random_coherent_prop_model(cfg: GeneratorConfig, rng: Rng | None = None, sig: TypedSignature | None = None) -> GameModel:
    """A propositional model labeled with exactly one atom per variable at each state."""
    rng = rng or cfg.rng("prop-model")
    sig = sig or random_signature(cfg, rng)
    states, actions, outcome = _strategic_part(cfg, rng, sig)
    valuation = {s: frozenset(PropAtom(x, rng.choice(sig.domain(x))) for x in sig.variables) for s in states}
    return GameModel(sig, states, actions, outcome, valuation=valuation)


def random_prop_model(cfg: GeneratorConfig, rng: Rng | None = None, sig: TypedSignature | None = None) -> GameModel:
    """A propositional model with an arbitrary (usually incoherent) valuation."""
    rng = rng or cfg.rng("raw-prop-model")
    sig = sig or random_signature(cfg, rng)
    states, actions, outcome = _strategic_part(cfg, rng, sig)
    valuation = {s: frozenset(rng.subset(sig.atoms("prop"))) for s in states}
    return GameModel(sig, states, actions, outcome, valuation=valuation)


def random_coalition(sig: TypedSignature, rng: Rng) -> tuple[str, ...]:
    return tuple(rng.subset(sig.agents))


def random_formula(cfg: GeneratorConfig, sig: TypedSignature, lang: str = "vcl", rng: Rng | None = None, depth: int | None = None) -> Formula:
    """A formula of nesting depth at most ``depth`` (default ``cfg.formula_depth``).

    Coalitions are uniform over all subsets of agents.  Disjunctions and
    implications are produced through their core encodings.
    """
    rng = rng or cfg.rng("formula")
    depth = cfg.formula_depth if depth is None else depth
    atom_type = ValueAtom if lang == "vcl" else PropAtom
    atoms = [atom_type(x, c) for x, dom in zip(sig.variables, sig.domains) for c in dom]

    def leaf():
        if atoms and rng.below(4):
            return rng.choice(atoms)
        return TOP

    def gen(d):
        if d == 0:
            return leaf()
        k = rng.below(7)
        if k == 0:
            return leaf()
        if k == 1:
            return Neg(gen(d - 1))
        if k == 2:
            return And(gen(d - 1), gen(d - 1))
        if k in (3, 4):
            return Coal(random_coalition(sig, rng), gen(d - 1))
        if k == 5:
            return lor(gen(d - 1), gen(d - 1))
        return implies(gen(d - 1), gen(d - 1))

    return gen(depth)
