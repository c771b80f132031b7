"""Explicit one-step game models and the satisfaction relation.

A model carries names everywhere (states, actions, agents) so it compares
structurally and serialises cleanly.  Evaluation runs over a dense index
built once per model: ``out[state][profile]`` with full profiles numbered in
mixed radix over the declared agent order, first agent most significant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ModeError, ModelError, ProfileError, UnknownNameError
from .syntax import (
    And,
    Coal,
    Formula,
    Neg,
    PropAtom,
    Top,
    TypedSignature,
    ValueAtom,
)


@dataclass(frozen=True)
class JointProfile:
    """One action per member of ``coalition`` (both in declared agent order)."""

    coalition: tuple[str, ...] = ()
    actions: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coalition", tuple(self.coalition))
        object.__setattr__(self, "actions", tuple(self.actions))
        if len(self.coalition) != len(self.actions):
            raise ProfileError("a joint profile needs exactly one action per coalition member")
        if len(set(self.coalition)) != len(self.coalition):
            raise ProfileError("repeated agent in joint profile")

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.coalition, self.actions))

    def __str__(self):
        if not self.coalition:
            return "<>"
        return "<" + ", ".join(f"{a}:{c}" for a, c in zip(self.coalition, self.actions)) + ">"


EMPTY_PROFILE = JointProfile()


def merge_profiles(p: JointProfile, q: JointProfile, sig: TypedSignature) -> JointProfile:
    """The profile over the union coalition that extends both ``p`` and ``q``."""
    overlap = set(p.coalition) & set(q.coalition)
    if overlap:
        raise ProfileError(f"profiles overlap on agent(s) {', '.join(sorted(overlap))}")
    choice = {**p.as_dict(), **q.as_dict()}
    members = sig.coalition(choice)
    return JointProfile(members, tuple(choice[a] for a in members))


def coalition_groups(radices: Sequence[int], members: Sequence[int]) -> list[list[int]]:
    """Partition full-profile indices by the choice of the agents in ``members``.

    Groups come in mixed-radix order of the coalition's own profiles; inside a
    group the indices ascend, i.e. follow the complement's profile order.
    """
    n = len(radices)
    weights = [1] * n
    for i in range(n - 2, -1, -1):
        weights[i] = weights[i + 1] * radices[i + 1]
    sub_weights = {}
    w = 1
    for i in reversed(members):
        sub_weights[i] = w
        w *= radices[i]
    groups: list[list[int]] = [[] for _ in range(w)]
    total = weights[0] * radices[0] if n else 1
    for g in range(total):
        key = 0
        for i in members:
            key += (g // weights[i]) % radices[i] * sub_weights[i]
        groups[key].append(g)
    return groups


class _Tables:
    """Dense index of a valid model."""

    def __init__(self, m: "GameModel"):
        sig = m.sig
        self.sig = sig
        self.state_index = {s: i for i, s in enumerate(m.states)}
        self.action_lists = [tuple(m.actions[a]) for a in sig.agents]
        self.action_index = [{c: j for j, c in enumerate(acts)} for acts in self.action_lists]
        self.radices = [len(acts) for acts in self.action_lists]
        self.n_profiles = 1
        for r in self.radices:
            self.n_profiles *= r
        self.profiles = list(itertools.product(*self.action_lists))
        self.out = [[self.state_index[m.outcome[s][prof]] for prof in self.profiles] for s in m.states]
        self.mode = m.mode
        n_states = len(m.states)
        # atom -> bitmask of states where it holds
        self.atom_ext: dict[Formula, int] = {}
        if m.mode == "vcl":
            self.values = {}
            for x in sig.variables:
                vidx = sig.value_index[x]
                row = [vidx[m.assignment[s][x]] for s in m.states]
                self.values[x] = row
                for c in sig.domain(x):
                    self.atom_ext[ValueAtom(x, c)] = 0
                for i, s in enumerate(m.states):
                    self.atom_ext[ValueAtom(x, m.assignment[s][x])] |= 1 << i
        else:
            for atom in sig.atoms("prop"):
                self.atom_ext[atom] = 0
            for i, s in enumerate(m.states):
                for atom in m.valuation[s]:
                    self.atom_ext[atom] |= 1 << i
        self.all_states = (1 << n_states) - 1
        self._groups: dict[int, list[list[int]]] = {}

    def groups(self, mask: int) -> list[list[int]]:
        try:
            return self._groups[mask]
        except KeyError:
            members = [i for i in range(len(self.radices)) if mask >> i & 1]
            self._groups[mask] = coalition_groups(self.radices, members)
            return self._groups[mask]

    def coalition_profile_index(self, p: JointProfile) -> int:
        key = 0
        for a, c in zip(p.coalition, p.actions):
            i = self.sig.agent_index[a]
            try:
                j = self.action_index[i][c]
            except KeyError:
                raise UnknownNameError(f"unknown action {c!r} for agent {a}") from None
            key = key * self.radices[i] + j
        return key


@dataclass(frozen=True)
class GameModel:
    """A one-step game model.

    ``outcome[state][profile]`` gives the successor, where ``profile`` is a
    tuple with one action name per agent in declared order.  Exactly one of
    ``assignment`` (typed mode: state -> variable -> value) and ``valuation``
    (propositional mode: state -> set of ``PropAtom``) is set.
    """

    sig: TypedSignature
    states: tuple[str, ...]
    actions: Mapping[str, tuple[str, ...]]
    outcome: Mapping[str, Mapping[tuple[str, ...], str]]
    assignment: Mapping[str, Mapping[str, str]] | None = None
    valuation: Mapping[str, frozenset] | None = None

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "actions", {a: tuple(v) for a, v in self.actions.items()})

    @property
    def mode(self) -> str:
        return "vcl" if self.valuation is None else "prop"

    @cached_property
    def tables(self) -> _Tables:
        violations = validate_model(self)
        if violations:
            raise ModelError(violations)
        return _Tables(self)

    @property
    def n_profiles(self) -> int:
        n = 1
        for a in self.sig.agents:
            n *= len(self.actions.get(a, ()))
        return n

    def state_mask(self, states: Iterable[str]) -> int:
        idx = self.tables.state_index
        return sum(1 << idx[s] for s in set(states))

    def states_of(self, mask: int) -> list[str]:
        return [s for i, s in enumerate(self.states) if mask >> i & 1]


def validate_model(m: GameModel) -> list[str]:
    """Every totality, sort and naming violation of ``m``; empty iff valid."""
    sig = m.sig
    out = []
    if not m.states:
        out.append("no states")
    if len(set(m.states)) != len(m.states):
        out.append("duplicate state names")
    states = set(m.states)
    for a in m.actions:
        if a not in sig.agent_index:
            out.append(f"actions given for unknown agent {a}")
    action_sets = []
    for a in sig.agents:
        acts = m.actions.get(a)
        if not acts:
            out.append(f"agent {a} has no actions")
            acts = ()
        elif len(set(acts)) != len(acts):
            out.append(f"duplicate actions for agent {a}")
        for c in acts:
            if "," in c:
                out.append(f"action name {c!r} of agent {a} contains a comma")
        action_sets.append(acts)
    profiles = list(itertools.product(*action_sets))
    known_profiles = set(profiles)
    for s in m.outcome:
        if s not in states:
            out.append(f"outcome given for unknown state {s}")
    for s in m.states:
        row = m.outcome.get(s, {})
        for prof in profiles:
            if prof not in row:
                out.append(f"outcome undefined at ({s}, {','.join(prof)})")
            elif row[prof] not in states:
                out.append(f"outcome at ({s}, {','.join(prof)}) is unknown state {row[prof]}")
        for prof in row:
            if prof not in known_profiles:
                out.append(f"outcome at ({s}, {','.join(map(str, prof))}) uses an unknown profile")
    if (m.assignment is None) == (m.valuation is None):
        out.append("exactly one of assignment and valuation must be given")
        return out
    if m.assignment is not None:
        for s in m.states:
            row = m.assignment.get(s)
            if row is None:
                out.append(f"no assignment at state {s}")
                continue
            for x in sig.variables:
                if x not in row:
                    out.append(f"assignment at {s} misses variable {x}")
                elif row[x] not in sig.value_index[x]:
                    out.append(f"assignment at {s}: value {row[x]} not in domain of {x}")
            for x in row:
                if x not in sig.var_index:
                    out.append(f"assignment at {s} names unknown variable {x}")
        for s in m.assignment:
            if s not in states:
                out.append(f"assignment given for unknown state {s}")
    else:
        for s in m.states:
            if s not in m.valuation:
                out.append(f"no valuation at state {s}")
                continue
            for atom in m.valuation[s]:
                if not isinstance(atom, PropAtom):
                    out.append(f"valuation at {s} contains non-propositional atom {atom!r}")
                elif atom.value not in sig.value_index.get(atom.variable, ()):
                    out.append(f"valuation at {s} contains atom {atom.variable}={atom.value} outside the signature")
        for s in m.valuation:
            if s not in states:
                out.append(f"valuation given for unknown state {s}")
    return out


def enumerate_profiles(m: GameModel, coalition: Iterable[str]) -> list[JointProfile]:
    """All joint actions of ``coalition`` in mixed-radix order; ``[<>]`` for the empty coalition."""
    members = m.sig.coalition(coalition)
    choices = itertools.product(*(m.actions[a] for a in members))
    return [JointProfile(members, acts) for acts in choices]


def _state_idx(m: GameModel, s: str) -> int:
    try:
        return m.tables.state_index[s]
    except KeyError:
        raise UnknownNameError(f"unknown state {s!r}") from None


def _profile_group(m: GameModel, p: JointProfile) -> list[int]:
    t = m.tables
    if m.sig.coalition(p.coalition) != p.coalition:
        raise ProfileError("profile coalition is not in declared agent order")
    mask = m.sig.coalition_mask(p.coalition)
    return t.groups(mask)[t.coalition_profile_index(p)]


def successors(m: GameModel, s: str, p: JointProfile) -> set[str]:
    """States reachable from ``s`` when ``p``'s coalition plays ``p`` and the rest play anything."""
    i = _state_idx(m, s)
    row = m.tables.out[i]
    return {m.states[row[g]] for g in _profile_group(m, p)}


def _can_force(groups: list[list[int]], row: list[int], holds: Callable[[int], bool]) -> bool:
    # exists a coalition choice such that every completion leads into `holds`
    return any(all(holds(row[g]) for g in group) for group in groups)


def _atom_mask(t: _Tables, atom: Formula) -> int:
    if t.mode == "vcl" and not isinstance(atom, ValueAtom):
        raise ModeError("propositional atom evaluated on a typed-assignment model")
    if t.mode == "prop" and not isinstance(atom, PropAtom):
        raise ModeError("value atom evaluated on a propositional model")
    t.sig.check_value(atom.variable, atom.value)
    return t.atom_ext[atom]


def evaluate(m: GameModel, s: str, f: Formula) -> bool:
    """Whether ``f`` holds at state ``s`` of ``m``.

    Recursive descent from ``s``; results are cached per (subformula, state)
    within one call, which does not change the answer.
    """
    t = m.tables
    start = _state_idx(m, s)
    memo: dict[tuple[int, int], bool] = {}

    def sat(g: Formula, i: int) -> bool:
        key = (id(g), i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(g, Top):
            r = True
        elif isinstance(g, (ValueAtom, PropAtom)):
            r = bool(_atom_mask(t, g) >> i & 1)
        elif isinstance(g, Neg):
            r = not sat(g.sub, i)
        elif isinstance(g, And):
            r = sat(g.left, i) and sat(g.right, i)
        elif isinstance(g, Coal):
            groups = t.groups(m.sig.coalition_mask(g.coalition))
            sub = g.sub
            r = _can_force(groups, t.out[i], lambda j: sat(sub, j))
        else:
            raise TypeError(f"not a formula: {g!r}")
        memo[key] = r
        return r

    return sat(f, start)


def extension(m: GameModel, f: Formula) -> int:
    """Bitmask (bit i = ``m.states[i]``) of the states where ``f`` holds.

    Computes the same relation as :func:`evaluate`, bottom-up over all states.
    """
    t = m.tables
    full = t.all_states
    cache: dict[int, int] = {}

    def ext(g: Formula) -> int:
        hit = cache.get(id(g))
        if hit is not None:
            return hit
        if isinstance(g, Top):
            r = full
        elif isinstance(g, (ValueAtom, PropAtom)):
            r = _atom_mask(t, g)
        elif isinstance(g, Neg):
            r = full & ~ext(g.sub)
        elif isinstance(g, And):
            r = ext(g.left) & ext(g.right)
        elif isinstance(g, Coal):
            inner = ext(g.sub)
            groups = t.groups(m.sig.coalition_mask(g.coalition))
            r = 0
            for i, row in enumerate(t.out):
                if _can_force(groups, row, lambda j: inner >> j & 1):
                    r |= 1 << i
        else:
            raise TypeError(f"not a formula: {g!r}")
        cache[id(g)] = r
        return r

    return ext(f)


def satisfying_states(m: GameModel, f: Formula) -> list[str]:
    return m.states_of(extension(m, f))


def is_valid_in(m: GameModel, f: Formula) -> bool:
    return extension(m, f) == m.tables.all_states
