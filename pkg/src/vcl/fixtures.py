"""The two reference models.

``fixture_ex1``: two agents, two actions each, ``x`` ranging over a, b, c.
At ``s`` the x-values reached are::

            β1  β2
      α1     a   b
      α2     b   c

so agent 1 can confine ``x`` to {a,b} or {b,c} but to no single value.
The successor states ``s_a, s_b, s_c`` carry their value and loop to
themselves; ``x`` is ``a`` at ``s`` itself (any value would do).

``fixture_ex2``: agent 1 has one action, agent 2 picks between ``s_a`` and
``s_b``; ``x`` is ``c`` at ``s``.  With ``psi = (T, T, F)`` the de dicto
formula holds at ``s`` and every de re disjunct fails.
"""

from __future__ import annotations

import itertools

from .models import GameModel
from .syntax import BOTTOM, TOP, Formula, TypedSignature


def _loops(states, actions, agents):
    profiles = list(itertools.product(*(actions[a] for a in agents)))
    return {s: {p: s for p in profiles} for s in states}


def fixture_ex1() -> GameModel:
    sig = TypedSignature.build(["1", "2"], {"x": ["a", "b", "c"]})
    actions = {"1": ("α1", "α2"), "2": ("β1", "β2")}
    states = ("s", "s_a", "s_b", "s_c")
    outcome = _loops(states, actions, sig.agents)
    outcome["s"] = {
        ("α1", "β1"): "s_a",
        ("α1", "β2"): "s_b",
        ("α2", "β1"): "s_b",
        ("α2", "β2"): "s_c",
    }
    assignment = {"s": {"x": "a"}, "s_a": {"x": "a"}, "s_b": {"x": "b"}, "s_c": {"x": "c"}}
    return GameModel(sig, states, actions, outcome, assignment=assignment)


def fixture_ex2() -> tuple[GameModel, tuple[Formula, ...]]:
    """The model and the value-indexed family (psi_a, psi_b, psi_c) = (T, T, F)."""
    sig = TypedSignature.build(["1", "2"], {"x": ["a", "b", "c"]})
    actions = {"1": ("α",), "2": ("β_a", "β_b")}
    states = ("s", "s_a", "s_b")
    outcome = _loops(states, actions, sig.agents)
    outcome["s"] = {("α", "β_a"): "s_a", ("α", "β_b"): "s_b"}
    assignment = {"s": {"x": "c"}, "s_a": {"x": "a"}, "s_b": {"x": "b"}}
    return GameModel(sig, states, actions, outcome, assignment=assignment), (TOP, TOP, BOTTOM)


def bundled(name: str):
    """Path of a bundled data file, e.g. ``bundled("ex1.json")`` or ``bundled("derivations/mp.json")``."""
    from importlib.resources import files

    return files("vcl") / "data" / name
