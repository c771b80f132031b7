"""Translation between typed-assignment models and coherent propositional ones."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IncoherentModelError, SortError
from .models import GameModel
from .syntax import (
    And,
    Coal,
    Formula,
    Neg,
    PropAtom,
    Top,
    TypedSignature,
    ValueAtom,
    big_and,
    big_or,
    implies,
)


def _map_atoms(f: Formula, atom) -> Formula:
    if isinstance(f, Top):
        return f
    if isinstance(f, Neg):
        return Neg(_map_atoms(f.sub, atom))
    if isinstance(f, And):
        return And(_map_atoms(f.left, atom), _map_atoms(f.right, atom))
    if isinstance(f, Coal):
        return Coal(f.coalition, _map_atoms(f.sub, atom))
    return atom(f)


def translate(f: Formula) -> Formula:
    """Replace every value atom ``x=c`` by the letter ``p_x^c``."""

    def atom(a):
        if not isinstance(a, ValueAtom):
            raise SortError(f"expected a value atom, got {a!r}")
        return PropAtom(a.variable, a.value)

    return _map_atoms(f, atom)


def back_translate(g: Formula, sig: TypedSignature | None = None) -> Formula:
    """Inverse of :func:`translate`.  With ``sig``, atoms outside it are rejected."""

    def atom(a):
        if not isinstance(a, PropAtom):
            raise SortError(f"expected a propositional atom, got {a!r}")
        if sig is not None:
            sig.check_value(a.variable, a.value)
        return ValueAtom(a.variable, a.value)

    return _map_atoms(g, atom)


def coherence_formula_for(sig: TypedSignature, x: str) -> Formula:
    atoms = [PropAtom(x, c) for c in sig.domain(x)]
    exclusions = [implies(p, Neg(q)) for p in atoms for q in atoms if p != q]
    return big_and([big_or(atoms)] + exclusions)


def coherence_formula(sig: TypedSignature) -> Formula:
    """Conjunction of the exactly-one constraints of every variable; ``T`` without variables."""
    return big_and([coherence_formula_for(sig, x) for x in sig.variables])


@dataclass(frozen=True)
class CoherenceWitness:
    state: str
    variable: str
    kind: str  # "no-value" or "multi-value"
    atoms: tuple[str, ...]


@dataclass(frozen=True)
class CoherenceReport:
    witnesses: tuple[CoherenceWitness, ...] = ()

    @property
    def coherent(self) -> bool:
        return not self.witnesses

    def as_dict(self) -> dict:
        return {
            "coherent": self.coherent,
            "witnesses": [
                {"state": w.state, "variable": w.variable, "kind": w.kind, "atoms": list(w.atoms)}
                for w in self.witnesses
            ],
        }


def is_coherent(n: GameModel) -> CoherenceReport:
    """Every state/variable pair where the exactly-one constraint fails."""
    sig = n.sig
    witnesses = []
    for s in n.states:
        label = n.valuation[s]
        for x in sig.variables:
            on = [c for c in sig.domain(x) if PropAtom(x, c) in label]
            if len(on) != 1:
                kind = "no-value" if not on else "multi-value"
                witnesses.append(CoherenceWitness(s, x, kind, tuple(f"{x}={c}" for c in on)))
    return CoherenceReport(tuple(witnesses))


def to_prop_model(m: GameModel) -> GameModel:
    """The associated propositional model: ``p_x^c`` holds exactly where ``x`` has value ``c``."""
    m.tables  # validates
    valuation = {
        s: frozenset(PropAtom(x, m.assignment[s][x]) for x in m.sig.variables) for s in m.states
    }
    return GameModel(m.sig, m.states, m.actions, m.outcome, valuation=valuation)


def to_vcl_model(n: GameModel) -> GameModel:
    """The associated typed model of a coherent propositional model."""
    n.tables
    report = is_coherent(n)
    if not report.coherent:
        raise IncoherentModelError(report)
    assignment = {}
    for s in n.states:
        assignment[s] = {a.variable: a.value for a in n.valuation[s]}
    return GameModel(n.sig, n.states, n.actions, n.outcome, assignment=assignment)
