"""Hilbert-style derivations for the typed logic and its propositional companion.

``vcl_theta`` works over value atoms, ``cl_coh_theta`` over the letters
``p_x^c``; they share the coalition axioms C1-C5 and rules MP and RE, and
differ only in the atom type of the value-coherence schemata V1 and V2.
Schema P1 (propositional tautologies) is decided by truth table, treating
atoms and modal subformulas as independent letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import ResourceError, VCLError
from .syntax import (
    ATOM_TYPES,
    BOTTOM,
    TOP,
    And,
    Coal,
    Formula,
    Neg,
    PropAtom,
    Top,
    TypedSignature,
    ValueAtom,
    check_formula,
    iff,
    match_iff,
    match_implies,
    region_formula,
)

SYSTEMS = {"vcl_theta": "vcl", "cl_coh_theta": "prop"}
SCHEMATA = ("P1", "C1", "C2", "C3", "C4", "C5", "V1", "V2")
TAUTOLOGY_LETTER_CAP = 20


def _lang(system: str) -> str:
    try:
        return SYSTEMS[system]
    except KeyError:
        raise VCLError(f"unknown proof system {system!r}") from None


# ---------------------------------------------------------------------------
# P1


def _letters(f: Formula, acc: dict) -> None:
    if isinstance(f, Top):
        return
    if isinstance(f, ATOM_TYPES) or isinstance(f, Coal):
        acc.setdefault(f, len(acc))
    elif isinstance(f, Neg):
        _letters(f.sub, acc)
    elif isinstance(f, And):
        _letters(f.left, acc)
        _letters(f.right, acc)
    else:
        raise TypeError(f"not a formula: {f!r}")


def _letter_column(i: int, n: int) -> int:
    """Truth column of letter ``i`` over all 2**n rows (row r sets letter i iff bit i of r)."""
    half = 1 << i
    block = ((1 << half) - 1) << half
    width = half << 1
    rows = 1 << n
    col = block
    while width < rows:
        col |= col << width
        width <<= 1
    return col


def is_tautology_instance(f: Formula, cap: int = TAUTOLOGY_LETTER_CAP) -> bool:
    """Whether ``f`` is a propositional tautology over its atomic and modal subformulas."""
    letters: dict[Formula, int] = {}
    _letters(f, letters)
    n = len(letters)
    if n > cap:
        raise ResourceError(f"{n} propositional letters exceed the truth-table cap of {cap}")
    full = (1 << (1 << n)) - 1
    cols = {g: _letter_column(i, n) for g, i in letters.items()}

    def val(g):
        if isinstance(g, Top):
            return full
        if isinstance(g, Neg):
            return full & ~val(g.sub)
        if isinstance(g, And):
            return val(g.left) & val(g.right)
        return cols[g]

    return val(f) == full


# ---------------------------------------------------------------------------
# schema recognition


def _c1(f, sig, atom):
    pair = match_implies(f)
    if not pair:
        return False
    left, right = pair
    return (
        isinstance(left, Coal) and isinstance(left.sub, And)
        and isinstance(right, Coal)
        and left.coalition == right.coalition
        and left.sub.left == right.sub
    )


def _c2(f, sig, atom):
    return isinstance(f, Neg) and isinstance(f.sub, Coal) and f.sub.sub == BOTTOM


def _c3(f, sig, atom):
    return isinstance(f, Coal) and f.sub == TOP


def _c4(f, sig, atom):
    pair = match_implies(f)
    if not pair:
        return False
    left, right = pair
    if not (isinstance(left, And) and isinstance(left.left, Coal) and isinstance(left.right, Coal)):
        return False
    c, d = left.left, left.right
    if set(c.coalition) & set(d.coalition):
        return False
    return (
        isinstance(right, Coal)
        and right.coalition == sig.coalition(set(c.coalition) | set(d.coalition))
        and right.sub == And(c.sub, d.sub)
    )


def _c5(f, sig, atom):
    pair = match_implies(f)
    if not pair:
        return False
    left, right = pair
    return (
        isinstance(left, Neg) and isinstance(left.sub, Coal)
        and left.sub.coalition == () and isinstance(left.sub.sub, Neg)
        and isinstance(right, Coal) and right.coalition == sig.agents
        and right.sub == left.sub.sub.sub
    )


def _v1(f, sig, atom):
    lang = "vcl" if atom is ValueAtom else "prop"
    return any(f == region_formula(x, sig.domain(x), sig, lang) for x in sig.variables)


def _v2(f, sig, atom):
    pair = match_implies(f)
    if not pair:
        return False
    left, right = pair
    return (
        isinstance(left, atom) and isinstance(right, Neg) and isinstance(right.sub, atom)
        and left.variable == right.sub.variable
        and left.value != right.sub.value
    )


_MATCHERS: dict[str, Callable] = {
    "P1": lambda f, sig, atom: is_tautology_instance(f),
    "C1": _c1,
    "C2": _c2,
    "C3": _c3,
    "C4": _c4,
    "C5": _c5,
    "V1": _v1,
    "V2": _v2,
}


def is_axiom_instance(f: Formula, schema: str, sig: TypedSignature, system: str = "vcl_theta") -> bool:
    lang = _lang(system)
    check_formula(f, sig, lang)
    try:
        matcher = _MATCHERS[schema]
    except KeyError:
        raise VCLError(f"unknown axiom schema {schema!r}") from None
    return matcher(f, sig, ValueAtom if lang == "vcl" else PropAtom)


def match_axiom(f: Formula, sig: TypedSignature, system: str = "vcl_theta") -> str | None:
    """The first schema, in the order P1, C1-C5, V1, V2, that ``f`` instantiates."""
    for schema in SCHEMATA:
        if is_axiom_instance(f, schema, sig, system):
            return schema
    return None


# ---------------------------------------------------------------------------
# derivations


@dataclass(frozen=True)
class Axiom:
    schema: str


@dataclass(frozen=True)
class MP:
    """Modus ponens from line ``minor`` (phi) and line ``major`` (phi -> psi); 1-based."""

    minor: int
    major: int


@dataclass(frozen=True)
class RE:
    """From line ``premise`` (phi <-> psi) infer [C]phi <-> [C]psi."""

    premise: int
    coalition: tuple[str, ...]


@dataclass(frozen=True)
class Line:
    formula: Formula
    justification: Axiom | MP | RE


@dataclass(frozen=True)
class Derivation:
    system: str
    lines: tuple[Line, ...]

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    line: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def as_dict(self):
        return {"ok": self.ok, "line": self.line, "reason": self.reason}


def _cited(lines, k, ref):
    if not isinstance(ref, int) or not 1 <= ref < k:
        raise _LineFailure(f"reference {ref} is not an earlier line")
    return lines[ref - 1].formula


class _LineFailure(Exception):
    pass


def check_derivation(d: Derivation, sig: TypedSignature) -> CheckResult:
    """Verify every line; stop at the first failure and report its 1-based index."""
    lang = _lang(d.system)
    if not d.lines:
        return CheckResult(False, None, "empty derivation")
    for k, line in enumerate(d.lines, start=1):
        f, just = line.formula, line.justification
        try:
            check_formula(f, sig, lang)
            if isinstance(just, Axiom):
                if not is_axiom_instance(f, just.schema, sig, d.system):
                    raise _LineFailure(f"not an instance of {just.schema}")
            elif isinstance(just, MP):
                minor = _cited(d.lines, k, just.minor)
                major = _cited(d.lines, k, just.major)
                pair = match_implies(major)
                if not pair:
                    raise _LineFailure(f"line {just.major} is not an implication")
                if pair[0] != minor:
                    raise _LineFailure(f"antecedent of line {just.major} is not line {just.minor}")
                if pair[1] != f:
                    raise _LineFailure(f"consequent of line {just.major} is not this formula")
            elif isinstance(just, RE):
                premise = _cited(d.lines, k, just.premise)
                pair = match_iff(premise)
                if not pair:
                    raise _LineFailure(f"line {just.premise} is not a biconditional")
                members = sig.coalition(just.coalition)
                expected = iff(Coal(members, pair[0]), Coal(members, pair[1]))
                if f != expected:
                    raise _LineFailure(f"formula is not [{','.join(members)}]-equivalence of line {just.premise}")
            else:
                raise _LineFailure(f"unknown justification {just!r}")
        except _LineFailure as exc:
            return CheckResult(False, k, str(exc))
        except VCLError as exc:
            return CheckResult(False, k, str(exc))
    return CheckResult(True)


def translate_derivation(d: Derivation) -> Derivation:
    """Line-by-line image under the atom translation, into the companion system."""
    from .correspondence import translate

    if d.system != "vcl_theta":
        raise VCLError("translate_derivation expects a vcl_theta derivation")
    return Derivation("cl_coh_theta", tuple(Line(translate(l.formula), l.justification) for l in d.lines))


def back_translate_derivation(d: Derivation, sig: TypedSignature | None = None) -> Derivation:
    from .correspondence import back_translate

    if d.system != "cl_coh_theta":
        raise VCLError("back_translate_derivation expects a cl_coh_theta derivation")
    return Derivation("vcl_theta", tuple(Line(back_translate(l.formula, sig), l.justification) for l in d.lines))
