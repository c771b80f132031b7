"""Typed signatures and the sorted-atom formula language.

One AST serves both languages: value atoms ``(x=c)`` for the typed logic and
propositional atoms ``p_x^c`` for the flat coalition-logic encoding.  Only
``T``, atoms, negation, conjunction and coalition modalities are primitive;
disjunction, implication, equivalence and ``F`` are built by the helpers
below and recognised again when rendering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ParseError, SortError, UnknownNameError

MAX_NAMES = 64


@dataclass(frozen=True)
class TypedSignature:
    """Agents, variables and the finite value domain of each variable.

    All orders are the declared ones; every enumeration in the library
    follows them.
    """

    agents: tuple[str, ...]
    variables: tuple[str, ...] = ()
    domains: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "domains", tuple(tuple(d) for d in self.domains))
        if not self.agents:
            raise ValueError("a signature needs at least one agent")
        if len(set(self.agents)) != len(self.agents):
            raise ValueError("duplicate agent names")
        if len(self.agents) > MAX_NAMES:
            raise ValueError(f"at most {MAX_NAMES} agents are supported")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if len(self.domains) != len(self.variables):
            raise ValueError("one domain is required per variable")
        for x, dom in zip(self.variables, self.domains):
            if not dom:
                raise ValueError(f"domain of {x} is empty")
            if len(set(dom)) != len(dom):
                raise ValueError(f"duplicate values in domain of {x}")
            if len(dom) > MAX_NAMES:
                raise ValueError(f"domain of {x} exceeds {MAX_NAMES} values")

    @classmethod
    def build(cls, agents: Iterable[str], domains: Mapping[str, Sequence[str]] | None = None):
        domains = dict(domains or {})
        return cls(tuple(agents), tuple(domains), tuple(tuple(v) for v in domains.values()))

    @cached_property
    def agent_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.agents)}

    @cached_property
    def var_index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.variables)}

    @cached_property
    def value_index(self) -> dict[str, dict[str, int]]:
        return {x: {c: i for i, c in enumerate(d)} for x, d in zip(self.variables, self.domains)}

    def domain(self, x: str) -> tuple[str, ...]:
        try:
            return self.domains[self.var_index[x]]
        except KeyError:
            raise UnknownNameError(f"unknown variable {x!r}") from None

    def check_value(self, x: str, c: str) -> None:
        if c not in self.value_index.get(x, ()):
            if x not in self.var_index:
                raise UnknownNameError(f"unknown variable {x!r}")
            raise SortError(f"value {c} not in domain of {x}")

    def coalition(self, members: Iterable[str] = ()) -> tuple[str, ...]:
        """Canonical coalition: the given agents in declared order."""
        members = set(members)
        unknown = members - set(self.agents)
        if unknown:
            raise UnknownNameError(f"unknown agent(s): {', '.join(sorted(unknown))}")
        return tuple(a for a in self.agents if a in members)

    def complement(self, members: Iterable[str]) -> tuple[str, ...]:
        inside = set(self.coalition(members))
        return tuple(a for a in self.agents if a not in inside)

    def coalition_mask(self, members: Iterable[str]) -> int:
        idx = self.agent_index
        mask = 0
        for a in members:
            try:
                mask |= 1 << idx[a]
            except KeyError:
                raise UnknownNameError(f"unknown agent {a!r}") from None
        return mask

    def coalition_from_mask(self, mask: int) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.agents) if mask >> i & 1)

    def all_coalitions(self) -> Iterator[tuple[str, ...]]:
        for mask in range(1 << len(self.agents)):
            yield self.coalition_from_mask(mask)

    def atom(self, x: str, c: str, lang: str = "vcl") -> "ValueAtom | PropAtom":
        self.check_value(x, c)
        return ValueAtom(x, c) if lang == "vcl" else PropAtom(x, c)

    def atoms(self, lang: str = "vcl") -> list["ValueAtom | PropAtom"]:
        cls = ValueAtom if lang == "vcl" else PropAtom
        return [cls(x, c) for x, dom in zip(self.variables, self.domains) for c in dom]


class Formula:
    __slots__ = ()

    def __str__(self):
        return render_formula(self)


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True)
class ValueAtom(Formula):
    variable: str
    value: str


@dataclass(frozen=True)
class PropAtom(Formula):
    """The propositional letter p_x^c."""

    variable: str
    value: str


@dataclass(frozen=True)
class Neg(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Coal(Formula):
    coalition: tuple[str, ...]
    sub: Formula

    def __post_init__(self):
        object.__setattr__(self, "coalition", tuple(self.coalition))


ATOM_TYPES = (ValueAtom, PropAtom)
TOP = Top()
BOTTOM = Neg(TOP)


def lor(a: Formula, b: Formula) -> Formula:
    return Neg(And(Neg(a), Neg(b)))


def implies(a: Formula, b: Formula) -> Formula:
    return Neg(And(a, Neg(b)))


def iff(a: Formula, b: Formula) -> Formula:
    return And(implies(a, b), implies(b, a))


def big_or(items: Sequence[Formula]) -> Formula:
    """Right-nested disjunction; the empty disjunction is ``F``."""
    items = list(items)
    if not items:
        return BOTTOM
    out = items[-1]
    for f in reversed(items[:-1]):
        out = lor(f, out)
    return out


def big_and(items: Sequence[Formula]) -> Formula:
    """Right-nested conjunction; the empty conjunction is ``T``."""
    items = list(items)
    if not items:
        return TOP
    out = items[-1]
    for f in reversed(items[:-1]):
        out = And(f, out)
    return out


def match_or(f: Formula):
    if isinstance(f, Neg) and isinstance(f.sub, And):
        a, b = f.sub.left, f.sub.right
        if isinstance(a, Neg) and isinstance(b, Neg):
            return a.sub, b.sub
    return None


def match_implies(f: Formula):
    if isinstance(f, Neg) and isinstance(f.sub, And) and isinstance(f.sub.right, Neg):
        return f.sub.left, f.sub.right.sub
    return None


def match_iff(f: Formula):
    if isinstance(f, And):
        left, right = match_implies(f.left), match_implies(f.right)
        if left and right and left[0] == right[1] and left[1] == right[0]:
            return left
    return None


def region_formula(x: str, values: Iterable[str], sig: TypedSignature, lang: str = "vcl") -> Formula:
    """``x in A`` as the disjunction of its atoms in domain order (``F`` for empty A)."""
    chosen = set(values)
    for c in chosen:
        sig.check_value(x, c)
    return big_or([sig.atom(x, c, lang) for c in sig.domain(x) if c in chosen])


def subformulas(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, (Neg, Coal)):
            stack.append(g.sub)
        elif isinstance(g, And):
            stack.append(g.right)
            stack.append(g.left)


def check_formula(f: Formula, sig: TypedSignature, lang: str = "vcl") -> None:
    """Raise unless every atom and coalition of ``f`` is well-formed over ``sig``."""
    atom_type = ValueAtom if lang == "vcl" else PropAtom
    for g in subformulas(f):
        if isinstance(g, ATOM_TYPES):
            if not isinstance(g, atom_type):
                raise SortError(f"{type(g).__name__} used in a {lang} formula")
            sig.check_value(g.variable, g.value)
        elif isinstance(g, Coal):
            if sig.coalition(g.coalition) != g.coalition:
                raise UnknownNameError(f"coalition {list(g.coalition)} is not canonical for the signature")


def modal_depth(f: Formula) -> int:
    if isinstance(f, Coal):
        return 1 + modal_depth(f.sub)
    if isinstance(f, Neg):
        return modal_depth(f.sub)
    if isinstance(f, And):
        return max(modal_depth(f.left), modal_depth(f.right))
    return 0


# ---------------------------------------------------------------------------
# rendering


def render_formula(f: Formula) -> str:
    if isinstance(f, Top):
        return "T"
    if f == BOTTOM:
        return "F"
    if isinstance(f, ATOM_TYPES):
        return f"{f.variable}={f.value}"
    if isinstance(f, Coal):
        return f"[{','.join(f.coalition)}]{_operand(f.sub)}"
    if isinstance(f, Neg):
        pair = match_or(f)
        if pair:
            return f"{_operand(pair[0])} | {_operand(pair[1])}"
        pair = match_implies(f)
        if pair:
            return f"{_operand(pair[0])} -> {_operand(pair[1])}"
        return "~" + _operand(f.sub)
    if isinstance(f, And):
        pair = match_iff(f)
        if pair:
            return f"{_operand(pair[0])} <-> {_operand(pair[1])}"
        return f"{_operand(f.left)} & {_operand(f.right)}"
    raise TypeError(f"not a formula: {f!r}")


def _is_unary(f: Formula) -> bool:
    if isinstance(f, (Top, Coal)) or f == BOTTOM:
        return True
    return isinstance(f, Neg) and match_or(f) is None and match_implies(f) is None


def _operand(f: Formula) -> str:
    text = render_formula(f)
    return text if _is_unary(f) else f"({text})"


# ---------------------------------------------------------------------------
# parsing

_UNICODE_OPS = {"¬": "~", "∧": "&", "∨": "|", "→": "->", "↔": "<->"}
_UNICODE_CONSTS = {"⊤": "T", "⊥": "F"}
_TOKEN = re.compile(r"(<->|->|[~&|=()\[\]{},¬∧∨→↔])|([⊤⊥])|(\w+)", re.UNICODE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        op, const, word = m.groups()
        if op:
            tokens.append(("op", _UNICODE_OPS.get(op, op), pos))
        elif const:
            tokens.append(("ident", _UNICODE_CONSTS[const], pos))
        else:
            tokens.append(("ident", word, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, sig: TypedSignature, lang: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.sig = sig
        self.lang = lang

    def peek(self, k=0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.take()
        if text != value or kind == "end":
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def accept(self, value) -> bool:
        kind, text, _ = self.peek()
        if kind == "op" and text == value:
            self.i += 1
            return True
        return False

    def ident(self, what):
        kind, text, pos = self.take()
        if kind != "ident":
            raise ParseError(f"expected {what}, found {text or 'end of input'!r}", pos)
        return text, pos

    def parse(self) -> Formula:
        f = self.iff()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return f

    def iff(self):
        left = self.implication()
        if self.accept("<->"):
            return iff(left, self.iff())
        return left

    def implication(self):
        left = self.disjunction()
        if self.accept("->"):
            return implies(left, self.implication())
        return left

    def disjunction(self):
        left = self.conjunction()
        if self.accept("|"):
            return lor(left, self.disjunction())
        return left

    def conjunction(self):
        left = self.unary()
        if self.accept("&"):
            return And(left, self.conjunction())
        return left

    def unary(self):
        if self.accept("~"):
            return Neg(self.unary())
        if self.accept("["):
            members = []
            if not self.accept("]"):
                while True:
                    name, pos = self.ident("agent name")
                    if name not in self.sig.agent_index:
                        raise UnknownNameError(f"unknown agent {name!r} at position {pos}")
                    members.append(name)
                    if self.accept("]"):
                        break
                    self.expect(",")
            return Coal(self.sig.coalition(members), self.unary())
        return self.primary()

    def primary(self):
        kind, text, pos = self.peek()
        if self.accept("("):
            f = self.iff()
            self.expect(")")
            return f
        if kind != "ident":
            raise ParseError(f"expected a formula, found {text or 'end of input'!r}", pos)
        nxt_kind, nxt, _ = self.peek(1)
        if nxt_kind == "op" and nxt == "=":
            self.take()
            self.take()
            value, vpos = self.ident("value")
            return self._atom(text, value, pos)
        if nxt_kind == "ident" and nxt == "in":
            self.take()
            self.take()
            self.expect("{")
            values = []
            if not self.accept("}"):
                while True:
                    value, vpos = self.ident("value")
                    self._atom(text, value, pos)
                    values.append(value)
                    if self.accept("}"):
                        break
                    self.expect(",")
            return region_formula(text, values, self.sig, self.lang)
        self.take()
        if text == "T":
            return TOP
        if text == "F":
            return BOTTOM
        raise ParseError(f"expected a formula, found {text!r}", pos)

    def _atom(self, x, c, pos):
        if x not in self.sig.var_index:
            raise UnknownNameError(f"unknown variable {x!r} at position {pos}")
        return self.sig.atom(x, c, self.lang)


def parse_formula(text: str, sig: TypedSignature, lang: str = "vcl") -> Formula:
    """Parse ``text`` into a core formula over ``sig``.

    ``lang`` is ``"vcl"`` for value atoms or ``"prop"`` for propositional
    atoms; the surface syntax is the same.  ``~`` and ``[C]`` bind tightest,
    then ``&``, ``|``, ``->``, ``<->``; binary operators associate to the
    right.
    """
    if lang not in ("vcl", "prop"):
        raise ValueError(f"unknown language {lang!r}")
    return _Parser(text, sig, lang).parse()
