"""JSON formats for models and derivations.

Model documents look like::

    {"agents": ["1", "2"],
     "actions": {"1": ["α1", "α2"], "2": ["β1", "β2"]},
     "variables": {"x": ["a", "b", "c"]},
     "states": {"s": {"x": "a"}, ...},
     "outcome": {"s": {"α1,β1": "s_a", ...}, ...}}

A propositional model lists atoms per state instead: ``"s": ["x=a"]``.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from .errors import ModelError, ParseError, VCLError
from .models import GameModel
from .proofs import RE, Axiom, Derivation, Line, MP, SYSTEMS
from .syntax import PropAtom, TypedSignature, parse_formula, render_formula


def signature_from_dict(doc: dict) -> TypedSignature:
    try:
        agents = [str(a) for a in doc["agents"]]
    except KeyError:
        raise VCLError("document has no 'agents'") from None
    variables = doc.get("variables") or {}
    if not isinstance(variables, dict):
        raise VCLError("'variables' must map variable names to value lists")
    try:
        return TypedSignature.build(agents, {str(x): [str(c) for c in vals] for x, vals in variables.items()})
    except ValueError as exc:
        raise VCLError(f"invalid signature: {exc}") from None


def signature_to_dict(sig: TypedSignature) -> dict:
    return {"agents": list(sig.agents), "variables": {x: list(d) for x, d in zip(sig.variables, sig.domains)}}


def _prop_atom(text: str, sig: TypedSignature) -> PropAtom:
    x, sep, c = text.partition("=")
    if not sep:
        raise ParseError(f"atom {text!r} is not of the form x=c")
    return sig.atom(x.strip(), c.strip(), "prop")


def model_from_dict(doc: dict, validate: bool = True) -> GameModel:
    """Build a model from its JSON document; raises ModelError listing all violations."""
    sig = signature_from_dict(doc)
    for key in ("actions", "states", "outcome"):
        if key not in doc:
            raise VCLError(f"model document has no {key!r}")
    actions = {str(a): tuple(str(c) for c in acts) for a, acts in doc["actions"].items()}
    states_doc = doc["states"]
    states = tuple(str(s) for s in states_doc)
    problems = []
    outcome = {}
    for s, row in doc["outcome"].items():
        outcome[str(s)] = {}
        for key, target in row.items():
            prof = tuple(part.strip() for part in str(key).split(","))
            if len(prof) != len(sig.agents):
                problems.append(f"profile key {key!r} at state {s} needs {len(sig.agents)} actions")
                continue
            outcome[str(s)][prof] = str(target)
    labels = list(states_doc.values())
    if labels and all(isinstance(v, list) for v in labels):
        valuation = {}
        for s, atoms in states_doc.items():
            try:
                valuation[str(s)] = frozenset(_prop_atom(str(t), sig) for t in atoms)
            except VCLError as exc:
                problems.append(f"state {s}: {exc}")
                valuation[str(s)] = frozenset()
        m = GameModel(sig, states, actions, outcome, valuation=valuation)
    elif all(isinstance(v, dict) for v in labels):
        assignment = {str(s): {str(x): str(c) for x, c in row.items()} for s, row in states_doc.items()}
        m = GameModel(sig, states, actions, outcome, assignment=assignment)
    else:
        raise VCLError("state labels must be all assignments (objects) or all atom lists")
    if validate:
        from .models import validate_model

        problems += validate_model(m)
        if problems:
            raise ModelError(problems)
    return m


def model_to_dict(m: GameModel) -> dict:
    sig = m.sig
    doc = signature_to_dict(sig)
    doc["actions"] = {a: list(m.actions[a]) for a in sig.agents}
    if m.mode == "vcl":
        doc["states"] = {s: {x: m.assignment[s][x] for x in sig.variables} for s in m.states}
    else:
        doc["states"] = {
            s: [f"{a.variable}={a.value}" for a in sig.atoms("prop") if a in m.valuation[s]] for s in m.states
        }
    profiles = list(itertools.product(*(m.actions[a] for a in sig.agents)))
    doc["outcome"] = {s: {",".join(p): m.outcome[s][p] for p in profiles} for s in m.states}
    return doc


def load_json(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise VCLError(f"{path}: invalid JSON ({exc})") from None


def load_model(path) -> GameModel:
    return model_from_dict(load_json(path))


def dumps(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2)


def save_model(m: GameModel, path) -> None:
    Path(path).write_text(dumps(model_to_dict(m)) + "\n", encoding="utf-8")


def derivation_from_dict(doc: dict, sig: TypedSignature | None = None) -> tuple[Derivation, TypedSignature]:
    """Parse a derivation document.  Line references are 1-based.

    The signature comes from ``sig`` or from the document's own
    ``"signature"`` entry (same shape as a model's agents/variables).
    """
    if sig is None:
        if "signature" not in doc:
            raise VCLError("derivation has no 'signature' and none was supplied")
        sig = signature_from_dict(doc["signature"])
    system = doc.get("system", "vcl_theta")
    if system not in SYSTEMS:
        raise VCLError(f"unknown proof system {system!r}")
    lang = SYSTEMS[system]
    lines = []
    for k, entry in enumerate(doc.get("lines", []), start=1):
        try:
            f = parse_formula(entry["formula"], sig, lang)
            rule = entry["rule"]
            if rule == "axiom":
                just = Axiom(str(entry["schema"]))
            elif rule == "mp":
                minor, major = entry["from"]
                just = MP(int(minor), int(major))
            elif rule == "re":
                just = RE(int(entry["from"]), tuple(str(a) for a in entry.get("coalition", [])))
            else:
                raise VCLError(f"unknown rule {rule!r}")
        except (KeyError, TypeError, ValueError) as exc:
            raise VCLError(f"line {k}: malformed entry ({exc})") from None
        except VCLError as exc:
            raise VCLError(f"line {k}: {exc}") from None
        lines.append(Line(f, just))
    return Derivation(system, tuple(lines)), sig


def derivation_to_dict(d: Derivation, sig: TypedSignature | None = None) -> dict:
    lines = []
    for line in d.lines:
        entry = {"formula": render_formula(line.formula)}
        j = line.justification
        if isinstance(j, Axiom):
            entry.update(rule="axiom", schema=j.schema)
        elif isinstance(j, MP):
            entry.update(rule="mp", **{"from": [j.minor, j.major]})
        else:
            entry.update(rule="re", coalition=list(j.coalition), **{"from": j.premise})
        lines.append(entry)
    doc = {"system": d.system, "lines": lines}
    if sig is not None:
        doc["signature"] = signature_to_dict(sig)
    return doc


def load_derivation(path, sig: TypedSignature | None = None) -> tuple[Derivation, TypedSignature]:
    return derivation_from_dict(load_json(path), sig)
