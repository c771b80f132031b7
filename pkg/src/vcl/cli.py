"""``vcl`` command line.

Exit status: 0 success, 1 a check or property failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .correspondence import back_translate, is_coherent, to_prop_model, to_vcl_model, translate
from .errors import IncoherentModelError, VCLError
from .generators import GeneratorConfig
from .io import dumps, load_derivation, load_model, model_to_dict
from .models import GameModel, evaluate
from .projection import (
    format_set,
    generator_witnesses,
    one_step_value_range,
    projected_effectivity,
    residual_indeterminacy,
    to_mask,
    transversal_dual,
)
from .proofs import check_derivation
from .properties import run_property_suite
from .syntax import parse_formula, render_formula

DEFAULT_MAX_PROFILES = 1 << 20


class InputError(VCLError):
    pass


def _split(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _model(args) -> GameModel:
    try:
        m = load_model(args.model)
    except OSError as exc:
        raise InputError(f"cannot read model: {exc}") from None
    if m.n_profiles > args.max_profiles:
        raise InputError(
            f"model has {m.n_profiles} full action profiles, above the bound of {args.max_profiles} (--max-profiles)"
        )
    return m


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc, ensure_ascii=False, indent=2))
    else:
        print(text)


def cmd_check(args) -> int:
    m = _model(args)
    f = parse_formula(args.formula, m.sig, m.mode)
    holds = evaluate(m, args.state, f)
    _emit(args, {"state": args.state, "formula": render_formula(f), "holds": holds}, "true" if holds else "false")
    return 0 if holds else 1


def cmd_project(args) -> int:
    m = _model(args)
    if m.mode != "vcl":
        m = to_vcl_model(m)
    coalition = m.sig.coalition(_split(args.coalition))
    x = args.var
    dom = m.sig.domain(x)
    fam = projected_effectivity(m, args.state, x, coalition)
    iota = residual_indeterminacy(m, args.state, x, coalition)
    reach = one_step_value_range(m, args.state, x)
    doc = {
        "state": args.state,
        "variable": x,
        "coalition": list(coalition),
        "generators": [[c for c in dom if c in g] for g in fam.generators],
        "family_size": fam.size(),
        "indeterminacy": iota,
        "one_step_range": [c for c in dom if c in reach],
    }
    lines = ["generators:"] + [format_set(dom, g) for g in fam.masks]
    lines += [f"family size: {doc['family_size']}", f"indeterminacy: {iota}", f"one-step range: {format_set(dom, reach)}"]
    if args.witness:
        wit = generator_witnesses(m, args.state, x, coalition)
        doc["witnesses"] = [{"generator": [c for c in dom if c in g], "profile": p.as_dict()} for g, p in wit.items()]
        lines.append("witnesses:")
        lines += [f"{format_set(dom, g)} <- {p}" for g, p in wit.items()]
    if args.dual:
        dual = transversal_dual(fam, dom)
        doc["transversal_dual"] = [[c for c in dom if c in g] for g in dual.generators]
        lines.append("transversal dual generators:")
        lines += [format_set(dom, g) for g in dual.masks]
    if args.member:
        doc["membership"] = []
        lines.append("membership:")
        for text in args.member:
            region = _split(text)
            to_mask(dom, region)
            inside = set(region) in fam
            doc["membership"].append({"region": [c for c in dom if c in region], "member": inside})
            lines.append(f"{format_set(dom, region)}: {'yes' if inside else 'no'}")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_translate(args) -> int:
    if args.formula is None:
        m = _model(args)
        if args.direction == "vcl2prop":
            if m.mode != "vcl":
                raise InputError("vcl2prop expects a typed-assignment model")
            out = to_prop_model(m)
        else:
            if m.mode != "prop":
                raise InputError("prop2vcl expects a propositional model")
            out = to_vcl_model(m)
        print(dumps(model_to_dict(out)))
        return 0
    if args.model is None:
        raise InputError("translating a formula needs --model for the signature")
    sig = _model(args).sig
    if args.direction == "vcl2prop":
        g = translate(parse_formula(args.formula, sig, "vcl"))
    else:
        g = back_translate(parse_formula(args.formula, sig, "prop"), sig)
    _emit(args, {"direction": args.direction, "formula": render_formula(g)}, render_formula(g))
    return 0


def cmd_coherence(args) -> int:
    m = _model(args)
    if m.mode != "prop":
        raise InputError("coherence expects a propositional model")
    report = is_coherent(m)
    lines = ["coherent" if report.coherent else "incoherent"]
    lines += [f"{w.state} {w.variable} {w.kind} [{', '.join(w.atoms)}]" for w in report.witnesses]
    _emit(args, report.as_dict(), "\n".join(lines))
    return 0 if report.coherent else 1


def cmd_prove(args) -> int:
    sig = _model(args).sig if args.model else None
    try:
        d, sig = load_derivation(args.derivation, sig)
    except OSError as exc:
        raise InputError(f"cannot read derivation: {exc}") from None
    result = check_derivation(d, sig)
    if result.ok:
        text = f"ok: {len(d.lines)} lines, proves {render_formula(d.conclusion)}"
    else:
        text = f"rejected at line {result.line}: {result.reason}"
    _emit(args, result.as_dict(), text)
    return 0 if result.ok else 1


def cmd_props(args) -> int:
    report = run_property_suite(GeneratorConfig(seed=args.seed), trials=args.trials)
    if args.format == "json":
        print(report.to_json(timing=args.timing))
    else:
        print(report.summary())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--max-profiles", type=int, default=argparse.SUPPRESS,
                        help="refuse models with more full action profiles (default 2^20)")

    parser = argparse.ArgumentParser(prog="vcl", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--max-profiles", type=int, default=DEFAULT_MAX_PROFILES)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="evaluate a formula at a state")
    p.add_argument("--model", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--formula", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("project", parents=[common], help="value-level effectivity of a coalition")
    p.add_argument("--model", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--var", required=True)
    p.add_argument("--coalition", default="", help="comma-separated agents; empty for the empty coalition")
    p.add_argument("--witness", action="store_true", help="show one witnessing profile per generator")
    p.add_argument("--dual", action="store_true", help="also print the transversal dual")
    p.add_argument("--member", action="append", default=[], metavar="VALUES",
                   help="test membership of a comma-separated region (repeatable)")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("translate", parents=[common], help="move a model or formula between encodings")
    p.add_argument("--direction", choices=("vcl2prop", "prop2vcl"), default="vcl2prop")
    p.add_argument("--model")
    p.add_argument("--formula")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("coherence", parents=[common], help="check a propositional model for coherence")
    p.add_argument("--model", required=True)
    p.set_defaults(func=cmd_coherence)

    p = sub.add_parser("prove", parents=[common], help="check a derivation file")
    p.add_argument("--derivation", required=True)
    p.add_argument("--model", help="take the signature from this model")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("props", parents=[common], help="run the randomised property suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--timing", action="store_true", help="include elapsed times in JSON output")
    p.set_defaults(func=cmd_props)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "translate" and args.model is None and args.formula is None:
        parser.error("translate needs --model, --formula, or both")
    try:
        return args.func(args)
    except IncoherentModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for w in exc.report.witnesses:
            print(f"  {w.state} {w.variable} {w.kind} [{', '.join(w.atoms)}]", file=sys.stderr)
        return 2
    except VCLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
