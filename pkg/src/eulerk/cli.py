"""Command-line interface: ``eulerk eval|class|verify|group|mobius``."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from dataclasses import dataclass
from fractions import Fraction

from .basis import BasisFunction, format_rational
from .config import get_limits, limits
from .errors import EulerKError
from .groups import (
    build_catalog_group,
    canonical_name,
    invariant_factors,
    normal_subgroups,
    sylow_decomposition,
)
from .invariants import RATIONAL_EULER, Assembled, ChiK, baez_dolan
from .posets import mobius, mobius_report, quotient_poset
from .spaces import k0_class, parse
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    max_order: int = 36
    format: str = "plain"
    values: str | None = None

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("--max-order must be >= 1")
        if self.format not in ("plain", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def _rat_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def select_characteristic(selector: str | None, values: str | None = None):
    if selector is None:
        selector = f"file={values}" if values else "baez-dolan"
    if selector == "baez-dolan":
        return baez_dolan()
    if selector == "euler-rational":
        return RATIONAL_EULER
    if selector.startswith("chi-K="):
        return ChiK(build_catalog_group(selector[len("chi-K="):]))
    if selector.startswith("file="):
        path = selector[len("file="):]
        if not path:
            raise EulerKError("file= needs a path")
        return Assembled(BasisFunction.load(path))
    raise EulerKError(
        f"unknown characteristic {selector!r}; use baez-dolan, euler-rational, chi-K=<group> or file=<path>"
    )


def cmd_eval(args, cfg: CliConfig, out):
    x = parse(args.expr)
    char = select_characteristic(args.char, cfg.values)
    value = char(x)
    if cfg.format == "json":
        per_prime = char.per_prime(x)
        doc = {
            "expression": str(x),
            "strategy": char.strategy,
            "value": _rat_json(value),
            "per_prime": {str(p): _rat_json(v) for p, v in sorted(per_prime.items())},
        }
        print(json.dumps(doc), file=out)
    else:
        print(format_rational(value), file=out)
    return EXIT_OK


def cmd_class(args, cfg, out):
    cls = k0_class(parse(args.expr))
    if cfg.format == "json":
        print(json.dumps(cls.to_json()), file=out)
    else:
        print(cls, file=out)
    return EXIT_OK


def cmd_verify(args, cfg, out):
    res = run_suite(args.suite)
    if cfg.format == "json":
        doc = {
            "suite": res.name,
            "passed": res.passed,
            "checked": res.checked,
            "failed": len(res.failures),
            "notes": res.lines,
            "first_counterexample": res.failures[0] if res.failures else None,
        }
        print(json.dumps(doc), file=out)
    else:
        for line in res.lines:
            print(line, file=out)
        if res.failures:
            print(f"first counterexample: {res.failures[0]}", file=out)
        print(res.summary(), file=out)
    return EXIT_OK if res.passed else EXIT_VERIFY


def cmd_group(args, cfg, out):
    g = build_catalog_group(args.spec)
    sylows, nilpotent = sylow_decomposition(g)
    doc = {
        "spec": args.spec.strip(),
        "name": canonical_name(g),
        "order": g.order,
        "abelian": g.is_abelian,
        "nilpotent": nilpotent,
        "normal_subgroups": len(normal_subgroups(g)),
        "sylow": {str(p): canonical_name(s) for p, s in sorted(sylows.items())},
    }
    if g.is_abelian:
        doc["invariant_factors"] = list(invariant_factors(g))
    if cfg.format == "json":
        print(json.dumps(doc), file=out)
    else:
        for k, v in doc.items():
            if isinstance(v, dict):
                v = ", ".join(f"{p}: {n}" for p, n in v.items())
            print(f"{k}: {v}", file=out)
    return EXIT_OK


def cmd_mobius(args, cfg, out):
    g = build_catalog_group(args.spec)
    poset = quotient_poset(g)
    print(json.dumps(mobius_report(poset, mobius(poset))), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json"], default=argparse.SUPPRESS)
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS, help="cap on group orders")
    common.add_argument("--values", default=argparse.SUPPRESS, help="JSON file of basis values")

    p = argparse.ArgumentParser(prog="eulerk", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate a characteristic on an expression")
    e.add_argument("expr")
    e.add_argument("--char", default=None, help="baez-dolan | euler-rational | chi-K=<group> | file=<path>")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("class", parents=[common], help="K0 class of an expression")
    c.add_argument("expr")
    c.set_defaults(func=cmd_class)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES))
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("group", parents=[common], help="describe a catalog group")
    g.add_argument("spec")
    g.set_defaults(func=cmd_group)

    m = sub.add_parser("mobius", parents=[common], help="dump the quotient poset and its Mobius matrix as JSON")
    m.add_argument("spec")
    m.set_defaults(func=cmd_mobius)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        base = get_limits()
        max_order = getattr(args, "max_order", None)
        cfg = CliConfig(
            max_order=max_order if max_order is not None else base.max_order,
            format=getattr(args, "format", "plain"),
            values=getattr(args, "values", None),
        )
        if max_order is not None:
            scope = limits(max_order=max_order, max_hom_pair=max(base.max_hom_pair, max_order * max_order))
        else:
            scope = nullcontext()
        with scope:
            return args.func(args, cfg, out)
    except (EulerKError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"eulerk: error: {msg}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
