"""hopfcoh command line: validate workspaces, run computations and the
verification suite, emit fixtures.

Exit codes: 0 success, 1 validation/hypothesis failure, 2 suite-check
failure, 3 parse or usage error. All reports are available as deterministic
text (default) or JSON (--format json).
"""

from __future__ import annotations

import argparse
import json
import sys

from hopfcoh.cohomology import derived_coinvariants, ext_H
from hopfcoh.comodule import coinvariants, integral_projector, isotypic_component
from hopfcoh.errors import HypothesisError, ResourceCapError, StructureError
from hopfcoh.fixtures import FIXTURE_NAMES, fixture_json
from hopfcoh.hopf import integrals
from hopfcoh.relative import smash_product
from hopfcoh.suite import run_suite, suite_names
from hopfcoh.workspace import ParseError, load_workspace

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CHECK_FAILED = 2
EXIT_USAGE = 3

COMPUTE_TARGETS = ("coinvariants", "cohomology", "ext", "isotypic", "integrals", "decompose", "smash")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(doc: dict, text: str, fmt: str):
    if fmt == "json":
        sys.stdout.write(_dump_json(doc))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _resolve_comodule(ws, name: str):
    if name in ws.comodules:
        return ws.comodules[name]
    if name in ws.comodule_algebras:
        return ws.comodule_algebras[name].comodule
    if name in ws.rel_hopf_modules:
        return ws.rel_hopf_modules[name].comodule
    raise KeyError("unknown comodule %r" % name)


def cmd_validate(args) -> int:
    ws = load_workspace(args.file)
    doc = {
        "command": "validate",
        "ok": True,
        "counts": {
            "hopf": len(ws.hopf),
            "comodules": len(ws.comodules),
            "comodule_algebras": len(ws.comodule_algebras),
            "rel_hopf_modules": len(ws.rel_hopf_modules),
            "b_modules": len(ws.b_modules),
        },
    }
    text = "validate: ok (%s)" % ", ".join("%d %s" % (v, k) for k, v in sorted(doc["counts"].items()))
    _emit(doc, text, args.format)
    return EXIT_OK


def cmd_compute(args) -> int:
    ws = load_workspace(args.file)
    target = args.target
    doc = {"command": "compute", "target": target}
    if target == "coinvariants":
        c = _resolve_comodule(ws, _required(args, "object"))
        sub = coinvariants(c)
        doc.update({"object": args.object, "dim": sub.dim})
        text = "coinvariants(%s): dim %d" % (args.object, sub.dim)
    elif target == "cohomology":
        c = _resolve_comodule(ws, _required(args, "object"))
        dims = derived_coinvariants(c, args.qmax)
        doc.update({"object": args.object, "qmax": args.qmax, "dims": dims})
        text = "derived coinvariants of %s: dims %s" % (args.object, dims)
    elif target == "ext":
        m = _resolve_comodule(ws, _required(args, "source"))
        n = _resolve_comodule(ws, _required(args, "target_object"))
        dims = ext_H(m, n, args.qmax)
        doc.update({"source": args.source, "target": args.target_object, "qmax": args.qmax, "dims": dims})
        text = "colinear Ext(%s, %s): dims %s" % (args.source, args.target_object, dims)
    elif target == "isotypic":
        n = _resolve_comodule(ws, _required(args, "object"))
        v = _resolve_comodule(ws, _required(args, "source"))
        data = isotypic_component(n, v)
        doc.update({"object": args.object, "simple": args.source, "dim": data.component.dim})
        text = "isotypic part of %s along %s: dim %d" % (args.object, args.source, data.component.dim)
    elif target == "integrals":
        names = [args.object] if args.object else sorted(ws.hopf)
        results = {}
        for name in names:
            if name not in ws.hopf:
                raise KeyError("unknown hopf %r" % name)
            data = integrals(ws.hopf[name])
            results[name] = {
                "integral_dim": data.integral_space.dim,
                "cosemisimple": data.cosemisimple,
            }
        doc.update({"results": results})
        text = "\n".join(
            "integrals(%s): dim %d, cosemisimple: %s"
            % (name, res["integral_dim"], str(res["cosemisimple"]).lower())
            for name, res in sorted(results.items())
        )
    elif target == "decompose":
        c = _resolve_comodule(ws, _required(args, "object"))
        dec = integral_projector(c)
        doc.update(
            {
                "object": args.object,
                "invariant_dim": dec.invariant_part.dim,
                "ergodic_dim": dec.ergodic_part.dim,
            }
        )
        text = "decompose(%s): invariant %d + ergodic %d" % (
            args.object,
            dec.invariant_part.dim,
            dec.ergodic_part.dim,
        )
    elif target == "smash":
        name = _required(args, "object")
        if name not in ws.comodule_algebras:
            raise KeyError("unknown comodule_algebra %r" % name)
        smash = smash_product(ws.comodule_algebras[name])
        doc.update({"object": name, "dim": smash.dim})
        text = "smash product of %s: dim %d (associative, unital)" % (name, smash.dim)
    else:
        raise KeyError("unknown compute target %r" % target)
    _emit(doc, text, args.format)
    return EXIT_OK


def _required(args, attr):
    value = getattr(args, attr)
    if value is None:
        raise ParseError("compute %s requires --%s" % (args.target, attr.replace("_object", "")))
    return value


def cmd_check(args) -> int:
    report = run_suite(args.suite, args.pmax)
    doc = {"command": "check", "suite": args.suite}
    doc.update(report.as_dict())
    _emit(doc, report.as_text(), args.format)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_fixtures(args) -> int:
    if args.name not in FIXTURE_NAMES:
        raise KeyError("unknown fixture %r; known: %s" % (args.name, ", ".join(FIXTURE_NAMES)))
    payload = fixture_json(args.name)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(payload)
        _emit(
            {"command": "fixtures", "name": args.name, "written": True},
            "fixtures: wrote %s" % args.name,
            args.format,
        )
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="hopfcoh", description=__doc__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a workspace file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("compute", help="run a computation on a workspace")
    p.add_argument("target", choices=COMPUTE_TARGETS)
    p.add_argument("file")
    p.add_argument("--object")
    p.add_argument("--source")
    p.add_argument("--target", dest="target_object")
    p.add_argument("--qmax", type=int, default=3)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("check", help="run the verification suite on the shipped fixtures")
    p.add_argument("--suite", default="all", help="all or one of: %s" % ", ".join(suite_names()))
    p.add_argument("--pmax", type=int, default=3)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("fixtures", help="emit a shipped fixture as JSON")
    p.add_argument("--name", required=True)
    p.add_argument("--emit", help="write to this path instead of stdout")
    p.set_defaults(fn=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print("error: %s" % (exc.args[0] if exc.args else exc), file=sys.stderr)
        return EXIT_USAGE
    except StructureError as exc:
        print("validation error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except (HypothesisError, ResourceCapError) as exc:
        print("hypothesis error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
