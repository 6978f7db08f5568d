"""Command-line front end.

Exit codes: 0 success, 1 domain or axiom error, 2 parse or usage error,
3 a limit that did not converge.  Errors are reported on stderr as one line,
``error: <code>: <reason>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bayes, catalog, events, limits
from .compose import Composition, compose, total_comparability_conditions
from .document import load_dense, parse_document, serialize_document
from .errors import AxiomViolationError, DocumentError, NotConvergedError, RpfError
from .magnitude import parse_value, render
from .rpf import ClassedRpf, classify, is_totally_mutually_possible, to_classed, to_dense

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_NOT_CONVERGED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _dense(path: str):
    return load_dense(_read(path))


def _emit(rpf) -> None:
    sys.stdout.write(serialize_document(rpf))


def _event(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad event {text!r}; expected comma-separated outcome indices") from None


def cmd_validate(args) -> int:
    parse_document(_read(args.file))
    print("valid")
    return EXIT_OK


def cmd_classify(args) -> int:
    report = classify(_dense(args.file))
    d = report.as_dict()
    if args.json:
        print(json.dumps(d, sort_keys=True))
        return EXIT_OK
    print(f"totally comparable: {'yes' if d['totally_comparable'] else 'no'}")
    print(f"anchored: {'yes' if d['anchored'] else 'no'}")
    print(f"anchors: {' '.join(map(str, d['anchors'])) or '-'}")
    print(f"totally mutually possible: {'yes' if d['totally_mutually_possible'] else 'no'}")
    for n, members in enumerate(d["classes"]):
        print(f"class {n}: {' '.join(map(str, members))}")
    edges = [f"{a}>{b}" for a, b in d["class_dag"]]
    print(f"class order: {' '.join(edges) or '-'}")
    return EXIT_OK


def cmd_show(args) -> int:
    rpf = _dense(args.file)
    cells = [[render(m) for m in row] for row in rpf.entries()]
    width = max([len(c) for row in cells for c in row] + [len(str(rpf.k - 1)), 1])
    print(" " * width + " " + " ".join(str(j).rjust(width) for j in range(rpf.k)))
    for i, row in enumerate(cells):
        print(str(i).rjust(width) + " " + " ".join(c.rjust(width) for c in row))
    return EXIT_OK


def cmd_convert(args) -> int:
    rpf = parse_document(_read(args.file))
    if args.to == "dense":
        _emit(to_dense(rpf) if isinstance(rpf, ClassedRpf) else rpf)
    else:
        _emit(rpf if isinstance(rpf, ClassedRpf) else to_classed(rpf))
    return EXIT_OK


# name -> (argument converters, constructor)
_CATALOG = {
    "uniform": ((int,), catalog.uniform),
    "indeterminate": ((int,), catalog.indeterminate),
    "certain": ((int, int), catalog.certain),
    "empty": ((), catalog.empty),
    "unit": ((), catalog.unit),
    "geometric": ((int, parse_value), catalog.finite_geometric),
    "binomial": ((int, float), catalog.binomial),
}


def cmd_catalog(args) -> int:
    name, rest = args.name, args.args
    if name == "from-absolute":
        try:
            probs = [float(x) for x in rest]
        except ValueError:
            raise UsageError("from-absolute takes probabilities") from None
        _emit(catalog.from_absolute(probs))
        return EXIT_OK
    if name not in _CATALOG:
        raise UsageError(f"unknown catalog entry {name!r}")
    converters, build = _CATALOG[name]
    if len(rest) != len(converters):
        raise UsageError(f"{name} takes {len(converters)} argument(s)")
    try:
        values = [conv(x) for conv, x in zip(converters, rest)]
    except (ValueError, DocumentError):
        raise UsageError(f"bad arguments for {name}: {' '.join(rest)}") from None
    _emit(build(*values))
    return EXIT_OK


def cmd_query(args) -> int:
    rpf = _dense(args.file)
    if args.outcomes is not None:
        i, j = args.outcomes
        if not (0 <= i < rpf.k and 0 <= j < rpf.k):
            raise RpfError(f"outcome index out of range for k={rpf.k}")
        value = rpf[i, j]
    else:
        e1, e2 = (_event(e) for e in args.events)
        value = events.event_rel_prob(rpf, e1, e2)
    text = render(value)
    print(json.dumps({"value": text}) if args.json else text)
    return EXIT_OK


def cmd_to_absolute(args) -> int:
    probs = events.to_absolute(_dense(args.file))
    print(json.dumps([float(x) for x in probs]))
    return EXIT_OK


def cmd_compose(args) -> int:
    c = Composition(_dense(args.top), tuple(_dense(f) for f in args.components))
    report = total_comparability_conditions(c)
    _emit(compose(c))
    report_doc = report.as_dict()
    report_doc["offsets"] = list(c.offsets)
    print(json.dumps(report_doc, sort_keys=True), file=sys.stderr)
    return EXIT_OK


def cmd_bayes(args) -> int:
    prior = _dense(args.prior)
    if not is_totally_mutually_possible(prior):
        print(
            "warning: prior is not totally mutually possible; impossible pairs stay impossible",
            file=sys.stderr,
        )
    _emit(bayes.sequential_update(prior, [_dense(f) for f in args.likelihoods]))
    return EXIT_OK


def cmd_noisy_channel(args) -> int:
    try:
        counts = [int(x) for x in args.counts.split(",")] if args.counts.strip() else []
    except ValueError:
        raise UsageError("counts must be comma-separated integers") from None
    _emit(bayes.noisy_channel_likelihood(args.k, args.p, counts))
    return EXIT_OK


def cmd_limit(args) -> int:
    if args.family is not None:
        if args.files:
            raise UsageError("give either files or --family, not both")
        if args.family not in limits.FAMILIES:
            raise UsageError(
                f"unknown family {args.family!r}; choose from {', '.join(sorted(limits.FAMILIES))}"
            )
        _emit(limits.family_limit(limits.FAMILIES[args.family], steps=args.steps))
    else:
        if len(args.files) < 2:
            raise UsageError("a limit needs at least two files")
        _emit(limits.sequence_limit([_dense(f) for f in args.files]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relprob", description="Relative probability functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="comparability, anchors and possibility classes")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("show", help="print the table")
    p.add_argument("file")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("convert", help="switch between dense and classed documents")
    p.add_argument("file")
    p.add_argument("--to", choices=("dense", "classed"), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("catalog", help="emit a standard RPF")
    p.add_argument("name")
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("query", help="one entry or one event ratio")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--outcomes", nargs=2, type=int, metavar=("I", "J"))
    g.add_argument("--events", nargs=2, metavar=("E1", "E2"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("to-absolute", help="matching absolute distribution")
    p.add_argument("file")
    p.set_defaults(func=cmd_to_absolute)

    p = sub.add_parser("compose", help="compose components under a top-level RPF")
    p.add_argument("top")
    p.add_argument("components", nargs="+")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("bayes", help="posterior from a prior and likelihood RPFs")
    p.add_argument("prior")
    p.add_argument("likelihoods", nargs="+")
    p.set_defaults(func=cmd_bayes)

    p = sub.add_parser("noisy-channel", help="likelihood RPF of repeated noisy messages")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--counts", required=True)
    p.set_defaults(func=cmd_noisy_channel)

    p = sub.add_parser("limit", help="limit of a sequence of RPFs")
    p.add_argument("files", nargs="*")
    p.add_argument("--family")
    p.add_argument("--steps", type=int, default=40)
    p.set_defaults(func=cmd_limit)
    return parser


def _fail(code: str, message: str, status: int) -> int:
    print(f"error: {code}: {' '.join(str(message).split())}", file=sys.stderr)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_PARSE)
    except DocumentError as exc:
        return _fail("parse", str(exc), EXIT_PARSE)
    except AxiomViolationError as exc:
        witness = "; ".join(str(v) for v in exc.violations[:5])
        return _fail("axiom-violation", witness, EXIT_DOMAIN)
    except NotConvergedError as exc:
        return _fail("not-converged", str(exc), EXIT_NOT_CONVERGED)
    except (RpfError, ValueError, IndexError) as exc:
        return _fail("domain", str(exc), EXIT_DOMAIN)


if __name__ == "__main__":
    sys.exit(main())
