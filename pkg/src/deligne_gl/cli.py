"""Command-line front end.

Exit codes: 0 success, 1 unparsable input, 2 domain precondition violated,
3 internal assertion (a bug), 4 a ``check`` suite failed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
from fractions import Fraction

from .capdiagrams import cap_diagram, weight_diagram
from .checks import run_suites
from .combinatorics import (
    ParseError,
    Partition,
    is_almost_cross,
    is_cross,
    lr_cache,
    parse_bipartition,
)
from .deltas import Generic, integral_value, parse_delta
from .grothendieck import SCHEMA, RingVector, bilinear_form, lift, product_at, product_generic, unlift
from .oracle import primitive_idempotent
from .schur import character, dim_W

EXIT_PARSE, EXIT_DOMAIN, EXIT_INTERNAL, EXIT_CHECK = 1, 2, 3, 4

__all__ = ["main", "build_parser", "parse_bipartition", "parse_delta", "load_cache", "save_cache"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


# --- persistent LR cache ------------------------------------------------------

_CACHE_LINE = re.compile(r"\(([\d,]*)\|([\d,]*)\|([\d,]*)\) -> (\d+)")


def _side(text: str) -> Partition:
    return Partition(int(x) for x in text.split(",") if x)


def load_cache(path: str) -> int:
    """Merge a cache file into the LR memo; returns the number of entries.

    A file with any malformed or implausible record is ignored entirely.
    """
    if not os.path.exists(path):
        return 0
    entries = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                m = _CACHE_LINE.fullmatch(line)
                if not m:
                    raise ValueError(line)
                nu, lam, mu = (_side(m.group(i)) for i in (1, 2, 3))
                c = int(m.group(4))
                if c and sum(nu) != sum(lam) + sum(mu):
                    raise ValueError(line)
                entries[(nu, lam, mu)] = c
    except (ValueError, UnicodeDecodeError, OSError):
        print(f"warning: discarding corrupt LR cache {path}", file=sys.stderr)
        return 0
    lr_cache().update(entries)
    return len(entries)


def save_cache(path: str) -> None:
    lines = sorted(
        f"({','.join(map(str, nu))}|{','.join(map(str, lam))}|{','.join(map(str, mu))}) -> {c}"
        for (nu, lam, mu), c in list(lr_cache().items())
    )
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".lrcache")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + ("\n" if lines else ""))
    os.replace(tmp, path)


# --- argument handling --------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)  # noqa: E731
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--cache", default=d(None), metavar="PATH", help="persistent LR coefficient cache")
    p.add_argument("--threads", type=int, default=d(1), metavar="K", help="worker threads")
    p.add_argument(
        "--dump-diagrams", action="store_true", default=d(False),
        help="for form: write the idempotents e_lam, e_mu as diagram JSON to stderr (rank <= 4)",
    )


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    parser = _Parser(prog="deligne-gl", description="Exact computations in Rep(GL_delta).")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    p = verb("lift", "lift a bipartition from R_delta to R_t")
    p.add_argument("--delta", required=True)
    p.add_argument("bp")
    p = verb("unlift", "preimage of an R_t vector (JSON, or '-' for stdin) under lift")
    p.add_argument("--delta", required=True)
    p.add_argument("vector")
    p = verb("tensor", "decompose a tensor product of two indecomposables")
    p.add_argument("--delta", required=True)
    p.add_argument("bp1")
    p.add_argument("bp2")
    for name, help_ in (("char", "character of W(lam) for gl(m|n)"),
                        ("dim", "dimension of W(lam) for gl(m|n)"),
                        ("cross", "whether lam is (m|n)-cross")):
        p = verb(name, help_)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("bp")
    p = verb("caps", "weight and cap diagram at an integer delta")
    p.add_argument("--delta", required=True)
    p.add_argument("bp")
    p = verb("form", "the bilinear form (dimension of Hom)")
    p.add_argument("--delta", required=True)
    p.add_argument("bp1")
    p.add_argument("bp2")
    p = verb("check", "run self-check suites")
    p.add_argument("--suite", choices=["golden", "lr", "gamma", "hom", "all"], default="all")
    return parser


def _rational(text: str) -> Fraction:
    d = parse_delta(text)
    if isinstance(d, Generic):
        raise ValueError("this command needs a specific value of delta, not t")
    return d


def _bp_arg(text: str):
    try:
        return parse_bipartition(text)
    except ParseError as exc:
        raise ParseError(f"{exc.message} in {text!r}", exc.position) from None


def _mn(args) -> tuple[int, int]:
    if args.m < 0 or args.n < 0 or args.m + args.n == 0:
        raise ValueError("need m, n >= 0 with m + n > 0")
    return args.m, args.n


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, separators=(",", ":")))
    else:
        print(text)


def _vector_out(args, v: RingVector) -> None:
    data = v.to_json()
    data.pop("schema")
    _emit(args, str(v), data)


def _read_vector(text: str) -> RingVector:
    raw = sys.stdin.read() if text == "-" else text
    try:
        data = json.loads(raw)
        v = RingVector.from_json(data)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed vector JSON: {exc}") from None
    return v


MAX_DUMP_RANK = 4


def _dump_idempotents(lams, delta) -> None:
    if isinstance(delta, Generic):
        raise ValueError("--dump-diagrams needs a specific value of delta")
    for lam in lams:
        if lam.total > MAX_DUMP_RANK:
            raise ValueError(f"--dump-diagrams supports r+s <= {MAX_DUMP_RANK}")
        e = primitive_idempotent(lam, delta)
        terms = [
            {"diagram": dg.to_json(), "coeff": str(c)}
            for dg, c in sorted(e.terms.items(), key=lambda t: t[0].dumps())
        ]
        record = {"schema": SCHEMA, "bp": [list(lam.black), list(lam.white)], "delta": str(delta), "terms": terms}
        print(json.dumps(record, separators=(",", ":")), file=sys.stderr)


def run(args) -> int:
    verb = args.verb
    if verb == "lift":
        d = _rational(args.delta)
        _vector_out(args, lift(RingVector.basis(_bp_arg(args.bp), d)))
    elif verb == "unlift":
        d = _rational(args.delta)
        v = _read_vector(args.vector)
        if not v.generic:
            raise ValueError("unlift expects a vector of the generic ring (\"ring\": \"t\")")
        _vector_out(args, unlift(v, d))
    elif verb == "tensor":
        d = parse_delta(args.delta)
        a, b = _bp_arg(args.bp1), _bp_arg(args.bp2)
        x, y = RingVector.basis(a, d), RingVector.basis(b, d)
        if isinstance(d, Generic):
            out = product_generic(x, y, threads=args.threads)
        else:
            out = product_at(x, y, threads=args.threads)
        _vector_out(args, out)
    elif verb == "char":
        m, n = _mn(args)
        f = character(_bp_arg(args.bp), m, n)
        _emit(args, str(f), {"m": m, "n": n, "terms": f.to_json()})
    elif verb == "dim":
        m, n = _mn(args)
        dim = dim_W(_bp_arg(args.bp), m, n)
        _emit(args, str(dim), {"dim": dim})
    elif verb == "cross":
        m, n = _mn(args)
        lam = _bp_arg(args.bp)
        c, a = is_cross(lam, m, n), is_almost_cross(lam, m, n)
        text = f"cross: {'yes' if c else 'no'}\nalmost-cross: {'yes' if a else 'no'}"
        _emit(args, text, {"cross": c, "almost_cross": a})
    elif verb == "caps":
        d = integral_value(_rational(args.delta))
        if d is None:
            raise ValueError("weight diagrams need an integer delta")
        x = weight_diagram(_bp_arg(args.bp), d)
        caps = sorted(cap_diagram(x))
        text = "\n".join([
            f"window: {x.window[0]}..{x.window[1]}",
            f"labels: {x.labels}",
            "caps: " + " ".join(f"({i},{j})" for i, j in caps),
        ])
        _emit(args, text, {**x.to_json(), "caps": [list(c) for c in caps]})
    elif verb == "form":
        d = parse_delta(args.delta)
        lam, mu = _bp_arg(args.bp1), _bp_arg(args.bp2)
        value = bilinear_form(lam, mu, d)
        if args.dump_diagrams:
            _dump_idempotents((lam, mu), d)
        _emit(args, str(value), {"form": value})
    elif verb == "check":
        results = run_suites(args.suite, threads=args.threads)
        rows = [f"{r.name:<8} {r.passed:>6}/{r.total:<6} {'PASS' if r.ok else 'FAIL'}" for r in results]
        for r in results:
            rows += [f"  failed: {f}" for f in r.failures[:20]]
        payload = {"suites": [
            {"name": r.name, "passed": r.passed, "total": r.total, "ok": r.ok, "failures": r.failures}
            for r in results
        ]}
        _emit(args, "\n".join(rows), payload)
        return 0 if all(r.ok for r in results) else EXIT_CHECK
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.cache:
        load_cache(args.cache)
    try:
        code = run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.cache:
        save_cache(args.cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
