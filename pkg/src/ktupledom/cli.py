"""Command-line front end.

Exit codes: 0 success, 1 negative answer (not C0P, invalid set),
2 malformed input, 3 graph not C0P where structure is required,
4 instance too large for brute force.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import io
from .errors import CapExceeded, GraphFormatError, NotC0PError
from .generator import (
    banded_staircase,
    gen_random_graph,
    gen_staircase,
    random_staircase,
    scramble,
    staircase_structure,
)
from .graph import is_k_tuple_dominating
from .oracle import DEFAULT_GAMMA_CAP, brute_force_gamma
from .recognition import find_c0p_ordering
from .solver import gamma_ktuple, gamma_range
from .structure import build_structure, stability_number

EXIT_NEGATIVE = 1
EXIT_FORMAT = 2
EXIT_NOT_C0P = 3
EXIT_CAP = 4


def _fmt_set(vertices) -> str:
    return ",".join(str(v) for v in io.labels(vertices))


def _result_line(k, res) -> str:
    return f"k={k}:{res}"


def cmd_recognize(args) -> int:
    g = io.read_graph(args.file)
    order = find_c0p_ordering(g)
    if args.json:
        structure = build_structure(g, order) if order is not None else None
        print(io.dumps(io.result_json(g.n, structure)))
    elif order is None:
        print("not-c0p")
    else:
        print(" ".join(str(v) for v in io.labels(order.perm)))
    return 0 if order is not None else EXIT_NEGATIVE


def cmd_partition(args) -> int:
    g = io.read_graph(args.file)
    s = build_structure(g)
    if args.json:
        doc = io.result_json(g.n, s)
        doc["r"] = s.r
        doc["intervals"] = {
            "h1": [[v + 1, lo, hi] for v, lo, hi in s.h1.intervals],
            "h2": [[v + 1, lo, hi] for v, lo, hi in s.h2.intervals],
        }
        print(io.dumps(doc))
        return 0
    print(f"C1: {_fmt_set(s.c1)}")
    print(f"C2: {_fmt_set(s.c2)}")
    print(f"U: {_fmt_set(s.u)}")
    print(f"r: {s.r}")
    for name, model in (("H1", s.h1), ("H2", s.h2)):
        parts = " ".join(f"{v + 1}:[{lo},{hi}]" for v, lo, hi in model.intervals)
        print(f"{name}: {parts}")
    print(f"alpha: {s.alpha1} {s.alpha2}")
    return 0


def cmd_gamma(args) -> int:
    g = io.read_graph(args.file)
    s = build_structure(g)
    if args.all:
        results = gamma_range(s, oracle_fallback=args.oracle_fallback)
    else:
        if args.k is None:
            raise GraphFormatError("gamma needs -k K or --all")
        res = gamma_ktuple(s, args.k, oracle_fallback=args.oracle_fallback)
        results = [(args.k, res)]
    if args.json:
        print(io.dumps(io.result_json(g.n, s, results)))
        return 0
    print(" ".join(_result_line(k, r) for k, r in results))
    for k, res in results:
        if not args.all:
            if res.rule:
                print(f"rule: {res.rule}")
            if res.reason:
                print(f"reason: {res.reason}")
        if args.witness and res.is_value:
            print(f"k={k} witness={_fmt_set(res.witness)}")
    return 0


def cmd_oracle(args) -> int:
    g = io.read_graph(args.file)
    res = brute_force_gamma(g, args.k, cap=args.cap)
    if args.json:
        order = find_c0p_ordering(g)
        structure = build_structure(g, order) if order is not None else None
        print(io.dumps(io.result_json(g.n, structure, [(args.k, res)])))
        return 0
    print(_result_line(args.k, res))
    if res.is_value:
        print(f"witness={_fmt_set(res.witness)}")
    return 0


def cmd_verify(args) -> int:
    g = io.read_graph(args.file)
    d = io.parse_vertex_list(args.set)
    if any(v >= g.n for v in d):
        raise GraphFormatError(f"set mentions a vertex above {g.n}")
    ok = is_k_tuple_dominating(g, d, args.k)
    print("valid" if ok else "invalid")
    return 0 if ok else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    if args.kind == "staircase":
        if args.width is not None:
            spec = banded_staircase(args.n1, args.n2, args.u, args.width)
        else:
            spec = random_staircase(args.n1, args.n2, args.u, seed=args.seed, p_empty=args.p_empty)
        g = gen_staircase(spec)
        comment = f"staircase n1={args.n1} n2={args.n2} u={args.u} seed={args.seed}"
    else:
        g = gen_random_graph(args.n, args.p, args.seed)
        comment = f"random n={args.n} p={args.p} seed={args.seed}"
    text = io.format_graph(g, comment)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        io.write_graph(g, args.output, comment)
    return 0


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(float(tok)) for tok in text.split(",") if tok]
    except ValueError:
        raise GraphFormatError(f"bad size list {text!r}") from None


def cmd_bench(args) -> int:
    print(f"{'n':>9} {'build':>9} {'stability':>10} {'gamma':>9} {'recognize':>10}  alpha        gamma_range")
    for n in _parse_sizes(args.sizes):
        half = n // 2
        t0 = time.perf_counter()
        spec = banded_staircase(half, n - half - args.u, args.u, args.width)
        s = staircase_structure(spec)
        t1 = time.perf_counter()
        alphas = (stability_number(s.h1), stability_number(s.h2))
        t2 = time.perf_counter()
        rng = gamma_range(s)
        t3 = time.perf_counter()
        recog = "-"
        if n <= args.recognize_cap:
            g = scramble(gen_staircase(spec), args.seed)
            t4 = time.perf_counter()
            find_c0p_ordering(g)
            recog = f"{time.perf_counter() - t4:.4f}s"
        values = " ".join(_result_line(k, r) for k, r in rng)
        print(f"{n:>9} {t1 - t0:>8.4f}s {t2 - t1:>9.4f}s {t3 - t2:>8.4f}s {recog:>10}  "
              f"{alphas!s:<12} {values}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ktupledom", description="k-tuple domination on C0P-graphs")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="find a consecutive-zeros ordering")
    r.add_argument("file")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_recognize)

    r = sub.add_parser("partition", help="print C1, C2, U, interval models and stability numbers")
    r.add_argument("file")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_partition)

    r = sub.add_parser("gamma", help="k-tuple domination number")
    r.add_argument("file")
    r.add_argument("-k", type=int)
    r.add_argument("--all", action="store_true", help="k = 1 .. |U|+3")
    r.add_argument("--witness", action="store_true")
    r.add_argument("--oracle-fallback", action="store_true",
                   help="answer unresolved cases by brute force when n is small")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_gamma)

    r = sub.add_parser("oracle", help="brute-force k-tuple domination number")
    r.add_argument("file")
    r.add_argument("-k", type=int, required=True)
    r.add_argument("--cap", type=int, default=DEFAULT_GAMMA_CAP)
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_oracle)

    r = sub.add_parser("verify", help="check a vertex set for k-tuple domination")
    r.add_argument("file")
    r.add_argument("--set", required=True, help="comma-separated 1-based labels, e.g. 1,4,7")
    r.add_argument("-k", type=int, required=True)
    r.set_defaults(func=cmd_verify)

    r = sub.add_parser("gen", help="write a generated instance")
    gsub = r.add_subparsers(dest="kind", required=True)
    st = gsub.add_parser("staircase")
    st.add_argument("--n1", type=int, required=True)
    st.add_argument("--n2", type=int, required=True)
    st.add_argument("--u", type=int, default=0)
    st.add_argument("--p-empty", type=float, default=0.0)
    st.add_argument("--width", type=int, help="deterministic banded runs of this width")
    rnd = gsub.add_parser("random")
    rnd.add_argument("--n", type=int, required=True)
    rnd.add_argument("--p", type=float, required=True)
    for q in (st, rnd):
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("-o", "--output")
    r.set_defaults(func=cmd_gen)

    r = sub.add_parser("bench", help="time structure, stability and gamma phases on staircases")
    r.add_argument("--sizes", default="1e3,1e4,1e5")
    r.add_argument("--seed", type=int, default=0, help="relabelling seed for the recognition timing")
    r.add_argument("--u", type=int, default=2)
    r.add_argument("--width", type=int, default=8)
    r.add_argument("--recognize-cap", type=int, default=3000,
                   help="also time dense recognition up to this n")
    r.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, FileNotFoundError, ValueError) as exc:
        if isinstance(exc, NotC0PError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NOT_C0P
        if isinstance(exc, CapExceeded):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CAP
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
