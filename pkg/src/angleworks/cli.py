"""Command-line surface: angles, fvector, reitzner, verify.

Exact values print in the canonical PiNumber text form by default;
``--digits N`` adds a correctly rounded decimal column.  Exit codes:
0 success, 1 failed verification, 2 invalid parameters.  Timing goes to
stderr so identical invocations stay bit-identical on stdout.
ANGLEWORKS_THREADS caps the worker pool used for whole-table numeric
commands.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import verify as verify_mod
from .angle_engine import angle_table
from .exact_scalars import (
    DomainError,
    PiNumber,
    format_pinumber,
    pinumber_to_json,
    to_decimal,
)
from .polytope_engine import (
    beta_polytope_fvector,
    betaprime_polytope_fvector,
    poisson_polytope_fvector,
    reitzner_ball,
    reitzner_sphere,
    typical_voronoi_fvector,
    zero_cell_fvector,
)

_FRACTION_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ANGLEWORKS_THREADS", "0")) or os.cpu_count() or 1)
    except ValueError:
        return 1


def _pmap(fn, items):
    items = list(items)
    if len(items) <= 1 or _threads() == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(_threads(), len(items))) as ex:
        return list(ex.map(fn, items))


def _parse_parameter(text: str, what: str = "beta"):
    """P/Q stays exact; a decimal routes to the numeric path with a notice."""
    if _FRACTION_RE.match(text):
        q = Fraction(text)
        if q.denominator in (1, 2):
            return q, True
        print(
            f"notice: {what}={text} is not a half-integer; using numeric evaluation",
            file=sys.stderr,
        )
        return float(q), False
    try:
        v = float(text)
    except ValueError:
        raise DomainError(f"cannot parse {what}={text!r}")
    print(
        f"notice: decimal {what}={text} routes to numeric evaluation", file=sys.stderr
    )
    return v, False


def _value_text(v) -> str:
    return format_pinumber(v) if isinstance(v, PiNumber) else repr(float(v))


def _value_decimal(v, digits: int) -> str:
    if isinstance(v, PiNumber):
        return to_decimal(v, digits)
    return f"{float(v):.{digits}f}"


def _emit_records(args, command: str, params: dict, records: list[dict]) -> None:
    fmt = getattr(args, "format", "plain")
    digits = getattr(args, "digits", None)
    cols = [c for c in ("index", "value", "decimal", "provenance") if
            c != "decimal" or digits]
    if fmt == "json":
        doc = {"command": command, "parameters": params, "records": records}
        print(json.dumps(doc, indent=2))
        return
    rows = []
    for r in records:
        row = [str(r["index"]), r["text"]]
        if digits:
            row.append(r["decimal"])
        row.append(r["provenance"])
        rows.append(row)
    if fmt == "csv":
        header = [c for c in cols]
        print(",".join(header))
        for row in rows:
            print(",".join(f'"{c}"' if "," in c else c for c in row))
    elif fmt == "latex":
        print(r"\begin{tabular}{" + "l" * len(cols) + "}")
        print(" & ".join(cols) + r" \\ \hline")
        for row in rows:
            print(" & ".join(row) + r" \\")
        print(r"\end{tabular}")
    else:
        widths = [max(len(r[i]) for r in rows + [cols]) for i in range(len(cols))]
        print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
        for row in rows:
            print("  ".join(c.ljust(w) for c, w in zip(row, widths)))


def _record(index, value, provenance: str, digits) -> dict:
    rec = {
        "index": index,
        "text": _value_text(value),
        "provenance": provenance,
        "exact": pinumber_to_json(value) if isinstance(value, PiNumber) else None,
        "float": value if not isinstance(value, PiNumber) else None,
    }
    rec["decimal"] = _value_decimal(value, digits) if digits else None
    return rec


def cmd_angles(args) -> int:
    beta, exact = _parse_parameter(args.beta, "beta")
    if args.numeric and exact:
        beta, exact = float(beta), False
    table = angle_table(args.family, args.n, beta)
    ks = [args.k] if args.k else list(range(1, args.n + 1))
    records = [
        _record(k, table.value(k), table.provenance(k), args.digits) for k in ks
    ]
    params = {"family": args.family, "n": args.n, "beta": str(args.beta)}
    _emit_records(args, "angles", params, records)
    return 0


def cmd_fvector(args) -> int:
    model = args.model
    if model == "voronoi":
        fv = typical_voronoi_fvector(args.d)
    elif model == "zerocell":
        fv = zero_cell_fvector(args.d)
    elif model == "poisson":
        if args.alpha is None:
            raise DomainError("--alpha required for the poisson model")
        alpha, exact = _parse_parameter(args.alpha, "alpha")
        if exact and Fraction(alpha).denominator != 1:
            alpha, exact = float(alpha), False
        fv = poisson_polytope_fvector(args.d, int(alpha) if exact else alpha)
    elif model in ("beta", "betaprime"):
        if args.beta is None or args.n is None:
            raise DomainError(f"--beta and --n required for the {model} model")
        beta, _ = _parse_parameter(args.beta, "beta")
        fn = beta_polytope_fvector if model == "beta" else betaprime_polytope_fvector
        fv = fn(args.n, args.d, beta)
    else:
        raise DomainError(f"unknown model {model!r}")
    records = [
        _record(ell, fv.value(ell), fv.provenance(ell), args.digits)
        for ell in range(fv.d)
    ]
    params = {"model": model, "d": args.d}
    if args.alpha is not None:
        params["alpha"] = str(args.alpha)
    if args.beta is not None:
        params["beta"] = str(args.beta)
    if args.n is not None:
        params["n"] = args.n
    _emit_records(args, "fvector", params, records)
    return 0


def cmd_reitzner(args) -> int:
    digits = args.digits or 12
    ks = [args.k] if args.k is not None else list(range(args.d))
    fn = reitzner_ball if args.surface == "ball" else reitzner_sphere
    records = []
    for k, rc in zip(ks, _pmap(lambda k: fn(args.d, k), ks)):
        if rc.exact is not None:
            text = format_pinumber(rc.exact)
            dec = to_decimal(rc.exact, digits)
        else:
            text = f"{rc.value:.{digits}g}"
            dec = f"{rc.value:.{digits}f}"
        records.append(
            {
                "index": k,
                "text": text,
                "decimal": dec,
                "provenance": "exact" if rc.exact is not None else "float",
                "exact": pinumber_to_json(rc.exact) if rc.exact is not None else None,
                "float": rc.value,
                "angle_factor": format_pinumber(rc.angle_factor),
            }
        )
    params = {"surface": args.surface, "d": args.d}
    fmt = args.format
    if fmt == "json":
        print(json.dumps({"command": "reitzner", "parameters": params, "records": records}, indent=2))
        return 0
    for r in records:
        print(
            f"k={r['index']}  {r['text']}  ({r['decimal']})  "
            f"angle factor: {r['angle_factor']}"
        )
    return 0


def cmd_verify(args) -> int:
    suite = verify_mod.SUITES[args.suite]
    if args.suite == "relations":
        results = suite(max_n=args.max_n)
    elif args.suite == "montecarlo":
        results = suite(seed=args.seed, trials=args.trials)
    else:
        results = suite()
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name}" + (f"  [{r.detail}]" if r.detail else ""))
        failed += 0 if r.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="angleworks",
        description="Exact expected angles of random simplices and f-vectors of random polytopes",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("angles", help="expected internal angle sums")
    a.add_argument("--family", choices=("beta", "betaprime"), required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--k", type=int)
    a.add_argument("--beta", required=True, help="exact fraction P/Q or decimal")
    a.add_argument("--numeric", action="store_true", help="force the quadrature path")
    a.add_argument("--format", choices=("plain", "csv", "latex", "json"), default="plain")
    a.add_argument("--digits", type=int)
    a.set_defaults(func=cmd_angles)

    f = sub.add_parser("fvector", help="expected f-vectors of random polytopes")
    f.add_argument(
        "--model",
        choices=("voronoi", "zerocell", "poisson", "beta", "betaprime"),
        required=True,
    )
    f.add_argument("--d", type=int, required=True)
    f.add_argument("--alpha", help="poisson model concentration (integer = exact)")
    f.add_argument("--beta", help="beta/betaprime parameter, P/Q or decimal")
    f.add_argument("--n", type=int, help="number of sample points (beta models)")
    f.add_argument("--format", choices=("plain", "csv", "latex", "json"), default="plain")
    f.add_argument("--digits", type=int)
    f.set_defaults(func=cmd_fvector)

    r = sub.add_parser("reitzner", help="Reitzner constants C_{d,k} and C*_{d,k}")
    r.add_argument("--surface", choices=("ball", "sphere"), required=True)
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--k", type=int)
    r.add_argument("--digits", type=int)
    r.add_argument("--format", choices=("plain", "json"), default="plain")
    r.set_defaults(func=cmd_reitzner)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=("relations", "crosscheck", "montecarlo"), required=True)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--trials", type=int, default=20000)
    v.add_argument("--max-n", type=int, default=8, dest="max_n")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"[{1000 * (time.perf_counter() - t0):.1f} ms]", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
