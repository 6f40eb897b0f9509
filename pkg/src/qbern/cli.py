"""Command-line frontend.

    qbern eval   <quantity> [flags]      print one value
    qbern table  <quantity> [flags]      emit a CSV/JSON table over ranges
    qbern verify <suite>    [--tol X]    run identity checks, JSON-lines report
    qbern approx <fn> <operator> [flags] approximation-error sweeps

Exit codes: 0 success / all checks passed, 1 verification or I/O or
convergence failure, 2 usage error (unknown quantity, missing or
out-of-domain parameter).  All output is deterministic: identical
invocations produce byte-identical files.
"""

import argparse
import csv
import io
import json
import sys

from . import bernstein, interp, qbernstein, verify
from .errors import DomainError, TruncationError
from .functions import BUILTIN_FUNCTIONS, CONVEX_BUILTINS

QUANTITIES = ("basis", "y", "s_q", "phillips", "moment", "operator-error")
OPERATORS = ("classical", "q-type", "phillips")
SUITES = ("all",) + verify.SUITE_ORDER


def _parse_scalar(text):
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text)
    except ValueError:
        raise DomainError(f"cannot parse scalar value: {text!r}")


def _parse_list(text, convert):
    return tuple(convert(part) for part in text.split(","))


def _parse_grid(spec):
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid must be start:stop:step, got {spec!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0 or stop < start:
        raise DomainError(f"grid requires step > 0 and stop >= start, got {spec!r}")
    count = int(round((stop - start) / step)) + 1
    values = []
    for i in range(count):
        v = start + i * step
        if abs(v - stop) < step * 1e-9:
            v = stop
        values.append(v)
    return tuple(values)


def _format_value(value, precision=None):
    if precision is None:
        if isinstance(value, complex):
            return repr(value)
        return repr(float(value))
    return format(value, f".{precision}g")


def _require(args, flag, quantity):
    value = getattr(args, flag.lstrip("-").replace("-", "_"))
    if value is None:
        raise DomainError(f"--{flag} is required for quantity {quantity!r}")
    return value


def _builtin(name):
    if name not in BUILTIN_FUNCTIONS:
        raise DomainError(
            f"unknown function {name!r}; choose one of {', '.join(sorted(BUILTIN_FUNCTIONS))}")
    return BUILTIN_FUNCTIONS[name]


def _apply_operator(op, fname, n, x, q):
    f = _builtin(fname)
    if op == "classical":
        return bernstein.operator(f, n, x)
    if q is None:
        raise DomainError(f"--q is required for operator {op!r}")
    if op == "q-type":
        return qbernstein.q_operator(f, n, x, q)
    if op == "phillips":
        return qbernstein.phillips_operator(f, n, x, q)
    raise DomainError(f"unknown operator {op!r}")


def _operator_error(op, fname, n, q, grid):
    f = _builtin(fname)
    return max(abs(_apply_operator(op, fname, n, x, q) - f(x)) for x in grid)


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _cmd_eval(args):
    q = args.quantity
    if q == "basis":
        value = bernstein.basis(int(_require(args, "j", q)), int(_require(args, "n", q)),
                                _require(args, "x", q))
    elif q == "y":
        value = qbernstein.y_poly(int(_require(args, "n", q)), int(_require(args, "k", q)),
                                  _require(args, "x", q), _require(args, "q", q))
    elif q == "s_q":
        point = interp.InterpPoint(z=_require(args, "z", q), k=int(_require(args, "k", q)),
                                   x=_require(args, "x", q), q=_require(args, "q", q))
        value = interp.s_q_closed(point)
    elif q == "phillips":
        value = qbernstein.phillips_operator(
            _builtin(_require(args, "fn", q)), int(_require(args, "n", q)),
            _require(args, "x", q), _require(args, "q", q))
    elif q == "moment":
        value = bernstein.binomial_moment(int(_require(args, "n", q)),
                                          _require(args, "x", q), int(_require(args, "m", q)))
    elif q == "operator-error":
        grid = _parse_grid(args.grid or "0:1:0.01")
        value = _operator_error(_require(args, "op", q), _require(args, "fn", q),
                                int(_require(args, "n", q)), args.q, grid)
    else:
        raise DomainError(f"unknown quantity {q!r}")
    _write_text(args.out, _format_value(value, args.precision) + "\n")
    return 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _x_values(args, quantity):
    if args.grid and args.x:
        raise DomainError("give either --x or --grid, not both")
    if args.grid:
        return _parse_grid(args.grid)
    if args.x:
        return _parse_list(args.x, float)
    raise DomainError(f"--x or --grid is required for quantity {quantity!r}")


def _cmd_table(args):
    q = args.quantity
    rows = []
    if q == "basis":
        n = int(_require(args, "n", q))
        j_list = _parse_list(args.j, int) if args.j else tuple(range(n + 1))
        for j in sorted(j_list):
            for x in _x_values(args, q):
                rows.append({"j": j, "n": n, "x": x,
                             "value": bernstein.basis(j, n, x)})
    elif q == "y":
        n = int(_require(args, "n", q))
        k = int(_require(args, "k", q))
        q_list = _parse_list(_require(args, "q", q), float)
        for qv in sorted(q_list):
            for x in _x_values(args, q):
                rows.append({"n": n, "k": k, "q": qv, "x": x,
                             "value": qbernstein.y_poly(n, k, x, qv)})
    elif q == "s_q":
        k = int(_require(args, "k", q))
        z_list = _parse_list(_require(args, "z", q), _parse_scalar)
        q_list = _parse_list(_require(args, "q", q), float)
        for z in sorted(z_list, key=lambda v: (v.real, v.imag) if isinstance(v, complex) else (v, 0)):
            for qv in sorted(q_list):
                for x in _x_values(args, q):
                    value = interp.s_q_closed(interp.InterpPoint(z=z, k=k, x=x, q=qv))
                    rows.append({"z": z, "k": k, "q": qv, "x": x, "value": value})
    elif q == "phillips":
        fname = _require(args, "fn", q)
        n = int(_require(args, "n", q))
        q_list = _parse_list(_require(args, "q", q), float)
        f = _builtin(fname)
        for qv in sorted(q_list):
            for x in _x_values(args, q):
                rows.append({"fn": fname, "n": n, "q": qv, "x": x,
                             "value": qbernstein.phillips_operator(f, n, x, qv)})
    elif q == "moment":
        n = int(_require(args, "n", q))
        m = int(_require(args, "m", q))
        for x in _x_values(args, q):
            rows.append({"n": n, "m": m, "x": x,
                         "value": bernstein.binomial_moment(n, x, m)})
    elif q == "operator-error":
        op = _require(args, "op", q)
        fname = _require(args, "fn", q)
        n_list = _parse_list(_require(args, "n", q), int)
        grid = _parse_grid(args.grid or "0:1:0.01")
        for n in sorted(n_list):
            rows.append({"op": op, "fn": fname, "q": args.q, "n": n,
                         "value": _operator_error(op, fname, n, args.q, grid)})
    else:
        raise DomainError(f"unknown quantity {q!r}")
    _write_rows(rows, args.format, args.out)
    return 0


def _serialise(value):
    if isinstance(value, complex):
        return repr(value)
    return value


def _write_rows(rows, fmt, out_path):
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if rows:
            columns = list(rows[0].keys())
            writer.writerow(columns)
            for row in rows:
                writer.writerow([_serialise(row[c]) for c in columns])
        text = buf.getvalue()
    elif fmt == "json":
        text = json.dumps([{k: _serialise(v) for k, v in row.items()} for row in rows],
                          indent=2) + "\n"
    else:
        raise DomainError(f"unknown format {fmt!r}")
    _write_text(out_path, text)


def _write_text(out_path, text):
    if out_path:
        with open(out_path, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args):
    lines = []
    total = passed = 0
    for report in verify.iter_suite(args.suite, args.tol):
        total += 1
        passed += bool(report.passed)
        lines.append(report.to_json())
    summary = {"suite": args.suite, "checks": total,
               "passed": passed, "failed": total - passed}
    lines.append(json.dumps(summary))
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0 if passed == total else 1


# ---------------------------------------------------------------------------
# approx
# ---------------------------------------------------------------------------

def _cmd_approx(args):
    fname = args.fn
    op = args.operator
    _builtin(fname)
    if op not in OPERATORS:
        raise DomainError(f"unknown operator {op!r}")
    n_list = _parse_list(args.n, int)
    grid = _parse_grid(args.grid)
    with_margin = op == "phillips" and fname in CONVEX_BUILTINS
    f = BUILTIN_FUNCTIONS[fname]
    rows = []
    for n in sorted(n_list):
        row = {"operator": op, "fn": fname}
        if op != "classical":
            row["q"] = args.q
        row["n"] = n
        row["max_error"] = _operator_error(op, fname, n, args.q, grid)
        if with_margin:
            row["margin"] = min(
                _apply_operator(op, fname, n, x, args.q) - f(x) for x in grid)
        rows.append(row)
    _write_rows(rows, args.format, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="qbern",
        description="Bernstein and q-Bernstein-type polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="output path (default: stdout)")

    pe = sub.add_parser("eval", help="evaluate one quantity at one point")
    pe.add_argument("quantity", choices=QUANTITIES)
    pe.add_argument("--j", type=int)
    pe.add_argument("--n", type=int)
    pe.add_argument("--k", type=int)
    pe.add_argument("--m", type=int)
    pe.add_argument("--x", type=float)
    pe.add_argument("--z", type=_parse_scalar)
    pe.add_argument("--q", type=float)
    pe.add_argument("--fn", choices=sorted(BUILTIN_FUNCTIONS))
    pe.add_argument("--op", choices=OPERATORS)
    pe.add_argument("--grid", help="x grid start:stop:step for operator-error")
    pe.add_argument("--precision", type=int,
                    help="significant digits (default: shortest round-trip form)")
    add_common(pe)
    pe.set_defaults(handler=_cmd_eval)

    pt = sub.add_parser("table", help="tabulate a quantity over parameter ranges")
    pt.add_argument("quantity", choices=QUANTITIES)
    pt.add_argument("--j", help="comma-separated basis indices (default: 0..n)")
    pt.add_argument("--n", help="integer, or comma list for operator-error")
    pt.add_argument("--k", type=int)
    pt.add_argument("--m", type=int)
    pt.add_argument("--x", help="comma-separated x values")
    pt.add_argument("--z", help="comma-separated z values")
    pt.add_argument("--q", help="comma-separated q values")
    pt.add_argument("--fn", choices=sorted(BUILTIN_FUNCTIONS))
    pt.add_argument("--op", choices=OPERATORS)
    pt.add_argument("--grid", help="x grid as start:stop:step")
    pt.add_argument("--format", choices=("csv", "json"), default="csv")
    add_common(pt)
    pt.set_defaults(handler=_cmd_table)

    pv = sub.add_parser("verify", help="run identity-verification suites")
    pv.add_argument("suite", choices=SUITES)
    pv.add_argument("--tol", type=float,
                    help="override every check's tolerance uniformly")
    add_common(pv)
    pv.set_defaults(handler=_cmd_verify)

    pa = sub.add_parser("approx", help="approximation-error sweeps")
    pa.add_argument("fn", choices=sorted(BUILTIN_FUNCTIONS))
    pa.add_argument("operator", choices=OPERATORS)
    pa.add_argument("--n", required=True, help="comma-separated operator degrees")
    pa.add_argument("--q", type=float)
    pa.add_argument("--grid", default="0:1:0.01", help="x grid as start:stop:step")
    pa.add_argument("--format", choices=("csv", "json"), default="csv")
    add_common(pa)
    pa.set_defaults(handler=_cmd_approx)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
