"""Command-line interface: ``bqzeta <mc|field|gauss|series|zeta|verify> ...``.

Exit status: 0 on success, 1 if ``verify`` reports a failed check, 2 on a
usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import analytic as an
from . import gaussian as gs
from . import multicomplex as mc
from . import quadratic as qf
from . import series as sr
from . import verify as vf
from .errors import BQZetaError, ParseError

FORMATS = ("json", "csv", "text")

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


def parse_complex(text: str) -> complex:
    """Parse ``"a"``, ``"bi"``, ``"a+bi"`` or ``"a-bi"`` into a complex number.

    ``a`` and ``b`` are decimal literals (optionally signed, with exponent);
    a bare ``i`` stands for ``1i``.  The Unicode minus sign is accepted.
    """
    t = text.strip().replace("−", "-")
    pos = 0

    def sign_at(p):
        if p < len(t) and t[p] in "+-":
            return (-1.0 if t[p] == "-" else 1.0), p + 1
        return 1.0, p

    def number_at(p):
        m = _NUMBER.match(t, p)
        if m:
            return float(m.group()), m.end()
        if p < len(t) and t[p] == "i":
            return None, p  # bare unit: coefficient 1, 'i' consumed by caller
        raise ParseError("expected a number", text, p)

    if not t:
        raise ParseError("empty input", text, 0)
    sign, pos = sign_at(pos)
    value, pos = number_at(pos)
    if value is None:
        value = 1.0
        if pos + 1 != len(t):
            raise ParseError("unexpected trailing text", text, pos + 1)
        return complex(0.0, sign * value)
    first = sign * value
    if pos == len(t):
        return complex(first, 0.0)
    if t[pos] == "i":
        if pos + 1 != len(t):
            raise ParseError("unexpected trailing text", text, pos + 1)
        return complex(0.0, first)
    if t[pos] not in "+-":
        raise ParseError("expected '+', '-' or 'i'", text, pos)
    sign2, pos = sign_at(pos)
    value2, pos = number_at(pos)
    if value2 is None:
        value2 = 1.0
    if pos >= len(t) or t[pos] != "i":
        raise ParseError("expected 'i'", text, pos)
    if pos + 1 != len(t):
        raise ParseError("unexpected trailing text", text, pos + 1)
    return complex(first, sign2 * value2)


def parse_multicomplex(text: str) -> mc.Multicomplex:
    """A JSON record ``{"level", "coords"}`` or a comma list of ``2**n`` rationals."""
    text = text.strip()
    if text.startswith("{"):
        return mc.Multicomplex.from_json(text)
    try:
        coords = [Fraction(c.strip()) for c in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational ({exc})", text, 0) from None
    level = len(coords).bit_length() - 1
    if 1 << level != len(coords) or level < 1:
        raise ParseError(f"{len(coords)} coordinates is not a power of two >= 2", text, 0)
    return mc.Multicomplex(level, coords)


def parse_grid(text: str) -> list[complex]:
    """``"re0:re1:nre,im0:im1:nim"`` -> row-major list of grid points."""
    try:
        re_part, im_part = text.split(",")
        axes = []
        for part in (re_part, im_part):
            lo, hi, count = part.split(":")
            lo, hi, count = float(lo), float(hi), int(count)
            if count < 1:
                raise ValueError("count must be >= 1")
            step = (hi - lo) / (count - 1) if count > 1 else 0.0
            axes.append([lo + k * step for k in range(count)])
    except ValueError as exc:
        raise ParseError(f"bad grid spec ({exc}); expected re0:re1:n,im0:im1:m", text, 0) from None
    return [complex(x, y) for x in axes[0] for y in axes[1]]


# -- output helpers ------------------------------------------------------------


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(obj, out, ensure_ascii=False)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        if isinstance(obj, dict):
            writer.writerow(["key", "value"])
            for k, v in obj.items():
                writer.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
        else:
            writer.writerows(obj)
    else:
        if isinstance(obj, dict):
            for k, v in obj.items():
                out.write(f"{k}: {v}\n")
        else:
            for row in obj:
                out.write(" ".join(str(x) for x in row) + "\n")


def _rows_to_records(rows) -> list[dict]:
    header, *body = list(rows)
    return [dict(zip(header, r)) for r in body]


def _dict_format(args) -> str:
    return args.format or "json"


# -- subcommands ---------------------------------------------------------------------


def cmd_mc(args, out) -> int:
    op = args.mc_op
    if op == "idempotents":
        result = [e.to_dict() for e in mc.idempotent_set(args.n, args.k)]
        _emit({"n": args.n, "k": args.k, "idempotents": result}, "json", out)
        return 0
    if op == "from-idem":
        data = json.loads(args.vector)
        comps = [mc.ComplexRational(Fraction(str(re)), Fraction(str(im))) for re, im in data["components"]]
        z = mc.from_idempotent(mc.IdempotentVector(int(data["level"]), comps))
        _emit_mc(z, args.format, out)
        return 0
    a = parse_multicomplex(args.a)
    if op in ("add", "mul"):
        b = parse_multicomplex(args.b)
        z = mc.mc_add(a, b) if op == "add" else mc.mc_mul(a, b)
        _emit_mc(z, args.format, out)
    elif op == "inv":
        _emit_mc(mc.mc_inverse(a), args.format, out)
    elif op == "idem":
        v = mc.to_idempotent(a)
        if args.format == "text":
            for j, c in enumerate(v.components, start=1):
                out.write(f"beta_{j}: {c}\n")
        else:
            _emit(v.to_dict(), "json", out)
    elif op == "zd":
        _emit({"zero_divisor": mc.is_zero_divisor(a)}, _dict_format(args), out)
    return 0


def _emit_mc(z: mc.Multicomplex, fmt: str | None, out) -> None:
    if fmt == "text":
        out.write(f"{z}\n")
    elif fmt == "csv":
        _emit([("index", "coord"), *enumerate(d for d in z.to_dict()["coords"])], "csv", out)
    else:
        _emit(z.to_dict(), "json", out)


def cmd_field(args, out) -> int:
    field = qf.QuadraticField(args.d)
    _emit(field.to_dict(), _dict_format(args), out)
    return 0


def cmd_gauss(args, out) -> int:
    header = ("n", "r2", "a_n", "s1", "s3")
    if args.gauss_op == "r2":
        n = args.n
        s1, s3 = gs.sigma_counts(n)
        r2 = gs.r2_bruteforce(n)
        rows = [header, (n, r2, r2 // 4, s1, s3)]
    else:
        N = args.N if args.N is not None else args.limit
        if N is None:
            raise ParseError("gauss table needs N (positional or --limit)", "", 0)
        rows = [header, *gs.table_rows(N)]
    fmt = args.format or "csv"
    if fmt == "json":
        _emit(_rows_to_records(rows), "json", out)
    else:
        _emit(rows, fmt, out)
    return 0


def cmd_series(args, out) -> int:
    N = args.limit or 100
    if args.series == "qi":
        table = sr.coeffs_zeta_qi(N)
    else:
        table = sr.coeffs_bqn(args.level, N)
    fmt = args.format or "csv"
    if fmt == "json":
        _emit(table.to_dict(), "json", out)
    else:
        _emit(list(table.csv_rows()), fmt, out)
    return 0


def cmd_zeta(args, out) -> int:
    op = args.zeta_op
    if op == "eval":
        s = parse_complex(args.s)
        target = args.target
        if target == "riemann":
            r = an.riemann_zeta(s)
        elif target == "beta":
            r = an.dirichlet_beta(s)
        elif target == "qi":
            r = an.zeta_qi(s)
        else:
            r = an.zeta_bqn(args.level, s)
        _emit(r.to_dict(), _dict_format(args), out)
    elif op == "funceq":
        rows = [("re", "im", "residual")]
        for s in parse_grid(args.grid):
            try:
                res = an.functional_eq_residual(args.level, s)
            except BQZetaError:
                res = None  # grid point too close to a pole
            rows.append((s.real, s.imag, res))
        fmt = args.format or "csv"
        if fmt == "json":
            _emit(_rows_to_records(rows), "json", out)
        else:
            _emit([rows[0], *((repr(x), repr(y), "nan" if r is None else repr(r)) for x, y, r in rows[1:])], fmt, out)
    elif op == "constants":
        _emit(an.constants(), _dict_format(args), out)
    elif op == "laurent":
        _emit(an.bqn_laurent_leading(args.level), _dict_format(args), out)
    return 0


def cmd_verify(args, out) -> int:
    entries = vf.run_verify(args.profile, workers=args.workers)
    fmt = args.format or "text"
    if fmt == "json":
        out.write(vf.report_to_json(entries) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["check_id", "paper_anchor", "expected", "actual", "tolerance", "passed"])
        for e in entries:
            writer.writerow([e.check_id, e.paper_anchor, e.expected, e.actual, repr(e.tolerance), e.passed])
    else:
        for e in entries:
            status = "PASS" if e.passed else "FAIL"
            out.write(f"{status} {e.check_id}: expected {e.expected}, got {e.actual} [{e.paper_anchor}]\n")
        failed = sum(not e.passed for e in entries)
        out.write(f"{len(entries) - failed}/{len(entries)} checks passed\n")
    return 0 if all(e.passed for e in entries) else 1


# -- parser --------------------------------------------------------------------


def _common(sub_default=argparse.SUPPRESS) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=sub_default)
    p.add_argument("--limit", type=int, default=sub_default)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="bqzeta", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=FORMATS, default=None, help="output format")
    parser.add_argument("--limit", type=int, default=None, help="table size / brute-force bound")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mc = sub.add_parser("mc", help="multicomplex arithmetic")
    mc_sub = p_mc.add_subparsers(dest="mc_op", required=True)
    for name in ("add", "mul"):
        p = mc_sub.add_parser(name, parents=[common])
        p.add_argument("a")
        p.add_argument("b")
    for name in ("inv", "idem", "zd"):
        p = mc_sub.add_parser(name, parents=[common])
        p.add_argument("a")
    p = mc_sub.add_parser("from-idem", parents=[common])
    p.add_argument("vector", help='JSON {"level": n, "components": [["re", "im"], ...]}')
    p = mc_sub.add_parser("idempotents", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p_field = sub.add_parser("field", help="quadratic field data")
    f_sub = p_field.add_subparsers(dest="field_op", required=True)
    p = f_sub.add_parser("info", parents=[common])
    p.add_argument("d", type=int)

    p_gauss = sub.add_parser("gauss", help="sums of two squares")
    g_sub = p_gauss.add_subparsers(dest="gauss_op", required=True)
    p = g_sub.add_parser("r2", parents=[common])
    p.add_argument("n", type=int)
    p = g_sub.add_parser("table", parents=[common])
    p.add_argument("N", type=int, nargs="?")

    p_series = sub.add_parser("series", help="Dirichlet coefficient tables")
    s_sub = p_series.add_subparsers(dest="series_op", required=True)
    p = s_sub.add_parser("coeffs", parents=[common])
    p.add_argument("--series", choices=("qi", "bqn"), default="qi")
    p.add_argument("--level", type=int, default=2)

    p_zeta = sub.add_parser("zeta", help="analytic evaluation")
    z_sub = p_zeta.add_subparsers(dest="zeta_op", required=True)
    p = z_sub.add_parser("eval", parents=[common])
    p.add_argument("--target", choices=("riemann", "beta", "qi", "bqn"), default="qi")
    p.add_argument("--level", type=int, default=2)
    p.add_argument("--s", required=True)
    p = z_sub.add_parser("funceq", parents=[common])
    p.add_argument("--level", type=int, default=2)
    p.add_argument("--grid", default="0.1:0.9:5,-10:10:5")
    z_sub.add_parser("constants", parents=[common])
    p = z_sub.add_parser("laurent", parents=[common])
    p.add_argument("--level", type=int, default=2)

    p_verify = sub.add_parser("verify", parents=[common], help="run the reproduction checks")
    p_verify.add_argument("--profile", choices=vf.PROFILES, default="quick")
    p_verify.add_argument("--workers", type=int, default=1, help="run checks on a thread pool")
    return parser


COMMANDS = {
    "mc": cmd_mc,
    "field": cmd_field,
    "gauss": cmd_gauss,
    "series": cmd_series,
    "zeta": cmd_zeta,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (BQZetaError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"bqzeta: error: {exc}", file=sys.stderr)
        return 2


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout; used by the tests."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
