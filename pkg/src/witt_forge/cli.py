"""Command line interface: ``witt-forge <group> <command> ...``.

All numbers are read and written as exact decimal or ``a/b`` strings. Commands
that answer a yes/no question exit 1 when the answer is no; usage and
capacity errors exit 2.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import bigwitt as bw
from . import cache
from . import ptypical as pt
from . import totalpos as tp
from .partitions import DEFAULT_DEGREE_BOUND, CapacityError
from .symfunc import (
    BASES,
    _frac,
    coproduct_add,
    coproduct_mul,
    is_monomial_positive,
    is_schur_positive,
    parse_symfunc,
    plethysm,
    tensor_to_basis_coeffs,
    to_json,
)
from .verify import CHECKS, SCHEMA, run_paper_suite

log = logging.getLogger("witt_forge")


class UsageError(Exception):
    pass


def _emit(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}, indent=2))


def _fracs(text: str) -> list:
    try:
        return [_frac(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad number list {text!r}: {exc}") from exc


def _bound(args) -> int:
    return args.max_degree if args.max_degree is not None else DEFAULT_DEGREE_BOUND


def _sf(args, text: str):
    try:
        return parse_symfunc(text, _bound(args))
    except CapacityError:
        raise
    except ValueError as exc:
        raise UsageError(f"bad expression {text!r}: {exc}") from exc


def _witt(text: str, norm: str = "--") -> bw.WittVector:
    """``ghost:1,2,3`` (default when no prefix), ``series:1,a1,a2,...`` or ``witt:t1,t2,...``."""
    kind, _, body = text.partition(":") if ":" in text else ("ghost", "", text)
    norm = norm or "--"  # argparse drops a literal "--" value
    vals = _fracs(body)
    if not vals:
        raise UsageError("empty Witt vector")
    if kind == "ghost":
        return bw.from_ghost(vals)
    if kind == "series":
        return bw.from_series(vals, norm)
    if kind == "witt":
        return bw.from_witt_coords(vals)
    raise UsageError(f"unknown Witt vector form {kind!r}; use ghost:, series: or witt:")


def _tensor_json(coeffs: dict) -> list:
    return [{"left": list(a), "right": list(b), "coef": str(c)} for (a, b), c in coeffs.items()]


# ---------------------------------------------------------------------------
# command handlers; each returns an exit code


def cmd_verify(args) -> int:
    names = None if args.all else args.check
    if names:
        unknown = [n for n in names if n not in CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(sorted(CHECKS))}")
    path = cache.resolve_path(args.cache_path)
    cache.load(path, args.max_degree)
    reports = run_paper_suite(names, max_degree=args.max_degree, slow=args.slow)
    try:
        cache.save(path, _bound(args))
    except OSError as exc:
        log.warning("could not write cache %s: %s", path, exc)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(f"{r.status.upper():4}  {r.name}  ({r.seconds:.2f} s)")
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


def cmd_sf_convert(args) -> int:
    f = _sf(args, args.expr)
    _emit(to_json(f, args.to))
    return 0


def cmd_sf_multiply(args) -> int:
    f = _sf(args, args.left) * _sf(args, args.right)
    _emit(to_json(f, args.to))
    return 0


def cmd_sf_plethysm(args) -> int:
    f = plethysm(_sf(args, args.outer), _sf(args, args.inner))
    _emit(to_json(f, args.to))
    return 0


def cmd_sf_coproduct(args) -> int:
    f = _sf(args, args.expr)
    T = coproduct_add(f) if args.kind == "add" else coproduct_mul(f)
    coeffs = tensor_to_basis_coeffs(T, args.to)
    _emit({"basis": args.to, "kind": args.kind, "terms": _tensor_json(coeffs)})
    return 0


def cmd_sf_positivity(args) -> int:
    f = _sf(args, args.expr)
    s = is_schur_positive(f)
    m = is_monomial_positive(f)
    out = {"schur_positive": s.ok, "monomial_positive": m.ok, "integral": s.integral}
    if not s.ok:
        out["schur_witness"] = {"partition": list(s.witness), "coef": str(s.value)}
    if not m.ok:
        out["monomial_witness"] = {"partition": list(m.witness), "coef": str(m.value)}
    _emit(out)
    return 0 if s.ok else 1


def cmd_witt_binary(args) -> int:
    x, y = _witt(args.x, args.norm), _witt(args.y, args.norm)
    z = x + y if args.command == "add" else x * y
    _emit(bw.to_json(z))
    return 0


def cmd_witt_ghost(args) -> int:
    x = _witt(args.x, args.norm)
    _emit(bw.to_json(x))
    return 0


def cmd_witt_series(args) -> int:
    x = _witt(args.x, args.norm)
    _emit({"normalization": args.norm or "--", "series": [str(c) for c in bw.to_series(x, args.norm or "--")]})
    return 0


def cmd_witt_coords(args) -> int:
    x = _witt(args.x, args.norm)
    _emit({"witt": [str(c) for c in bw.witt_coords(x)]})
    return 0


def cmd_witt_teich(args) -> int:
    a = _frac(args.a)
    x = bw.anti_teichmuller(a, args.n) if args.anti else bw.teichmuller(a, args.n)
    _emit(bw.to_json(x))
    return 0


def cmd_witt_member(args) -> int:
    x = _witt(args.x, args.norm)
    dom = bw.Domain.parse(args.domain)
    v = bw.member_WSch(x, dom) if args.schur else bw.member_W(x, dom)
    out = {"member": v.ok, "domain": dom.value, "basis": "s" if args.schur else "m"}
    if not v.ok:
        out["witness"] = list(v.witness)
        out["value"] = str(v.value)
    _emit(out)
    return 0 if v.ok else 1


def _ptyp(args, text: str) -> pt.PTypGhost:
    vals = _fracs(text)
    if len(vals) != args.k + 1:
        raise UsageError(f"a length-{args.k} p-typical ghost vector has {args.k + 1} components, got {len(vals)}")
    return pt.PTypGhost(args.p, args.k, tuple(vals))


def cmd_pt_member(args) -> int:
    v = pt.member(_ptyp(args, args.ghost), bw.Domain.parse(args.domain))
    out = {"member": v.ok}
    if not v.ok:
        out["witness"] = list(v.witness)
        out["value"] = str(v.value)
    _emit(out)
    return 0 if v.ok else 1


def cmd_pt_binary(args) -> int:
    x, y = _ptyp(args, args.x), _ptyp(args, args.y)
    w = pt.add(x, y) if args.command == "add" else pt.mul(x, y)
    _emit(pt.to_json(w))
    return 0


def cmd_pt_grid(args) -> int:
    _emit(pt.to_json(pt.ghost_to_grid(_ptyp(args, args.ghost))))
    return 0


def cmd_pt_basis(args) -> int:
    rep = pt.verify_basis_lemma(args.p, args.k, args.degree)
    _emit(rep.to_dict())
    return 0 if rep.independent else 1


def _series_arg(text: str) -> tp.TruncSeries:
    vals = _fracs(text)
    if len(vals) < 2:
        raise UsageError("give at least 1,a_1")
    return tp.TruncSeries.from_poly(vals)


def cmd_tnn_check(args) -> int:
    v = tp.toeplitz_minors_nonneg(_series_arg(args.coeffs), args.order)
    out = {"totally_nonnegative": v.ok, "order": args.order, "window": v.details["window"], "minors_checked": v.details["checked"]}
    if not v.ok:
        out["witness"] = {"rows": list(v.witness[0]), "cols": list(v.witness[1]), "value": str(v.value)}
    _emit(out)
    return 0 if v.ok else 1


def cmd_tnn_roots(args) -> int:
    s = _series_arg(args.coeffs)
    v = tp.nonpositive_real_roots(s)
    out = {"in_W_N": v.ok, "degree": v.details["degree"], "negative_roots": v.details["negative_roots"]}
    factors = tp.linear_factors_nat(s)
    if factors is not None:
        out["linear_factors"] = factors
    _emit(out)
    return 0 if v.ok else 1


def cmd_tnn_edrei(args) -> int:
    s = tp.edrei_thoma_truncation(_frac(args.gamma), _fracs(args.alpha), _fracs(args.beta), args.n)
    _emit({"coeffs": [str(c) for c in s.as_list()]})
    return 0


# ---------------------------------------------------------------------------


def _add_common(parser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False, help="JSON output")
    parser.add_argument("--max-degree", type=int, default=d, help="degree bound for symmetric function work")
    parser.add_argument("--slow", action="store_true", default=argparse.SUPPRESS if suppress else False, help="include the degree-25 check")
    parser.add_argument("--cache-path", default=d, help=f"column cache file (env {cache.ENV_VAR})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="witt-forge", description=__doc__.splitlines()[0])
    _add_common(parser, suppress=False)
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group_parsers, name, func, help_):
        p = group_parsers.add_parser(name, help=help_)
        _add_common(p, suppress=True)
        p.set_defaults(func=func, command=name)
        return p

    p = groups.add_parser("verify", help="run the built-in verification checks")
    _add_common(p, suppress=True)
    p.add_argument("--all", action="store_true", help="run every check (the default)")
    p.add_argument("--check", action="append", metavar="NAME", help=f"one of: {', '.join(sorted(CHECKS))}")
    p.set_defaults(func=cmd_verify, command="verify")

    tags = sorted(BASES)
    sf = groups.add_parser("sf", help="symmetric functions").add_subparsers(dest="command", required=True)
    p = sub(sf, "convert", cmd_sf_convert, "expand in a basis")
    p.add_argument("--expr", required=True)
    p.add_argument("--to", choices=tags, default="s")
    p = sub(sf, "multiply", cmd_sf_multiply, "product of two expressions")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--to", choices=tags, default="s")
    p = sub(sf, "plethysm", cmd_sf_plethysm, "outer o inner")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--to", choices=tags, default="s")
    p = sub(sf, "coproduct", cmd_sf_coproduct, "additive or multiplicative coproduct")
    p.add_argument("--expr", required=True)
    p.add_argument("--kind", choices=("add", "mul"), default="add")
    p.add_argument("--to", choices=tags, default="s")
    p = sub(sf, "positivity", cmd_sf_positivity, "Schur and monomial positivity")
    p.add_argument("--expr", required=True)

    witt = groups.add_parser("witt", help="big Witt vectors").add_subparsers(dest="command", required=True)
    norm_help = "series normalization: -- (default, sum x(h_i) t^i), ++, +-, -+"
    for name, func in (("add", cmd_witt_binary), ("mul", cmd_witt_binary)):
        p = sub(witt, name, func, f"{name} two vectors")
        p.add_argument("--x", required=True, help="ghost:g1,..,gn | series:1,c1,..,cn | witt:t1,..,tn")
        p.add_argument("--y", required=True)
        p.add_argument("--norm", default="--", help=norm_help)
    for name, func, help_ in (
        ("ghost", cmd_witt_ghost, "ghost components"),
        ("series", cmd_witt_series, "series coefficients"),
        ("coords", cmd_witt_coords, "Witt coordinates"),
    ):
        p = sub(witt, name, func, help_)
        p.add_argument("--x", required=True)
        p.add_argument("--norm", default="--", help=norm_help)
    p = sub(witt, "teich", cmd_witt_teich, "Teichmuller or anti-Teichmuller vector")
    p.add_argument("--a", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--anti", action="store_true")
    p = sub(witt, "member", cmd_witt_member, "membership in W(A) or W_Sch(A)")
    p.add_argument("--x", required=True)
    p.add_argument("--domain", default="nat")
    p.add_argument("--schur", action="store_true", help="test the Schur model instead of the monomial one")
    p.add_argument("--norm", default="--", help=norm_help)

    ptg = groups.add_parser("ptypical", help="p-typical Witt vectors").add_subparsers(dest="command", required=True)

    def pk(p):
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--k", type=int, required=True)

    p = sub(ptg, "member", cmd_pt_member, "grid membership")
    pk(p)
    p.add_argument("--ghost", required=True)
    p.add_argument("--domain", default="nat")
    for name in ("add", "mul"):
        p = sub(ptg, name, cmd_pt_binary, f"{name} two ghost vectors, grid output")
        pk(p)
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)
    p = sub(ptg, "grid", cmd_pt_grid, "grid coordinates of a ghost vector")
    pk(p)
    p.add_argument("--ghost", required=True)
    p = sub(ptg, "verify-basis", cmd_pt_basis, "check the monomial basis up to a degree")
    pk(p)
    p.add_argument("--degree", type=int, required=True)

    tnn = groups.add_parser("tnn", help="total nonnegativity").add_subparsers(dest="command", required=True)
    p = sub(tnn, "check", cmd_tnn_check, "Toeplitz minors")
    p.add_argument("--coeffs", required=True, help="1,a1,...,an")
    p.add_argument("--order", type=int, default=4)
    p = sub(tnn, "roots", cmd_tnn_roots, "membership in W(N) for an integer polynomial")
    p.add_argument("--coeffs", required=True)
    p = sub(tnn, "edrei", cmd_tnn_edrei, "truncated Edrei-Thoma series")
    p.add_argument("--gamma", default="0")
    p.add_argument("--alpha", default="")
    p.add_argument("--beta", default="")
    p.add_argument("--n", type=int, required=True)
    return parser


# options whose values may legitimately start with "-" (expressions, number lists)
_VALUE_OPTIONS = {"--expr", "--left", "--right", "--outer", "--inner", "--x", "--y", "--ghost", "--coeffs", "--alpha", "--beta", "--gamma", "--a", "--norm"}


def _glue_values(argv: list) -> list:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1] not in ("-h", "--help"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(_glue_values(list(sys.argv[1:] if argv is None else argv)))
    if args.max_degree is not None and args.max_degree < 1:
        parser.error("--max-degree must be positive")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
