"""Command-line front end (``pgmodular``).

Exit codes: 0 success, 2 bad input or parameters, 3 mathematical rejection.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__
from .ccalgebra import (
    build_cc,
    corner_radical_identity,
    fp_algebra_from_sc,
    quiver,
    radical,
    special_element_u,
    structure_constants,
    wedderburn,
)
from .errors import InputError, MathRejection
from .exactla import MatF, PrimeModulus, nullspace
from .incidence import (
    IncidenceStructure,
    SrdParams,
    check_srd,
    format_incidence,
    gen_doily,
    gen_grid,
    parse_incidence,
    point_graph,
)
from .pgtheory import (
    PgParams,
    bad_primes,
    classify_prime,
    frame_as,
    generic_prank,
    pg_spectrum,
    symbolic_radical,
)

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _params_digest(**kw) -> str:
    return _digest(json.dumps(kw, sort_keys=True).encode())


def _load(path: str) -> tuple[IncidenceStructure, str]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path} is not UTF-8 text") from exc
    return parse_incidence(text), _digest(raw)


def _vec(v) -> list[int]:
    return [int(x) for x in v]


def _srd_dict(params: SrdParams) -> dict[str, int]:
    names = ("s1", "s2", "a1", "b1", "a2", "b2", "N1", "P1", "N2", "P2")
    return dict(zip(names, params.as_tuple()))


def _pg_from_srd(params: SrdParams) -> PgParams:
    """Read pg(s,t,alpha) off an SRD whose two points share at most one block."""
    if (params.a1, params.b1, params.a2, params.b2) != (1, 0, 1, 0):
        raise InputError("incidence structure is not a partial geometry (intersection numbers must be 1 and 0)")
    return PgParams(params.s1 - 1, params.s2 - 1, params.P1)


# ---------------------------------------------------------------------------
# Commands


def cmd_pg_info(s: int, t: int, alpha: int, p: int | None = None) -> dict[str, Any]:
    params = PgParams(s, t, alpha)
    sp = pg_spectrum(params)
    result: dict[str, Any] = {
        "params": {"s": s, "t": t, "alpha": alpha},
        "spectrum": dict(zip(("v", "b", "k", "lam", "mu", "r", "sprime", "f", "g"), sp.as_tuple())),
        "frame": frame_as(params),
        "bad_primes": bad_primes(params),
    }
    if p is not None:
        p = PrimeModulus(p)
        rad = symbolic_radical(params, p)
        pr = generic_prank(params, p)
        result["prime"] = {
            "p": p,
            "case": classify_prime(params, p).value,
            "radical": {"dim": rad.dim, "generators": [g.value for g in rad.generators]},
            "prank": {"kind": pr.kind.value, "value": pr.value, "exceptional": pr.exceptional},
        }
    return result


def cmd_srd_check(D: IncidenceStructure) -> dict[str, Any]:
    params = check_srd(D)
    return {"n1": D.n1, "n2": D.n2, "params": _srd_dict(params), "params_tuple": list(params.as_tuple())}


def cmd_cc_modular(D: IncidenceStructure, p: int) -> dict[str, Any]:
    p = PrimeModulus(p)
    params = check_srd(D)
    sc = structure_constants(build_cc(D, params))
    alg = fp_algebra_from_sc(sc, p)
    rad = radical(alg)
    wd = wedderburn(alg, rad)
    qv = quiver(alg, rad, wd)
    result: dict[str, Any] = {
        "p": p,
        "params": _srd_dict(params),
        "structure_constants": sc.table.tolist(),
        "radical": {
            "dim": rad.dim,
            "power_dims": rad.power_dims,
            "loewy_length": rad.loewy_length,
            "basis": rad.basis.tolist(),
            "certified": rad.certified,
        },
        "wedderburn": {
            "components": [{"n": c.n, "f": c.f} for c in wd.components],
            "total_dim": wd.total_dim,
            "count": wd.count,
        },
        "quiver": {
            "vertices": qv.vertices,
            "arrows": [list(r) for r in qv.arrows],
            "arrow_total": qv.arrow_total,
            "gabriel_arrows": [list(r) for r in qv.gabriel_arrows],
            "cartan": [list(r) for r in qv.cartan],
            "block_dims": list(qv.block_dims),
            "projective_dims": list(qv.projective_dims),
            "loewy_layers": [list(r) for r in qv.loewy_layers],
            "idempotents": [_vec(e) for e in qv.idempotents],
            "idempotent_vertex": list(qv.idempotent_vertex),
            "orthogonal": qv.orthogonal,
            "complete": qv.complete,
        },
    }
    if p == 2:
        corners = {f: corner_radical_identity(alg, rad, f) for f in ("point", "block")}
        u = special_element_u(sc, 2)
        result["corner_identity"] = {
            f: {"holds": c.holds, "dim": c.corner_radical.dim, "basis": c.corner_radical.tolist()}
            for f, c in corners.items()
        }
        result["special_element"] = {
            "u": _vec(u),
            "nonzero": bool(u.any()),
            "square_zero": not alg.mul(u, u).any(),
            "in_radical": rad.basis.contains(u),
            "in_point_fiber": not u[3:].any(),
        }
    return result


def cmd_prank(D: IncidenceStructure | None, pg: PgParams | None, p: int, mode: str) -> dict[str, Any]:
    p = PrimeModulus(p)
    if mode == "direct":
        if D is None:
            raise InputError("direct mode needs an incidence file")
        params = check_srd(D)
        A = MatF(point_graph(D, params).adjacency, p)
        rank = A.rank()
        kernel = nullspace(A)
        return {"mode": mode, "p": p, "rank": rank, "order": A.rows, "kernel_dim": kernel.dim, "kernel": kernel.tolist()}
    if pg is None:
        pg = _pg_from_srd(check_srd(D))
    pr = generic_prank(pg, p)
    out: dict[str, Any] = {
        "mode": mode,
        "p": p,
        "params": {"s": pg.s, "t": pg.t, "alpha": pg.alpha},
        "kind": pr.kind.value,
        "rank": pr.value,
        "exceptional": pr.exceptional,
    }
    if pr.exceptional:
        out["note"] = "eigenvalues collide mod p; use --mode direct on an incidence file"
    return out


# ---------------------------------------------------------------------------
# Output


def _text_lines(value, prefix: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            lines.extend(_text_lines(value[key], f"{prefix}.{key}" if prefix else key))
        return lines
    if isinstance(value, list) and value and isinstance(value[0], dict):
        lines = []
        for i, item in enumerate(value):
            lines.extend(_text_lines(item, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix}: {json.dumps(value, separators=(',', ':'))}"]


def render(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return "\n".join(_text_lines(report)) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)

    parser = _Parser(prog="pgmodular", description="Modular adjacency algebras of strongly regular designs.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--out", metavar="PATH", default=None)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pg = sub.add_parser("pg", help="partial geometry arithmetic")
    pg_sub = pg.add_subparsers(dest="action", required=True, parser_class=_Parser)
    info = pg_sub.add_parser("info", parents=[common], help="spectrum, Frame number, prime behaviour")
    info.add_argument("--s", type=int, required=True)
    info.add_argument("--t", type=int, required=True)
    info.add_argument("--alpha", type=int, required=True)
    info.add_argument("--p", type=int)

    gen = sub.add_parser("gen", parents=[common], help="write a bundled incidence structure")
    gen.add_argument("name", choices=("doily", "grid"))
    gen.add_argument("--n", type=int)

    srd = sub.add_parser("srd", help="strongly regular design tools")
    srd_sub = srd.add_subparsers(dest="action", required=True, parser_class=_Parser)
    check = srd_sub.add_parser("check", parents=[common], help="verify the SRD conditions")
    check.add_argument("path")

    cc = sub.add_parser("cc", help="coherent configuration tools")
    cc_sub = cc.add_subparsers(dest="action", required=True, parser_class=_Parser)
    mod = cc_sub.add_parser("modular", parents=[common], help="radical, Wedderburn and quiver data mod p")
    mod.add_argument("path")
    mod.add_argument("--p", type=int, required=True)

    pr = sub.add_parser("prank", parents=[common], help="p-rank of the point-graph adjacency matrix")
    pr.add_argument("path", nargs="?")
    pr.add_argument("--s", type=int)
    pr.add_argument("--t", type=int)
    pr.add_argument("--alpha", type=int)
    pr.add_argument("--p", type=int, required=True)
    pr.add_argument("--mode", choices=("generic", "direct"), default="generic")
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[str, str, Any]:
    """Return (command echo, input digest, result payload); ``gen`` returns raw text."""
    if args.command == "pg":
        echo = f"pg info --s {args.s} --t {args.t} --alpha {args.alpha}" + (f" --p {args.p}" if args.p is not None else "")
        digest = _params_digest(s=args.s, t=args.t, alpha=args.alpha, p=args.p)
        return echo, digest, cmd_pg_info(args.s, args.t, args.alpha, args.p)
    if args.command == "gen":
        if args.name == "doily":
            if args.n is not None:
                raise InputError("gen doily takes no --n")
            D = gen_doily()
        else:
            if args.n is None:
                raise InputError("gen grid needs --n")
            try:
                D = gen_grid(args.n)
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        return "gen", "", format_incidence(D)
    if args.command == "srd":
        D, digest = _load(args.path)
        return f"srd check {args.path}", digest, cmd_srd_check(D)
    if args.command == "cc":
        PrimeModulus(args.p)
        D, digest = _load(args.path)
        return f"cc modular {args.path} --p {args.p}", digest, cmd_cc_modular(D, args.p)
    # prank
    PrimeModulus(args.p)
    given = [args.s, args.t, args.alpha]
    if args.path is not None and any(v is not None for v in given):
        raise InputError("give either an incidence file or --s/--t/--alpha, not both")
    if args.path is None:
        if any(v is None for v in given):
            raise InputError("prank needs an incidence file or all of --s, --t, --alpha")
        pg = PgParams(args.s, args.t, args.alpha)
        echo = f"prank --s {args.s} --t {args.t} --alpha {args.alpha} --p {args.p} --mode {args.mode}"
        return echo, _params_digest(s=args.s, t=args.t, alpha=args.alpha, p=args.p), cmd_prank(None, pg, args.p, args.mode)
    D, digest = _load(args.path)
    echo = f"prank {args.path} --p {args.p} --mode {args.mode}"
    return echo, digest, cmd_prank(D, None, args.p, args.mode)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        echo, digest, result = _dispatch(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MathRejection as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_MATH
    if isinstance(result, str):
        _emit(result, args.out)
        return EXIT_OK
    report = {"command": echo, "input_digest": digest, "result": result, "version": __version__}
    _emit(render(report, args.format), args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
