"""Command line entry point: ``tautilt``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import schur
from .algebra import AlgebraError, block_decompose, cartan_matrix, center_basis
from .catalog import UnknownAlgebra, load_quiver, names, quiver_names, resolve
from .linalg import is_prime
from .mutation import (EXCEEDED, IncompleteGraph, enumerate_pairs, strata_by_quotients,
                       strata_counts)
from .screens import rad_square_zero_finite, screen

EXIT_OK, EXIT_DATA, EXIT_BUILD, EXIT_BUDGET = 0, 2, 3, 10


class Fail(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _prime(s: str) -> int:
    p = int(s)
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{s} is not prime")
    return p


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _globals() -> argparse.ArgumentParser:
    g = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    g.add_argument("--char", type=_prime, default=S, help="override the characteristic")
    g.add_argument("--budget", type=_positive, default=S, help="node cap for enumeration")
    g.add_argument("--jobs", type=_positive, default=S, help="worker processes")
    g.add_argument("--out", default=S, help="write the artifact to this file")
    g.add_argument("--format", choices=("json", "dot", "text"), default=S)
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _globals()
    ap = argparse.ArgumentParser(prog="tautilt", parents=[common],
                                 description="Support tau-tilting computations over F_p.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    alg = sub.add_parser("alg", help="inspect algebras").add_subparsers(dest="alg_cmd", required=True)
    show = alg.add_parser("show", parents=[common], help="dimension, Cartan matrix, centre, blocks")
    show.add_argument("algebra")
    alg.add_parser("list", parents=[common], help="catalog names")

    stt = sub.add_parser("stt", parents=[common], help="enumerate support tau-tilting pairs")
    stt.add_argument("algebra")
    stt.add_argument("--strata", action="store_true",
                     help="also count each support rank through vertex quotients")

    scr = sub.add_parser("screen", help="quiver-shape tests").add_subparsers(dest="scr_cmd", required=True)
    sq = scr.add_parser("quiver", parents=[common], help="screen a quiver JSON file")
    sq.add_argument("file")
    sa = scr.add_parser("alg", parents=[common], help="screen the quiver of an algebra")
    sa.add_argument("algebra")
    scr.add_parser("list", parents=[common], help="shipped quiver files")

    sch = sub.add_parser("schur", help="Schur algebra combinatorics").add_subparsers(dest="sch_cmd", required=True)
    c = sch.add_parser("character", parents=[common])
    c.add_argument("--p", type=_prime, required=True)
    c.add_argument("--r", type=_positive, required=True)
    c.add_argument("--k", type=int, required=True)
    q = sch.add_parser("quiver", parents=[common])
    q.add_argument("--p", type=_prime, required=True)
    q.add_argument("--r", type=_positive, required=True)
    q.add_argument("--dot", action="store_true")
    pc = sch.add_parser("pcore", parents=[common])
    pc.add_argument("--p", type=_prime, required=True)
    pc.add_argument("--partition", required=True)
    cl = sch.add_parser("classify", parents=[common])
    cl.add_argument("--p", type=int, required=True)
    cl.add_argument("--n", type=_positive, required=True)
    cl.add_argument("--r", type=_positive, required=True)
    tb = sch.add_parser("table", parents=[common])
    tb.add_argument("--p", type=int, required=True)
    tb.add_argument("--nmax", type=_positive, default=6)
    tb.add_argument("--rmax", type=_positive, default=23)
    return ap


def _emit(args, fmt: str, artifact: str, summary: str) -> None:
    """Artifact to --out (summary on stdout) or to stdout (summary on stderr)."""
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(artifact, encoding="utf-8")
        print(summary)
    elif fmt == "text":
        print(summary)
    else:
        print(summary, file=sys.stderr)
        sys.stdout.write(artifact)


def _load(args):
    try:
        return resolve(args.algebra, getattr(args, "char", None))
    except UnknownAlgebra as e:
        raise Fail(EXIT_DATA, f"unknown algebra: {e.args[0] if e.args else args.algebra}")
    except (OSError, json.JSONDecodeError, KeyError) as e:
        raise Fail(EXIT_DATA, f"cannot read algebra {args.algebra}: {e}")
    except AlgebraError as e:
        raise Fail(EXIT_BUILD, f"build failed for {args.algebra}: {e}")


def _matrix(m: np.ndarray) -> str:
    return "\n".join("  " + " ".join(f"{int(x):>3}" for x in row) for row in m)


def cmd_alg_show(args) -> int:
    a = _load(args)
    c = cartan_matrix(a)
    _, zr = center_basis(a)
    blocks = block_decompose(a)
    lines = [f"algebra {a.name} over F_{a.p}", f"dim {a.dim}",
             f"vertices {' '.join(a.vertices)}", "cartan", _matrix(c),
             f"center/rad dim {len(zr)}"]
    lines += [f"  {a.label_of(z)}" for z in zr]
    lines.append(f"blocks {len(blocks)}")
    lines += [f"  {' '.join(b.vertices)} (dim {b.dim})" for b in blocks]
    text = "\n".join(lines) + "\n"
    data = {"algebra": a.name, "char": a.p, "dim": a.dim, "vertices": list(a.vertices),
            "cartan": c.tolist(), "center_rad": [a.label_of(z) for z in zr],
            "blocks": [list(b.vertices) for b in blocks]}
    fmt = getattr(args, "format", "text")
    if fmt == "json" or getattr(args, "out", None):
        _emit(args, "json", json.dumps(data, indent=1) + "\n", text.rstrip("\n"))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_alg_list(args) -> int:
    print("\n".join(["A_<m>", "Lambda_<m>"] + names()))
    return EXIT_OK


def cmd_stt(args) -> int:
    a = _load(args)
    budget = getattr(args, "budget", 100_000)
    jobs = getattr(args, "jobs", 1)
    try:
        g = enumerate_pairs(a, budget, jobs)
    except AlgebraError as e:
        raise Fail(EXIT_BUILD, str(e))
    if g.complete:
        strata = strata_counts(g)
        summary = f"nodes={len(g)} status={g.status} strata={strata}"
    else:
        summary = f"nodes={len(g)} status={g.status} strata=?"
    if args.strata:
        parts = []
        for s in range(a.n + 1):
            try:
                v = strata_by_quotients(a, [s], budget, jobs)[s]
                parts.append(str(v))
            except IncompleteGraph:
                parts.append("?")
        summary += f"\nquotient strata=[{', '.join(parts)}]"
    fmt = getattr(args, "format", "json")
    artifact = g.to_dot() if fmt == "dot" else g.to_json()
    _emit(args, fmt, artifact, summary)
    return EXIT_BUDGET if g.status == EXCEEDED else EXIT_OK


def _screen_report(q) -> str:
    verdict, w = screen(q)
    if w is not None:
        lines = [f"INFINITE via {w.pattern}"]
        lines += [f"  {pv} -> {qv}" for pv, qv in w.mapping]
    elif verdict == "infinite":
        lines = ["INFINITE via radical-square-zero quotient"]
    else:
        lines = ["no tau-tilting infinite subquiver found",
                 f"radical-square-zero quotient finite: {rad_square_zero_finite(q)}"]
    return "\n".join(lines)


def cmd_screen_quiver(args) -> int:
    try:
        q = load_quiver(args.file)
    except (OSError, json.JSONDecodeError, KeyError) as e:
        raise Fail(EXIT_DATA, f"cannot read quiver {args.file}: {e}")
    print(_screen_report(q))
    return EXIT_OK


def cmd_screen_alg(args) -> int:
    a = _load(args)
    if a.quiver is None:
        raise Fail(EXIT_DATA, f"{a.name} has no quiver presentation")
    print(_screen_report(a.quiver))
    return EXIT_OK


def cmd_screen_list(args) -> int:
    print("\n".join(quiver_names()))
    return EXIT_OK


def cmd_schur(args) -> int:
    c = args.sch_cmd
    if c == "character":
        if not 0 <= args.k <= args.r // 2:
            raise Fail(EXIT_DATA, "need 0 <= k <= r/2")
        lam = schur.partition((args.r - args.k, args.k))
        chis = schur.young_character(args.p, args.r, args.k)
        print(f"ch Y^({schur.fmt(lam)}) = " + " + ".join(f"chi^({schur.fmt(m)})" for m in chis))
    elif c == "quiver":
        q, blocks = schur.s2r_quiver(args.p, args.r)
        if args.dot:
            lines = [f'graph "S(2,{args.r}) p={args.p}" {{']
            lines += [f'  "{v}";' for v in q.vertices]
            lines += [f'  "{u}" -- "{v}";' for u, v in
                      sorted(tuple(sorted(e, key=q.vertices.index)) for e in schur.edge_set(q))]
            lines.append("}")
            print("\n".join(lines))
        else:
            for b in blocks:
                bs = set(b)
                edges = sorted(tuple(sorted(e, key=q.vertices.index)) for e in schur.edge_set(q) if e <= bs)
                print(f"block {' '.join('(' + v + ')' for v in b)}")
                for u, v in edges:
                    print(f"  ({u}) <-> ({v})")
    elif c == "pcore":
        try:
            lam = schur.partition(args.partition)
        except ValueError as e:
            raise Fail(EXIT_DATA, str(e))
        print(schur.fmt(schur.p_core(lam, args.p)))
    elif c == "classify":
        try:
            v = schur.classify(args.p, args.n, args.r)
        except ValueError as e:
            raise Fail(EXIT_DATA, str(e))
        print(f"{v.describe()} [{v.rule}]")
    elif c == "table":
        try:
            sys.stdout.write(schur.table_text(args.p, args.nmax, args.rmax))
        except ValueError as e:
            raise Fail(EXIT_DATA, str(e))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        ("alg", "show"): cmd_alg_show, ("alg", "list"): cmd_alg_list,
        ("screen", "quiver"): cmd_screen_quiver, ("screen", "alg"): cmd_screen_alg,
        ("screen", "list"): cmd_screen_list,
    }
    try:
        if args.cmd == "stt":
            return cmd_stt(args)
        if args.cmd == "schur":
            return cmd_schur(args)
        sub = getattr(args, "alg_cmd", None) or getattr(args, "scr_cmd", None)
        return handlers[(args.cmd, sub)](args)
    except Fail as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
