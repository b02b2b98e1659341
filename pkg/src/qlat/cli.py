"""Command-line entry point ``qlat``."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .checks import GROUP_GENERATORS, REGISTRY, UnknownCheck, emit_json, group_bsgs, run_checks
from .exact import format_matrix, parse_matrix
from .lattices import LATTICES, Lattice, member, shortest_vectors
from .perm import factorize, format_factorization
from .quaternions import OMEGA, tau, tau_generators
from .tensor import fact1_matrices, rho2, rho4_basis, wf4_element



def _named_matrices() -> dict[str, callable]:
    named = {f"x{n}": (lambda n=n: fact1_matrices()[n - 1]) for n in range(1, 8)}
    named.update({f"e{n}": (lambda n=n: rho2(wf4_element(f"e{n}"))) for n in range(1, 5)})
    named.update({f"{y}{s}": (lambda s=s, y=y: rho4_basis(s, y)) for s in (1, 2, 3, 4) for y in "ij"})
    named.update({f"tau-{y}": (lambda y=y: tau_generators()[y]) for y in "ijk"})
    named["tau-omega"] = lambda: tau(OMEGA)
    named.update({f"basis-{k}": (lambda k=k: LATTICES[k]().basis) for k in LATTICES})
    return named


def _default_threads() -> int:
    env = os.environ.get("QLAT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _load_lattice(args) -> Lattice:
    if getattr(args, "basis", None):
        return Lattice(parse_matrix(Path(args.basis).read_text()))
    return LATTICES[args.lattice]()


def cmd_verify(args) -> int:
    selection = args.checks or ["all"]
    threads = args.threads if args.threads is not None else _default_threads()
    try:
        report = run_checks(selection, threads=threads)
    except UnknownCheck as exc:
        print(f"qlat verify: unknown check(s): {exc.args[0]}", file=sys.stderr)
        print(f"known checks: {', '.join(REGISTRY)}", file=sys.stderr)
        return 2
    print(report.to_text())
    if args.json:
        try:
            emit_json(report, args.json)
        except OSError as exc:
            print(f"qlat verify: cannot write {args.json}: {exc}", file=sys.stderr)
            return 1
    return 0 if report.overall else 1


def cmd_order(args) -> int:
    bsgs = group_bsgs(args.group)
    order = bsgs.order
    print(f"group: {args.group}")
    print(f"order: {order}")
    print(f"factorization: {format_factorization(factorize(order))}")
    print(f"base: {bsgs.base}")
    print(f"orbit sizes: {bsgs.orbit_sizes}")
    if args.emit_bsgs:
        Path(args.emit_bsgs).write_text(bsgs.to_text())
    return 0


def cmd_kissing(args) -> int:
    svs = shortest_vectors(_load_lattice(args))
    print(f"minimal norm: {svs.norm}")
    print(f"kissing number: {svs.count}")
    if args.out:
        Path(args.out).write_text(format_matrix(svs.vectors))
    return 0


def cmd_export(args) -> int:
    named = _named_matrices()
    if args.generator not in named:
        print(f"qlat export: unknown generator {args.generator!r}; choose from {', '.join(named)}",
              file=sys.stderr)
        return 2
    text = format_matrix(named[args.generator]())
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_member(args) -> int:
    lat = _load_lattice(args)
    v = parse_matrix(Path(args.vector).read_text())
    if 1 not in v.shape:
        print("qlat member: vector file must hold a 1 x n or n x 1 matrix", file=sys.stderr)
        return 2
    vec = v if v.rows == 1 else v.T
    if vec.cols != lat.dim:
        print(f"qlat member: vector has length {vec.cols}, lattice has dimension {lat.dim}",
              file=sys.stderr)
        return 2
    print("member" if member(lat, vec) else "not a member")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qlat", description=__doc__)
    p.add_argument("--version", action="version", version=f"qlat {__version__}")
    p.add_argument("-q", "--quiet", action="store_true", help="no progress messages on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("checks", nargs="*", metavar="CHECK",
                   help=f"check names or 'all' (default); one of: {', '.join(REGISTRY)}")
    v.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    v.add_argument("--threads", type=int, metavar="N",
                   help="worker processes for independent checks (default: $QLAT_THREADS or all cores)")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("order", help="certify a group order by Schreier-Sims")
    o.add_argument("--group", required=True, choices=sorted(GROUP_GENERATORS))
    o.add_argument("--emit-bsgs", metavar="PATH", help="write base and strong generators")
    o.set_defaults(func=cmd_order)

    for name, func, helptext in (("kissing", cmd_kissing, "enumerate minimal vectors"),
                                 ("member", cmd_member, "test lattice membership")):
        s = sub.add_parser(name, help=helptext)
        src = s.add_mutually_exclusive_group(required=True)
        src.add_argument("--lattice", choices=sorted(LATTICES))
        src.add_argument("--basis", metavar="FILE", help="basis rows in matrix text format")
        if name == "kissing":
            s.add_argument("--out", metavar="PATH", help="write the minimal vectors")
        else:
            s.add_argument("--vector", required=True, metavar="FILE")
        s.set_defaults(func=func)

    e = sub.add_parser("export", help="write a stored matrix in matrix text format")
    e.add_argument("--generator", required=True, metavar="NAME",
                   help="x1..x7, e1..e4, i1..j4, tau-i|j|k|omega, basis-f4, basis-bw16")
    e.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not logging.getLogger().handlers:
        logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                            format="qlat: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"qlat {args.command}: {exc}", file=sys.stderr)
        return 1
