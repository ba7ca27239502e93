"""Command line front end.

Every pipeline is exposed as a subcommand with deterministic output in
either human or TSV form.  Exit codes: 0 success, 2 invalid input,
3 verification mismatch, 4 resource guard tripped.
"""

from __future__ import annotations

import argparse
import os
import sys

from .abelian import make_group
from .conjecture import predicted_decomposition, verify
from .errors import Sk1Error, TooLarge
from .genetic import genetic_basis_abelian
from .metacyclic import genetic_basis_metacyclic, make_metacyclic, sk1_metacyclic
from .ranks import rank_metacyclic, rank_square_abelian
from .sk1_abelian import DEFAULT_MAX_ORDER, EXHAUSTIVE, REPRESENTATIVES, sk1
from .snf import CyclicDecomposition

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_GUARD = 4


class UsageError(Exception):
    """Invalid input detected outside argparse's own checks."""


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(tok) for tok in text.split(",") if tok)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad orders list {text!r}") from None
    if not orders:
        raise argparse.ArgumentTypeError("orders list is empty")
    return orders


def _thread_cap() -> None:
    """Validate SK1_THREADS; all pipelines run single-threaded, so any
    positive cap is honoured trivially."""
    raw = os.environ.get("SK1_THREADS")
    if raw is None:
        return
    try:
        if int(raw) < 1:
            raise ValueError
    except ValueError:
        raise UsageError(f"SK1_THREADS must be a positive integer, got {raw!r}") from None


def _emit_decomposition(dec: CyclicDecomposition, fmt: str, prefix: str = "SK1") -> None:
    if fmt == "tsv":
        for d, m in dec.multiplicities().items():
            print(f"{d}\t{m}")
    else:
        print(f"{prefix} = {dec}")


def _cmd_abelian(args) -> int:
    G = make_group(args.prime, args.orders)
    dec = sk1(G, strategy=args.strategy, max_order=args.max_order)
    _emit_decomposition(dec, args.format)
    return EXIT_OK


def _cmd_metacyclic(args) -> int:
    G = make_metacyclic(args.prime, args.n)
    dec = sk1_metacyclic(G, max_order=args.max_order)
    _emit_decomposition(dec, args.format)
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    prediction = predicted_decomposition(args.prime, args.n)
    if not args.verify:
        _emit_decomposition(prediction.decomposition(), args.format, prefix="predicted SK1")
        return EXIT_OK
    G = make_group(args.prime, [args.prime**args.n] * 2)
    dec = sk1(G, strategy=args.strategy, max_order=args.max_order)
    report = verify(args.prime, args.n, dec)
    if args.format == "human":
        print("i\tpredicted\tcomputed")
    for i in sorted(set(report.predicted) | set(report.computed)):
        print(f"{i}\t{report.predicted.get(i, 0)}\t{report.computed.get(i, 0)}")
    if args.format == "human":
        print("MATCH" if report.match else "MISMATCH")
    return EXIT_OK if report.match else EXIT_MISMATCH


def _cmd_rank(args) -> int:
    if args.family == "abelian":
        print(rank_square_abelian(args.prime, args.n))
    else:
        print(rank_metacyclic(args.prime, args.n))
    return EXIT_OK


def _cmd_basis(args) -> int:
    if args.orders is not None:
        G = make_group(args.prime, args.orders)
        for S in genetic_basis_abelian(G):
            coeffs = ",".join(str(c) for c in S.hom.coeffs)
            if args.format == "tsv":
                print(f"{S.index}\t{coeffs}")
            else:
                print(f"index {S.index}  tuple {coeffs}")
    else:
        G = make_metacyclic(args.prime, args.n)
        for S in genetic_basis_metacyclic(G):
            index = G.order // len(S.members)
            if args.format == "tsv":
                print(f"{S.label}\t{index}\t{S.quotient_order}")
            else:
                print(f"index {index}  quotient {S.quotient_order}  {S.label}")
    return EXIT_OK


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["human", "tsv"], default="human")


def _add_guard(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--max-order",
        type=int,
        default=DEFAULT_MAX_ORDER,
        help="group-order guard for exhaustive enumeration modes",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sk1",
        description="Torsion parts of Whitehead groups of odd p-groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ab = sub.add_parser("abelian", help="SK1 of Z[G] for an abelian p-group")
    p_ab.add_argument("--prime", type=int, required=True)
    p_ab.add_argument(
        "--orders",
        type=_parse_orders,
        required=True,
        help="comma-separated cyclic factor orders, e.g. 27,27",
    )
    p_ab.add_argument(
        "--strategy", choices=[REPRESENTATIVES, EXHAUSTIVE], default=REPRESENTATIVES
    )
    _add_guard(p_ab)
    _add_format(p_ab)
    p_ab.set_defaults(func=_cmd_abelian)

    p_mc = sub.add_parser(
        "metacyclic", help="SK1 of Z[G] for the modular metacyclic group of order p^n"
    )
    p_mc.add_argument("--prime", type=int, required=True)
    p_mc.add_argument("--n", type=int, required=True)
    _add_guard(p_mc)
    _add_format(p_mc)
    p_mc.set_defaults(func=_cmd_metacyclic)

    p_cj = sub.add_parser(
        "conjecture", help="predicted SK1 for the square of C_{p^n}, optionally verified"
    )
    p_cj.add_argument("--prime", type=int, required=True)
    p_cj.add_argument("--n", type=int, required=True)
    p_cj.add_argument("--verify", action="store_true", help="compare against the computed SK1")
    p_cj.add_argument(
        "--strategy", choices=[REPRESENTATIVES, EXHAUSTIVE], default=REPRESENTATIVES
    )
    _add_guard(p_cj)
    _add_format(p_cj)
    p_cj.set_defaults(func=_cmd_conjecture)

    p_rk = sub.add_parser("rank", help="free rank of the Whitehead group")
    p_rk.add_argument("--family", choices=["abelian", "metacyclic"], required=True)
    p_rk.add_argument("--prime", type=int, required=True)
    p_rk.add_argument(
        "--n", type=int, required=True, help="abelian means the square of C_{p^n}"
    )
    p_rk.set_defaults(func=_cmd_rank)

    p_bs = sub.add_parser("basis", help="list the genetic basis")
    p_bs.add_argument("--prime", type=int, required=True)
    which = p_bs.add_mutually_exclusive_group(required=True)
    which.add_argument("--orders", type=_parse_orders, help="abelian group factor orders")
    which.add_argument("--n", type=int, help="modular metacyclic group of order p^n")
    _add_format(p_bs)
    p_bs.set_defaults(func=_cmd_basis)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _thread_cap()
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Sk1Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
