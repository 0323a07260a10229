"""Command-line surface: qyoung verify | sample | schur-weyl | sigma-expand |
sigma-product | qchar-matrix | cumulant.

Rationals are accepted as "a/b" or decimal strings (decimals are converted
exactly); partitions use the bracket format "[3,1]".  Exit codes: 0 on
success, 1 on failed verification assertions, 2 on argument errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .cumulants import brillinger_check, disjoint_cumulant, identity_cumulant, joint_cumulant
from .harness import (
    MCConfig,
    SCHEMA_VERSION,
    mc_run,
    schur_weyl_check,
    verify_exact_suite,
)
from .measures import QParameter
from .observables import sigma_k_in_p, sigma_product
from .partitions import Partition
from .qcharacters import qchar_transition
from .sampling import sample_qplancherel_parts
from .words import sample_schur_weyl_parts


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or a decimal string exactly."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def parse_q(text: str) -> Fraction:
    q = parse_rational(text)
    if q == 1:
        raise argparse.ArgumentTypeError("q=1 unsupported (classical Plancherel is out of scope)")
    if q <= 0:
        raise argparse.ArgumentTypeError("q must be positive")
    return q


def parse_q_list(text: str) -> list[Fraction]:
    return [parse_q(tok) for tok in text.split(",") if tok]


def parse_partition_arg(text: str) -> Partition:
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_stats(text: str) -> tuple[str, ...]:
    """Parse "rows:3,p:2,3,sigma:2" into canonical per-statistic specs.

    A token containing ':' opens a group; bare numbers extend the current
    group.  "rows:k" expands to row:1..row:k.
    """
    specs: list[str] = []
    current: str | None = None
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ":" in tok:
            kind, _, first = tok.partition(":")
            kind = kind.strip().lower()
            if kind not in ("rows", "row", "p", "sigma", "qchar"):
                raise argparse.ArgumentTypeError(f"unknown statistic kind {kind!r}")
            current = kind
            values = [first] if first else []
        else:
            if current is None:
                raise argparse.ArgumentTypeError(f"statistic value {tok!r} without a kind")
            values = [tok]
        for v in values:
            if not v.strip().isdigit():
                raise argparse.ArgumentTypeError(f"bad statistic index {v!r}")
            k = int(v)
            if current == "rows":
                specs.extend(f"row:{i}" for i in range(1, k + 1))
            else:
                kindname = "row" if current == "row" else current
                specs.append(f"{kindname}:{k}")
    if not specs:
        raise argparse.ArgumentTypeError("empty statistics list")
    return tuple(specs)


def _fraction_str(x: Fraction) -> str:
    return str(x)


def _write_output(payload: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


def _fresh_seed() -> int:
    return int(np.random.SeedSequence().entropy % (2**63))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qyoung",
        description="Random Young diagrams under q-Plancherel and Schur-Weyl measures: "
        "exact verification suites and seeded Monte-Carlo estimation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the exact identity suite")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--q", type=parse_q_list, default=[Fraction(1, 2), Fraction(2, 3)],
                   help='comma-separated rationals, e.g. "1/2,3/2"')
    p.add_argument("--out", default=None)

    p = sub.add_parser("sample", help="draw diagrams; CSV dump or JSON statistics report")
    p.add_argument("--measure", choices=["qplancherel", "schur-weyl"], default="qplancherel")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=parse_q, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--c", type=parse_rational, default=None)
    p.add_argument("--alpha", type=parse_rational, default=None)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--mode", choices=["exact", "fast"], default="fast")
    p.add_argument("--stats", type=parse_stats, default=None,
                   help='e.g. "rows:3,p:2,3" (rows 1..3 plus power sums 2 and 3)')
    p.add_argument("--out", default=None)

    p = sub.add_parser("schur-weyl", help="desk-scale rectangular-shape checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=parse_rational, default=Fraction(1))
    p.add_argument("--alpha", type=parse_rational, default=Fraction(2, 5))
    p.add_argument("--eta", type=parse_rational, default=Fraction(1, 5))
    p.add_argument("--epsilon", type=parse_rational, default=Fraction(1, 20))
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("sigma-expand", help="expand Sigma_k in the power-sum basis")
    p.add_argument("k", type=int)

    p = sub.add_parser("sigma-product", help="expand Sigma_mu * Sigma_nu in the Sigma basis")
    p.add_argument("mu", type=parse_partition_arg)
    p.add_argument("nu", type=parse_partition_arg)

    p = sub.add_parser("qchar-matrix", help="transition matrix between Sigma_{rho,q} and Sigma_nu")
    p.add_argument("k", type=int)
    p.add_argument("q", type=parse_q)
    p.add_argument("--direction", choices=["to_classical", "from_classical"],
                   default="to_classical")

    p = sub.add_parser("cumulant", help="joint, disjoint or identity cumulants of Sigma's")
    p.add_argument("--kind", choices=["joint", "disjoint", "identity"], required=True)
    p.add_argument("--indices", required=True, help='comma-separated, e.g. "2,3"')
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--q", type=parse_q, default=Fraction(1, 2))

    return parser


def _cmd_verify(args) -> int:
    report = verify_exact_suite(args.n_max, args.q)
    payload = json.dumps(report.to_dict(), indent=2)
    _write_output(payload, args.out)
    if not report.ok:
        for check in report.checks:
            if not check.passed:
                print(f"FAILED {check.name}: {check.detail}", file=sys.stderr)
        return 1
    return 0


def _cmd_sample(args, parser) -> int:
    seed = args.seed if args.seed is not None else _fresh_seed()
    if args.measure == "qplancherel":
        if args.q is None:
            parser.error("--q is required for the q-Plancherel measure")
        qp = QParameter.exact(args.q) if args.mode == "exact" else QParameter.fast(float(args.q))
    else:
        if args.N is None and (args.c is None or args.alpha is None):
            parser.error("--N or both --c and --alpha are required for schur-weyl")
        qp = QParameter.exact(args.q) if args.q is not None else None

    if args.stats:
        config = MCConfig(
            n=args.n, samples=args.samples, seed=seed, measure=args.measure,
            q=QParameter.exact(args.q) if args.q is not None else None,
            N=args.N, c=args.c, alpha=args.alpha, workers=args.workers,
            mode=args.mode, statistics=args.stats,
        )
        report = mc_run(config)
        _write_output(report.to_json(indent=2), args.out)
        return 0

    lines = ["seed,index,lambda"]
    for i in range(args.samples):
        if args.measure == "qplancherel":
            parts = sample_qplancherel_parts(args.n, qp, seed, stream=i)
        else:
            N = args.N if args.N is not None else max(
                1, round(float(args.c) * float(args.n) ** float(args.alpha))
            )
            parts = sample_schur_weyl_parts(args.n, N, seed, stream=i)
        lam = "[" + ",".join(str(int(x)) for x in parts) + "]"
        lines.append(f"{seed},{i},{lam}")
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_schur_weyl(args) -> int:
    seed = args.seed if args.seed is not None else _fresh_seed()
    report = schur_weyl_check(
        args.n, args.c, args.alpha, args.eta, args.samples, seed, epsilon=args.epsilon
    )
    _write_output(json.dumps(report, indent=2), args.out)
    return 0


def _cmd_sigma_expand(args) -> int:
    if args.k < 1:
        print("k must be >= 1", file=sys.stderr)
        return 2
    expansion = sigma_k_in_p(args.k)
    out = {
        str(idx): _fraction_str(c)
        for idx, c in sorted(expansion.coeffs.items(), key=lambda kv: (-kv[0].size, kv[0].parts))
    }
    print(json.dumps({"schema_version": SCHEMA_VERSION, "sigma": args.k, "p_expansion": out}, indent=2))
    return 0


def _cmd_sigma_product(args) -> int:
    combo = sigma_product(args.mu, args.nu)
    out = {
        str(idx): _fraction_str(c)
        for idx, c in sorted(combo.coeffs.items(), key=lambda kv: (-kv[0].size, kv[0].parts))
    }
    print(json.dumps(
        {"schema_version": SCHEMA_VERSION, "mu": str(args.mu), "nu": str(args.nu),
         "sigma_expansion": out},
        indent=2,
    ))
    return 0


def _cmd_qchar_matrix(args) -> int:
    matrix = qchar_transition(args.k, args.q, args.direction)
    out = {
        str(rho): {str(nu): _fraction_str(c) for nu, c in sorted(row.items(), key=lambda kv: kv[0].parts)}
        for rho, row in sorted(matrix.items(), key=lambda kv: kv[0].parts)
    }
    print(json.dumps(
        {"schema_version": SCHEMA_VERSION, "k": args.k, "q": _fraction_str(args.q),
         "direction": args.direction, "matrix": out},
        indent=2,
    ))
    return 0


def _cmd_cumulant(args, parser) -> int:
    try:
        indices = [int(tok) for tok in args.indices.split(",") if tok]
    except ValueError:
        parser.error(f"bad indices {args.indices!r}")
    if not indices or any(i < 1 for i in indices):
        parser.error("indices must be positive integers")
    qp = QParameter.exact(args.q)
    payload: dict = {
        "schema_version": SCHEMA_VERSION,
        "kind": args.kind,
        "indices": indices,
    }
    if args.kind == "identity":
        combo = identity_cumulant(indices)
        payload["sigma_expansion"] = {
            str(idx): _fraction_str(c)
            for idx, c in sorted(combo.coeffs.items(), key=lambda kv: (-kv[0].size, kv[0].parts))
        }
    elif args.kind == "disjoint":
        payload.update(n=args.n, q=_fraction_str(args.q))
        value = disjoint_cumulant([Partition((i,)) for i in indices], args.n, qp)
        payload["value"] = _fraction_str(value)
    else:
        payload.update(n=args.n, q=_fraction_str(args.q))
        lhs, rhs = brillinger_check(indices, args.n, qp)
        payload["value"] = _fraction_str(lhs)
        payload["brillinger_rhs"] = _fraction_str(rhs)
        payload["brillinger_ok"] = lhs == rhs
    print(json.dumps(payload, indent=2))
    return 0


def parse_and_dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "sample":
        return _cmd_sample(args, parser)
    if args.command == "schur-weyl":
        return _cmd_schur_weyl(args)
    if args.command == "sigma-expand":
        return _cmd_sigma_expand(args)
    if args.command == "sigma-product":
        return _cmd_sigma_product(args)
    if args.command == "qchar-matrix":
        return _cmd_qchar_matrix(args)
    if args.command == "cumulant":
        return _cmd_cumulant(args, parser)
    parser.error(f"unknown command {args.command!r}")
    return 2


def main(argv=None) -> int:
    return parse_and_dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
