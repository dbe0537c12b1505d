"""Command line front end: tables, enumerations, and verification suites.

Exit codes: 0 on success, 1 when a verification suite finds
counterexamples, 2 on usage errors. All randomized suites run with a
fixed documented default seed unless --seed is given.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import hilbert_function
from .hodgeideals import (
    IdealWeightSet,
    hodge_ideal_exponents,
    in_Fk_Sdet,
    in_hodge_ideal,
    parse_ideal_descriptor,
    verify_equivalence,
)
from .matrixspace import (
    MatrixSpace,
    Stratum,
    codim_stratum,
    dim_stratum,
    local_cohomology_degree,
)
from .mhmweights import (
    filtration_support_check,
    generation_level_Sdet,
    local_cohomology_weight,
    local_weight_ledger_check,
    square_start_levels_consistency,
    square_weight_layer,
    start_level,
)
from .oracle import RankConstrainedSampler, dcep_cross_validation
from .qseries import (
    DecompositionTable,
    closed_form_OYp,
    pushforward_structure_checks,
    pushforward_DpY,
    pushforward_prefactor,
    solve_pushforward_OYp,
    verify_qbinomial_identity,
)
from .reporting import VerificationReport
from .repsets import classify, parse_descriptor
from .weights import WeightBox, dominant_tuples, leq, partitions_of, strip_zeros

SCHEMA = "detl-hodge/1"
DEFAULT_SEED = 1729


def _payload(command: str, **fields) -> dict:
    out = {"schema": SCHEMA, "command": command}
    out.update(fields)
    return out


def _print_json(payload: dict):
    print(json.dumps(payload))


def _parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse weight {text!r}") from None


def _fmt_weight(lam) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


def _minimal_members(space: MatrixSpace, k: int) -> list[tuple[int, ...]]:
    # Minimal partitions in the k-th Hodge ideal weight set. Any minimal
    # member has largest part at most the largest exponent (shrinking a
    # larger first part keeps every inequality).
    n = space.n
    cap = max([0, *hodge_ideal_exponents(k, space)])
    members = [
        mu
        for mu in dominant_tuples(n, 0, cap)
        if in_hodge_ideal(mu, k, space)
    ]
    return sorted(
        mu
        for mu in members
        if not any(other != mu and leq(other, mu) for other in members)
    )


def cmd_hodge_ideal(args) -> int:
    space = MatrixSpace(args.n, args.n)
    exponents = hodge_ideal_exponents(args.k, space)
    unit = all(e <= 0 for e in exponents)
    minimal = _minimal_members(space, args.k)
    members = None
    if args.box is not None:
        ideal = IdealWeightSet(space, "HodgeIdeal", param=args.k)
        members = ideal.members(args.box)

    if args.format == "json":
        payload = _payload(
            "hodge-ideal",
            n=args.n,
            k=args.k,
            exponents=[{"p": p, "e": e} for p, e in enumerate(exponents, start=1)],
            unit_ideal=unit,
            minimal_generators=[list(mu) for mu in minimal],
        )
        if members is not None:
            payload["members"] = [list(mu) for mu in members]
        _print_json(payload)
        return 0

    print(f"Hodge ideal I_{args.k} of the determinant on {space} matrices")
    if exponents:
        print("symbolic-power exponents by minor size p:")
        for p, e in enumerate(exponents, start=1):
            print(f"  p={p}: e={e}")
    if unit:
        print("unit ideal (every exponent is <= 0)")
    elif args.k == 2:
        print(f"note: I_2 = J_{args.n - 1}, the ideal of {args.n - 1}x{args.n - 1} minors")
    print(
        "minimal generator weights: "
        + (", ".join(_fmt_weight(strip_zeros(mu)) or "()" for mu in minimal))
    )
    if members is not None:
        print(f"members with entries in [0, {args.box}]:")
        for mu in members:
            print(f"  {_fmt_weight(mu)}")
    return 0


def cmd_filtration(args) -> int:
    space = MatrixSpace(args.n, args.n)
    result: dict = {"n": args.n, "k": args.k}
    lines = [f"Hodge filtration level k={args.k} on {space} matrices"]
    if args.weight is not None:
        p = classify(args.weight, space)
        member = in_Fk_Sdet(args.weight, args.k, space)
        result.update(weight=list(args.weight), p=p, member=member)
        lines.append(f"weight {_fmt_weight(args.weight)}: stratum p={p}, member={member}")
    if args.box is not None:
        members = [
            lam for lam in WeightBox(args.n, args.box) if in_Fk_Sdet(lam, args.k, space)
        ]
        result["members"] = [list(lam) for lam in members]
        lines.append(f"members with entries in [-{args.box}, {args.box}]:")
        lines.extend(f"  {_fmt_weight(lam)}" for lam in members)
    if args.weight is None and args.box is None:
        gen = generation_level_Sdet(space)
        result["generation_level"] = gen
        lines.append(f"generation level: {gen}")

    if args.format == "json":
        _print_json(_payload("filtration", **result))
    else:
        for line in lines:
            print(line)
    return 0


def cmd_weights_table(args) -> int:
    space = MatrixSpace(args.m, args.n)
    rows = []
    for p in range(space.n, -1, -1):
        st = Stratum(space, p)
        row = {"p": p, "dim": dim_stratum(st), "codim": codim_stratum(st)}
        if space.is_square:
            w, k = square_weight_layer(space, p)
            row.update(weight=w, twist=k, start_level=start_level(space, p, k), layer=w)
        else:
            w, k = local_cohomology_weight(space, p)
            degree = local_cohomology_degree(st) if p < space.n else None
            row.update(weight=w, twist=k, start_level=start_level(space, p, k), degree=degree)
        rows.append(row)

    if args.format == "json":
        _print_json(_payload("weights-table", m=args.m, n=args.n, rows=rows))
        return 0

    last = "layer" if space.is_square else "degree"
    print(f"weight ledger for {space} matrices")
    header = f"{'p':>3} {'d_p':>5} {'c_p':>5} {'weight':>7} {'twist':>6} {'start':>6} {last:>7}"
    print(header)
    for row in rows:
        tail = row[last]
        tail = "-" if tail is None else tail
        print(
            f"{row['p']:>3} {row['dim']:>5} {row['codim']:>5} "
            f"{row['weight']:>7} {row['twist']:>6} {row['start_level']:>6} {tail:>7}"
        )
    return 0


def cmd_decompose(args) -> int:
    space = MatrixSpace(args.m, args.n)
    if args.solve:
        base = solve_pushforward_OYp(space, args.p)
        prefactor = pushforward_prefactor(space, args.p)
        table = DecompositionTable(
            space, args.p, {i: prefactor * poly for i, poly in base.entries.items()}
        )
        route = "solver"
    else:
        table = pushforward_DpY(space, args.p)
        route = "closed"

    if args.format == "json":
        payload = _payload("decompose", route=route, **table.to_json_obj())
        _print_json(payload)
        return 0

    print(
        f"pushforward multiplicities for the rank-{args.p} simple module "
        f"on {space} matrices ({route} form)"
    )
    for line in table.lines():
        print(f"  {line}")
    return 0


def cmd_hilbert(args) -> int:
    try:
        weight_set = parse_ideal_descriptor(args.set)
    except ValueError:
        try:
            weight_set = parse_descriptor(args.set)
        except ValueError:
            print(f"error: cannot parse set descriptor {args.set!r}", file=sys.stderr)
            return 2
    space = weight_set.space
    if not weight_set.partitions_only and args.box is None:
        print(
            "error: this weight set contains non-partition weights; pass --box",
            file=sys.stderr,
        )
        return 2
    values = [
        {"d": d, "dim": hilbert_function(weight_set, space, d, box=args.box)}
        for d in range(args.dmax + 1)
    ]

    if args.format == "json":
        payload = _payload(
            "hilbert",
            set=weight_set.descriptor(),
            dmax=args.dmax,
            truncated=not weight_set.partitions_only,
            values=values,
        )
        if args.box is not None:
            payload["box"] = args.box
        _print_json(payload)
        return 0

    print(f"graded dimensions of {weight_set.descriptor()}")
    if not weight_set.partitions_only:
        print(f"(truncated to entries in [-{args.box}, {args.box}])")
    for row in values:
        print(f"  d={row['d']}: {row['dim']}")
    return 0


def cmd_oracle_check(args) -> int:
    space = MatrixSpace(args.n, args.n)
    bound = max(7, 3, args.lmax)
    lambdas = [
        lam for size in range(args.lmax + 1) for lam in partitions_of(size, args.n)
    ]
    reports = []
    for d in range(1, args.dmax + 1):
        sampler = RankConstrainedSampler(space, max(args.p - 1, 0), bound, args.seed)
        reports.append(
            dcep_cross_validation(space, lambdas, args.p, d, sampler, args.trials)
        )
    ok = all(r.ok for r in reports)

    if args.format == "json":
        payload = _payload(
            "oracle-check",
            n=args.n,
            p=args.p,
            dmax=args.dmax,
            trials=args.trials,
            seed=args.seed,
            ok=ok,
            reports=[r.to_json_obj() for r in reports],
        )
        _print_json(payload)
    else:
        print(
            f"symbolic-power oracle check on {space} matrices, p={args.p}, "
            f"trials={args.trials}, seed={args.seed}"
        )
        for r in reports:
            print(f"  {r.summary()}")
    return 0 if ok else 1


EQUIVALENCE_GRID = {1: 12, 2: 12, 3: 10, 4: 8}


def _suite_equivalence(args) -> list[VerificationReport]:
    return [
        verify_equivalence(MatrixSpace(n, n), k, box)
        for n, box in EQUIVALENCE_GRID.items()
        for k in range(6)
    ]


def _suite_qidentity(args) -> list[VerificationReport]:
    cap = 12
    report = VerificationReport("q-binomial-identity", {"max": cap})
    for a in range(cap + 1):
        for b in range(cap + 1):
            for c in range(cap + 1):
                report.checks += 1
                if not verify_qbinomial_identity(a, b, c):
                    report.add_failure(a=a, b=b, c=c)
    return [report]


def _spaces_for(args) -> list[MatrixSpace]:
    if args.m is not None and args.n is not None:
        return [MatrixSpace(args.m, args.n)]
    return [
        MatrixSpace(m, n) for m in range(1, 7) for n in range(1, min(m, 4) + 1)
    ]


def _suite_decomposition(args) -> list[VerificationReport]:
    reports = []
    solver_report = VerificationReport("solver-vs-closed-form", {})
    for space in _spaces_for(args):
        for p in range(space.n + 1):
            solver_report.checks += 1
            if solve_pushforward_OYp(space, p) != closed_form_OYp(space, p):
                solver_report.add_failure(m=space.m, n=space.n, p=p)
            reports.append(pushforward_structure_checks(space, p))
    return [solver_report] + reports


def _suite_oracle(args) -> list[VerificationReport]:
    reports = []
    for n in (2, 3):
        space = MatrixSpace(n, n)
        lambdas = [lam for size in range(7) for lam in partitions_of(size, n)]
        for p in range(1, n + 1):
            for d in range(1, 5):
                sampler = RankConstrainedSampler(space, p - 1, 7, args.seed)
                reports.append(
                    dcep_cross_validation(space, lambdas, p, d, sampler, trials=8)
                )
    return reports


def _suite_weights(args) -> list[VerificationReport]:
    reports = [square_start_levels_consistency(MatrixSpace(n, n)) for n in range(1, 9)]
    reports.append(local_weight_ledger_check(8))
    for n in range(1, 7):
        reports.append(
            filtration_support_check(MatrixSpace(n, n), 2 * n * n, 3 * n)
        )
    return reports


SUITES = {
    "equivalence": _suite_equivalence,
    "qidentity": _suite_qidentity,
    "decomposition": _suite_decomposition,
    "oracle": _suite_oracle,
    "weights": _suite_weights,
}


def cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(SUITES)
    else:
        names = [args.suite]
    reports = []
    for name in names:
        reports.extend(SUITES[name](args))
    ok = all(r.ok for r in reports)

    if args.format == "json":
        payload = _payload(
            "verify",
            suite=args.suite,
            seed=args.seed,
            ok=ok,
            reports=[r.to_json_obj() for r in reports],
        )
        _print_json(payload)
    else:
        for r in reports:
            print(r.summary())
        print(f"verify {args.suite}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dethodge",
        description="Exact combinatorics of Hodge ideals and filtrations on determinantal strata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("hodge-ideal", help="symbolic-power description of a Hodge ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--box", type=_nonneg, help="also list members with entries in [0, L]")
    add_format(p)
    p.set_defaults(func=cmd_hodge_ideal)

    p = sub.add_parser("filtration", help="Hodge filtration membership on the localization")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--weight", type=_parse_weight, help='weight, e.g. "0,-3"')
    p.add_argument("--box", type=_nonneg, help="list members with entries in [-L, L]")
    add_format(p)
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("weights-table", help="per-stratum weight and twist ledger")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    add_format(p)
    p.set_defaults(func=cmd_weights_table)

    p = sub.add_parser("decompose", help="pushforward multiplicity table")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_nonneg, required=True)
    route = p.add_mutually_exclusive_group()
    route.add_argument("--solve", action="store_true", help="triangular back-substitution route")
    route.add_argument("--closed", action="store_true", help="closed form (default)")
    add_format(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("hilbert", help="graded dimensions of a weight-set module")
    p.add_argument("--set", required=True, help='e.g. "Ik(n=2,k=3)", "Jpd(n=3,p=1,d=2)", "Wp(3,2,1)"')
    p.add_argument("--dmax", type=_nonneg, default=12)
    p.add_argument("--box", type=_nonneg, help="truncation bound for non-partition sets")
    add_format(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("oracle-check", help="differential test vs weight predicate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dmax", type=_nonneg, default=4)
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--seed", default=DEFAULT_SEED)
    p.add_argument("--lmax", type=_nonneg, default=6, help="max size of tested partitions")
    add_format(p)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", default=DEFAULT_SEED)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
