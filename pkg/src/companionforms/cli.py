"""Command-line front end.

Subcommands::

    companionforms make 1,2,3 --field Q --out f.txt
    companionforms make --block P.txt --out f.txt
    companionforms check f.txt [--t 2]
    companionforms verify --theorem bca --field GF:2 --n 2 --exhaustive
    companionforms verify --theorem crossover --field Q --n 5 --trials 100 --seed 42

Exit codes: 0 the property holds / the matrix is companion, 1 refuted
(with a witness), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import matrixfile
from .bilinear import (
    ExtendedCoeffVector,
    TheoremId,
    check_crossover,
    check_crossover_universal,
    check_h_symmetry,
    check_jmtrs,
    check_u_symmetry,
    h_map,
    recognize,
    u_map,
)
from .block import (
    BlockColumn,
    block_criteria,
    check_block_crg,
    commuting_pair,
    make_block_companion,
    recognize_block,
)
from .companion import (
    CoeffVector,
    basis_samples,
    has_companion_lower_rows,
    is_companion_krylov,
    is_companion_structural,
    krylov_full_test,
    make_companion,
)
from .errors import CompanionError
from .field import FieldSpec
from .matrix import Matrix
from .oracle import DEFAULT_BUDGET, LOWER_ROWS, STRUCTURAL, EnumerationTask, run_equivalence
from .rng import LCG64

EXIT_OK, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2

THEOREMS = {t.value: t for t in TheoremId}


class UsageError(Exception):
    pass


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _matrix_inline(M: Matrix) -> str:
    return ";".join(" ".join(str(x) for x in r) for r in M.raw_rows())


# ------------------------------------------------------------------ check


def cmd_check(path: str, block_size: int | None = None) -> tuple[int, str]:
    mf = matrixfile.read(path)
    A = mf.matrix
    t = block_size if block_size is not None else mf.block_size
    if t is not None and t > 1:
        report = recognize_block(A, t)
    else:
        report = recognize(A)

    out = [f"matrix: {A.rows}x{A.cols} over {A.field.tag}" + (f", block size {t}" if t else "")]
    if report.is_companion:
        out.append("verdict: companion")
        if isinstance(report.extracted_p, BlockColumn):
            for i, Pi in enumerate(report.extracted_p.blocks):
                out.append(f"P_{i} = [{_matrix_inline(Pi)}]")
        else:
            out.append("p = [" + ", ".join(str(x) for x in report.extracted_p) + "]")
    else:
        out.append(f"verdict: not companion (witness: column {report.witness})")
    for name, ok in report.verdicts.items():
        out.append(f"  {name:<12} {'pass' if ok else 'fail'}")
    if report.row_verdicts:
        out.append("rows 1..n-1 only (row 0 is invisible to these):")
        for name, ok in report.row_verdicts.items():
            out.append(f"  {name:<12} {'pass' if ok else 'fail'}")

    out.append("[result]")
    out.append(f"companion={_fmt_bool(report.is_companion)}")
    if isinstance(report.extracted_p, BlockColumn):
        out.append(f"P={_matrix_inline(report.extracted_p.to_matrix())}")
    elif report.extracted_p is not None:
        out.append("p=" + ",".join(str(x) for x in report.extracted_p))
    if report.witness is not None:
        out.append(f"witness_column={report.witness}")
    for name, ok in report.verdicts.items():
        out.append(f"{name}={_fmt_bool(ok)}")
    if report.row_verdicts:
        out.append(f"lower_rows={_fmt_bool(report.lower_rows)}")
        for name, ok in report.row_verdicts.items():
            out.append(f"{name}={_fmt_bool(ok)}")
    return (EXIT_OK if report.is_companion else EXIT_REFUTED), "\n".join(out) + "\n"


# ------------------------------------------------------------------- make


def cmd_make(coeffs: str | None, field: FieldSpec | None, block: str | None) -> str:
    if block is not None:
        if coeffs is not None:
            raise UsageError("give either coefficients or --block, not both")
        mf = matrixfile.read(block)
        P = mf.matrix
        if field is not None and field != P.field:
            raise UsageError(f"--field {field.tag} contradicts block file field {P.field.tag}")
        t = P.cols
        if mf.block_size is not None and mf.block_size != t:
            raise UsageError(f"block file declares block {mf.block_size} but has {t} columns")
        return matrixfile.dumps(make_block_companion(BlockColumn.from_matrix(P, t)), t)
    if coeffs is None:
        raise UsageError("coefficients are required (or --block)")
    if field is None:
        raise UsageError("--field is required")
    parts = [s for s in coeffs.split(",")]
    if any(not s.strip() for s in parts):
        raise UsageError(f"empty coefficient in {coeffs!r}")
    p = CoeffVector(field, [field.parse(s) for s in parts])
    return matrixfile.dumps(make_companion(p))


# ----------------------------------------------------------------- verify


def _library_holds(thm: TheoremId, A: Matrix, t: int) -> bool:
    if thm is TheoremId.KRYLOV:
        return is_companion_krylov(A) and krylov_full_test(A, basis_samples(A.rows, A.field))
    if thm is TheoremId.H_SYMMETRY:
        return check_h_symmetry(A).holds
    if thm is TheoremId.JMTRS:
        return check_jmtrs(A).holds
    if thm is TheoremId.U_SYMMETRY:
        return check_u_symmetry(A).holds
    if thm is TheoremId.CROSSOVER:
        return check_crossover_universal(A).holds
    return block_criteria(A, t, samples=0)[1]["crg"]


def _sampled_forward(thm: TheoremId, A: Matrix, n: int, t: int, rng: LCG64) -> bool:
    """The identity on randomly drawn inputs, for a matrix known to be companion."""
    f = A.field
    if thm is TheoremId.KRYLOV:
        return krylov_full_test(A, [rng.coeffs(f, n) for _ in range(3)])
    if thm is TheoremId.H_SYMMETRY:
        b, g = rng.coeffs(f, n), rng.coeffs(f, n)
        return h_map(A, b, g) == h_map(A, g, b)
    if thm is TheoremId.U_SYMMETRY:
        b, g = rng.coeffs(f, n), rng.coeffs(f, n)
        return u_map(A, b, g) == u_map(A, g, b)
    if thm is TheoremId.JMTRS:
        return check_jmtrs(A).holds
    if thm is TheoremId.CROSSOVER:
        B = ExtendedCoeffVector.of(f, rng.elements(f, n), rng.element(f))
        G = ExtendedCoeffVector.of(f, rng.elements(f, n), rng.element(f))
        return check_crossover(A, B, G)
    B, G = commuting_pair(n, t, f, rng)
    return check_block_crg(A, B, G)


def cmd_verify(
    theorem: str,
    field: FieldSpec,
    n: int,
    exhaustive: bool,
    trials: int,
    seed: int,
    t: int = 1,
    budget: int = DEFAULT_BUDGET,
    reference: str = STRUCTURAL,
) -> tuple[int, str]:
    """Check a characterization against a reference verdict.

    The reference is structural companion-ness, or with
    ``reference="lower_rows"`` the weaker shape that the ``jmtrs`` and
    ``usym`` criteria actually detect.
    """
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    thm = THEOREMS[theorem]
    if n < 1 or t < 1:
        raise UsageError("--n and --t must be positive")
    if thm is not TheoremId.BLOCK_CRG and t != 1:
        raise UsageError("--t applies to the crg theorem only")
    if reference not in (STRUCTURAL, LOWER_ROWS):
        raise UsageError(f"unknown reference {reference!r}")
    if reference == LOWER_ROWS and thm is TheoremId.BLOCK_CRG:
        raise UsageError("--reference lower_rows is for scalar theorems")
    head = f"verify {theorem} {field.tag} n={n}" + (f" t={t}" if thm is TheoremId.BLOCK_CRG else "")

    if exhaustive:
        if not field.is_finite:
            raise UsageError("exhaustive mode needs a prime field")
        res = run_equivalence(
            EnumerationTask(field, n, thm, budget=budget, t=t, reference=reference)
        )
        lines = [
            f"{head} exhaustive",
            f"{res.total} matrices, {res.companion_count} companions, {len(res.mismatches)} mismatches",
        ]
        if res.mismatches:
            m = res.mismatches[0]
            lines.append(
                f"first mismatch: matrix #{m.index} [{_matrix_inline(m.matrix)}] "
                f"{reference}={_fmt_bool(m.structural)} oracle={_fmt_bool(m.oracle)} "
                f"library={_fmt_bool(m.library)}"
            )
        lines += [
            "[result]",
            f"theorem={theorem}",
            "mode=exhaustive",
            f"reference={reference}",
            f"matrices={res.total}",
            f"companions={res.companion_count}",
            f"predicate_passes={res.predicate_pass_count}",
            f"mismatches={len(res.mismatches)}",
        ]
        return (EXIT_OK if res.ok else EXIT_REFUTED), "\n".join(lines) + "\n"

    if trials < 1:
        raise UsageError("--trials must be positive")
    rng = LCG64(seed)
    size = n * t
    mismatches = []
    random_companions = 0
    for k in range(trials):
        if thm is TheoremId.BLOCK_CRG:
            A = make_block_companion(BlockColumn.from_matrix(rng.matrix(field, size, t), t))
        else:
            A = make_companion(rng.coeffs(field, n))
        if not (_sampled_forward(thm, A, n, t, rng) and _library_holds(thm, A, t)):
            mismatches.append(f"trial {k}: companion [{_matrix_inline(A)}] fails")
        R = rng.matrix(field, size, size)
        if thm is TheoremId.BLOCK_CRG:
            structural = block_criteria(R, t, samples=0)[1]["structural"]
        else:
            structural = is_companion_structural(R).is_companion
        ref = has_companion_lower_rows(R) if reference == LOWER_ROWS else structural
        random_companions += structural
        if _library_holds(thm, R, t) != ref:
            mismatches.append(f"trial {k}: random [{_matrix_inline(R)}] verdict disagrees with shape")
    lines = [
        f"{head} random trials={trials} seed={seed}",
        f"{trials} companion instances, {trials} random matrices "
        f"({random_companions} companion), {len(mismatches)} mismatches",
    ]
    if mismatches:
        lines.append("first mismatch: " + mismatches[0])
    lines += [
        "[result]",
        f"theorem={theorem}",
        "mode=random",
        f"reference={reference}",
        f"trials={trials}",
        f"seed={seed}",
        f"mismatches={len(mismatches)}",
    ]
    return (EXIT_OK if not mismatches else EXIT_REFUTED), "\n".join(lines) + "\n"


# ------------------------------------------------------------------- main


def _field_arg(s: str) -> FieldSpec:
    try:
        return FieldSpec.from_tag(s)
    except CompanionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="companionforms",
        description="Build and recognize second companion matrices exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="recognize a matrix stored in a matrix file")
    c.add_argument("path")
    c.add_argument("--t", type=int, default=None, help="block size (overrides the file)")

    m = sub.add_parser("make", help="write a companion (or block companion) matrix")
    m.add_argument("coeffs", nargs="?", help="comma-separated p_0,...,p_{n-1}")
    m.add_argument("--field", type=_field_arg, default=None, help="'Q' or 'GF:p'")
    m.add_argument("--block", default=None, help="matrix file holding P (nt x t)")
    m.add_argument("--out", default=None, help="output path (default: stdout)")

    v = sub.add_parser("verify", help="check a characterization, exhaustively or at random")
    v.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    v.add_argument("--field", type=_field_arg, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--t", type=int, default=1)
    v.add_argument("--exhaustive", action="store_true")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument(
        "--reference",
        choices=[STRUCTURAL, LOWER_ROWS],
        default=STRUCTURAL,
        help="verdict to compare against (default: structural companion shape)",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        if args.command == "check":
            code, text = cmd_check(args.path, args.t)
            sys.stdout.write(text)
            return code
        if args.command == "make":
            text = cmd_make(args.coeffs, args.field, args.block)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        code, text = cmd_verify(
            args.theorem, args.field, args.n, args.exhaustive, args.trials, args.seed,
            t=args.t, budget=args.budget, reference=args.reference,
        )
        sys.stdout.write(text)
        return code
    except (CompanionError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
