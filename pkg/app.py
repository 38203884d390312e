#!/usr/bin/env python
"""
Command-line front end.

    constant <kind> <q>
    bound [--p --N --M --q]
    extremal <strong|weak-lower|weak-upper> [--q --kmax]
    continuous <strong|weak> [--q --T]
    sparse check [--alpha --r --coeffs | --seed --trials]
    figure <tag> [--grid --out]
    verify <suite> [--seed --trials]

Exit codes: 0 success, 1 property failure, 2 usage or domain error.
"""

import argparse
import logging
import sys

from config import BOUND_SETTINGS, FIGURE_SETTINGS, LOGGING_CONFIG, VERIFY_SETTINGS
from utils.bound_engine import corollary_bound
from utils.constants import FORMULAS, LOCI, ConstantKind, C1_weak, c1, c1_weak, continuous_constants, evaluate
from utils.continuous import QuadratureError, StepFunction, strong_cont_lhs, weak_cont_values
from utils.extremal import ExtremalMismatch, simplex_vertex_search, weak_lower_extremal, weak_upper_extremal
from utils.figures import FIGURES, CurveSpec, write_curve
from utils.sample_generator import SampleGenerator
from utils.sequences import Exponent
from utils.sparse import R_MODES, TAU, CoeffVector, devore_constants, equivalence_check
from utils.validation import DomainError, validate_positive_number
from utils.verification import SUITES, run_all, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2


def fmt(x: float) -> str:
    """Shortest decimal up to 15 significant digits"""
    return f"{x:.15g}"


def setup_logging():
    handlers = [logging.StreamHandler(sys.stderr)]
    if LOGGING_CONFIG['file']:
        handlers.append(logging.FileHandler(LOGGING_CONFIG['file']))
    logging.basicConfig(level=LOGGING_CONFIG['level'], format=LOGGING_CONFIG['format'], handlers=handlers)


def positive_float(text: str) -> float:
    if not validate_positive_number(text):
        raise argparse.ArgumentTypeError(f"expected a positive number, got '{text}'")
    return float(text)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    if text.strip() == '0':
        return 0
    return positive_int(text)


def cmd_constant(args) -> int:
    kind = ConstantKind(args.kind)
    value = evaluate(kind, args.q)
    print(f"{kind.value}({args.q}): {value}")
    print(f"formula: {FORMULAS[kind]}")
    print(f"locus: {LOCI[kind]}")
    return EXIT_OK


def cmd_bound(args) -> int:
    report = corollary_bound(p=args.p, n_terms=args.N, m=args.M, q=args.q)
    print(f"supremum: {fmt(report.supremum.upper)}")
    print(f"argmax: {report.argmax if report.argmax is not None else f'tail (n >= {report.n_terms})'}")
    print(f"truncation certificate: {report.truncation_error:.6g}")
    if report.tail_majorant is not None:
        print(f"tail majorant: {fmt(report.tail_majorant.value)}")
    if report.reference_estimate is not None:
        print(f"reference estimate: {report.reference_estimate:.6g}")
    return EXIT_OK


def cmd_extremal(args) -> int:
    q = Exponent.of(args.q)
    if args.family == 'strong':
        result = simplex_vertex_search(q, args.kmax)
        print(f"sup gamma/ell1 on vertices k0 <= {args.kmax}: {fmt(result.value)} at k0 = {result.argmax}")
        print(f"c1({q}): {fmt(c1(q).value)}")
    elif args.family == 'weak-lower':
        result = weak_lower_extremal(q, args.kmax)
        print(f"weak_gamma of (1/n)_(n<={args.kmax}): {fmt(result.value)} at n = {result.argmax}")
        print(f"c1_weak({q}): {fmt(c1_weak(q).value)}")
    else:
        result = weak_upper_extremal(q, args.kmax)
        print(f"weak_ell1/weak_gamma of the flat sequence N = {args.kmax}: "
              f"{fmt(1.0 / result.value)} at n = {result.argmax}")
        print(f"C1_weak({q}): {fmt(C1_weak(q).value)}")
    return EXIT_OK


def cmd_continuous(args) -> int:
    q = Exponent.of(args.q)
    f = StepFunction.single_step(args.T)
    consts = continuous_constants(q)
    if args.family == 'strong':
        print(f"strong lhs on (1/T) chi_(0,T), T = {fmt(args.T)}: {strong_cont_lhs(f, q)}")
        print(f"c1_cont({q}): {fmt(consts.c1.value)}")
    else:
        values = weak_cont_values(f, q)
        print(f"weak lhs on (1/T) chi_(0,T), T = {fmt(args.T)}: {fmt(values.weak_lhs)} "
              f"at t = {fmt(values.argmax)}")
        print(f"sup t f(t): {fmt(values.weak_rhs)}")
        print(f"c1_weak_cont({q}): {fmt(consts.c1_weak.value)}")
    return EXIT_OK


def cmd_sparse(args) -> int:
    if args.coeffs:
        vectors = [CoeffVector(args.coeffs)]
    else:
        vectors = [SampleGenerator(args.seed, i).coefficient_vector() for i in range(args.trials)]

    failures = 0
    for index, c in enumerate(vectors):
        check = equivalence_check(c, args.alpha, args.r)
        if not (check.ratio_low_ok and check.ratio_high_ok):
            failures += 1
            print(f"FAIL vector {index} (seed {args.seed}): approx {fmt(check.approx_norm)}, "
                  f"lorentz {fmt(check.lorentz)}", file=sys.stderr)
    consts = devore_constants(args.alpha, args.r)
    tag = " (upper bound, not exact)" if consts.C_is_bound else ""
    print(f"c: {consts.c}")
    print(f"C: {consts.C}{tag}")
    print(f"checked: {len(vectors)}, failed: {failures}")
    return EXIT_PROPERTY if failures else EXIT_OK


def cmd_figure(args) -> int:
    spec = CurveSpec(args.tag, args.grid, args.out or '')
    path = write_curve(spec)
    print(f"wrote {path}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == 'all':
        reports = run_all(args.seed, args.trials)
    else:
        reports = [run_suite(args.suite, args.seed, args.trials)]
    failed = False
    for report in reports:
        mark = "✅" if report.ok else "❌"
        print(f"{mark} {report.suite}: {report.passed}/{report.checks} checks passed ({report.trials} trials)")
        for violation in report.failures:
            print(f"   {violation}", file=sys.stderr)
        failed = failed or not report.ok
    return EXIT_PROPERTY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Stechkin inequality constants, bounds and checks')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('constant', help='Evaluate a catalog constant')
    p.add_argument('kind', choices=[k.value for k in ConstantKind])
    p.add_argument('q', type=str, help="exponent, e.g. 2, 1.5 or inf")
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser('bound', help='Certified C_b(q) for b_k = (k(k+1))^p')
    p.add_argument('--p', type=positive_float, default=BOUND_SETTINGS['P'])
    p.add_argument('--N', type=positive_int, default=BOUND_SETTINGS['N_TERMS'])
    p.add_argument('--M', type=positive_int, default=BOUND_SETTINGS['M'])
    p.add_argument('--q', type=str, default=str(BOUND_SETTINGS['Q']))
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser('extremal', help='Sweep an extremal family')
    p.add_argument('family', choices=['strong', 'weak-lower', 'weak-upper'])
    p.add_argument('--q', type=str, default='2')
    p.add_argument('--kmax', type=positive_int, default=10_000)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser('continuous', help='Continuous functionals on (1/T) chi_(0,T)')
    p.add_argument('family', choices=['strong', 'weak'])
    p.add_argument('--q', type=str, default='2')
    p.add_argument('--T', type=positive_float, default=1.0)
    p.set_defaults(func=cmd_continuous)

    p = sub.add_parser('sparse', help='Approximation-space / Lorentz norm equivalence')
    p.add_argument('action', choices=['check'])
    p.add_argument('--alpha', type=positive_float, default=0.5)
    p.add_argument('--r', choices=list(R_MODES), default=TAU)
    p.add_argument('--coeffs', type=float, nargs='+')
    p.add_argument('--seed', type=int, default=VERIFY_SETTINGS['SEED'])
    p.add_argument('--trials', type=nonnegative_int, default=100)
    p.set_defaults(func=cmd_sparse)

    p = sub.add_parser('figure', help='Write a figure curve as CSV')
    p.add_argument('tag', choices=sorted(FIGURES))
    p.add_argument('--grid', type=positive_int, default=FIGURE_SETTINGS['GRID'])
    p.add_argument('--out', type=str)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser('verify', help='Run property suites')
    p.add_argument('suite', choices=sorted(SUITES) + ['all'])
    p.add_argument('--seed', type=int, default=VERIFY_SETTINGS['SEED'])
    p.add_argument('--trials', type=nonnegative_int, default=VERIFY_SETTINGS['TRIALS'])
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: cannot write output: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ExtremalMismatch, QuadratureError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"failure: {e}", file=sys.stderr)
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
