#!/usr/bin/env python3
"""Module for running the tool from the CLI."""
import argparse
import importlib.metadata
import json
import sys
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

from . import decomposition, group, oracle, radical, structure
from .errors import InvalidParameters, UnitGroupError, VerificationFailure
from .fields import build_field
from .group import GroupParams
from .group_ring import GroupRingElement
from .utils import set_verbose, verbose

COMMANDS = ("structure", "classes", "radical", "verify", "density", "table", "params")
RST_COMMANDS = ("structure", "table")

DEFAULT_MAX_N = 3
DEFAULT_MAX_M = 40
DENSITY_Z_LIMIT = 4
NIL_WITNESSES = 50

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


class RunConfig(NamedTuple):
    """Everything one invocation needs, parsed from the command line."""

    command: str
    m: int = 0
    t: int = 0
    n: int = 1
    samples: int = oracle.DEFAULT_SAMPLES
    seed: int = oracle.DEFAULT_SEED
    format: str = "text"
    max_n: int = DEFAULT_MAX_N
    max_m: int = DEFAULT_MAX_M
    workers: int = 1

    @property
    def params(self) -> GroupParams:
        return group.validate_params(self.m, self.t)


def _emit(config: RunConfig, text_lines: List[str], document: Any) -> None:
    if config.format == "json":
        print(json.dumps(document, indent=2))
    else:
        print("\n".join(text_lines))


def _header(p: GroupParams) -> str:
    return f"T_{p.order} (m={p.m}, t={p.t}, k={p.k})"


def run_structure(config: RunConfig) -> int:
    """Print U(F_q T_3m)."""
    s = structure.structure(config.m, config.t, config.n)
    print(structure.format_structure(s, config.format).rstrip("\n"))
    return EXIT_OK


def run_table(config: RunConfig) -> int:
    """Print one structure per n = 1..max_n."""
    rows = structure.table(config.params, config.max_n)
    if config.format == "rst":
        title = f"Unit groups of F_q {_header(config.params)}"
        print(structure.format_rst(rows, title=title).rstrip("\n"))
        return EXIT_OK
    _emit(
        config,
        [f"n={s.n}: {structure.format_text(s)}" for s in rows],
        [structure.to_dict(s) for s in rows],
    )
    return EXIT_OK


def run_classes(config: RunConfig) -> int:
    """Print the conjugacy classes."""
    p = config.params
    classes = group.conjugacy_classes(p)
    lines = [f"{_header(p)}: {len(classes)} conjugacy classes"]
    for cls in classes:
        members = ", ".join(group.describe(g) for g in cls.members)
        lines.append(f"[{cls.size}] {members}")
    document = {
        "m": p.m,
        "t": p.t,
        "k": p.k,
        "classes": [
            {
                "representative": group.describe(cls.representative),
                "size": cls.size,
                "members": [group.describe(g) for g in cls.members],
            }
            for cls in classes
        ],
    }
    _emit(config, lines, document)
    return EXIT_OK


def _describe_radical_element(element: GroupRingElement) -> str:
    triple = radical.coset_coefficients(element)
    if triple is None:
        return str(element)
    minus, plain, plus = triple
    return f"({minus}) x_hat y^2 + ({plain}) x_hat + ({plus}) x_hat y"


def run_radical(config: RunConfig) -> int:
    """Print a basis of J(FG), its dimension and nilpotency index."""
    p = config.params
    f = build_field(config.n)
    basis = radical.annihilator_basis(p, f)
    index = radical.nilpotency_index(basis)
    described = [_describe_radical_element(v) for v in basis.basis]
    lines = [
        f"J({f.name}{_header(p)}) = Anh(s_hat)",
        f"dim J = {basis.dim}",
        *(f"  {line}" for line in described),
        f"nilpotency index = {index}",
        f"J^2 = 0: {'yes' if index <= 2 else 'no'}",
    ]
    document = {
        "m": p.m,
        "t": p.t,
        "n": config.n,
        "dim": basis.dim,
        "basis": described,
        "nilpotency_index": index,
        "square_vanishes": index <= 2,
    }
    _emit(config, lines, document)
    return EXIT_OK


def _verification_checks(
    config: RunConfig,
) -> List[Tuple[str, Callable[[], str]]]:
    p, n = config.params, config.n
    f = build_field(n)

    def radical_check() -> str:
        report = radical.verify_radical_equality(p, f, NIL_WITNESSES, config.seed)
        return (
            f"dim J = {report.dim}, dim Krn(T) = {report.krn_t_dim}, "
            f"nilpotency index {report.nilpotency_index}"
        )

    def direct_sum_check() -> str:
        ledger = decomposition.check_direct_sum(p, f)
        return (
            f"{ledger.dim_J} + {ledger.dim_delta_GH} = {ledger.combined_rank}, "
            f"intersection {ledger.intersection_dim}"
        )

    def center_check() -> str:
        sums = decomposition.center_basis(p, f)
        direct = decomposition.center_of_delta(p, f)
        if len(direct) != len(sums):
            raise VerificationFailure("centre", f"dimension {len(direct)}")
        return f"dim Z(Delta(G,H)) = {len(sums)}"

    def semisimple_check() -> str:
        if not decomposition.semisimple_check(p, f):
            raise VerificationFailure("semisimple", "degenerate pairing")
        return "Delta(G,H) has no nonzero null ideal"

    def count_check() -> str:
        count = decomposition.component_count_from_center(p, n)
        census = decomposition.components(p, n)
        if count != len(census):
            raise VerificationFailure(
                "component count", f"centre {count}, orbits {len(census)}"
            )
        return f"{count} components"

    def degree_check() -> str:
        checks = oracle.verify_component_degrees(p, n)
        return ", ".join(
            f"{c.component.orbit.exponents}: d={c.measured_degree}" for c in checks
        )

    def homomorphism_check() -> str:
        for orbit in decomposition.t_orbits(p):
            rep = oracle.build_representation(p, n, orbit)
            oracle.check_homomorphism(rep, oracle.DEFAULT_TRIALS, config.seed)
        return f"{p.k} representations"

    def kernel_check() -> str:
        oracle.kernel_is_radical(p, n)
        return "joint kernel = J(FG)"

    def exponent_check() -> str:
        order = radical.one_plus_radical_check(p, f, NIL_WITNESSES, config.seed)
        return f"|1 + J| = {order}, exponent 3"

    return [
        ("radical", radical_check),
        ("direct sum", direct_sum_check),
        ("centre", center_check),
        ("semisimple", semisimple_check),
        ("component count", count_check),
        ("component degrees", degree_check),
        ("homomorphisms", homomorphism_check),
        ("kernel is radical", kernel_check),
        ("1 + J", exponent_check),
    ]


def run_verify(config: RunConfig) -> int:
    """Run every check, one PASS/FAIL line each."""
    oracle.check_splitting_degree(config.params, config.n)
    results: List[Dict[str, Any]] = []
    for name, check in _verification_checks(config):
        verbose(f"running check: {name}")
        try:
            detail = check()
            passed = True
        except VerificationFailure as failure:
            detail = str(failure)
            passed = False
        results.append({"name": name, "passed": passed, "detail": detail})
    failed = [r for r in results if not r["passed"]]
    lines = [
        f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}: {r['detail']}"
        for r in results
    ]
    if failed:
        lines.append(f"{len(failed)} of {len(results)} checks failed")
    else:
        lines.append(f"all {len(results)} checks passed")
    _emit(config, lines, {"checks": results, "passed": not failed})
    return EXIT_FAILED if failed else EXIT_OK


def run_density(config: RunConfig) -> int:
    """Sample the unit density; fail when |z| exceeds the limit."""
    report = oracle.monte_carlo_density(
        config.params, config.n, config.samples, config.seed, config.workers
    )
    lines = [
        f"samples = {report.samples}",
        f"units = {report.invertible_count}",
        f"empirical = {float(report.empirical):.6f}",
        f"predicted = {float(report.predicted):.6f}",
        f"z = {report.z_score:.3f}",
    ]
    document = {
        "samples": report.samples,
        "invertible_count": report.invertible_count,
        "empirical": str(report.empirical),
        "predicted": str(report.predicted),
        "z_score": report.z_score,
    }
    _emit(config, lines, document)
    return EXIT_FAILED if abs(report.z_score) > DENSITY_Z_LIMIT else EXIT_OK


def run_params(config: RunConfig) -> int:
    """List admissible (m, t) up to max_m."""
    found = group.valid_parameters(config.max_m)
    _emit(
        config,
        [f"m={p.m} t={p.t} k={p.k}" for p in found],
        [{"m": p.m, "t": p.t, "k": p.k} for p in found],
    )
    return EXIT_OK


RUNNERS: Dict[str, Callable[[RunConfig], int]] = {
    "structure": run_structure,
    "classes": run_classes,
    "radical": run_radical,
    "verify": run_verify,
    "density": run_density,
    "table": run_table,
    "params": run_params,
}


def run(config: RunConfig) -> int:
    """
    Execute one command and return its exit code.

    Reports go to standard output; invalid parameters and failed
    verifications are reported on standard error.
    """
    try:
        return RUNNERS[config.command](config)
    except InvalidParameters as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INVALID
    except UnitGroupError as error:
        print(f"verification failed: {error}", file=sys.stderr)
        return EXIT_FAILED


def _version() -> str:
    try:
        return importlib.metadata.version("metacyclic-units")
    except importlib.metadata.PackageNotFoundError:
        return "unknown"


def build_parser() -> argparse.ArgumentParser:
    """The argument parser for :func:`main`."""
    description = (
        "Compute and verify the unit group of F_q T_3m, q = 3^n, where "
        "T_3m = <x, y | x^m = y^3 = 1, x^y = x^t>."
    )
    parser = argparse.ArgumentParser(
        prog="metacyclic-units",
        description=description,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS, help="What to do")
    modulus = parser.add_mutually_exclusive_group()
    modulus.add_argument("--m", type=int, help="Order of x; must be 3k+1")
    modulus.add_argument("--k", type=int, help="Alternative to --m, with m = 3k+1")
    parser.add_argument("--t", type=int, help="Twist with x^y = x^t")
    parser.add_argument("--n", type=int, default=1, help="Field F_q with q = 3^n")
    parser.add_argument(
        "--samples",
        type=int,
        default=oracle.DEFAULT_SAMPLES,
        help="Random elements drawn by density",
    )
    parser.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED, help="Seed")
    parser.add_argument(
        "--format",
        default="text",
        choices=structure.FORMATS,
        help="Output format; rst only for structure and table",
    )
    parser.add_argument(
        "--max-n", type=int, default=DEFAULT_MAX_N, help="Largest n for table"
    )
    parser.add_argument(
        "--max-m", type=int, default=DEFAULT_MAX_M, help="Largest m for params"
    )
    parser.add_argument(
        "--workers", type=int, default=1, help="Processes used by density"
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="print progress to standard error",
    )
    parser.add_argument(
        "--version", action="store_true", help="Show version information and exit"
    )
    return parser


def parse_config(
    parser: argparse.ArgumentParser, argv: Optional[List[str]] = None
) -> RunConfig:
    """Parse and validate arguments; invalid input exits through parser.error."""
    args = parser.parse_args(argv)

    if args.version:
        parser.exit(message=f"metacyclic-units {_version()}\n")

    set_verbose(args.verbose)

    if args.command is None:
        parser.error("a command is required")

    if args.format == "rst" and args.command not in RST_COMMANDS:
        parser.error(f"--format rst is only available for {', '.join(RST_COMMANDS)}")

    m = 3 * args.k + 1 if args.k is not None else args.m
    config = RunConfig(
        command=args.command,
        m=m or 0,
        t=args.t or 0,
        n=args.n,
        samples=args.samples,
        seed=args.seed,
        format=args.format,
        max_n=args.max_n,
        max_m=args.max_m,
        workers=max(1, args.workers),
    )
    if config.command == "params":
        return config

    if m is None:
        parser.error("--m (or --k) is required")
    if args.t is None:
        parser.error("--t is required")
    try:
        params = group.validate_params(config.m, config.t)
        if config.command == "table":
            structure.check_exponent(config.max_n)
        else:
            structure.check_exponent(config.n)
        if config.command == "verify":
            oracle.check_splitting_degree(params, config.n)
        if config.command == "density" and config.samples < oracle.MIN_DENSITY_SAMPLES:
            raise InvalidParameters(
                f"density needs --samples >= {oracle.MIN_DENSITY_SAMPLES}"
            )
    except InvalidParameters as error:
        parser.error(str(error))
    return config


def main(argv: Optional[List[str]] = None) -> None:
    """Compute or verify the unit group of F_q T_3m."""
    parser = build_parser()
    config = parse_config(parser, argv)
    parser.exit(run(config))


if __name__ == "__main__":
    main()
