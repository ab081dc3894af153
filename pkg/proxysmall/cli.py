"""Command-line front end: analyze | construct | verify | monomial | example."""

import argparse
import json
import sys

from proxysmall.config import (
    DEFAULT_COEFF_BOUND,
    DEFAULT_MAX_ATTEMPTS,
    DEFAULT_SEED,
    EXIT_INPUT_ERROR,
    EXIT_NO_WITNESS,
    EXIT_VERIFY_FAILED,
    EXIT_WITNESS,
    logger,
)
from proxysmall.errors import ProxySmallError, SearchExhausted
from proxysmall.models import WITNESS_STATUSES, Certificate, SearchConfig
from proxysmall.report import render_analysis, render_certificate, render_verification
from proxysmall.services import (
    CERTIFICATE_FILENAME,
    RING_FILENAME,
    run_analyze,
    run_construct,
    run_example,
    run_monomial,
    run_verify,
    save_partial,
)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}") from e
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="proxysmall",
        description="Certify that a local ring has modules that are not proxy small.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="invariants of a presentation and applicability of the construction")
    analyze.add_argument("ring", help="ring file (JSON)")
    analyze.add_argument("--span-dim", type=_positive, help="lower bound s for dim span V_R(R)")
    analyze.add_argument("--assume-minimal", action="store_true", help="trust the generators to be minimal")
    analyze.add_argument("--json", action="store_true", help="print the report as JSON")

    construct = commands.add_parser("construct", help="build a witness certificate")
    construct.add_argument("ring", help="ring file (JSON)")
    construct.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    construct.add_argument("--span-dim", type=_positive)
    construct.add_argument("--max-attempts", type=_positive, default=DEFAULT_MAX_ATTEMPTS)
    construct.add_argument("--coeff-bound", type=_positive, default=DEFAULT_COEFF_BOUND)
    construct.add_argument("--assume-minimal", action="store_true")
    construct.add_argument("-o", "--output", help="where to write the certificate")
    construct.add_argument("--json", action="store_true", help="print the certificate as JSON")

    verify = commands.add_parser("verify", help="re-verify a certificate against its ring")
    verify.add_argument("ring", help="ring file (JSON)")
    verify.add_argument("certificate", help="certificate file (JSON)")
    verify.add_argument("--json", action="store_true")

    monomial = commands.add_parser("monomial", help="deterministic certificate for monomial ideals")
    monomial.add_argument("ring", help="ring file (JSON)")
    monomial.add_argument("-o", "--output", help="where to write the certificate")
    monomial.add_argument("--json", action="store_true")

    example = commands.add_parser("example", help="bundled worked examples")
    example.add_argument(
        "name", help="shortgor3 | thomas | monomial4 | truncated:d,s | shortgor:e | tensor[:a1,...,am] | sr:<file>"
    )
    example.add_argument("-o", "--output", help=f"directory for {RING_FILENAME} and {CERTIFICATE_FILENAME}")
    example.add_argument("--json", action="store_true")

    return parser.parse_args(argv)


def _emit(text: str):
    sys.stdout.write(text)
    sys.stdout.flush()


def _certificate_exit(certificate: Certificate) -> int:
    return EXIT_WITNESS if certificate.status in WITNESS_STATUSES else EXIT_NO_WITNESS


def _show_certificate(certificate: Certificate, as_json: bool):
    if as_json:
        _emit(certificate.model_dump_json(indent=2) + "\n")
    else:
        _emit(render_certificate(certificate))


# ==================== Commands ====================


def cmd_analyze(args: argparse.Namespace) -> int:
    report = run_analyze(args.ring, args.span_dim, args.assume_minimal)
    _emit(report.model_dump_json(indent=2) + "\n" if args.json else render_analysis(report))
    return EXIT_WITNESS


def cmd_construct(args: argparse.Namespace) -> int:
    cfg = SearchConfig(
        seed=args.seed,
        max_attempts=args.max_attempts,
        coeff_bound=args.coeff_bound,
        span_dim=args.span_dim,
    )
    try:
        certificate = run_construct(args.ring, cfg, args.assume_minimal, args.output)
    except SearchExhausted as e:
        logger.error("%s", e)
        save_partial(e.partial, args.output)
        if e.partial is not None:
            _show_certificate(e.partial, args.json)
        return EXIT_NO_WITNESS
    _show_certificate(certificate, args.json)
    return _certificate_exit(certificate)


def cmd_verify(args: argparse.Namespace) -> int:
    _, report = run_verify(args.ring, args.certificate)
    _emit(report.model_dump_json(indent=2) + "\n" if args.json else render_verification(report))
    return EXIT_WITNESS if report.passed else EXIT_VERIFY_FAILED


def cmd_monomial(args: argparse.Namespace) -> int:
    certificate = run_monomial(args.ring, args.output)
    _show_certificate(certificate, args.json)
    return _certificate_exit(certificate)


def cmd_example(args: argparse.Namespace) -> int:
    bundle = run_example(args.name, args.output)
    if args.json:
        payload = {"ring": bundle.ring.model_dump(mode="json", exclude_none=True)}
        if bundle.certificate is not None:
            payload["certificate"] = bundle.certificate.model_dump(mode="json")
        _emit(json.dumps(payload, indent=2) + "\n")
    else:
        _emit(f"{bundle.name}: {', '.join(bundle.ring.generators)} in k[{', '.join(bundle.ring.variables)}]\n")
        if bundle.certificate is not None:
            _emit(render_certificate(bundle.certificate))
    return EXIT_WITNESS


COMMANDS = {
    "analyze": cmd_analyze,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "monomial": cmd_monomial,
    "example": cmd_example,
}


def main(argv: list[str] | None = None) -> int:
    """Runs one command and maps the outcome to an exit code."""
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        # usage errors count as input errors
        return EXIT_WITNESS if e.code in (0, None) else EXIT_INPUT_ERROR
    try:
        return COMMANDS[args.command](args)
    except ProxySmallError as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception:
        logger.exception("[%s] unexpected failure", args.command)
        return 1


if __name__ == "__main__":
    sys.exit(main())
