"""Workflows behind the CLI commands: read files, build presentations, run, write results."""

import json
from pathlib import Path

from pydantic import ValidationError

from proxysmall.cert import dump_certificate, load_certificate, verify
from proxysmall.config import logger
from proxysmall.construct import construct_witnesses, monomial_witnesses
from proxysmall.errors import InputFileError, PolynomialSyntaxError, PresentationError, UnknownVariable
from proxysmall.examples import ExampleBundle, load_example
from proxysmall.models import AnalysisReport, Certificate, RingFile, SearchConfig, VerificationReport
from proxysmall.poly import is_monomial, parse, polynomial_ring
from proxysmall.support import Presentation, analyze, presentation_from_polynomials
from proxysmall.utils import read_json_file, validate_span_dim

RING_FILENAME = "ring.json"
CERTIFICATE_FILENAME = "certificate.json"


def load_ring_file(path: str) -> RingFile:
    """Reads and validates a ring file; validation errors carry the offending key."""
    data = read_json_file(path)
    try:
        return RingFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "ring file"
        raise InputFileError(f"{where}: {first['msg']}", path) from e


def _locate_generator(path: str, text: str) -> tuple[int | None, int | None]:
    """Line and 1-based column where the generator string ``text`` starts in the file."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError:
        return None, None
    needle = json.dumps(text)
    for number, line in enumerate(lines, start=1):
        at = line.find(needle)
        if at >= 0:
            return number, at + 2
    return None, None


def presentation_from_file(path: str, assume_minimal: bool = False) -> tuple[RingFile, Presentation]:
    """Ring file plus its presentation; parse errors point at the file line and column."""
    ring = load_ring_file(path)
    spec = ring.field_spec()
    poly_ring = polynomial_ring(tuple(ring.variables), spec)
    polys = []
    for index, text in enumerate(ring.generators):
        try:
            polys.append(parse(text, poly_ring))
        except (PolynomialSyntaxError, UnknownVariable) as e:
            line, start = _locate_generator(path, text)
            column = start + (e.position or 0) if line else None
            raise InputFileError(f"generators[{index}]: {e}", path, line, column) from e
    P = presentation_from_polynomials(polys, assume_minimal or ring.assume_minimal)
    logger.info("[%s] %s: e=%d, n=%d, d=%d, c=%d", Path(path).name, spec.label, P.e, P.n, P.d, P.c)
    return ring, P


def _span_dim(ring: RingFile, span_dim: int | None, P: Presentation) -> int | None:
    chosen = span_dim if span_dim is not None else ring.span_dim
    error = validate_span_dim(chosen, P.n)
    if error:
        raise PresentationError(error)
    return chosen


def write_text(path: str | Path, text: str):
    """Writes a UTF-8 file, creating parent directories."""
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)


# ==================== Commands ====================


def run_analyze(path: str, span_dim: int | None = None, assume_minimal: bool = False) -> AnalysisReport:
    """analyze on a ring file; an explicit span bound overrides the file's."""
    ring, P = presentation_from_file(path, assume_minimal)
    return analyze(P, _span_dim(ring, span_dim, P))


def is_squarefree_monomial(P: Presentation) -> bool:
    return all(is_monomial(f) and max(f.LM) == 1 for f in P.generators)


def run_construct(
    path: str,
    cfg: SearchConfig,
    assume_minimal: bool = False,
    output: str | None = None,
) -> Certificate:
    """Builds a certificate; squarefree monomial ideals take the deterministic route."""
    ring, P = presentation_from_file(path, assume_minimal)
    cfg = cfg.model_copy(update={"span_dim": _span_dim(ring, cfg.span_dim, P)})
    if is_squarefree_monomial(P):
        logger.info("[%s] squarefree monomial ideal, using the monomial recipe", Path(path).name)
        certificate = monomial_witnesses(P)
    else:
        certificate = construct_witnesses(P, cfg)
    if output:
        write_text(output, dump_certificate(certificate))
    return certificate


def save_partial(partial: Certificate | None, output: str | None):
    """Saves the partial certificate of an exhausted search when an output path is set."""
    if partial is not None and output:
        write_text(output, dump_certificate(partial))


def run_monomial(path: str, output: str | None = None) -> Certificate:
    """Monomial recipe on a ring file."""
    _, P = presentation_from_file(path)
    certificate = monomial_witnesses(P)
    if output:
        write_text(output, dump_certificate(certificate))
    return certificate


def load_certificate_file(path: str) -> Certificate:
    """Reads a certificate; validation errors carry the offending key."""
    read_json_file(path)
    try:
        return load_certificate(Path(path).read_text(encoding="utf-8"))
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "certificate"
        raise InputFileError(f"{where}: {first['msg']}", path) from e


def run_verify(ring_path: str, certificate_path: str) -> tuple[Certificate, VerificationReport]:
    """Loads both files and re-verifies the certificate."""
    _, P = presentation_from_file(ring_path, assume_minimal=True)
    certificate = load_certificate_file(certificate_path)
    report = verify(certificate, P)
    logger.info("[verify] %d checks, %d failed", len(report.checks), len(report.failures))
    return certificate, report


def run_example(name: str, out_dir: str | None = None) -> ExampleBundle:
    """Builds a bundled example and writes ring.json and certificate.json into out_dir."""
    bundle = load_example(name)
    if out_dir:
        target = Path(out_dir)
        write_text(target / RING_FILENAME, bundle.ring.model_dump_json(indent=2, exclude_none=True) + "\n")
        if bundle.certificate is not None:
            write_text(target / CERTIFICATE_FILENAME, dump_certificate(bundle.certificate))
    return bundle
