"""Plain-text rendering of analysis reports, certificates and verification reports."""

from proxysmall.models import (
    STATUS_LABELS,
    AnalysisReport,
    Certificate,
    CIStatus,
    VerificationReport,
)


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _vector(row: list[str]) -> str:
    return "(" + ", ".join(row) + ")"


def render_analysis(report: AnalysisReport) -> str:
    """Human-readable analysis report."""
    lines = [
        f"field: {report.field}",
        f"variables: {', '.join(report.variables)}",
        f"minimal generators: {', '.join(report.generators)}",
        f"e = {report.e}, n = {report.n}, d = {report.d}, c = {report.c}, lhs = {report.lhs}",
    ]

    verdict = f"equipresented: {_yes_no(report.equipresented)}; "
    if report.is_complete_intersection is CIStatus.YES:
        verdict += "complete intersection: yes"
    else:
        verdict += f"complete intersection: {report.is_complete_intersection.value}"
        if report.construction_applicable:
            verdict += "; witness construction applicable"
        else:
            verdict += "; witness construction needs equipresentation or a span bound with large support"
    lines.append(verdict)

    if report.span_dim is not None:
        holds = "holds" if report.large_support else "fails"
        lines.append(f"large support (lhs < s = {report.span_dim}): {holds}")
    for caveat in report.caveats:
        lines.append(f"note: {caveat}")
    return "\n".join(lines) + "\n"


def render_certificate(certificate: Certificate) -> str:
    """Human-readable certificate summary, one line per step."""
    P = certificate.presentation
    lines = [
        f"{certificate.mode.value} certificate over {P.field}: n = {P.n}, d = {P.d}, c = {P.c}",
        f"complete intersection: {certificate.is_complete_intersection.value}",
    ]
    if certificate.span_dim is not None:
        lines.append(f"span bound s = {certificate.span_dim}")

    for step in certificate.steps:
        head = f"step {step.index}:"
        if step.g is not None:
            head += f" g = {step.g},"
        head += f" J = ({', '.join(step.ideal)})"
        lines.append(head)
        lines.append(f"  dim K = {step.kernel_dim}, running dim = {step.running_dim}")
        if step.conclusive_alone:
            lines.append("  this quotient alone is not proxy small")

    if certificate.final_intersection:
        basis = ", ".join(_vector(row) for row in certificate.final_intersection)
        lines.append(f"final intersection: span{{{basis}}}")
    else:
        lines.append("final intersection: 0")
    if not certificate.complete:
        lines.append("transcript is partial: the search stopped early")
    lines.append(f"status: {certificate.status.value} ({STATUS_LABELS[certificate.status]})")
    return "\n".join(lines) + "\n"


def render_verification(report: VerificationReport) -> str:
    """Verdict followed by every failed check."""
    lines = []
    for check in report.checks:
        where = "global" if check.step is None else f"step {check.step}"
        mark = "pass" if check.passed else "FAIL"
        line = f"[{mark}] {where}: {check.name}"
        if not check.passed and check.detail:
            line += f" ({check.detail})"
        lines.append(line)
    failures = report.failures
    if failures:
        lines.append(f"verification failed: {len(failures)} of {len(report.checks)} checks")
    else:
        lines.append(f"verification passed: {len(report.checks)} checks")
    lines.append(f"status: {report.status.value}, final dim = {report.final_dim}")
    return "\n".join(lines) + "\n"
