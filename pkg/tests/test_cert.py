"""Tests for certificate status rules, assembly and independent verification."""

import pytest

from proxysmall.cert import derive_status, dump_certificate, load_certificate, manual_certificate, verify
from proxysmall.construct import construct_witnesses, monomial_witnesses
from proxysmall.examples import load_example, presentation_of
from proxysmall.gb import Ideal
from proxysmall.models import CertificateMode, CertificateStatus, CIStatus, SearchConfig
from proxysmall.poly import parse
from proxysmall.scalar import FieldSpec
from proxysmall.support import build_presentation


class TestDeriveStatus:
    def test_complete_intersection_first(self):
        status = derive_status(CertificateMode.TRUNCATED, CIStatus.YES, 2, 0, 3, 1)
        assert status is CertificateStatus.COMPLETE_INTERSECTION

    def test_no_steps(self):
        assert derive_status(CertificateMode.MANUAL, CIStatus.NO, None, 3, 3, 0) is CertificateStatus.INCONCLUSIVE

    def test_full_support_before_bounded(self):
        status = derive_status(CertificateMode.TRUNCATED, CIStatus.NO, 3, 2, 3, 1)
        assert status is CertificateStatus.FULL_SUPPORT

    def test_bounded_before_equigenerated(self):
        status = derive_status(CertificateMode.MANUAL, CIStatus.NO, 2, 0, 3, 2)
        assert status is CertificateStatus.BOUNDED

    def test_equigenerated(self):
        status = derive_status(CertificateMode.ALGORITHM, CIStatus.NO, None, 0, 5, 5)
        assert status is CertificateStatus.EQUIGENERATED

    def test_too_large(self):
        status = derive_status(CertificateMode.ALGORITHM, CIStatus.NO, 2, 2, 5, 3)
        assert status is CertificateStatus.INCONCLUSIVE


@pytest.fixture(scope="module")
def short_gorenstein_bundle():
    return load_example("shortgor3")


@pytest.fixture(scope="module")
def thomas_bundle():
    return load_example("thomas")


class TestBundledCertificates:
    def test_short_gorenstein_passes(self, short_gorenstein_bundle):
        C = short_gorenstein_bundle.certificate
        report = verify(C, presentation_of(short_gorenstein_bundle.ring))
        assert report.passed, [c.name for c in report.failures]
        assert C.final_dim == 0
        assert [s.running_dim for s in C.steps] == [4, 3, 2, 1, 0]

    def test_thomas_passes(self, thomas_bundle):
        C = thomas_bundle.certificate
        assert verify(C, presentation_of(thomas_bundle.ring)).passed
        assert C.steps[0].kernel == [["0", "1", "0"]]
        assert C.final_dim == 0
        assert all(step.conclusive_alone for step in C.steps)
        assert C.status is CertificateStatus.BOUNDED

    def test_thomas_over_prime_field(self):
        P = build_presentation(FieldSpec.prime(32003), ["x", "y", "z"], ["x^2+y^2+z^2", "xyz", "x^3"])
        ideals = [
            Ideal([parse(t, P.ring) for t in ["x^2+y^2+z^2", "y", "x^3"]], P.ring),
            Ideal([parse(t, P.ring) for t in ["x^2+2z^2", "xyz", "y+z"]], P.ring),
        ]
        C = manual_certificate(P, ideals, span_dim=2)
        assert C.steps[0].kernel == [["0", "1", "0"]]
        assert C.final_dim == 0
        assert verify(C, P).passed

    def test_monomial_hyperplanes(self):
        bundle = load_example("monomial4")
        C = bundle.certificate
        assert C.steps[0].kernel_dim == 4
        assert all(row[4] == "0" for row in C.steps[1].kernel)
        assert all(row[3] == "0" for row in C.steps[2].kernel)
        assert C.steps[1].kernel_dim == C.steps[2].kernel_dim == 4
        assert C.steps[2].running_dim == 2
        assert verify(C, presentation_of(bundle.ring)).passed


class TestManualCertificate:
    def test_empty_list(self, short_gorenstein_bundle):
        P = presentation_of(short_gorenstein_bundle.ring)
        C = manual_certificate(P, [])
        assert C.final_dim == 5
        assert C.status is CertificateStatus.INCONCLUSIVE

    def test_serialised_form_is_stable(self, short_gorenstein_bundle):
        text = dump_certificate(short_gorenstein_bundle.certificate)
        assert dump_certificate(load_certificate(text)) == text


class TestTampering:
    def _names(self, report):
        return {(c.step, c.name) for c in report.failures}

    def test_dropped_linear_form(self, short_gorenstein_bundle):
        C = short_gorenstein_bundle.certificate.model_copy(deep=True)
        C.steps[0].ideal = C.steps[0].ideal[:2]
        report = verify(C, presentation_of(short_gorenstein_bundle.ring))
        assert not report.passed
        assert (1, "artinian") in self._names(report)

    def test_altered_kernel_entry(self, short_gorenstein_bundle):
        C = short_gorenstein_bundle.certificate.model_copy(deep=True)
        C.steps[0].kernel[0][4] = "2"
        report = verify(C, presentation_of(short_gorenstein_bundle.ring))
        assert (1, "kernel") in self._names(report)

    def test_wrong_status(self, thomas_bundle):
        C = thomas_bundle.certificate.model_copy(update={"status": CertificateStatus.EQUIGENERATED})
        report = verify(C, presentation_of(thomas_bundle.ring))
        assert (None, "status") in self._names(report)

    def test_other_ring(self, short_gorenstein_bundle, thomas_bundle):
        report = verify(thomas_bundle.certificate, presentation_of(short_gorenstein_bundle.ring))
        assert not report.passed
        assert (None, "presentation") in self._names(report)

    def test_partial_transcript(self, short_gorenstein_bundle):
        C = short_gorenstein_bundle.certificate.model_copy(update={"complete": False})
        report = verify(C, presentation_of(short_gorenstein_bundle.ring))
        assert (None, "complete") in self._names(report)

    def test_algorithm_steps_without_g(self, short_gorenstein_bundle):
        P = presentation_of(short_gorenstein_bundle.ring)
        C = construct_witnesses(P, SearchConfig(seed=1))
        assert verify(C, P).passed
        for step in C.steps:
            step.g = None
            step.coordinates = None
            step.linear_forms = []
        report = verify(C, P)
        assert not report.passed
        assert {(step.index, "g-recorded") for step in C.steps} <= self._names(report)

    def test_monomial_step_without_coordinates(self):
        P = build_presentation(FieldSpec.rational(), ["x", "y", "z"], ["xy", "yz", "xz"])
        C = monomial_witnesses(P)
        C.steps[1].coordinates = None
        report = verify(C, P)
        assert self._names(report) == {(2, "g-recorded")}

    def test_unit_ideal_step_is_not_artinian(self, thomas_bundle):
        C = thomas_bundle.certificate.model_copy(deep=True)
        C.steps[0].ideal = ["1"]
        report = verify(C, presentation_of(thomas_bundle.ring))
        assert not report.passed
        assert (1, "artinian") in self._names(report)
        assert (1, "m-primary") not in {(c.step, c.name) for c in report.checks}
