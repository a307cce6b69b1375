import json
from dataclasses import replace

import pytest

from galspec.catalog import lookup
from galspec.certify import (
    INFERENCE_DERIVATIVE, INFERENCE_THREE_BRANCH, certificate_text, certify_family,
    note_totally_imaginary_inference, revalidate,
)


@pytest.fixture(scope="module")
def s5_cert():
    return certify_family("s5-p5", 20000)


def test_s5_certificate(s5_cert):
    c = s5_cert
    assert c.verdict and c.scope == "certified"
    assert str(c.unramified_witness.t0) == "1"
    assert c.unramified_witness.to_dict()["excluded_residues"] == ["0", "inf"]
    assert c.derivative_index == 0
    assert c.three_branch_rule
    assert c.group_evidence.mode == "rigorous"
    assert (2, (2, 3)) in c.group_evidence.witnesses
    assert INFERENCE_DERIVATIVE in c.notes and INFERENCE_THREE_BRANCH in c.notes
    assert revalidate(c)


def test_certificate_text_is_canonical_json(s5_cert):
    text = certificate_text(s5_cert)
    data = json.loads(text)
    assert data["verdict"] is True
    assert list(data) == sorted(data)
    assert text == certificate_text(certify_family("s5-p5", 20000))


def test_tampered_certificate_fails_revalidation(s5_cert):
    bad = replace(s5_cert, derivative_index=1)
    assert not revalidate(bad)


@pytest.mark.slow
def test_psl2f11_certificate():
    c = certify_family("psl2f11-p11", 20000)
    assert c.verdict
    assert c.scope == "certified modulo group identification"
    assert c.uniform_derivative_index is not None
    assert c.group_evidence.matched_profile == "PSL2F11-order-spectrum"
    assert not c.three_branch_rule
    assert all(chk.match for chk in c.published_constants_report)
    assert revalidate(c)


@pytest.mark.slow
def test_psl2f7_lsy_certificate():
    c = certify_family("psl2f7-lsy", 20000)
    assert c.verdict
    assert c.group_evidence.matched_profile == "PSL2F7-deg7"
    assert revalidate(c)


@pytest.mark.slow
def test_psl2f7_printed_polynomial_is_not_psl2():
    """Evidence for the degree-7 family as printed rules out PSL2(F7)."""
    c = certify_family("psl2f7-p7", 20000)
    assert dict(c.group_evidence.distances)["PSL2F7-deg7"] is None
    assert not c.verdict
    assert c.unramified_witness.verdict
    assert all(chk.match for chk in c.published_constants_report)


def test_seed_entry_rejected():
    with pytest.raises(ValueError, match="no bivariate polynomial"):
        certify_family("a6-seed")
    with pytest.raises(KeyError):
        certify_family("nope")


def test_inference_note(s5_cert):
    bare = replace(s5_cert, notes=(), derivative_index=None, three_branch_rule=False)
    assert note_totally_imaginary_inference(bare) is bare
    three = note_totally_imaginary_inference(replace(bare, three_branch_rule=True))
    assert three.notes == (INFERENCE_THREE_BRANCH,)
    deriv = note_totally_imaginary_inference(replace(bare, derivative_index=0))
    assert deriv.notes == (INFERENCE_DERIVATIVE,)
    assert lookup("s5-p5").branch_count == 3
