"""Certificate construction, replay-checking, wire format, tamper detection."""

import dataclasses
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from anthyphairesis import (
    CertificateError,
    CertificateParseError,
    CertificateSemanticError,
    DomainError,
    FiniteAnthCertificate,
    ForcesEven,
    MalformedCertificateError,
    NoCoprimeSolution,
    ParityCertificate,
    PeriodicAnthCertificate,
    QuarterDescent,
    ResidueDescentCertificate,
    SquaresMod,
    anthyphairesis,
    check,
    finite_anth_certificate,
    make_sqrt,
    parity_steps,
    parse,
    periodic_anth_certificate,
    residue_steps,
    serialize,
    to_document,
    verify_step,
)
from conftest import iter_mutations


def sqrt_cert(C):
    return periodic_anth_certificate(anthyphairesis(make_sqrt(C), Fraction(1)))


# --- construction and checking ------------------------------------------------


def test_finite_builder_example():
    cert = finite_anth_certificate(17, 5)
    assert cert == FiniteAnthCertificate(17, 5, (3, 2, 2), 1)
    assert check(cert)
    cert = finite_anth_certificate(170, 50)
    assert cert.gcd == 10
    assert check(cert)
    with pytest.raises(DomainError):
        finite_anth_certificate(5, 5)
    with pytest.raises(DomainError):
        finite_anth_certificate(5, 0)


def test_periodic_builder_example():
    cert = sqrt_cert(17)
    assert cert.C == 17
    assert cert.preperiod_quotients == (4,)
    assert cert.period_quotients == (8,)
    assert cert.witness_state == (4, 1, 17)
    assert cert.recurrence_offset == 1
    assert check(cert)


def test_periodic_builder_rejects_unsuitable_traces():
    with pytest.raises(DomainError):
        periodic_anth_certificate(anthyphairesis(Fraction(17), Fraction(5)))
    # periodic, but the reduced ratio (1 + sqrt(3)) : sqrt(3) does not start
    # at (0 + sqrt(C))/1, so the schema cannot replay it
    from anthyphairesis import QuadraticSurd

    offset = anthyphairesis(QuadraticSurd(1, 1, 3), make_sqrt(3))
    with pytest.raises(DomainError):
        periodic_anth_certificate(offset)


def test_periodic_builder_accepts_disguised_sqrt():
    # sqrt(3) against 1/2 reduces to sqrt(12) against 1 exactly
    cert = periodic_anth_certificate(anthyphairesis(make_sqrt(3), Fraction(1, 2)))
    assert cert.C == 12
    assert check(cert)


def test_check_catches_wrong_period():
    cert = sqrt_cert(17)
    assert not check(dataclasses.replace(cert, period_quotients=(7,)))
    assert not check(dataclasses.replace(cert, preperiod_quotients=(5,)))
    assert not check(dataclasses.replace(cert, recurrence_offset=2))
    assert not check(dataclasses.replace(cert, witness_state=(3, 1, 17)))
    assert not check(dataclasses.replace(cert, C=18))


def test_check_catches_wrong_finite_chain():
    cert = finite_anth_certificate(17, 5)
    assert not check(dataclasses.replace(cert, gcd=2))
    assert not check(dataclasses.replace(cert, quotients=(3, 2, 1, 1)))
    assert not check(dataclasses.replace(cert, m=18))


def test_check_catches_tampered_steps():
    parity = ParityCertificate(2, 1, parity_steps())
    assert check(parity)
    assert not check(dataclasses.replace(parity, steps=parity_steps()[:-1]))
    assert not check(dataclasses.replace(parity, C=3))
    assert not check(dataclasses.replace(parity, reduction_factor=2))

    residue = ResidueDescentCertificate(12, "4n", (12, 3), residue_steps((12, 3)))
    assert check(residue)
    assert not check(dataclasses.replace(residue, descent_chain=(12,)))
    assert not check(dataclasses.replace(residue, class_label="4n+3"))
    # an 8k+1 head is exactly what this certificate kind cannot establish
    bogus = ResidueDescentCertificate(17, "8k+1", (17,), residue_steps((3,)))
    assert not check(bogus)


def test_check_rejects_malformed_objects():
    with pytest.raises(MalformedCertificateError):
        check("not a certificate")
    with pytest.raises(MalformedCertificateError):
        check(FiniteAnthCertificate(17, 5, (), 1))
    with pytest.raises(MalformedCertificateError):
        check(FiniteAnthCertificate(17, 5, (3, "2", 2), 1))


def test_step_verifiers():
    assert verify_step(SquaresMod(4, (0, 1)))
    assert verify_step(SquaresMod(8, (0, 1, 4)))
    assert not verify_step(SquaresMod(4, (0, 2)))
    assert not verify_step(SquaresMod(8, (0, 1)))
    assert not verify_step(SquaresMod(4, (1, 0)))  # canonical order required
    assert verify_step(ForcesEven(4, 2, "lhs"))
    assert verify_step(ForcesEven(8, 6, "lhs"))
    assert not verify_step(ForcesEven(4, 1, "lhs"))  # m^2 = n^2 mod 4 has odd solutions
    assert not verify_step(ForcesEven(3, 2, "lhs"))  # odd modulus proves nothing here
    assert verify_step(NoCoprimeSolution(4, 2))
    assert verify_step(NoCoprimeSolution(8, 5))
    assert not verify_step(NoCoprimeSolution(4, 1))
    assert verify_step(QuarterDescent(12, 3))
    assert not verify_step(QuarterDescent(12, 4))
    assert not verify_step(QuarterDescent(2, 0))


# --- wire format ----------------------------------------------------------------


def test_document_layout():
    doc = to_document(sqrt_cert(3))
    assert doc["kind"] == "periodic_anth"
    assert doc["version"] == 1
    assert doc["C"] == "3"
    assert doc["preperiod_quotients"] == ["1"]
    assert doc["period_quotients"] == ["1", "2"]
    assert doc["witness_state"] == ["1", "2", "3"]
    assert doc["recurrence_offset"] == "1"


def test_all_integers_ride_as_strings():
    def walk(node):
        if isinstance(node, dict):
            for k, v in node.items():
                assert isinstance(k, str)
                if k == "version":
                    assert type(v) is int
                else:
                    walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)
        else:
            assert isinstance(node, str), f"unexpected leaf {node!r}"

    for cert in (
        sqrt_cert(13),
        finite_anth_certificate(170, 50),
        ParityCertificate(8, 2, parity_steps()),
        ResidueDescentCertificate(48, "4n", (48, 12, 3), residue_steps((48, 12, 3))),
    ):
        walk(to_document(cert))


def test_serialization_is_deterministic_text():
    cert = sqrt_cert(7)
    text = serialize(cert)
    assert text.endswith("\n")
    assert serialize(parse(text)) == text
    assert json.loads(text)["kind"] == "periodic_anth"


def test_corpus_round_trip(certificate_corpus):
    assert len(certificate_corpus) == 200
    kinds = {type(c).__name__ for c in certificate_corpus}
    assert kinds == {
        "FiniteAnthCertificate",
        "PeriodicAnthCertificate",
        "ParityCertificate",
        "ResidueDescentCertificate",
    }
    for cert in certificate_corpus:
        assert check(cert)
        again = parse(serialize(cert))
        assert again == cert
        assert check(again)


@given(st.integers(1, 10**12), st.integers(1, 10**12))
def test_finite_round_trip_property(a, b):
    if a == b:
        b = a + 1
    m, n = max(a, b), min(a, b)
    cert = finite_anth_certificate(m, n)
    assert parse(serialize(cert)) == cert
    assert check(cert)


# --- strict parsing --------------------------------------------------------------


def good_doc():
    return to_document(sqrt_cert(17))


def test_parse_rejects_structural_garbage():
    with pytest.raises(CertificateParseError):
        parse("{")
    with pytest.raises(CertificateParseError):
        parse("[]")
    with pytest.raises(CertificateParseError):
        parse('"periodic_anth"')
    with pytest.raises(CertificateParseError):
        parse(b"{}")  # type: ignore[arg-type]
    truncated = serialize(sqrt_cert(17))[:-40]
    with pytest.raises(CertificateParseError):
        parse(truncated)


def test_parse_rejects_kind_and_version_problems():
    doc = good_doc()
    del doc["kind"]
    with pytest.raises(CertificateParseError):
        parse(json.dumps(doc))
    doc = good_doc()
    doc["kind"] = "telepathy"
    with pytest.raises(CertificateParseError):
        parse(json.dumps(doc))
    for bad_version in (2, "1", 1.0, True, None):
        doc = good_doc()
        doc["version"] = bad_version
        with pytest.raises(CertificateParseError):
            parse(json.dumps(doc))


def test_parse_rejects_field_set_changes():
    doc = good_doc()
    doc["extra"] = "1"
    with pytest.raises(CertificateParseError):
        parse(json.dumps(doc))
    doc = good_doc()
    del doc["recurrence_offset"]
    with pytest.raises(CertificateParseError):
        parse(json.dumps(doc))
    text = serialize(sqrt_cert(3)).rstrip()
    # graft a duplicate field onto otherwise-valid JSON
    dup = text[:-1].rstrip().rstrip("}") + ', "C": "3"}'
    with pytest.raises(CertificateParseError):
        parse(dup)


def test_parse_rejects_noncanonical_numerals():
    for bad in ("03", "+3", "3.0", " 3", "3 ", "", "-0", "0x3"):
        doc = good_doc()
        doc["C"] = bad
        with pytest.raises(CertificateParseError):
            parse(json.dumps(doc))
    doc = good_doc()
    doc["C"] = 17  # JSON number instead of decimal string
    with pytest.raises(CertificateParseError):
        parse(json.dumps(doc))
    doc = good_doc()
    doc["preperiod_quotients"] = [4]
    with pytest.raises(CertificateParseError):
        parse(json.dumps(doc))


def test_parse_semantic_layer():
    doc = good_doc()
    doc["witness_state"] = ["4", "0", "17"]  # zero denominator
    with pytest.raises(CertificateSemanticError):
        parse(json.dumps(doc))
    doc = good_doc()
    doc["witness_state"] = ["4", "1", "16"]  # square radicand
    with pytest.raises(CertificateSemanticError):
        parse(json.dumps(doc))
    doc = good_doc()
    doc["period_quotients"] = []
    with pytest.raises(CertificateSemanticError):
        parse(json.dumps(doc))
    doc = good_doc()
    doc["period_quotients"] = ["0"]
    with pytest.raises(CertificateSemanticError):
        parse(json.dumps(doc))
    doc = to_document(finite_anth_certificate(17, 5))
    doc["n"] = "17"
    with pytest.raises(CertificateSemanticError):
        parse(json.dumps(doc))
    doc = to_document(finite_anth_certificate(17, 5))
    doc["gcd"] = "0"
    with pytest.raises(CertificateSemanticError):
        parse(json.dumps(doc))
    doc = to_document(
        ResidueDescentCertificate(12, "4n", (12, 3), residue_steps((12, 3)))
    )
    doc["class_label"] = "5n"
    with pytest.raises(CertificateSemanticError):
        parse(json.dumps(doc))


def test_parse_accepts_8k1_label_but_check_rejects():
    doc = to_document(
        ResidueDescentCertificate(12, "4n", (12, 3), residue_steps((12, 3)))
    )
    doc["class_label"] = "8k+1"
    cert = parse(json.dumps(doc))
    assert not check(cert)


# --- tamper detection -------------------------------------------------------------


def test_every_single_field_nudge_is_caught():
    # exhaustive +-1 tampering on a small mixed set; the full 200-certificate
    # corpus sweep lives in the acceptance suite
    targets = [
        sqrt_cert(3),
        sqrt_cert(17),
        finite_anth_certificate(17, 5),
        ParityCertificate(2, 1, parity_steps()),
        ResidueDescentCertificate(12, "4n", (12, 3), residue_steps((12, 3))),
    ]
    mutants = 0
    for cert in targets:
        for text in iter_mutations(to_document(cert)):
            mutants += 1
            try:
                mutant = parse(text)
            except CertificateError:
                continue
            assert not check(mutant), f"undetected tamper: {text}"
    assert mutants > 90  # ~2 mutants per integer field across the five targets
