"""Exact anthyphairesis over rationals and quadratic surds.

Reciprocal subtraction run with exact arithmetic: finite chains certify
commensurability (and yield the gcd / common measure), state recurrence in
the quadratic-surd walk certifies incommensurability.  Alongside the engine
live the classical one-off proof routes (parity, squares mod 8) and
checkable certificates for all of it.
"""

from .convergents import Convergent, convergents, pell_residual, side_diameter
from .certificates import (
    Certificate,
    CertificateError,
    CertificateParseError,
    CertificateSemanticError,
    FiniteAnthCertificate,
    ForcesEven,
    MalformedCertificateError,
    NoCoprimeSolution,
    ParityCertificate,
    PeriodicAnthCertificate,
    QuarterDescent,
    ResidueDescentCertificate,
    SquaresMod,
    Step,
    check,
    descent_chain,
    finite_anth_certificate,
    from_document,
    parity_steps,
    parse,
    periodic_anth_certificate,
    residue_class_label,
    residue_steps,
    serialize,
    to_document,
    verify_step,
)
from .engine import (
    AnthTrace,
    Commensurable,
    EventuallyPeriodic,
    Finite,
    Incommensurable,
    anthyphairesis,
    number_to_number,
    quotient_prefix,
    remainder_sequence,
    verdict,
)
from .errors import BudgetError, DomainError, InternalInvariantError
from .euclid import (
    NatAnthResult,
    anth_nat,
    gcd_of,
    reconstruct_from_quotients,
    scale_invariance_check,
)
from .reconstructions import (
    Inconclusive,
    NotApplicable,
    Proved,
    TableRow,
    modern_oracle,
    parity_proof,
    residue_prover,
    theaetetus_squaring,
    theodorus_table,
)
from .surd import (
    Magnitude,
    QFieldElement,
    QuadraticSurd,
    anth_step,
    floor_of,
    isqrt,
    make_sqrt,
    sign_of,
)

__version__ = "0.1.0"

__all__ = [
    "AnthTrace",
    "BudgetError",
    "Certificate",
    "CertificateError",
    "CertificateParseError",
    "CertificateSemanticError",
    "Commensurable",
    "Convergent",
    "DomainError",
    "EventuallyPeriodic",
    "Finite",
    "FiniteAnthCertificate",
    "ForcesEven",
    "Inconclusive",
    "Incommensurable",
    "InternalInvariantError",
    "Magnitude",
    "MalformedCertificateError",
    "NatAnthResult",
    "NoCoprimeSolution",
    "NotApplicable",
    "ParityCertificate",
    "PeriodicAnthCertificate",
    "Proved",
    "QFieldElement",
    "QuadraticSurd",
    "QuarterDescent",
    "ResidueDescentCertificate",
    "SquaresMod",
    "Step",
    "TableRow",
    "anth_nat",
    "anth_step",
    "anthyphairesis",
    "check",
    "convergents",
    "descent_chain",
    "finite_anth_certificate",
    "floor_of",
    "from_document",
    "gcd_of",
    "isqrt",
    "make_sqrt",
    "modern_oracle",
    "number_to_number",
    "parity_proof",
    "parity_steps",
    "parse",
    "pell_residual",
    "periodic_anth_certificate",
    "quotient_prefix",
    "reconstruct_from_quotients",
    "remainder_sequence",
    "residue_class_label",
    "residue_prover",
    "residue_steps",
    "scale_invariance_check",
    "serialize",
    "side_diameter",
    "sign_of",
    "theaetetus_squaring",
    "theodorus_table",
    "to_document",
    "verdict",
    "verify_step",
]
