"""Stability audits and the Smirnov-conjecture counterexample detector.

Huneke-Ooishi: in a Cohen-Macaulay local ring an ideal is stable (reduction
number one) iff ``e_1 = e_0 - l(R/I)``. Smirnov's conjectured equivalence
replaces the right side with ``lim e_1(I^[q])/q^d = e_0 - e_HK``, which for
pure-power ideals in face rings always holds (both sides vanish). So any
non-stable such ideal is a counterexample.

CM-ness is never proven here; verdicts carry the certificate they rest on.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .complex import SimplicialComplex, h_vector, is_shellable
from .engine import (
    CoefficientTable,
    exponent_vector,
    ehk_of_powers,
    ghk_polynomial,
    hilbert_coefficients,
    multiplicity_e0,
)
from .limits import PowerTable

CM_ASSUMPTIONS = ("CM", "depthG>=d-1", "minimal-reduction")


def stability_check(e0, e1, colength) -> bool:
    """``e1 == e0 - colength``; meaningful as stability only over a CM ring."""
    return Fraction(e1) == Fraction(e0) - Fraction(colength)


def rossi_valla_check(c: SimplicialComplex, v: Sequence[int] | None = None) -> bool:
    """Does ``e_0(J^[q]) = l(I/I^2) + (1-d) l(R/I) + 1`` hold identically in q?

    Here ``I = J^[q]``; both sides are polynomials in q built from the
    closed-form colengths at k = 1 and k = 2.
    """
    d = c.dimension
    ghk = ghk_polynomial(c, v)
    one, two = ghk.at_k(1), ghk.at_k(2)
    lhs = hilbert_coefficients(c, v).e[0]
    rhs = (two - one) + one * (1 - d) + 1
    return lhs == rhs


@dataclass(frozen=True)
class ReductionCandidate:
    value: Optional[int]
    certificate: str
    reason: str = ""


def cm_certificate(c: SimplicialComplex, assume_cm: bool = False, max_facets: int = 12) -> str:
    """``shellable`` (pure and shellable, hence CM), ``assumed`` or ``unknown``."""
    if c.is_pure() and is_shellable(c, max_facets).status == "yes":
        return "shellable"
    return "assumed" if assume_cm else "unknown"


def reduction_number_candidate(
    c: SimplicialComplex, assume_cm: bool = False, max_facets: int = 12
) -> ReductionCandidate:
    """h-polynomial degree, reported only with a CM certificate behind it."""
    cert = cm_certificate(c, assume_cm, max_facets)
    if cert == "unknown":
        return ReductionCandidate(None, cert, "no CM certificate")
    return ReductionCandidate(h_vector(c).degree, cert)


@dataclass(frozen=True)
class AuditReport:
    e0: int
    e1_at_q1: Fraction
    colength: int
    stable: bool
    stable_all_q: bool
    limit_identity_holds: bool
    conjecture_status: str
    rossi_valla_holds: bool
    cm_certificate: str
    verdict_basis: str
    candidate_reduction_number: Optional[int]
    reduction_reason: str
    ghk: str
    ghk_expanded: str
    coefficients: CoefficientTable

    def to_json(self) -> dict:
        out = asdict(self)
        out["e1_at_q1"] = str(self.e1_at_q1)
        out["coefficients"] = self.coefficients.to_json()
        return out


def smirnov_audit(
    c: SimplicialComplex,
    v: Sequence[int] | None = None,
    assume_cm: bool = False,
    max_facets: int = 12,
) -> AuditReport:
    v = exponent_vector(c, v)
    ghk = ghk_polynomial(c, v)
    table = hilbert_coefficients(c, v)
    e0 = multiplicity_e0(c, v)
    e1 = table.e[1](1)
    colength = ghk(1, 1)
    stable = stability_check(e0, e1, colength)
    # per-q: e_1(q) = e_0(q) - l(R/J^[q]) as polynomials
    stable_all_q = table.e[1] == table.e[0] - ghk.at_k(1)
    limit_identity = table.limits[1] == e0 - ehk_of_powers(c, v, 1)
    if not limit_identity:
        raise AssertionError(f"limit identity failed for {c}: L_1 = {table.limits[1]}")
    cert = cm_certificate(c, assume_cm, max_facets)
    red = reduction_number_candidate(c, assume_cm, max_facets)
    return AuditReport(
        e0=e0,
        e1_at_q1=e1,
        colength=int(colength),
        stable=stable,
        stable_all_q=stable_all_q,
        limit_identity_holds=limit_identity,
        conjecture_status="counterexample" if limit_identity and not stable else "consistent",
        rossi_valla_holds=rossi_valla_check(c, v),
        cm_certificate=cert,
        verdict_basis="arithmetic criterion only" if cert == "unknown" else "Huneke-Ooishi",
        candidate_reduction_number=red.value,
        reduction_reason=red.reason,
        ghk=ghk.binomial_form(),
        ghk_expanded=ghk.expanded(),
        coefficients=table,
    )


def power_table_from_engine(
    c: SimplicialComplex,
    v: Sequence[int] | None = None,
    r: int | None = None,
    assume_cm: bool = False,
) -> PowerTable:
    """PowerTable with ``e0``, ``e_HK(J^n)`` from the engine.

    ``r`` defaults to the h-vector candidate; that is only a reduction number
    for CM face rings, which is why the table records its assumptions.
    """
    if r is None:
        r = h_vector(c).degree
    e0 = multiplicity_e0(c, v)
    cert = cm_certificate(c, assume_cm)
    assumptions = CM_ASSUMPTIONS if cert != "unknown" else ()
    return PowerTable(
        d=c.dimension,
        r=r,
        e0=Fraction(e0),
        ehk={n: ehk_of_powers(c, v, n) for n in range(1, r + 1)},
        assumptions=assumptions,
    )
