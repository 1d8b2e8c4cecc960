"""Generalized Hilbert-Kunz functions of pure-power ideals in face rings.

For ``R = K[Delta]`` and ``J = (x_1^{v_1}, ..., x_r^{v_r})`` the colength
``l(R/(J^[q])^k)`` is computed by inclusion-exclusion over the face-ideal
components: each nonempty set ``T`` of components kills the variables in
the union of ``T`` and leaves a polynomial ring on the rest, whose colength
is ``prod(v_i) * q^w * C(k+w-1, w)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Sequence

from .complex import ComplexError, SimplicialComplex, face_ideal_decomposition
from .exactpoly import BPoly, UPoly, binom_in_k, binomial_basis_decompose

MAX_COMPONENTS = 30


def exponent_vector(c: SimplicialComplex, v: Sequence[int] | None = None) -> tuple[int, ...]:
    """Validate ``v`` against ``c``; ``None`` means all ones (the maximal ideal)."""
    if v is None:
        return (1,) * c.num_vertices
    v = tuple(v)
    if len(v) != c.num_vertices:
        raise ComplexError(f"exponent vector has length {len(v)}, expected {c.num_vertices}")
    for i, x in enumerate(v, 1):
        if not isinstance(x, int) or x < 1:
            raise ComplexError(f"exponent v_{i} must be a positive integer, got {x!r}")
    return v


def pure_power_length(w: int, v_prod: int = 1) -> BPoly:
    """Colength of ``(J^[q])^k`` in a polynomial ring on ``w`` variables."""
    if w < 0:
        raise ValueError("w must be nonnegative")
    if w == 0:
        return BPoly.constant(1)
    return BPoly.from_product(UPoly.monomial(w, v_prod, "q"), binom_in_k(w))


def killed_sets(c: SimplicialComplex) -> dict[int, int]:
    """Signed inclusion-exclusion multiplicity of each union of components.

    Maps a bitmask ``U`` to ``sum (-1)^(|T|+1)`` over nonempty component sets
    ``T`` with union ``U``. Accumulated component by component, so the work
    scales with the number of distinct unions rather than ``2^alpha``.
    """
    comps = face_ideal_decomposition(c).masks()
    if len(comps) > MAX_COMPONENTS:
        raise ComplexError(f"{len(comps)} components exceeds the limit of {MAX_COMPONENTS}")
    acc: dict[int, int] = {}
    for p in comps:
        nxt = dict(acc)
        for u, coef in acc.items():
            nxt[u | p] = nxt.get(u | p, 0) - coef
        nxt[p] = nxt.get(p, 0) + 1
        acc = {u: x for u, x in nxt.items() if x}
    return acc


def ghk_polynomial(c: SimplicialComplex, v: Sequence[int] | None = None) -> BPoly:
    """``l(R/(J^[q])^k)`` as an exact polynomial in q and k."""
    v = exponent_vector(c, v)
    total = BPoly()
    for u, coef in killed_sets(c).items():
        survivors = [i for i in range(c.num_vertices) if not u >> i & 1]
        total = total + pure_power_length(len(survivors), prod(v[i] for i in survivors)) * coef
    return total


def multiplicity_e0(c: SimplicialComplex, v: Sequence[int] | None = None) -> int:
    """``e_0(J)``: sum of ``prod(v_i)`` over the facets of maximal size."""
    v = exponent_vector(c, v)
    d = c.dimension
    return sum(prod(v[i - 1] for i in f) for f in c.facets if len(f) == d)


@dataclass(frozen=True)
class CoefficientTable:
    dimension: int
    e: tuple[UPoly, ...]
    limits: tuple[Fraction, ...]
    ehk_powers: UPoly

    def to_json(self) -> dict:
        return {
            "d": self.dimension,
            "e": [str(p) for p in self.e],
            "e_coeffs": [p.to_json() for p in self.e],
            "limits": [str(x) for x in self.limits],
            "ehk_powers": str(self.ehk_powers),
        }


def hilbert_coefficients(c: SimplicialComplex, v: Sequence[int] | None = None) -> CoefficientTable:
    """Hilbert-Samuel coefficients ``e_i(J^[q])`` as polynomials in q.

    ``limits[i]`` is the ``q^d`` coefficient of ``e_i``; ``ehk_powers`` is the
    ``q^d`` part of the colength, read as a polynomial in k.
    """
    d = c.dimension
    ghk = ghk_polynomial(c, v)
    e = binomial_basis_decompose(ghk, d)
    limits = tuple(p.coeff(d) for p in e)
    ehk = ghk.q_coefficient(d)
    assert ehk == binom_in_k(d) * limits[0]
    assert all(x == 0 for x in limits[1:])
    return CoefficientTable(d, tuple(e), limits, ehk)


def ehk_of_powers(c: SimplicialComplex, v: Sequence[int] | None, k: int) -> Fraction:
    """``e_HK(J^k) = e_0(J) * C(k+d-1, d)``."""
    if k < 1:
        raise ValueError("k must be positive")
    d = c.dimension
    return Fraction(multiplicity_e0(c, v) * comb(k + d - 1, d))
