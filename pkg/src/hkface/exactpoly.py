"""Exact rational polynomials in the formal variables q and k.

Two value types live here: :class:`UPoly`, a univariate polynomial tagged
with its variable name, and :class:`BPoly`, a bivariate polynomial whose
terms are keyed by ``(q_degree, k_degree)``. Both are immutable and carry
:class:`fractions.Fraction` coefficients only.

The binomial basis ``C(k+b-1, b)`` (``binom_in_k``) is what Hilbert-Samuel
coefficients are read off in; ``binomial_basis_decompose`` performs that
change of basis exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


def _frac(x: Number | str) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(parts: list[tuple[Fraction, str]]) -> str:
    """Join signed (coefficient, monomial) pairs as ``a*m - b*n + c``."""
    if not parts:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(parts):
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_fmt_coeff(mag)}*{mono}"
        else:
            body = _fmt_coeff(mag)
        if idx == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


class UPoly:
    """Univariate polynomial over Q in a named variable (``"q"`` or ``"k"``)."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable[Number] = (), var: str = "q"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.var = var
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Number, var: str = "q") -> "UPoly":
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c: Number = 1, var: str = "q") -> "UPoly":
        return cls([0] * degree + [c], var)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def _check(self, other: "UPoly") -> None:
        if self.coeffs and other.coeffs and self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _lift(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            self._check(other)
            return other
        return UPoly.constant(other, self.var)

    def __add__(self, other) -> "UPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self.coeff(i) + other.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "UPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            c = _frac(other)
            return UPoly([c * a for a in self.coeffs], self.var)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out, self.var)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs and (not self.coeffs or self.var == other.var)
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var if self.coeffs else "", self.coeffs))

    def __repr__(self) -> str:
        return f"UPoly({self})"

    def __str__(self) -> str:
        parts = [(c, _power(self.var, i)) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return _join_terms(parts)

    def to_json(self) -> list[str]:
        """Coefficients by ascending degree as exact strings."""
        return [_fmt_coeff(c) for c in self.coeffs]


class BPoly:
    """Bivariate polynomial over Q; terms map ``(q_deg, k_deg)`` to a coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Number] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent ({a}, {b})")
            c = _frac(c)
            if c:
                clean[(a, b)] = clean.get((a, b), Fraction(0)) + c
        self.terms: dict[tuple[int, int], Fraction] = {m: c for m, c in clean.items() if c}

    @classmethod
    def constant(cls, c: Number) -> "BPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_product(cls, qpart: UPoly, kpart: UPoly) -> "BPoly":
        """Build ``qpart(q) * kpart(k)``."""
        terms: dict[tuple[int, int], Fraction] = {}
        for a, ca in enumerate(qpart.coeffs):
            for b, cb in enumerate(kpart.coeffs):
                if ca and cb:
                    terms[(a, b)] = terms.get((a, b), Fraction(0)) + ca * cb
        return cls(terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree_q(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    @property
    def degree_k(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    def evaluate(self, q: Number, k: Number) -> Fraction:
        q, k = _frac(q), _frac(k)
        return sum((c * q**a * k**b for (a, b), c in self.terms.items()), Fraction(0))

    __call__ = evaluate

    def k_coefficient(self, b: int) -> UPoly:
        """Coefficient of ``k^b`` as a polynomial in q."""
        deg = self.degree_q
        return UPoly([self.terms.get((a, b), 0) for a in range(deg + 1)], "q")

    def q_coefficient(self, a: int) -> UPoly:
        """Coefficient of ``q^a`` as a polynomial in k."""
        deg = self.degree_k
        return UPoly([self.terms.get((a, b), 0) for b in range(deg + 1)], "k")

    def at_k(self, k0: Number) -> UPoly:
        """Substitute ``k = k0``, leaving a polynomial in q."""
        k0 = _frac(k0)
        out: dict[int, Fraction] = {}
        for (a, b), c in self.terms.items():
            out[a] = out.get(a, Fraction(0)) + c * k0**b
        deg = max(out, default=-1)
        return UPoly([out.get(a, 0) for a in range(deg + 1)], "q")

    def at_q(self, q0: Number) -> UPoly:
        """Substitute ``q = q0``, leaving a polynomial in k."""
        q0 = _frac(q0)
        out: dict[int, Fraction] = {}
        for (a, b), c in self.terms.items():
            out[b] = out.get(b, Fraction(0)) + c * q0**a
        deg = max(out, default=-1)
        return UPoly([out.get(b, 0) for b in range(deg + 1)], "k")

    def _lift(self, other) -> "BPoly":
        return other if isinstance(other, BPoly) else BPoly.constant(other)

    def __add__(self, other) -> "BPoly":
        other = self._lift(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return BPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "BPoly":
        return BPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "BPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "BPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "BPoly":
        if not isinstance(other, BPoly):
            c = _frac(other)
            return BPoly({m: c * v for m, v in self.terms.items()})
        terms: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                m = (a1 + a2, b1 + b2)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return BPoly(terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, BPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == BPoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BPoly({self.expanded()})"

    def __str__(self) -> str:
        return self.expanded()

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        return [(a, b, self.terms[(a, b)]) for a, b in sorted(self.terms, reverse=True)]

    def expanded(self) -> str:
        """Monomial form, terms by (q-degree desc, k-degree desc)."""
        parts = []
        for a, b, c in self.sorted_terms():
            mono = "*".join(p for p in (_power("q", a), _power("k", b)) if p)
            parts.append((c, mono))
        return _join_terms(parts)

    def binomial_form(self) -> str:
        """Render as a combination of ``q^a * C(k+b-1, b)``.

        ``C(k,1)`` prints as ``k`` and ``C(k-1,0)`` is omitted.
        """
        parts = []
        for (a, b), c in sorted(to_binomial_basis(self).items(), reverse=True):
            if b == 0:
                binom = ""
            elif b == 1:
                binom = "k"
            else:
                binom = f"C(k+{b - 1},{b})"
            mono = "*".join(p for p in (_power("q", a), binom) if p)
            parts.append((c, mono))
        return _join_terms(parts)

    def to_json(self) -> list[list]:
        return [[a, b, _fmt_coeff(c)] for a, b, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Sequence[Sequence]) -> "BPoly":
        return cls({(int(a), int(b)): Fraction(str(c)) for a, b, c in data})


def binom_in_k(b: int) -> UPoly:
    """``C(k+b-1, b) = k(k+1)...(k+b-1)/b!`` as a polynomial in k."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    p = UPoly.constant(1, "k")
    for j in range(b):
        p = p * UPoly([j, 1], "k")
    return p * Fraction(1, factorial(b))


def to_binomial_basis(p: BPoly) -> dict[tuple[int, int], Fraction]:
    """Coefficients ``c[(a, b)]`` with ``p = sum c * q^a * C(k+b-1, b)``."""
    out: dict[tuple[int, int], Fraction] = {}
    rest = p
    for b in range(p.degree_k, -1, -1):
        lead = rest.k_coefficient(b) * factorial(b)
        if lead.is_zero():
            continue
        for a, c in enumerate(lead.coeffs):
            if c:
                out[(a, b)] = c
        rest = rest - BPoly.from_product(lead, binom_in_k(b))
    assert rest.is_zero()
    return out


def _as_bpoly(p: BPoly | Sequence[UPoly]) -> BPoly:
    if isinstance(p, BPoly):
        return p
    acc = BPoly()
    for b, coeff in enumerate(p):
        acc = acc + BPoly.from_product(coeff, UPoly.monomial(b, 1, "k"))
    return acc


def binomial_basis_decompose(p: BPoly | Sequence[UPoly], d: int) -> list[UPoly]:
    """Solve ``p(k) = sum_i (-1)^i c_i(q) C(k+d-1-i, d-i)`` for ``c_0..c_d``.

    ``p`` is either a :class:`BPoly` or the list of its k-coefficients
    (polynomials in q, indexed by k-degree). The basis is triangular in
    k-degree, so back-substitution from the top degree gives the unique
    solution.
    """
    p = _as_bpoly(p)
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if p.degree_k > d:
        raise ValueError(f"k-degree {p.degree_k} exceeds dimension {d}")
    rest = p
    cs: list[UPoly] = []
    for i in range(d + 1):
        deg = d - i
        c = rest.k_coefficient(deg) * (factorial(deg) * (-1) ** i)
        cs.append(c)
        rest = rest - BPoly.from_product(c * (-1) ** i, binom_in_k(deg))
    assert rest.is_zero()
    return cs


def recompose(cs: Sequence[UPoly], d: int) -> BPoly:
    """Inverse of :func:`binomial_basis_decompose`."""
    if len(cs) != d + 1:
        raise ValueError("need exactly d+1 coefficients")
    acc = BPoly()
    for i, c in enumerate(cs):
        acc = acc + BPoly.from_product(c * (-1) ** i, binom_in_k(d - i))
    return acc
