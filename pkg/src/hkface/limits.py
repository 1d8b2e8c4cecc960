"""Asymptotic Hilbert-Samuel limits from a table of e_HK of powers.

Given ``e_0(I)``, a reduction number ``r`` and ``e_HK(I^n)`` for
``n = 1..r``, the limits ``L_i = lim e_i(I^[q]) / q^d`` are finite sums of
second-order style differences of that table. Everything here is plain
exact arithmetic; the Cohen-Macaulay, depth and minimal-reduction
hypotheses are carried along as caller-asserted strings and never checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, NamedTuple, Sequence, Union

Number = Union[int, Fraction]


class TableError(ValueError):
    """Malformed PowerTable or out-of-range request."""


@dataclass(frozen=True)
class PowerTable:
    d: int
    r: int
    e0: Fraction
    ehk: Mapping[int, Fraction]
    assumptions: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise TableError(f"d must be an integer >= 1, got {self.d!r}")
        if not isinstance(self.r, int) or self.r < 0:
            raise TableError(f"r must be an integer >= 0, got {self.r!r}")
        object.__setattr__(self, "e0", Fraction(self.e0))
        object.__setattr__(self, "ehk", {int(n): Fraction(x) for n, x in self.ehk.items()})
        for n in range(1, self.r + 1):
            if n not in self.ehk:
                raise TableError(f"missing e_HK(I^{n})")
        for n, x in self.ehk.items():
            if n < 1:
                raise TableError(f"e_HK(I^{n}) given for n < 1; those are fixed at 0")
            if x <= 0:
                raise TableError(f"e_HK(I^{n}) must be positive, got {x}")

    def ehk_at(self, n: int) -> Fraction:
        """``e_HK(I^n)``, with ``I^n = R`` (colength 0) for ``n <= 0``."""
        if n <= 0:
            return Fraction(0)
        try:
            return self.ehk[n]
        except KeyError:
            raise TableError(f"e_HK(I^{n}) not in table") from None

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "r": self.r,
            "e0": str(self.e0),
            "ehk": {str(n): str(x) for n, x in sorted(self.ehk.items())},
            "assumptions": list(self.assumptions),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PowerTable":
        return cls(
            d=data["d"],
            r=data["r"],
            e0=Fraction(str(data["e0"])),
            ehk={int(n): Fraction(str(x)) for n, x in data["ehk"].items()},
            assumptions=tuple(data.get("assumptions", ())),
        )


def delta_d(h: Callable[[int], Number] | Mapping[int, Number], d: int, m: int) -> Fraction:
    """``sum_j (-1)^j C(d, j) h(m - j)``; missing values at ``m - j <= 0`` read as 0."""
    if isinstance(h, Mapping):
        table = h

        def h(n: int) -> Number:
            return table.get(n, 0) if n <= 0 else table[n]

    return sum((Fraction((-1) ** j * comb(d, j)) * Fraction(h(m - j)) for j in range(d + 1)), Fraction(0))


def _excess(t: PowerTable, n: int) -> Fraction:
    # e0 minus the d-th difference of n -> e_HK(I^n)
    return t.e0 - delta_d(t.ehk_at, t.d, n)


def limit_L_i(t: PowerTable, i: int) -> Fraction:
    if not 1 <= i <= t.d:
        raise TableError(f"i must lie in 1..{t.d}, got {i}")
    return sum((comb(n - 1, i - 1) * _excess(t, n) for n in range(i, t.r + 1)), Fraction(0))


def all_limits(t: PowerTable) -> tuple[Fraction, ...]:
    """``(L_0, ..., L_d)`` with ``L_0 = e0``."""
    return (t.e0,) + tuple(limit_L_i(t, i) for i in range(1, t.d + 1))


def predicted_ehk(t: PowerTable, limits: Sequence[Number], n: int) -> Fraction:
    """``e_HK(I^n) = sum_i (-1)^i L_i C(n+d-1-i, d-i)``, valid for ``n >= r-d+1``."""
    d = t.d
    if len(limits) != d + 1:
        raise TableError(f"expected {d + 1} limits, got {len(limits)}")
    if n < t.r - d + 1:
        raise TableError(f"n = {n} is below the validity bound r-d+1 = {t.r - d + 1}")
    return sum(
        (Fraction((-1) ** i) * Fraction(L) * comb(n + d - 1 - i, d - i) for i, L in enumerate(limits)),
        Fraction(0),
    )


def dim2_closed_forms(t: PowerTable) -> tuple[Fraction, Fraction]:
    if t.d != 2:
        raise TableError(f"closed forms need d = 2, got {t.d}")
    r, e0 = t.r, t.e0
    a, b = t.ehk_at(r), t.ehk_at(r - 1)
    return r * e0 - a + b, comb(r, 2) * e0 - (r - 1) * a + r * b


class Dim1Check(NamedTuple):
    value: Fraction
    consistent: bool


def dim1_check(t: PowerTable) -> Dim1Check:
    """``r e0 - e_HK(I^r)``, which must vanish; nonzero flags a bad table."""
    if t.d != 1:
        raise TableError(f"dimension-one check needs d = 1, got {t.d}")
    value = t.r * t.e0 - t.ehk_at(t.r)
    return Dim1Check(value, value == 0)
