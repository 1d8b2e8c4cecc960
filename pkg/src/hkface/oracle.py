"""Brute-force colengths by counting standard monomials.

A monomial ``x^a`` is nonzero in ``K[Delta]`` iff its support is a face, and
it lies outside ``(J^[q])^k`` iff ``sum floor(a_i / (q v_i)) < k``. Counting
such exponent vectors inside the box ``a_i < k q v_i`` gives the colength
with no algebra at all; this is what every closed form is checked against.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import prod
from typing import Sequence

import numpy as np

from .complex import SimplicialComplex, vertices_of
from .engine import exponent_vector, ghk_polynomial

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_lattice_points: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_lattice_points < 1:
            raise ValueError("budget must be positive")

    @classmethod
    def from_env(cls) -> "EnumerationBudget":
        raw = os.environ.get("HKFACE_BUDGET")
        return cls(int(raw)) if raw else cls()


def in_power_of_pure_ideal(a: Sequence[int], w: Sequence[int], k: int) -> bool:
    """Is ``x^a`` in ``(x_1^{w_1}, ..., x_r^{w_r})^k``?"""
    return sum(ai // wi for ai, wi in zip(a, w)) >= k


def in_power_by_generators(a: Sequence[int], w: Sequence[int], k: int) -> bool:
    """Same membership test by trying every product of k generators."""
    r = len(w)
    for choice in combinations_with_replacement(range(r), k):
        need = [0] * r
        for i in choice:
            need[i] += w[i]
        if all(ai >= ni for ai, ni in zip(a, need)):
            return True
    return False


def lattice_points(c: SimplicialComplex, v: Sequence[int], q: int, k: int) -> int:
    """Exponent vectors the face-by-face enumeration will visit."""
    return sum(
        prod(k * q * v[i - 1] - 1 for i in vertices_of(face))
        for face in c.faces()
    )


def _count_on_face(widths: list[int], k: int) -> int:
    # vectors with every a_i in 1..k*w_i-1 and sum floor(a_i/w_i) < k
    if not widths:
        return 1
    levels = [np.arange(1, k * w) // w for w in widths]
    head, rest = levels[0], levels[1:]
    if not rest:
        return int(np.count_nonzero(head < k))
    tail = rest[0]
    for arr in rest[1:]:
        tail = np.add.outer(tail, arr)
    # one slice per value of the first coordinate keeps memory at the tail size
    return sum(int(np.count_nonzero(tail < k - h)) for h in head.tolist())


def count_standard_monomials(
    c: SimplicialComplex,
    v: Sequence[int] | None,
    q: int,
    k: int,
    budget: EnumerationBudget | None = None,
) -> int:
    """``l(R/(J^[q])^k)`` by enumerating monomials supported on each face."""
    if q < 1 or k < 1:
        raise ValueError("q and k must be positive")
    v = exponent_vector(c, v)
    budget = budget or EnumerationBudget.from_env()
    need = lattice_points(c, v, q, k)
    if need > budget.max_lattice_points:
        raise BudgetExceeded(
            f"(q={q}, k={k}) needs {need} lattice points, budget is {budget.max_lattice_points}"
        )
    return sum(
        _count_on_face([q * v[i - 1] for i in vertices_of(face)], k)
        for face in sorted(c.faces())
    )


def minimal_nonfaces(c: SimplicialComplex) -> list[tuple[int, ...]]:
    """Generators of the Stanley-Reisner ideal, as vertex tuples."""
    faces = c.faces()
    out = []
    for m in range(1, 1 << c.num_vertices):
        if m in faces:
            continue
        if all((m & ~(1 << i)) in faces for i in range(c.num_vertices) if m >> i & 1):
            out.append(vertices_of(m))
    return out


def count_standard_monomials_naive(c: SimplicialComplex, v: Sequence[int] | None, q: int, k: int) -> int:
    """Full-box enumeration testing support against the minimal non-faces.

    Slow; for cross-checking :func:`count_standard_monomials` on tiny inputs.
    """
    v = exponent_vector(c, v)
    w = [q * x for x in v]
    nonfaces = [[i - 1 for i in nf] for nf in minimal_nonfaces(c)]
    count = 0
    for a in product(*(range(k * wi) for wi in w)):
        if any(all(a[i] > 0 for i in nf) for nf in nonfaces):
            continue
        if not in_power_of_pure_ideal(a, w, k):
            count += 1
    return count


@dataclass(frozen=True)
class GridPoint:
    q: int
    k: int
    expected: Fraction
    counted: int

    @property
    def match(self) -> bool:
        return self.expected == self.counted


@dataclass(frozen=True)
class CrossValidation:
    polynomial: str
    points: tuple[GridPoint, ...] = field(default_factory=tuple)

    @property
    def mismatches(self) -> list[GridPoint]:
        return [p for p in self.points if not p.match]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        good = sum(p.match for p in self.points)
        return f"{good}/{len(self.points)} points match {self.polynomial}"

    def to_json(self) -> dict:
        return {
            "polynomial": self.polynomial,
            "ok": self.ok,
            "points": [
                {"q": p.q, "k": p.k, "closed_form": str(p.expected), "count": p.counted, "match": p.match}
                for p in self.points
            ],
        }


def _count_task(args) -> int:
    return count_standard_monomials(*args)


def cross_validate(
    c: SimplicialComplex,
    v: Sequence[int] | None,
    q_max: int,
    k_max: int,
    budget: EnumerationBudget | None = None,
    threads: int = 1,
) -> CrossValidation:
    """Compare the closed form with the brute-force count on a (q, k) grid.

    The budget is checked for every point before any counting starts, so an
    oversized grid aborts without a partial report.
    """
    v = exponent_vector(c, v)
    budget = budget or EnumerationBudget.from_env()
    poly = ghk_polynomial(c, v)
    grid = [(q, k) for q in range(1, q_max + 1) for k in range(1, k_max + 1)]
    for q, k in grid:
        need = lattice_points(c, v, q, k)
        if need > budget.max_lattice_points:
            raise BudgetExceeded(
                f"(q={q}, k={k}) needs {need} lattice points, budget is {budget.max_lattice_points}"
            )
    tasks = [(c, v, q, k, budget) for q, k in grid]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            counts = list(pool.map(_count_task, tasks))
    else:
        counts = [_count_task(t) for t in tasks]
    points = tuple(GridPoint(q, k, poly(q, k), n) for (q, k), n in zip(grid, counts))
    return CrossValidation(poly.binomial_form(), points)
