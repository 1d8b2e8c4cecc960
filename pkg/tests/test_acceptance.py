"""Acceptance suite: one marked group per criterion, summarised at the end of the run."""

import time
from fractions import Fraction
from math import comb, prod

import pytest

from hkface import build_complex, named_family
from hkface.audit import (
    power_table_from_engine,
    reduction_number_candidate,
    rossi_valla_check,
    smirnov_audit,
    stability_check,
)
from hkface.complex import h_vector, is_shellable, verify_shelling
from hkface.engine import ehk_of_powers, ghk_polynomial, hilbert_coefficients
from hkface.exactpoly import BPoly, UPoly, binom_in_k, binomial_basis_decompose, recompose
from hkface.limits import PowerTable, all_limits, dim2_closed_forms, limit_L_i, predicted_ehk
from hkface.oracle import count_standard_monomials
from helpers import counterexample, edge_ideal_example, reference_complexes, random_complex


def term(a, b, c=1):
    """``c * q^a * C(k+b-1, b)``."""
    return BPoly.from_product(UPoly.monomial(a, c), binom_in_k(b))


def q_poly(*coeffs):
    return UPoly(coeffs)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


C1 = pytest.mark.criterion(1, "path family closed form")
C2 = pytest.mark.criterion(2, "cycle family coefficients and e_HK")
C3 = pytest.mark.criterion(3, "counterexample complex audit")
C4 = pytest.mark.criterion(4, "edge-ideal example")
C5 = pytest.mark.criterion(5, "complete bipartite graphs")
C6 = pytest.mark.criterion(6, "complete graph with exponents")
C7 = pytest.mark.criterion(7, "oracle grid")
C8 = pytest.mark.criterion(8, "limits bridge")
C9 = pytest.mark.criterion(9, "property suites")


@C1
def test_path_family():
    with Timer() as t:
        for r in range(3, 9):
            assert ghk_polynomial(named_family("path", r)) == term(2, 2, r - 1) - term(1, 1, r - 2), r
    assert t.elapsed < 1.0


@C2
def test_cycle_family():
    with Timer() as t:
        for n in range(3, 9):
            table = hilbert_coefficients(named_family("cycle", n))
            assert table.e == (q_poly(0, 0, n), q_poly(0, n), q_poly(1)), n
            assert table.ehk_powers == binom_in_k(2) * n
            for k in range(1, 6):
                assert ehk_of_powers(named_family("cycle", n), None, k) == n * comb(k + 1, 2)
    assert t.elapsed < 1.0


@C3
def test_counterexample():
    with Timer() as t:
        c = counterexample()
        assert ghk_polynomial(c) == term(2, 2, 4) - term(1, 1, 4) + 1
        table = hilbert_coefficients(c)
        assert table.e == (q_poly(0, 0, 4), q_poly(0, 4), q_poly(1))
        rep = smirnov_audit(c)
        assert not stability_check(rep.e0, rep.e1_at_q1, rep.colength)
        assert not rep.stable
        assert rep.limit_identity_holds
        assert rep.conjecture_status == "counterexample"
        assert rossi_valla_check(c) and rep.rossi_valla_holds
        assert h_vector(c).h == (1, 2, 1)
        assert reduction_number_candidate(c).value == 2 == rep.candidate_reduction_number
    assert t.elapsed < 1.0


@C4
def test_edge_ideal_example():
    c = edge_ideal_example()
    assert ghk_polynomial(c) == term(3, 3) + term(2, 2) - term(1, 1)
    assert hilbert_coefficients(c).e == (q_poly(0, 0, 0, 1), q_poly(0, 0, -1), q_poly(0, -1), q_poly())


@C5
def test_complete_bipartite():
    for beta in range(1, 5):
        for alpha in range(1, beta + 1):
            p = ghk_polynomial(named_family("complete_bipartite", alpha, beta))
            if alpha == beta:
                expected = term(beta, beta, 2) - 1
            else:
                expected = term(beta, beta) + term(alpha, alpha) - 1
            assert p == expected, (alpha, beta)


@C6
def test_complete_graph_formula(rng):
    # stated closed form rkq*prod(v) - (r-1)*prod(v), checked literally
    failures = []
    for r in range(2, 7):
        v = [rng.randint(1, 3) for _ in range(r)]
        P = prod(v)
        expected = term(1, 1, r * P) - (r - 1) * P
        got = ghk_polynomial(named_family("complete_graph", r), v)
        if got != expected:
            counted = count_standard_monomials(named_family("complete_graph", r), v, 1, 2)
            failures.append(
                f"r={r} v={v}: engine {got.binomial_form()}, stated {expected.binomial_form()}, "
                f"brute force at q=1,k=2 gives {counted} (engine {got(1, 2)}, stated {expected(1, 2)})"
            )
    assert not failures, "; ".join(failures)


@C6
def test_complete_graph_stability(rng):
    for r in range(2, 7):
        v = [rng.randint(1, 3) for _ in range(r)]
        P = prod(v)
        assert stability_check(r * P, (r - 1) * P, P)
        rep = smirnov_audit(named_family("complete_graph", r), v)
        assert stability_check(rep.e0, rep.e1_at_q1, rep.colength)
        assert rep.stable and rep.stable_all_q


def grid_cases(rng):
    cases = []
    for name, c in reference_complexes().items():
        if c.num_vertices > 6:
            continue
        if name.startswith("complete:"):
            cases.append((c, [rng.randint(1, 3) for _ in range(c.num_vertices)]))
        cases.append((c, None))
    for _ in range(20):
        c = random_complex(rng, 6, 5)
        cases.append((c, [rng.randint(1, 2) for _ in range(c.num_vertices)]))
    return cases


@C7
def test_oracle_grid(rng):
    mismatches = []
    with Timer() as t:
        for c, v in grid_cases(rng):
            p = ghk_polynomial(c, v)
            for q in range(1, 4):
                for k in range(1, 4):
                    counted = count_standard_monomials(c, v, q, k)
                    if p(q, k) != counted:
                        mismatches.append((c, v, q, k, p(q, k), counted))
    assert mismatches == []
    assert t.elapsed < 60.0


BRIDGE = [("counterexample", counterexample())]
BRIDGE += [(f"path:{r}", named_family("path", r)) for r in range(3, 9)]
BRIDGE += [(f"cycle:{n}", named_family("cycle", n)) for n in range(3, 9)]
BRIDGE += [(f"complete:{r}", named_family("complete_graph", r)) for r in range(2, 7)]


@C8
@pytest.mark.parametrize("name, c", BRIDGE, ids=[b[0] for b in BRIDGE])
def test_limits_bridge(name, c):
    t = power_table_from_engine(c)
    limits = hilbert_coefficients(c).limits
    assert tuple(limit_L_i(t, i) for i in range(1, t.d + 1)) == limits[1:]
    assert all(L == 0 for L in limits[1:])
    assert all_limits(t) == limits
    for n in range(1, t.r + 4):
        assert predicted_ehk(t, limits, n) == ehk_of_powers(c, None, n), n


@C8
def test_dim2_closed_forms_on_random_tables(rng):
    for _ in range(100):
        r = rng.randint(0, 6)
        e0 = Fraction(rng.randint(1, 60), rng.randint(1, 4))
        ehk = {n: Fraction(rng.randint(1, 300), rng.randint(1, 4)) for n in range(1, r + 1)}
        t = PowerTable(d=2, r=r, e0=e0, ehk=ehk)
        assert dim2_closed_forms(t) == (limit_L_i(t, 1), limit_L_i(t, 2))


def random_bpoly(rng, d):
    terms = {}
    for _ in range(rng.randint(0, 8)):
        terms[(rng.randint(0, d + 2), rng.randint(0, d))] = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
    return BPoly(terms)


@C9
def test_binomial_round_trip(rng):
    for _ in range(200):
        d = rng.randint(0, 5)
        p = random_bpoly(rng, d)
        assert recompose(binomial_basis_decompose(p, d), d) == p


def complexes_under_test(rng):
    complexes = list(reference_complexes().values())
    complexes += [random_complex(rng, 6, 5) for _ in range(40)]
    complexes += [build_complex(4, [[1, 2], [3, 4]])]
    return complexes


@C9
def test_coefficient_integrality(rng):
    for c in complexes_under_test(rng):
        v = [rng.randint(1, 3) for _ in range(c.num_vertices)]
        for vec in (None, v):
            for e in hilbert_coefficients(c, vec).e:
                for q in range(1, 6):
                    assert e(q).denominator == 1, (c, vec, q)


@C9
def test_shelling_orders_verify(rng):
    checked = 0
    for c in complexes_under_test(rng):
        if len(c.facets) > 8:
            continue
        res = is_shellable(c)
        assert res.status in ("yes", "no")
        if res.status == "yes":
            assert verify_shelling(c, res.order), c
            checked += 1
    assert checked > 0
