"""Generalized Hilbert-Kunz functions of pure-power ideals in face rings."""

from .audit import AuditReport, rossi_valla_check, smirnov_audit, stability_check
from .complex import (
    ComplexError,
    Graph,
    SimplicialComplex,
    build_complex,
    build_graph,
    edge_ideal_complex,
    f_vector,
    face_ideal_decomposition,
    h_vector,
    is_shellable,
    minimal_vertex_covers,
    named_family,
)
from .engine import (
    CoefficientTable,
    ehk_of_powers,
    ghk_polynomial,
    hilbert_coefficients,
    multiplicity_e0,
    pure_power_length,
)
from .exactpoly import BPoly, UPoly, binom_in_k, binomial_basis_decompose
from .limits import PowerTable, dim1_check, dim2_closed_forms, limit_L_i, predicted_ehk
from .oracle import count_standard_monomials, cross_validate

__version__ = "0.1.0"
