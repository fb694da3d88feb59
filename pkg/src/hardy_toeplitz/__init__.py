"""Asymptotic Toeplitzness on truncated Hardy spaces of the unit sphere.

Toeplitz and composition operators on H^2 of the sphere in C^n are built
exactly on the monomials of degree <= D; the map
Phi(A) = sum_j T_{zbar_j} A T_{z_j} is iterated with bookkeeping of which
block of each iterate is still exact, and convergence diagnostics report
how Phi^m(A) behaves.
"""
from .basis import BasisTable, enumerate_basis, monomial_norm_sq, multi_indices_of_degree
from .diagnostics import (
    ConvergenceReport,
    LinearUATVerdict,
    block_norm,
    cesaro_probe,
    extract_symbol,
    linear_uat_classifier,
    lower_bound_probe,
    sat_probe,
    uat_sequence,
    weak_probe,
)
from .exact import Q, QQi
from .operators import (
    TruncatedOperator,
    TrustExhausted,
    add,
    adjoint,
    apply,
    coefficient_vector,
    composition_op,
    identity_op,
    kernel_vector,
    multiply,
    rank_one,
    scale,
    toeplitz_op,
    vector_norm,
    vector_norm_sq,
    zero_op,
)
from .oracle import mc_pairing, mc_toeplitz_entry, sphere_sample
from .phi import cesaro_mean, cesaro_means, phi_apply, phi_in_frame, phi_iterate
from .symbols import (
    PolySelfMap,
    SphereSymbol,
    eval_symbol,
    exceptional_set_fraction,
    pairing_symbol,
    sphere_integral,
    sup_norm_estimate,
    symbol_conj,
    symbol_power,
    symbol_product,
)

__version__ = "0.1.0"
