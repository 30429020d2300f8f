"""Exact computer algebra for SL2 matrix concomitants of traceless 2 x 2 matrices."""
from .cg import isotypic_basis, phi, project
from .classical import (
    BinaryFormCovariant,
    check_covariance,
    check_syzygy_FJ,
    check_syzygy_JJ,
    det_E,
    disc_D,
    form_F,
    glm_act,
    jac_J,
)
from .linalg import EchelonBasis
from .matrixcon import (
    charpoly,
    check_equivariance,
    check_lemma52,
    is_central,
    kappa,
    lemma52_scalar,
    st3,
    t,
    u,
    w,
    words_span_dim,
)
from .oracle import dim_Cd, dim_Dqp, monomial_count, tableau_count
from .qpoly import ContextError, Polynomial
from .sl2 import MatrixConcomitant, chevalley, psi_group, rho
from .verify import (
    SpanReport,
    verify_algebra_generation,
    verify_D0_generation,
    verify_D_generation,
    verify_highest_weight,
    verify_module_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryFormCovariant",
    "ContextError",
    "EchelonBasis",
    "MatrixConcomitant",
    "Polynomial",
    "SpanReport",
    "charpoly",
    "check_covariance",
    "check_equivariance",
    "check_lemma52",
    "check_syzygy_FJ",
    "check_syzygy_JJ",
    "chevalley",
    "det_E",
    "dim_Cd",
    "dim_Dqp",
    "disc_D",
    "form_F",
    "glm_act",
    "is_central",
    "isotypic_basis",
    "jac_J",
    "kappa",
    "lemma52_scalar",
    "monomial_count",
    "phi",
    "project",
    "psi_group",
    "rho",
    "st3",
    "t",
    "tableau_count",
    "u",
    "verify_D0_generation",
    "verify_D_generation",
    "verify_algebra_generation",
    "verify_highest_weight",
    "verify_module_decomposition",
    "w",
    "words_span_dim",
]
