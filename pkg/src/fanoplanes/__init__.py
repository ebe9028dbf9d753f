"""Exact intersection theory for the Fano scheme of planes in three quadrics in P^9."""
from .bott import BottResult, bott_cohomology
from .bundles import (
    Bundle,
    GradedClass,
    chern_character,
    fano_class,
    fano_tangent_chern,
    tangent_chern,
    todd,
    total_chern,
)
from .chow import ChowClass, GrassmannianContext, chow_multiply, complement, integrate
from .invariants import ci_hodge, hilbert_polynomial, hodge_diamond, hrr_chi, threefold_invariants
from .koszul import cohomology_contributions, euler_check, koszul_term_table, sheaf_cohomology_estimate
from .partitions import Partition, conjugate, frobenius, lr_coefficients, weyl_dim
from .schur_decomp import SchurDecomposition, wedge_E, wedge_sym2

__version__ = "0.1.0"
