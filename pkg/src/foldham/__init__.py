"""Two-dimensional Hammersley and folded Hammersley digital nets over Z_b."""

from .constructions import (
    baker_fold,
    folded_by_baker,
    folded_matrices,
    folded_points,
    hammersley_matrices,
    hammersley_points,
)
from .discrepancy import DiscrepancyReport, l2_exact, linf_exact, local_discrepancy, lp_estimate
from .net import DigitalNet, DualIndex, GeneratingMatrices, NetPoint, enumerate_dual, generate_points, is_dual
from .weights import (
    MinWeightResult,
    dick_weight,
    min_weight,
    nrt_weight,
    structural_rho1_bound,
    structural_rho2_bound,
    verify_lemma_linear,
)
from .zb import MatrixZb, add_mod, is_linearly_independent, mat_vec_mul, neg_mod, sub_mod

__version__ = "0.1.0"
