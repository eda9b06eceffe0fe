"""Golden-code space-time block coded modulation for 2x2 MIMO slow fading.

Exact algebraic encoders (Golden Code, quotient-ring coset maps,
Reed-Solomon over GF(256)), ML/stack/suboptimal decoders, determinant
spectrum analysis, and a seeded Monte Carlo FER simulator with a CLI.
"""

from .algebra import (
    GaussianInt,
    OrderElement,
    ThetaInt,
    block_det,
    block_det_expansion,
    embed,
    frob_norm_sq,
    matrix_rep,
    quat_conj,
    reduced_discriminant_check,
)
from .backend import BACKEND_NAME
from .golden import GoldenBlock, GoldenCodeword, generator_matrix, golden_encode, scale_ideal
from .quotient import M2F2, M2F2i, byte_map, coset_leader_1pi, coset_leader_2, hbar, is_invertible, project_mod_1pi, project_mod_2
from .rs_gf256 import RSCode, gf_mul
from .schemes import (
    SchemeConfig,
    encode_grs4,
    encode_grs16,
    encode_repetition,
    encode_uncoded,
    make_config,
)

__version__ = "0.1.0"
