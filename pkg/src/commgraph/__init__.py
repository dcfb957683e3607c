"""Commuting witnesses and short commuting paths in matrix rings over F_p and Q."""

from .canonical import FrobeniusForm, block_idempotent, frobenius_form, is_derogatory
from .factor import (
    Factorization,
    SquarefreeDecomposition,
    crt_idempotent_poly,
    factor,
    squarefree_decomposition,
    squarefree_part,
)
from .fields import GF, QQ, PrimeField, Rationals
from .matrix import (
    Mat,
    characteristic_polynomial,
    commutes,
    companion,
    evaluate,
    is_central,
    kernel_basis,
    mat_mul,
    minimal_polynomial,
)
from .oracle import CommutingGraph, GraphReport, bfs_distance, enumerate_vertices, full_report
from .pathfinder import (
    CentralizerBasis,
    CommutingPath,
    PathFailure,
    centralizer_basis,
    find_path,
    joint_commutant,
    pick_noncentral,
    verify_path,
)
from .poly import Poly, poly_gcd
from .witness import Witness, WitnessFailure, find_witness, reduce_nilpotent_index

__version__ = "0.1.0"
