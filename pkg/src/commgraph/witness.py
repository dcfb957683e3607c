"""Commuting witnesses: a nontrivial idempotent or a square-zero nilpotent.

For a non-scalar A the cases are tried in a fixed order:

1. A derogatory: the block idempotent of the Frobenius form.
2. p_A has a repeated factor: g(A) for g the squarefree part of p_A is a
   nonzero nilpotent; its top nonzero power squares to zero.
3. p_A squarefree with at least two irreducible factors: u(A) where u is
   the CRT idempotent separating the first factor from the rest.
4. Otherwise p_A is irreducible of degree n and no witness is produced.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .canonical import block_idempotent, frobenius_form
from .errors import CentralInput, DimensionTooSmall, NotNilpotent, ZeroInput
from .factor import DEFAULT_DEGREE_CAP, crt_idempotent_poly, factor, squarefree_part
from .matrix import Mat, evaluate, is_central, mat_mul, minimal_polynomial
from .poly import Poly

MIN_DIM = 3


class Kind(str, enum.Enum):
    IDEMPOTENT = "idempotent"
    NILPOTENT = "nilpotent"


class Branch(str, enum.Enum):
    DEROGATORY_RCF = "derogatory_rcf"
    RADICAL_NILPOTENT = "radical_nilpotent"
    CRT_IDEMPOTENT = "crt_idempotent"


@dataclass(frozen=True)
class Witness:
    kind: Kind
    matrix: Mat
    branch: Branch
    minimal_poly: Poly
    squarefree_part: Optional[Poly] = None
    divisor: Optional[Poly] = None


@dataclass(frozen=True)
class WitnessFailure:
    """p_A is irreducible of degree n: A commutes with no witness built here."""

    minimal_poly: Poly


def nilpotency_index(nmat: Mat) -> int:
    """Least alpha with nmat**alpha == 0."""
    if nmat.is_zero():
        raise ZeroInput("zero matrix has no positive nilpotency index")
    power = nmat
    for alpha in range(2, nmat.n + 1):
        power = mat_mul(power, nmat)
        if power.is_zero():
            return alpha
    raise NotNilpotent("matrix is not nilpotent")


def reduce_nilpotent_index(nmat: Mat) -> Mat:
    """N^(alpha-1): nonzero, squares to zero, commutes with everything N does."""
    alpha = nilpotency_index(nmat)
    return nmat ** (alpha - 1)


@lru_cache(maxsize=8192)
def _find_witness(a: Mat, degree_cap: int) -> Union[Witness, WitnessFailure]:
    mu = minimal_polynomial(a)
    if mu.degree < a.n:
        e = block_idempotent(frobenius_form(a))
        return Witness(Kind.IDEMPOTENT, e, Branch.DEROGATORY_RCF, mu)
    g = squarefree_part(mu)
    if g.degree < mu.degree:
        nmat = reduce_nilpotent_index(evaluate(g, a))
        return Witness(Kind.NILPOTENT, nmat, Branch.RADICAL_NILPOTENT, mu, squarefree_part=g)
    fac = factor(mu, degree_cap)
    if fac.distinct_count >= 2:
        f1 = fac.factors[0][0]
        u = crt_idempotent_poly(mu, f1)
        return Witness(Kind.IDEMPOTENT, evaluate(u, a), Branch.CRT_IDEMPOTENT, mu, divisor=f1)
    return WitnessFailure(mu)


def find_witness(a: Mat, degree_cap: int = DEFAULT_DEGREE_CAP) -> Union[Witness, WitnessFailure]:
    if a.n < MIN_DIM:
        raise DimensionTooSmall(f"n = {a.n}; commuting graphs need n >= {MIN_DIM}")
    if is_central(a):
        raise CentralInput("scalar matrices are not vertices of the commuting graph")
    return _find_witness(a, degree_cap)


def check_witness(a: Mat, w: Witness) -> list:
    """Violated witness laws, as human-readable strings (empty when sound)."""
    problems = []
    m = w.matrix
    if mat_mul(a, m) != mat_mul(m, a):
        problems.append("witness does not commute with the source matrix")
    sq = mat_mul(m, m)
    if w.kind is Kind.IDEMPOTENT:
        if sq != m:
            problems.append("idempotent witness is not idempotent")
        if is_central(m):
            problems.append("idempotent witness is central")
    else:
        if m.is_zero():
            problems.append("nilpotent witness is zero")
        if not sq.is_zero():
            problems.append("nilpotent witness does not square to zero")
    return problems
