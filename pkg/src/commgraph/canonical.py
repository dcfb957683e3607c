"""Rational canonical (Frobenius) form with an explicit similarity transform.

Convention: ``transform`` is S with ``S @ A @ S^-1 == C_1 (+) ... (+) C_k``,
so ``A == S^-1 (C_1 (+) ... (+) C_k) S``.  The invariant factors are listed
ascending, f_1 | f_2 | ... | f_k, and f_k is the minimal polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .errors import NotDerogatory
from .matrix import (
    Mat,
    block_diag,
    companion,
    evaluate,
    inverse,
    minimal_polynomial,
    nullspace,
    solve_vector,
    vector_minpoly,
)
from .poly import Poly, coprime_part, poly_gcd


@dataclass(frozen=True)
class FrobeniusForm:
    source: Mat
    invariant_factors: Tuple[Poly, ...]
    blocks: Tuple[Mat, ...]
    transform: Mat  # S
    transform_inverse: Mat  # S^-1; its columns are the cyclic bases

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_matrix(self) -> Mat:
        return block_diag(self.source.field, self.blocks)


def _combine(a: Mat, v, f: Poly, w, g: Poly):
    """A vector whose order is lcm(f, g), given v of order f and w of order g."""
    extra = g // poly_gcd(f, g)
    if extra.degree == 0:
        return v, f
    # g' carries the primes where g beats f, f' the rest; they are coprime
    g_hi = g // coprime_part(g, extra)
    f_lo = coprime_part(f, g_hi)
    field = a.field
    red = field.reduce
    v2 = evaluate(f // f_lo, a).apply(v)
    w2 = evaluate(g // g_hi, a).apply(w)
    return tuple(red(x + y) for x, y in zip(v2, w2)), f_lo * g_hi


def _cyclic_decomposition(a: Mat) -> Tuple[List[Poly], List[tuple]]:
    """Invariant factors (ascending) and columns P with a P = P (C_1 (+) ... (+) C_k)."""
    field, n = a.field, a.n
    mu = minimal_polynomial(a)
    basis_vec = lambda i: tuple(field.one if j == i else field.zero for j in range(n))
    v = basis_vec(0)
    f = vector_minpoly(a, v)
    for i in range(1, n):
        if f == mu:
            break
        w = basis_vec(i)
        g = vector_minpoly(a, w)
        if not g.divides(f):
            v, f = _combine(a, v, f, w, g)
    d = f.degree
    krylov = [v]
    for _ in range(d - 1):
        krylov.append(a.apply(krylov[-1]))
    if d == n:
        return [f], krylov

    # phi(A^i v) = [i == d-1]; {x : phi(A^i x) = 0, i < d} is an invariant complement
    target = [field.zero] * (d - 1) + [field.one]
    phi = solve_vector(krylov, target, n, field)
    red = field.reduce
    functionals = [phi]
    for _ in range(d - 1):
        prev = functionals[-1]
        functionals.append(tuple(red(sum(prev[i] * a.rows[i][j] for i in range(n))) for j in range(n)))
    wbasis = nullspace(functionals, n, field)
    m = len(wbasis)
    wrows = [[wbasis[j][i] for j in range(m)] for i in range(n)]
    restricted_cols = [solve_vector(wrows, a.apply(w), m, field) for w in wbasis]
    a_w = Mat.from_columns(field, restricted_cols)
    factors_w, cols_w = _cyclic_decomposition(a_w)
    lifted = [
        tuple(red(sum(c[k] * wbasis[k][i] for k in range(m))) for i in range(n))
        for c in cols_w
    ]
    return factors_w + [f], lifted + krylov


def frobenius_form(a: Mat) -> FrobeniusForm:
    factors, cols = _cyclic_decomposition(a)
    p_mat = Mat.from_columns(a.field, cols)
    return FrobeniusForm(
        source=a,
        invariant_factors=tuple(factors),
        blocks=tuple(companion(f) for f in factors),
        transform=inverse(p_mat),
        transform_inverse=p_mat,
    )


def is_derogatory(a: Mat) -> bool:
    return minimal_polynomial(a).degree < a.n


def block_idempotent(ff: FrobeniusForm) -> Mat:
    """S^-1 (I on the first block, 0 elsewhere) S."""
    if ff.k < 2:
        raise NotDerogatory("a single companion block admits no block idempotent")
    field = ff.source.field
    n = ff.source.n
    size = ff.blocks[0].n
    proj = Mat.diag(field, [1] * size + [0] * (n - size))
    return ff.transform_inverse @ proj @ ff.transform
