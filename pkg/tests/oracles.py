"""Independent reference computations used by the tests.

Nothing here calls into the code paths it is used to check: polynomials
over F_p are plain int lists, determinants go through the Leibniz formula,
and matrix laws are rechecked with numpy integer arithmetic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from commgraph.fields import GF
from commgraph.poly import Poly, poly_gcd


# -- F_p polynomials as low-to-high int lists --------------------------------


def _strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def zp_rem(a, b, p):
    """Remainder of a by monic b over F_p."""
    r = [x % p for x in a]
    r = _strip(r)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        off = len(r) - 1 - db
        for j in range(db + 1):
            r[off + j] = (r[off + j] - c * b[j]) % p
        r = _strip(r)
    return r


@lru_cache(maxsize=None)
def monic_polys(p, d):
    return [list(low) + [1] for low in itertools.product(range(p), repeat=d)]


def irreducible_by_trial_division(coeffs, p) -> bool:
    """No monic polynomial of degree 1..deg/2 divides ``coeffs`` (over F_p)."""
    f = _strip([c % p for c in coeffs])
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in monic_polys(p, k):
            if not zp_rem(f, g, p):
                return False
    return True


def zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _strip(out)


# -- rational polynomials --------------------------------------------------


def has_rational_root(f: Poly) -> bool:
    """Rational root theorem on the primitive integer multiple of ``f``."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    if ints[0] == 0:
        return True
    a0, an = abs(ints[0]), abs(ints[-1])
    divs = lambda m: [d for d in range(1, m + 1) if m % d == 0]
    for num in divs(a0):
        for dd in divs(an):
            for s in (1, -1):
                x = Fraction(s * num, dd)
                if sum(c * x ** i for i, c in enumerate(ints)) == 0:
                    return True
    return False


def certified_irreducible_mod_small_prime(f: Poly, primes=(2, 3, 5, 7)):
    """Prime p certifying irreducibility of rational ``f`` by reduction, or None.

    p must not divide the leading coefficient and the reduction must stay
    squarefree; then irreducible mod p implies irreducible over Q.
    """
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    for p in primes:
        if ints[-1] % p == 0:
            continue
        inv = pow(ints[-1], -1, p)
        red = [x * inv % p for x in ints]
        fp = Poly(GF(p), red)
        if poly_gcd(fp, fp.derivative()).degree != 0:
            continue
        if irreducible_by_trial_division(red, p):
            return p
    return None


# -- determinants and invariant factors -------------------------------------


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def poly_det(entries, field):
    """Leibniz determinant of a square matrix of ``Poly`` entries."""
    n = len(entries)
    total = Poly(field)
    for perm in itertools.permutations(range(n)):
        term = Poly.one(field)
        for i in range(n):
            term = term * entries[i][perm[i]]
            if term.is_zero():
                break
        total = total + term * _perm_sign(perm)
    return total


def char_matrix(a):
    field = a.field
    x = Poly.x(field)
    return [[(x if i == j else Poly(field)) - a.rows[i][j] for j in range(a.n)] for i in range(a.n)]


def charpoly_leibniz(a) -> Poly:
    return poly_det(char_matrix(a), a.field)


def invariant_factors_by_minors(a):
    """Non-unit invariant factors of xI - a from gcds of k x k minors."""
    field, n = a.field, a.n
    xm = char_matrix(a)
    dets = [Poly.one(field)]
    for k in range(1, n + 1):
        g = Poly(field)
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                minor = poly_det([[xm[r][c] for c in cols] for r in rows], field)
                g = poly_gcd(g, minor)
                if g.is_one():
                    break
            if g.is_one():
                break
        dets.append(g.monic())
    factors = [dets[k] // dets[k - 1] for k in range(1, n + 1)]
    return [f for f in factors if f.degree > 0]


# -- matrix laws with numpy ---------------------------------------------------


def np_mat(m):
    return np.array([[int(x) for x in row] for row in m.rows], dtype=np.int64)


def np_commute(a, b, p) -> bool:
    x, y = np_mat(a), np_mat(b)
    return bool(np.all((x @ y - y @ x) % p == 0))


def np_is_scalar(a, p) -> bool:
    x = np_mat(a) % p
    return bool(np.all(x == x[0, 0] * np.eye(len(x), dtype=np.int64)))


def brute_commutant_size(a, p) -> int:
    """Number of X in M_n(F_p) commuting with ``a``; equals p^dim."""
    n = a.n
    A = np_mat(a)
    Xs = np.array(list(itertools.product(range(p), repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    diff = (A @ Xs - Xs @ A) % p
    return int(np.sum(np.all(diff == 0, axis=(1, 2))))
