"""Squarefree decomposition, irreducible factorization and CRT idempotents.

Over F_p factorization is Berlekamp's algorithm.  Over Q it is Zassenhaus:
factor modulo a good prime, Hensel-lift past a Mignotte bound, then try
every subset of the lifted factors.  Everything here is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from .errors import DegreeLimitExceeded, NotADivisor, NotCoprime, ZeroPolynomial
from .fields import GF, QQ, PrimeField, Scalar, is_prime
from .matrix import nullspace
from .poly import Poly, poly_gcd, poly_xgcd

DEFAULT_DEGREE_CAP = 12

# above this characteristic Berlekamp stops trying every residue shift
SHIFT_SCAN_LIMIT = 1024
# shifts c tried per split in the large-p branch; each succeeds about half the time
EQUAL_SPLIT_TRIES = 256


@dataclass(frozen=True)
class SquarefreeDecomposition:
    leading: Scalar
    parts: Tuple[Tuple[Poly, int], ...]

    def expand(self, field) -> Poly:
        acc = Poly.constant(field, self.leading)
        for g, i in self.parts:
            acc = acc * g ** i
        return acc


@dataclass(frozen=True)
class Factorization:
    leading: Scalar
    factors: Tuple[Tuple[Poly, int], ...]

    def expand(self, field) -> Poly:
        acc = Poly.constant(field, self.leading)
        for f, e in self.factors:
            acc = acc * f ** e
        return acc

    @property
    def distinct_count(self) -> int:
        return len(self.factors)

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


def _canonical_order(items):
    return tuple(sorted(items, key=lambda fe: (fe[0].sort_key(), fe[1])))


# -- squarefree ------------------------------------------------------------


def _pth_root(f: Poly) -> Poly:
    # over a prime field lambda^p == lambda, so only the exponents shrink
    p = f.field.characteristic
    return Poly._raw(f.field, f.coeffs[::p])


def _squarefree_monic(f: Poly) -> List[Tuple[Poly, int]]:
    if f.degree < 1:
        return []
    p = f.field.characteristic
    out: List[Tuple[Poly, int]] = []
    c = poly_gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        # only reachable in characteristic p: c = h(x^p)
        for g, m in _squarefree_monic(_pth_root(c).monic()):
            out.append((g, m * p))
    return out


def squarefree_decomposition(f: Poly) -> SquarefreeDecomposition:
    """Pairwise coprime squarefree g_i with f = lc * prod g_i^i."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree decomposition of 0")
    parts = _squarefree_monic(f.monic())
    return SquarefreeDecomposition(f.lc, tuple(sorted(parts, key=lambda gi: (gi[1], gi[0].sort_key()))))


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``f``."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree part of 0")
    acc = Poly.one(f.field)
    for g, _ in squarefree_decomposition(f).parts:
        acc = acc * g
    return acc


def is_squarefree(f: Poly) -> bool:
    return f.degree < 1 or poly_gcd(f, f.derivative()).degree == 0


# -- Berlekamp over F_p ----------------------------------------------------


def _berlekamp_basis(f: Poly) -> List[Poly]:
    field = f.field
    p = field.p
    d = f.degree
    xp = Poly.x(field).powmod(p, f)
    rows = []
    cur = Poly.one(field)
    for _ in range(d):
        rows.append(list(cur.coeffs) + [0] * (d - len(cur.coeffs)))
        cur = (cur * xp) % f
    # v with sum_i v_i x^{ip} == v  <=>  (B^T - I) v = 0
    m = [[(rows[i][j] - (1 if i == j else 0)) % p for i in range(d)] for j in range(d)]
    return [Poly(field, v) for v in nullspace(m, d, field)]


def _split_all_shifts(h: Poly, v: Poly) -> List[Poly]:
    parts = []
    for s in range(h.field.p):
        if h.degree < 1:
            break
        g = poly_gcd(h, v - s)
        if g.degree > 0:
            parts.append(g)
            h = h // g
    return parts


def _split_equal(h: Poly, v: Poly) -> List[Poly]:
    # large odd p: gcd(h, (v + c)^((p-1)/2) - 1) for c = 0, 1, 2, ...
    p = h.field.p
    if v.degree < 1:
        return [h]
    for c in range(min(p, EQUAL_SPLIT_TRIES)):
        w = (v + c).powmod((p - 1) // 2, h) - 1
        g = poly_gcd(h, w)
        if 0 < g.degree < h.degree:
            return [g, h // g]
    return [h]


def berlekamp(f: Poly) -> List[Poly]:
    """Monic irreducible factors of a monic squarefree ``f`` over a prime field."""
    if f.degree <= 1:
        return [f] if f.degree == 1 else []
    basis = _berlekamp_basis(f)
    k = len(basis)
    if k == 1:
        return [f]
    factors = [f]
    use_shifts = f.field.p <= SHIFT_SCAN_LIMIT
    for v in basis:
        if v.degree < 1:
            continue
        while True:
            new = []
            for h in factors:
                if h.degree == 1:
                    new.append(h)
                elif use_shifts:
                    new.extend(_split_all_shifts(h, v % h))
                else:
                    new.extend(_split_equal(h, v % h))
            progressed = len(new) > len(factors)
            factors = new
            if use_shifts or not progressed or len(factors) == k:
                break
        if len(factors) == k:
            break
    return sorted(factors, key=Poly.sort_key)


# -- integer polynomial helpers (low-to-high int lists) ---------------------


def _zstrip(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zdivmod_monic(a: Sequence[int], b: Sequence[int]):
    """Division by a monic integer polynomial."""
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], _zstrip(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            q[k - db] = c
            off = k - db
            for j in range(db + 1):
                r[off + j] -= c * b[j]
    return _zstrip(q), _zstrip(r[:db])


def _symmetric(a: Sequence[int], m: int) -> List[int]:
    half = m // 2
    return _zstrip([((x % m) - m if (x % m) > half else (x % m)) for x in a])


def _to_fp(a: Sequence[int], p: int) -> Poly:
    return Poly(GF(p), a)


def _primitive_integer(f: Poly) -> List[int]:
    """Clear denominators and content of a rational polynomial; positive leading coefficient."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def _good_prime(F: Sequence[int]) -> int:
    p = 5
    while True:
        if is_prime(p) and F[-1] % p:
            fp = _to_fp(F, p)
            if poly_gcd(fp, fp.derivative()).degree == 0:
                return p
        p += 2


def _lift_pair(F: List[int], g: Poly, h: Poly, p: int, k: int):
    """Lift F = g*h (mod p) to mod p^k; g, h monic.  Linear Hensel steps."""
    field = g.field
    d, s, t = poly_xgcd(g, h)
    assert d.is_one()
    P = p ** k
    G = list(g.coeffs)
    H = list(h.coeffs)
    Fm = [x % P for x in F]
    m = p
    for _ in range(1, k):
        D = [x - y for x, y in zip(Fm, _zmul(G, H) + [0] * len(Fm))]
        D = [x % (m * p) for x in D]
        e = Poly(field, [x // m for x in D])
        q, r = divmod(t * e, g)
        dg = r
        dh = s * e + q * h
        G = [x + m * y for x, y in zip(G, list(dg.coeffs) + [0] * len(G))]
        H = [x + m * y for x, y in zip(H, list(dh.coeffs) + [0] * len(H))]
        m *= p
    return G, H


def _hensel_lift(F: List[int], factors: List[Poly], p: int, k: int) -> List[List[int]]:
    P = p ** k
    lifted = []
    cur = [x % P for x in F]
    rest = factors
    while len(rest) > 1:
        g = rest[0]
        h = Poly.one(g.field)
        for r in rest[1:]:
            h = h * r
        G, H = _lift_pair(cur, g, h, p, k)
        lifted.append([x % P for x in G])
        cur = [x % P for x in H]
        rest = rest[1:]
    lifted.append(cur)
    return lifted


def _zassenhaus_monic(F: List[int]) -> List[List[int]]:
    """Irreducible factors over Z of a monic squarefree integer polynomial."""
    d = len(F) - 1
    if d <= 1:
        return [F]
    p = _good_prime(F)
    modp = berlekamp(_to_fp(F, p))
    if len(modp) == 1:
        return [F]
    norm = math.isqrt(sum(x * x for x in F)) + 1
    bound = 2 ** d * norm
    k = 1
    while p ** k <= 2 * bound:
        k += 1
    P = p ** k
    pool = [_symmetric(g, P) for g in _hensel_lift(F, modp, p, k)]
    found = []
    cur = F
    s = 1
    while 2 * s <= len(pool):
        hit = None
        for subset in combinations(range(len(pool)), s):
            cand = [1]
            for i in subset:
                cand = _symmetric(_zmul(cand, pool[i]), P)
            if cand[0] == 0 and cur[0] != 0:
                continue
            if cand[0] and cur[0] % cand[0]:
                continue
            q, r = _zdivmod_monic(cur, cand)
            if not r:
                hit = subset, cand, q
                break
        if hit is None:
            s += 1
            continue
        subset, cand, q = hit
        found.append(cand)
        cur = q
        pool = [g for i, g in enumerate(pool) if i not in subset]
    found.append(cur)
    return found


def _factor_squarefree_rational(g: Poly, degree_cap: int) -> List[Poly]:
    if g.degree <= 1:
        return [g]
    if g.degree > degree_cap:
        raise DegreeLimitExceeded(f"degree {g.degree} exceeds the rational factorization cap {degree_cap}")
    G = _primitive_integer(g)
    d = len(G) - 1
    a = G[-1]
    # a^(d-1) G(x/a) is monic with integer coefficients
    mon = [G[i] * a ** (d - 1 - i) for i in range(d)] + [1]
    out = []
    for h in _zassenhaus_monic(mon):
        back = [Fraction(c) * Fraction(a) ** i for i, c in enumerate(h)]
        out.append(Poly(QQ, back).monic())
    return out


def factor(f: Poly, degree_cap: int = DEFAULT_DEGREE_CAP) -> Factorization:
    """Irreducible factorization: ``lc * prod f_i^e_i`` with monic f_i, canonically ordered."""
    if f.is_zero():
        raise ZeroPolynomial("factorization of 0")
    field = f.field
    sqf = squarefree_decomposition(f)
    out = []
    for g, mult in sqf.parts:
        if isinstance(field, PrimeField):
            pieces = berlekamp(g)
        else:
            pieces = _factor_squarefree_rational(g, degree_cap)
        out.extend((h, mult) for h in pieces)
    return Factorization(f.lc, _canonical_order(out))


# -- CRT idempotent --------------------------------------------------------


def crt_idempotent_poly(p: Poly, f1: Poly) -> Poly:
    """u with deg u < deg p, u = 1 mod f1 and u = 0 mod p/f1."""
    if f1.degree < 1 or f1.degree >= p.degree or not f1.divides(p):
        raise NotADivisor("f1 must be a nontrivial divisor of p")
    f2 = p // f1
    d, s, t = poly_xgcd(f1, f2)
    if not d.is_one():
        raise NotCoprime("f1 and p/f1 share a factor")
    # s*f1 + t*f2 = 1, so t*f2 is 0 mod f2 and 1 mod f1
    return (t * f2) % p
