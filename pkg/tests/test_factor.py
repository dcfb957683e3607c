import random

import pytest

from commgraph import GF, QQ, Poly, crt_idempotent_poly, factor, squarefree_decomposition, squarefree_part
from commgraph.errors import DegreeLimitExceeded, NotADivisor, NotCoprime, ZeroPolynomial
from commgraph.factor import berlekamp, is_squarefree

from oracles import has_rational_root, irreducible_by_trial_division


def test_squarefree_examples(F2, F5, F7):
    x = Poly.x(QQ)
    assert squarefree_decomposition(x**3).parts == ((x, 3),)
    y = Poly.x(F5)
    f = (y - 1) * (y - 2)
    assert squarefree_decomposition(f).parts == ((f, 1),)
    z = Poly.x(F2)
    assert squarefree_decomposition(z**2).parts == ((z, 2),)
    assert squarefree_part(x**3) == x
    w = Poly.x(F7)
    assert squarefree_part((w - 1) ** 2 * (w - 2)) == (w - 1) * (w - 2)
    assert squarefree_part(f) == f


def test_squarefree_pth_power_mixed(F3):
    x = Poly.x(F3)
    # (x^3 + 2)^2 (x + 1) has f' != 0 but a p-th power inside
    f = (x**3 + 2) ** 2 * (x**2 + 1)
    dec = squarefree_decomposition(f)
    assert dec.expand(F3) == f
    assert all(is_squarefree(g) for g, _ in dec.parts)


def test_factor_examples(F2):
    x = Poly.x(F2)
    assert factor(x**2 + 1).factors == ((x + 1, 2),)
    assert factor(x**3 + x + 1).is_irreducible()
    q = Poly.x(QQ)
    assert factor(q**2 - 1).factors == ((q - 1, 1), (q + 1, 1))


def test_factor_rational_hard_cases():
    x = Poly.x(QQ)
    # x^4 + 4 is reducible over Q but irreducible-looking modulo many primes
    assert factor(x**4 + 4).factors == ((x**2 - 2 * x + 2, 1), (x**2 + 2 * x + 2, 1))
    assert factor(x**8 - 2).is_irreducible()
    # Swinnerton-Dyer style: x^4 - 10x^2 + 1 splits modulo every prime
    assert factor(x**4 - 10 * x**2 + 1).is_irreducible()
    f = Poly(QQ, [3, 0, 6]) * (x - Poly.constant(QQ, 1) / 2 if False else x - 5)
    fac = factor(f)
    assert fac.expand(QQ) == f and fac.leading == 6


def test_factor_rejects_zero_and_cap(F5):
    with pytest.raises(ZeroPolynomial):
        factor(Poly(F5))
    x = Poly.x(QQ)
    with pytest.raises(DegreeLimitExceeded):
        factor(x**13 - 2)


def test_crt_idempotent_examples(F5):
    y = Poly.x(F5)
    u = crt_idempotent_poly((y - 1) * (y - 2), y - 1)
    assert u == Poly(F5, [2, 4])
    assert u(1) == 1 and u(2) == 0
    x = Poly.x(QQ)
    v = crt_idempotent_poly(x**2 - 1, x - 1)
    assert v(1) == 1 and v(-1) == 0
    with pytest.raises(NotADivisor):
        crt_idempotent_poly(x**2 - 1, x**2 - 1)
    with pytest.raises(NotCoprime):
        crt_idempotent_poly((x - 1) ** 2, x - 1)


def test_crt_idempotent_is_idempotent_mod_p(rng):
    F = GF(7)
    x = Poly.x(F)
    for _ in range(20):
        roots = rng.sample(range(7), 3)
        p = (x - roots[0]) * (x - roots[1]) * (x - roots[2])
        u = crt_idempotent_poly(p, x - roots[0])
        assert ((u * u - u) % p).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_berlekamp_factors_are_irreducible(p):
    r = random.Random(100 + p)
    F = GF(p)
    for _ in range(30):
        f = Poly(F, [r.randrange(p) for _ in range(r.randint(1, 7))] + [1])
        g = squarefree_part(f)
        parts = berlekamp(g)
        prod = Poly.one(F)
        for h in parts:
            assert irreducible_by_trial_division(list(h.coeffs), p)
            prod = prod * h
        assert prod == g


def test_large_prime_uses_equal_degree_split():
    F = GF(1_000_003)
    x = Poly.x(F)
    f = (x - 5) * (x - 7) * (x**2 + 1) * (x - 12345)
    fac = factor(f)
    assert fac.expand(F) == f
    assert sorted(h.degree for h, _ in fac.factors) == [1, 1, 1, 1, 1] or [1, 1, 1, 2]


def test_rational_factors_certified(rng):
    for _ in range(30):
        coeffs = [rng.randint(-20, 20) for _ in range(rng.randint(2, 6))]
        if coeffs[-1] == 0:
            coeffs[-1] = 1
        f = Poly(QQ, coeffs)
        fac = factor(f)
        assert fac.expand(QQ) == f
        for h, _ in fac.factors:
            if h.degree > 1:
                # for degree 2 and 3 this alone certifies irreducibility
                assert not has_rational_root(h)
