import random

import pytest

from commgraph import GF, QQ, Mat, Poly, block_idempotent, characteristic_polynomial, commutes
from commgraph import companion, frobenius_form, is_central, is_derogatory, minimal_polynomial
from commgraph.errors import NotDerogatory
from commgraph.matrix import block_diag

from conftest import random_matrix
from oracles import invariant_factors_by_minors


def assert_frobenius_laws(a):
    ff = frobenius_form(a)
    fs = ff.invariant_factors
    assert ff.transform @ ff.transform_inverse == Mat.identity(a.field, a.n)
    assert ff.transform_inverse @ ff.block_matrix() @ ff.transform == a
    for f, g in zip(fs, fs[1:]):
        assert f.divides(g)
    prod = Poly.one(a.field)
    for f in fs:
        assert f.is_monic() and f.degree >= 1
        prod = prod * f
    assert prod == characteristic_polynomial(a)
    assert fs[-1] == minimal_polynomial(a)
    assert [b for b in ff.blocks] == [companion(f) for f in fs]
    return ff


def test_companion_is_its_own_form():
    f = Poly(QQ, [2, -1, 0, 1])
    ff = assert_frobenius_laws(companion(f))
    assert ff.invariant_factors == (f,)
    assert ff.transform.is_identity()


def test_diag_112_over_f5(F5):
    x = Poly.x(F5)
    ff = assert_frobenius_laws(Mat.diag(F5, [1, 1, 2]))
    assert ff.invariant_factors == (x - 1, (x - 1) * (x - 2))


def test_scalar_has_three_blocks(F7):
    x = Poly.x(F7)
    ff = assert_frobenius_laws(Mat.scalar(F7, 3, 4))
    assert ff.invariant_factors == (x - 4,) * 3


def test_diag_with_distinct_eigenvalues_is_one_block(F5):
    # a naive "first basis vector of largest order" choice fails here
    ff = assert_frobenius_laws(Mat.diag(F5, [1, 2]))
    assert ff.k == 1


def test_is_derogatory_examples(F5, F2):
    assert is_derogatory(Mat.diag(F5, [1, 1, 2]))
    assert not is_derogatory(companion(Poly(F2, [1, 1, 0, 1])))
    assert is_derogatory(Mat.scalar(F5, 3, 3))


def _check_block_idempotent(a):
    e = block_idempotent(frobenius_form(a))
    assert e @ e == e
    assert commutes(a, e)
    assert not is_central(e)
    return e


def test_block_idempotent_examples(F5, F3):
    a = Mat.diag(F5, [1, 1, 2])
    e = _check_block_idempotent(a)
    assert sum(e.rows[i][i] for i in range(3)) % 5 == 1  # rank 1
    j = block_diag(F3, [Mat(F3, [[0, 1], [0, 0]]), Mat.zero(F3, 1)])
    _check_block_idempotent(j)
    with pytest.raises(NotDerogatory):
        block_idempotent(frobenius_form(companion(Poly(F3, [1, 2, 0, 1]))))


@pytest.mark.parametrize("field", [GF(2), GF(3), GF(5), QQ], ids=repr)
def test_invariant_factors_match_minor_gcds(field):
    r = random.Random(hash(repr(field)) % 1000)
    for _ in range(25):
        n = r.randint(1, 4)
        a = random_matrix(r, field, n)
        if r.random() < 0.4:
            # force repeated structure
            d = [r.randint(0, 2) for _ in range(n)]
            a = Mat.diag(field, d)
            q = random_matrix(r, field, n)
            try:
                a = q @ a @ q ** -1
            except ValueError:
                pass
        ff = assert_frobenius_laws(a)
        assert list(ff.invariant_factors) == invariant_factors_by_minors(a)
