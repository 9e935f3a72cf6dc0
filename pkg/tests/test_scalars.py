from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from tcring.scalars import (
    GF,
    QQ,
    ZZ,
    CoefficientRing,
    MixedRingError,
    NotInvertibleError,
    field_rank,
    invert,
    is_prime,
    row_reduce,
)

small = st.integers(min_value=-10**6, max_value=10**6)
fractions = st.fractions(max_denominator=1000)
primes = st.sampled_from([2, 3, 5, 7, 11, 101])


def test_parse_and_render():
    assert CoefficientRing.parse("Z") == ZZ
    assert CoefficientRing.parse("Q") == QQ
    assert CoefficientRing.parse("F_5") == GF(5)
    assert str(GF(5)) == "F_5"
    for bad in ["F_4", "F_1", "R", "F_x", ""]:
        with pytest.raises(ValueError):
            CoefficientRing.parse(bad)


def test_field_flags():
    assert not ZZ.is_field and QQ.is_field and GF(3).is_field
    assert ZZ.characteristic == 0 and GF(7).characteristic == 7


def test_normalize_reduces_mod_p():
    assert GF(2).normalize(-2) == 0
    assert GF(3).normalize(-1) == 2
    assert QQ.normalize(Fraction(4, 2)) == 2
    with pytest.raises((TypeError, ValueError)):
        ZZ.normalize(Fraction(1, 2))


def test_mixed_rings_rejected():
    with pytest.raises(MixedRingError):
        ZZ(1) + GF(2)(1)


def test_inverses():
    assert invert(GF(7)(3)) * GF(7)(3) == GF(7).one
    assert invert(QQ(Fraction(2, 3))) == QQ(Fraction(3, 2))
    assert invert(ZZ(-1)) == ZZ(-1)
    with pytest.raises(NotInvertibleError):
        invert(ZZ(2))
    with pytest.raises(NotInvertibleError):
        invert(GF(5)(0))


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@given(small, small, small)
def test_integer_ring_axioms(a, b, c):
    x, y, z = ZZ(a), ZZ(b), ZZ(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZZ.zero


@given(fractions, fractions, fractions)
def test_rational_ring_axioms(a, b, c):
    x, y, z = QQ(a), QQ(b), QQ(c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if a:
        assert x * invert(x) == QQ.one


@given(primes, small, small, small)
def test_prime_field_axioms(p, a, b, c):
    F = GF(p)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    if not x.is_zero():
        assert x * invert(x) == F.one


@pytest.mark.parametrize("p", [2, 3])
def test_small_fields_exhaustively(p):
    F = GF(p)
    elems = [F(i) for i in range(p)]
    for x, y, z in product(elems, repeat=3):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_row_reduce_drops_zero_rows():
    rows = row_reduce([[1, 2], [2, 4], [0, 0]], QQ)
    assert rows == [[1, 2]]
    assert row_reduce([[1, 1], [1, 0]], GF(2)) == [[1, 0], [0, 1]]


def test_row_reduce_rejects_ragged_input():
    with pytest.raises(ValueError):
        row_reduce([[1, 2], [1]], QQ)


def test_rank_depends_on_characteristic():
    M = [[1, 1], [1, -1]]
    assert field_rank(M, QQ) == 2
    assert field_rank(M, GF(2)) == 1


@given(
    primes,
    st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4),
)
def test_rank_of_transpose(p, M):
    T = [list(col) for col in zip(*M)]
    for F in (QQ, GF(p)):
        assert field_rank(M, F) == field_rank(T, F)
