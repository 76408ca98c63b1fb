from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhopf import (Basis, FinAlgebra, LazyAlgebra, LinearMap, QQ, Tensor,
                   invert_in_tensor_algebra, invert_linear_map,
                   make_product_algebra, mul_legs)

F = Fraction


def cyclic_mult(n):
    return {(i, j): {(i + j) % n: F(1)} for i in range(n) for j in range(n)}


def cyclic_algebra(n):
    basis = Basis(tuple("g%d" % i for i in range(n)), "C%d" % n)
    unit = Tensor((basis,), {(0,): F(1)}, QQ)
    return FinAlgebra(basis, cyclic_mult(n), unit, QQ)


def test_finalgebra_basics():
    A = cyclic_algebra(3)
    assert A.dim == 3
    assert A.is_associative() is None
    assert A.unit_laws_hold() is None
    assert A.mul(A.e(1), A.e(2)) == A.e(0)
    assert A.mulc(A.e(1), A.e(1), A.e(1)) == A.e(0)
    assert A.mul_indices(1, 1) == A.e(2)


def test_nonassociative_detected():
    basis = Basis(("u", "x", "y"), "NA")
    unit = Tensor((basis,), {(0,): F(1)}, QQ)
    # (x x) x = y x = 0 while x (x x) = x y = u
    mult = {(0, 0): {0: F(1)}, (0, 1): {1: F(1)}, (0, 2): {2: F(1)},
            (1, 0): {1: F(1)}, (2, 0): {2: F(1)},
            (1, 1): {2: F(1)}, (1, 2): {0: F(1)},
            (2, 1): {}, (2, 2): {}}
    A = FinAlgebra(basis, mult, unit, QQ)
    assert A.unit_laws_hold() is None
    bad = A.is_associative()
    assert bad is not None
    i, j, k = bad
    x, y, z = A.e(i), A.e(j), A.e(k)
    assert A.mul(A.mul(x, y), z) != A.mul(x, A.mul(y, z))


def test_broken_unit_detected():
    basis = Basis(("u", "x"), "BU")
    unit = Tensor((basis,), {(1,): F(1)}, QQ)
    mult = cyclic_mult(2)
    A = FinAlgebra(basis, mult, unit, QQ)
    assert A.unit_laws_hold() is not None


def test_opposite():
    A = cyclic_algebra(3)
    op = A.opposite()
    assert op.basis.name.endswith("^op")
    for i in range(3):
        for j in range(3):
            assert op.mult.get((i, j), {}) == A.mult.get((j, i), {})
    assert op.is_associative() is None


def test_legmul_and_mul_legs():
    A = cyclic_algebra(2)
    leg = A.as_leg()
    assert leg.pair(1, 1) == {0: F(1)}
    x = A.e(0) + A.e(1)
    y = A.e(1)
    prod = mul_legs((leg, leg), x.tensor(x), y.tensor(y))
    # (e0+e1)(x)(e0+e1) times e1(x)e1 componentwise
    expect = A.mul(x, y).tensor(A.mul(x, y))
    assert prod == expect
    flipped = leg.flip()
    assert flipped.pair(0, 1) == leg.pair(1, 0)


def test_lazy_algebra_materialize():
    A = cyclic_algebra(4)

    def evaluator(i, j):
        return A.mul_indices(i, j)

    lazy = LazyAlgebra(A.basis, evaluator, A.unit_tensor(), QQ)
    assert lazy.mul_indices(2, 3) == A.mul_indices(2, 3)
    mat = lazy.materialize()
    assert isinstance(mat, FinAlgebra)
    assert mat.mult == A.mult
    small = make_product_algebra(A.basis, evaluator, A.unit_tensor(), QQ,
                                 threshold=10)
    assert isinstance(small, FinAlgebra)
    big = make_product_algebra(A.basis, evaluator, A.unit_tensor(), QQ,
                               threshold=2)
    assert isinstance(big, LazyAlgebra)


def test_invert_in_tensor_algebra():
    A = cyclic_algebra(2)
    unit2 = A.unit_tensor().tensor(A.unit_tensor())
    x = A.e(0).tensor(A.e(0)).scale(F(1, 2)) + A.e(1).tensor(A.e(1))
    legs = (A.as_leg(), A.as_leg())
    y = invert_in_tensor_algebra((A, A), x)
    assert y is not None
    assert mul_legs(legs, x, y) == unit2
    assert mul_legs(legs, y, x) == unit2
    # a zero divisor has no inverse
    z = A.e(0) + A.e(1)
    assert invert_in_tensor_algebra((A,), z) is None


def test_invert_linear_map():
    A = cyclic_algebra(3)
    # the permutation g -> g^2 is invertible
    f = LinearMap(A.basis, (A.basis,),
                  {i: {((2 * i) % 3,): F(1)} for i in range(3)}, QQ)
    g = invert_linear_map(f)
    assert g is not None
    for i in range(3):
        assert g(f(A.e(i))) == A.e(i)
        assert f(g(A.e(i))) == A.e(i)
    # projection is singular
    p = LinearMap(A.basis, (A.basis,), {i: {(0,): F(1)} for i in range(3)},
                  QQ)
    assert invert_linear_map(p) is None


@settings(max_examples=25)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_group_algebra_inverses(coeffs):
    A = cyclic_algebra(3)
    x = Tensor((A.basis,), {(i,): F(c) for i, c in enumerate(coeffs) if c},
               QQ)
    y = invert_in_tensor_algebra((A,), x)
    if y is not None:
        assert A.mul(x, y) == A.unit_tensor()
        assert A.mul(y, x) == A.unit_tensor()
