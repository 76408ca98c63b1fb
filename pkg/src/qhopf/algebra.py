"""Finite dimensional algebras by structure constants, leg-wise
multiplication in tensor products, and exact inversion.

A LegMul is any bilinear pairing L x R -> O given by sparse structure
constants; algebras, left actions and right actions all expose one, so a
single routine multiplies elements of mixed tensor products such as
M (x) H (x) H where the first leg is acted on rather than multiplied.
"""

from __future__ import annotations

import itertools
from typing import Dict, Optional, Sequence, Tuple

from .fields import Field, QQ
from .linalg import invert_matrix_map, solve_linear
from .tensor import Basis, LinearMap, Tensor

MATERIALIZE_THRESHOLD = 64


class LegMul:
    """A bilinear pairing of based spaces by structure constants.

    table[(i, j)] is a sparse vector over the output basis; missing pairs
    multiply to zero.
    """

    __slots__ = ("left", "right", "out", "table", "field")

    def __init__(self, left: Basis, right: Basis, out: Basis, table, field: Field = QQ):
        self.left = left
        self.right = right
        self.out = out
        self.field = field
        self.table = {}
        for key, vec in table.items():
            clean = {k: c for k, c in vec.items() if c}
            if clean:
                self.table[key] = clean

    @classmethod
    def from_function(cls, left, right, out, fn, field: Field = QQ):
        table = {}
        for i in range(left.dim):
            for j in range(right.dim):
                t = fn(i, j)
                table[(i, j)] = {k[0]: c for k, c in t.data.items()}
        return cls(left, right, out, table, field)

    def pair(self, i: int, j: int) -> Dict[int, object]:
        return self.table.get((i, j), {})

    def flip(self) -> "LegMul":
        """The opposite pairing: (i, j) |-> table[(j, i)]."""
        table = {(j, i): vec for (i, j), vec in self.table.items()}
        return LegMul(self.right, self.left, self.out, table, self.field)


def mul_legs(legs: Sequence[LegMul], x: Tensor, y: Tensor) -> Tensor:
    """Leg-wise product: leg i of the result is legs[i].pair applied to
    leg i of x and leg i of y, summed bilinearly."""
    if len(x.spaces) != len(legs) or len(y.spaces) != len(legs):
        raise ValueError("leg count mismatch")
    for i, leg in enumerate(legs):
        if x.spaces[i] != leg.left or y.spaces[i] != leg.right:
            raise ValueError("leg %d basis mismatch" % i)
    out = Tensor.zero(tuple(leg.out for leg in legs), x.field)
    data = out.data
    for xi, cx in x.data.items():
        for yi, cy in y.data.items():
            c0 = cx * cy
            vecs = []
            dead = False
            for leg, i, j in zip(legs, xi, yi):
                v = leg.pair(i, j)
                if not v:
                    dead = True
                    break
                vecs.append(v)
            if dead:
                continue
            for combo in itertools.product(*(v.items() for v in vecs)):
                idx = tuple(k for k, _ in combo)
                c = c0
                for _, s in combo:
                    c = c * s
                acc = data.get(idx)
                acc = c if acc is None else acc + c
                if acc:
                    data[idx] = acc
                elif idx in data:
                    del data[idx]
    return out


class FinAlgebra:
    """A finite dimensional unital algebra given by structure constants.

    mult[(i, j)] is the sparse product of basis vectors i and j; unit is
    a one-leg Tensor. Associativity and unit laws are checked by
    is_associative/unit_laws_hold rather than enforced, because some
    carriers built here (for instance the convolution algebra of a dual)
    are deliberately nonassociative.
    """

    def __init__(self, basis: Basis, mult, unit: Tensor, field: Field = QQ):
        self.basis = basis
        self.field = field
        self.mult = {}
        for key, vec in mult.items():
            clean = {k: c for k, c in vec.items() if c}
            if clean:
                self.mult[key] = clean
        if unit.spaces != (basis,):
            raise ValueError("unit shape mismatch")
        self.unit = unit

    @property
    def dim(self) -> int:
        return self.basis.dim

    def e(self, i: int) -> Tensor:
        return Tensor.basis_vector(self.basis, i, self.field)

    def unit_tensor(self) -> Tensor:
        return self.unit

    def mul_indices(self, i: int, j: int) -> Tensor:
        vec = self.mult.get((i, j), {})
        return Tensor((self.basis,), {(k,): c for k, c in vec.items()}, self.field)

    def mul(self, x: Tensor, y: Tensor) -> Tensor:
        return mul_legs((self.as_leg(),), x, y)

    def mulc(self, *xs: Tensor) -> Tensor:
        """Chained product of one-leg tensors, left to right."""
        acc = xs[0]
        leg = (self.as_leg(),)
        for x in xs[1:]:
            acc = mul_legs(leg, acc, x)
        return acc

    def as_leg(self) -> LegMul:
        return LegMul(self.basis, self.basis, self.basis, self.mult, self.field)

    def left_action_leg(self, module_basis: Basis, table) -> LegMul:
        return LegMul(self.basis, module_basis, module_basis, table, self.field)

    def opposite(self) -> "FinAlgebra":
        op_basis = Basis(self.basis.labels, self.basis.name + "^op")
        mult = {}
        for (i, j), vec in self.mult.items():
            mult[(j, i)] = vec
        unit = Tensor((op_basis,), {k: c for k, c in self.unit.data.items()}, self.field)
        return FinAlgebra(op_basis, mult, unit, self.field)

    def is_associative(self) -> Optional[Tuple[int, int, int]]:
        """None if associative, else the first failing index triple."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.mul(self.mul_indices(i, j), self.e(k))
                    rhs = self.mul(self.e(i), self.mul_indices(j, k))
                    if lhs != rhs:
                        return (i, j, k)
        return None

    def unit_laws_hold(self) -> Optional[int]:
        """None if the unit is two-sided, else the first failing index."""
        for i in range(self.dim):
            x = self.e(i)
            if self.mul(self.unit, x) != x or self.mul(x, self.unit) != x:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, FinAlgebra):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.mult == other.mult
            and self.unit == other.unit
        )


class LazyAlgebra:
    """An algebra whose products are computed on demand and memoized.

    Used for product constructions whose dimension exceeds the
    materialization threshold; exposes the same product interface as
    FinAlgebra.
    """

    def __init__(self, basis: Basis, evaluator, unit: Tensor, field: Field = QQ):
        self.basis = basis
        self.field = field
        self.evaluator = evaluator
        self.unit = unit
        self._cache: Dict[Tuple[int, int], Tensor] = {}

    @property
    def dim(self) -> int:
        return self.basis.dim

    def e(self, i: int) -> Tensor:
        return Tensor.basis_vector(self.basis, i, self.field)

    def unit_tensor(self) -> Tensor:
        return self.unit

    def mul_indices(self, i: int, j: int) -> Tensor:
        key = (i, j)
        hit = self._cache.get(key)
        if hit is None:
            hit = self.evaluator(i, j)
            self._cache[key] = hit
        return hit

    def mul(self, x: Tensor, y: Tensor) -> Tensor:
        out = Tensor.zero((self.basis,), self.field)
        for (i,), cx in x.data.items():
            for (j,), cy in y.data.items():
                out = out + self.mul_indices(i, j).scale(cx * cy)
        return out

    def mulc(self, *xs: Tensor) -> Tensor:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.mul(acc, x)
        return acc

    def materialize(self) -> FinAlgebra:
        mult = {}
        n = self.dim
        for i in range(n):
            for j in range(n):
                t = self.mul_indices(i, j)
                if t.data:
                    mult[(i, j)] = {k: c for (k,), c in t.data.items()}
        return FinAlgebra(self.basis, mult, self.unit, self.field)

    def as_leg(self) -> LegMul:
        return self.materialize().as_leg()


def make_product_algebra(basis: Basis, evaluator, unit: Tensor, field: Field = QQ,
                         threshold: int = MATERIALIZE_THRESHOLD):
    """Materialize a product construction if small, else keep it lazy."""
    lazy = LazyAlgebra(basis, evaluator, unit, field)
    if basis.dim <= threshold:
        return lazy.materialize()
    return lazy


def tensor_unit(algebras: Sequence[FinAlgebra]) -> Tensor:
    out = Tensor.scalar(algebras[0].field.one(), algebras[0].field)
    for a in algebras:
        out = out.tensor(a.unit_tensor())
    return out


def tensor_algebra_legs(algebras: Sequence[FinAlgebra]) -> Tuple[LegMul, ...]:
    return tuple(a.as_leg() for a in algebras)


def invert_in_tensor_algebra(algebras: Sequence[FinAlgebra], x: Tensor) -> Optional[Tensor]:
    """Two-sided inverse of x in the tensor product algebra, or None.

    Solves the left-multiplication system exactly, then verifies both
    x * y = 1 and y * x = 1 before returning y.
    """
    legs = tensor_algebra_legs(algebras)
    spaces = tuple(a.basis for a in algebras)
    dims = [b.dim for b in spaces]
    total = 1
    for d in dims:
        total *= d
    field = x.field

    def flat(idx):
        f = 0
        for i, d in zip(idx, dims):
            f = f * d + i
        return f

    def unflat(f):
        out = []
        for d in reversed(dims):
            out.append(f % d)
            f //= d
        return tuple(reversed(out))

    unit = tensor_unit(algebras)
    # rows of the system:  sum_b M[a, b] y_b = unit_a, M[:, b] = x * e_b
    rows = [dict() for _ in range(total)]
    for b in range(total):
        eb = Tensor(spaces, {unflat(b): field.one()}, field)
        col = mul_legs(legs, x, eb)
        for idx, c in col.data.items():
            rows[flat(idx)][b] = c
    rhs = [unit.data.get(unflat(a), field.zero()) for a in range(total)]
    try:
        sol = solve_linear(rows, rhs, field)
    except ArithmeticError:
        return None
    if sol is None:
        return None
    y = Tensor(spaces, {unflat(b): c for b, c in sol.items()}, field)
    if mul_legs(legs, x, y) != unit or mul_legs(legs, y, x) != unit:
        return None
    return y


def invert_linear_map(f: LinearMap) -> Optional[LinearMap]:
    """Inverse of an endomorphism with a single codomain leg."""
    if f.codomain != (f.domain,):
        raise ValueError("only endomorphisms can be inverted")
    dim = f.domain.dim

    def apply_fn(j):
        return {k[0]: c for k, c in f.cols.get(j, {}).items()}

    cols = invert_matrix_map(apply_fn, dim, f.field)
    if cols is None:
        return None
    return LinearMap(
        f.domain,
        (f.domain,),
        {j: {(k,): c for k, c in col.items()} for j, col in enumerate(cols)},
        f.field,
    )
