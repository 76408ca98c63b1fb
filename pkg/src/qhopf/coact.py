"""Comodule algebras over a quasi-bialgebra, module algebras, module
coalgebras, and the canonical elements of a right comodule algebra.

A right comodule algebra is an associative algebra A with an algebra map
rho: A -> A (x) H that is coassociative up to an invertible reassociator
Phi_rho in A (x) H (x) H; a left comodule algebra mirrors this with
lambda: B -> H (x) B and Phi_lam in H (x) H (x) B. A bicomodule algebra
carries both plus a middle reassociator Phi_mid in H (x) A (x) H. Mixed
tensors (some legs in A, some in H) are multiplied leg by leg.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .algebra import (FinAlgebra, LegMul, invert_in_tensor_algebra,
                      mul_legs, tensor_unit)
from .quasihopf import DerivedElements, QuasiBialgebra, QuasiHopfAlgebra
from .report import VerificationReport
from .tensor import Basis, LinearMap, Tensor


def _check_inverse(algebras, x: Tensor, x_inv: Optional[Tensor],
                   what: str) -> Tensor:
    if x_inv is None:
        x_inv = invert_in_tensor_algebra(algebras, x)
        if x_inv is None:
            raise ValueError("%s is not invertible" % what)
        return x_inv
    legs = tuple(a.as_leg() for a in algebras)
    unit = tensor_unit(algebras)
    if mul_legs(legs, x, x_inv) != unit or mul_legs(legs, x_inv, x) != unit:
        raise ValueError("supplied inverse of %s fails the two-sided check" % what)
    return x_inv


class _ComoduleAlgebraBase:
    """Shared leg plumbing for comodule algebras: the carrier algebra and
    the ambient quasi-bialgebra, with leg-wise multiplication of mixed
    tensors whose legs are resolved by basis."""

    def __init__(self, H: QuasiBialgebra, algebra: FinAlgebra, name: str):
        if algebra.field != H.field:
            raise ValueError("field mismatch between carrier and ambient algebra")
        self.H = H
        self.algebra = algebra
        self.name = name or algebra.basis.name

    @property
    def field(self):
        return self.H.field

    @property
    def basis(self) -> Basis:
        return self.algebra.basis

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def e(self, i: int) -> Tensor:
        return self.algebra.e(i)

    def unit(self) -> Tensor:
        return self.algebra.unit_tensor()

    def leg_for(self, space: Basis) -> LegMul:
        if space == self.basis:
            return self.algebra.as_leg()
        if space == self.H.basis:
            return self.H.leg()
        raise ValueError("leg basis %r is neither the carrier nor H" % space)

    def mmul(self, *xs: Tensor) -> Tensor:
        """Leg-wise product of mixed tensors over the carrier and H."""
        acc = xs[0]
        for x in xs[1:]:
            legs = tuple(self.leg_for(b) for b in acc.spaces)
            acc = mul_legs(legs, acc, x)
        return acc

    def munit(self, spaces: Tuple[Basis, ...]) -> Tensor:
        out = Tensor.scalar(self.field.one(), self.field)
        for b in spaces:
            out = out.tensor(self.unit() if b == self.basis else self.H.unit())
        return out

    def assemble(self, source: Tensor, builder) -> Tensor:
        return self.H.assemble(source, builder)


class RightComoduleAlgebra(_ComoduleAlgebraBase):
    """A right H-comodule algebra (A, rho, Phi_rho)."""

    def __init__(self, H: QuasiBialgebra, algebra: FinAlgebra,
                 coaction: LinearMap, phi_rho: Tensor,
                 phi_rho_inv: Optional[Tensor] = None, name: str = ""):
        super().__init__(H, algebra, name)
        if coaction.domain != algebra.basis or coaction.codomain != (algebra.basis, H.basis):
            raise ValueError("right coaction must map A to A (x) H")
        if phi_rho.spaces != (algebra.basis, H.basis, H.basis):
            raise ValueError("right reassociator must live in A (x) H (x) H")
        self.coaction = coaction
        self.phi_rho = phi_rho
        self.phi_rho_inv = _check_inverse(
            (algebra, H.algebra, H.algebra), phi_rho, phi_rho_inv,
            "right reassociator")

    def coact(self, x: Tensor, leg: int = 0) -> Tensor:
        return x.map_leg(leg, self.coaction)

    def hit(self, phi: Tensor, a: Tensor) -> Tensor:
        """The induced left action of a functional: phi |> a, pairing phi
        against the H-leg of rho(a)."""
        return phi.tensor(self.coact(a)).pair_legs(0, 2)

    def p_tilde(self) -> Tensor:
        """sum x1 (x) x2 beta S(x3) in A (x) H, from Phi_rho^{-1}."""
        H = self.H
        return self.assemble(self.phi_rho_inv, lambda x1, x2, x3: self.e(x1).tensor(
            H.mul(H.e(x2), H.beta, H.S(H.e(x3)))))

    def q_tilde(self) -> Tensor:
        """sum X1 (x) S^{-1}(alpha X3) X2 in A (x) H, from Phi_rho."""
        H = self.H
        return self.assemble(self.phi_rho, lambda X1, X2, X3: self.e(X1).tensor(
            H.mul(H.Sinv(H.mul(H.alpha, H.e(X3))), H.e(X2))))


class LeftComoduleAlgebra(_ComoduleAlgebraBase):
    """A left H-comodule algebra (B, lam, Phi_lam)."""

    def __init__(self, H: QuasiBialgebra, algebra: FinAlgebra,
                 coaction: LinearMap, phi_lam: Tensor,
                 phi_lam_inv: Optional[Tensor] = None, name: str = ""):
        super().__init__(H, algebra, name)
        if coaction.domain != algebra.basis or coaction.codomain != (H.basis, algebra.basis):
            raise ValueError("left coaction must map B to H (x) B")
        if phi_lam.spaces != (H.basis, H.basis, algebra.basis):
            raise ValueError("left reassociator must live in H (x) H (x) B")
        self.coaction = coaction
        self.phi_lam = phi_lam
        self.phi_lam_inv = _check_inverse(
            (H.algebra, H.algebra, algebra), phi_lam, phi_lam_inv,
            "left reassociator")

    def coact(self, x: Tensor, leg: int = 0) -> Tensor:
        return x.map_leg(leg, self.coaction)

    def hit(self, b: Tensor, phi: Tensor) -> Tensor:
        """The induced right action of a functional: b <| phi, pairing phi
        against the H-leg of lam(b)."""
        return phi.tensor(self.coact(b)).pair_legs(0, 1)


class BicomoduleAlgebra:
    """An H-bicomodule algebra: compatible left and right comodule
    algebra structures on the same carrier plus a middle reassociator
    Phi_mid in H (x) A (x) H."""

    def __init__(self, left: LeftComoduleAlgebra, right: RightComoduleAlgebra,
                 phi_mid: Tensor, phi_mid_inv: Optional[Tensor] = None,
                 name: str = ""):
        if left.algebra != right.algebra or left.H is not right.H:
            raise ValueError("left and right structures must share carrier and H")
        self.left = left
        self.right = right
        self.H = left.H
        self.algebra = left.algebra
        self.name = name or left.name
        if phi_mid.spaces != (self.H.basis, self.algebra.basis, self.H.basis):
            raise ValueError("middle reassociator must live in H (x) A (x) H")
        self.phi_mid = phi_mid
        self.phi_mid_inv = _check_inverse(
            (self.H.algebra, self.algebra, self.H.algebra), phi_mid,
            phi_mid_inv, "middle reassociator")

    @property
    def field(self):
        return self.H.field

    @property
    def basis(self) -> Basis:
        return self.algebra.basis

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def mmul(self, *xs: Tensor) -> Tensor:
        return self.left.mmul(*xs)

    def munit(self, spaces) -> Tensor:
        return self.left.munit(tuple(spaces))


def canonical_right_comodule(H: QuasiBialgebra) -> RightComoduleAlgebra:
    """H over itself: rho = Delta, Phi_rho = Phi."""
    return RightComoduleAlgebra(H, H.algebra, H.comul, H.phi, H.phi_inv,
                                name=H.name)


def canonical_left_comodule(H: QuasiBialgebra) -> LeftComoduleAlgebra:
    """H over itself: lam = Delta, Phi_lam = Phi."""
    return LeftComoduleAlgebra(H, H.algebra, H.comul, H.phi, H.phi_inv,
                               name=H.name)


def canonical_bicomodule(H: QuasiBialgebra) -> BicomoduleAlgebra:
    return BicomoduleAlgebra(canonical_left_comodule(H),
                             canonical_right_comodule(H),
                             H.phi, H.phi_inv, name=H.name)


# ----------------------------------------------------------------------
# module algebras and module coalgebras


class LeftModuleAlgebra:
    """A left H-module algebra: an algebra in the module category, with
    multiplication associative up to Phi acting through the module
    structure."""

    def __init__(self, H: QuasiBialgebra, algebra: FinAlgebra,
                 action: LegMul, name: str = ""):
        if action.left != H.basis or action.right != algebra.basis or \
                action.out != algebra.basis:
            raise ValueError("action must pair H with the carrier")
        self.H = H
        self.algebra = algebra
        self.action = action
        self.name = name or algebra.basis.name

    @property
    def field(self):
        return self.H.field

    @property
    def basis(self) -> Basis:
        return self.algebra.basis

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def e(self, i: int) -> Tensor:
        return self.algebra.e(i)

    def unit(self) -> Tensor:
        return self.algebra.unit_tensor()

    def act(self, h: Tensor, a: Tensor) -> Tensor:
        return mul_legs((self.action,), h, a)

    def mul(self, *xs: Tensor) -> Tensor:
        return self.algebra.mulc(*xs)


class RightModuleCoalgebra:
    """A right H-module coalgebra: a coalgebra in the module category,
    coassociative up to Phi^{-1} acting through the module structure."""

    def __init__(self, H: QuasiBialgebra, basis: Basis, comul: LinearMap,
                 counit: LinearMap, action: LegMul, name: str = ""):
        if comul.domain != basis or comul.codomain != (basis, basis):
            raise ValueError("comultiplication must map C to C (x) C")
        if counit.domain != basis or counit.codomain != ():
            raise ValueError("counit must map C to the ground field")
        if action.left != basis or action.right != H.basis or action.out != basis:
            raise ValueError("action must pair the carrier with H")
        self.H = H
        self.basis = basis
        self.comul = comul
        self.counit = counit
        self.action = action
        self.name = name or basis.name

    @property
    def field(self):
        return self.H.field

    @property
    def dim(self) -> int:
        return self.basis.dim

    def e(self, i: int) -> Tensor:
        return Tensor.basis_vector(self.basis, i, self.field)

    def act(self, c: Tensor, h: Tensor) -> Tensor:
        return mul_legs((self.action,), c, h)

    def delta(self, c: Tensor, leg: int = 0) -> Tensor:
        return c.map_leg(leg, self.comul)

    def eps(self, c: Tensor):
        return c.map_leg(0, self.counit).data.get((), self.field.zero())

    def act_many(self, t: Tensor, h: Tensor) -> Tensor:
        """Act with the legs of an H-tensor on the C-legs of t, pairwise."""
        if len(t.spaces) != len(h.spaces):
            raise ValueError("leg count mismatch")
        return mul_legs((self.action,) * len(t.spaces), t, h)


def canonical_module_coalgebra(H: QuasiBialgebra) -> RightModuleCoalgebra:
    """H as a right module coalgebra over itself by right multiplication.

    The one-sided coassociativity axiom holds exactly when the
    reassociator commutes with the iterated comultiplication images, in
    particular whenever the reassociator is trivial. For a genuinely
    quasi H the canonical coalgebra lives over H (x) H^op instead, with
    both-sided multiplication as the action."""
    return RightModuleCoalgebra(H, H.basis, H.comul, H.counit,
                                H.leg(), name=H.name)


# ----------------------------------------------------------------------
# checkers


def check_right_comodule_algebra(ca: RightComoduleAlgebra) -> VerificationReport:
    H = ca.H
    rep = VerificationReport("right comodule algebra %s" % ca.name,
                             {"dim": ca.dim, "field": H.field.name})
    n = ca.dim
    rep.check_bool("assoc", ca.algebra.is_associative() is None)
    rep.check_bool("unit", ca.algebra.unit_laws_hold() is None)
    rep.check_quantified(
        "coact-hom", ((i, j) for i in range(n) for j in range(n)),
        lambda i, j: (ca.coact(ca.algebra.mul_indices(i, j)),
                      ca.mmul(ca.coact(ca.e(i)), ca.coact(ca.e(j)))))
    rep.check_equal("coact-unit", ca.coact(ca.unit()),
                    ca.unit().tensor(H.unit()))
    rep.check_quantified(
        "rca1", ((i,) for i in range(n)),
        lambda i: (ca.mmul(ca.phi_rho, ca.coact(ca.coact(ca.e(i)))),
                   ca.mmul(ca.coact(ca.e(i)).map_leg(1, H.comul), ca.phi_rho)))
    one = H.unit()
    lhs = ca.mmul(ca.unit().tensor(H.phi),
                  ca.phi_rho.map_leg(1, H.comul),
                  ca.phi_rho.tensor(one))
    rhs = ca.mmul(ca.phi_rho.map_leg(2, H.comul),
                  ca.phi_rho.map_leg(0, ca.coaction))
    rep.check_equal("rca2", lhs, rhs)
    rep.check_quantified(
        "rca3", ((i,) for i in range(n)),
        lambda i: (ca.coact(ca.e(i)).map_leg(1, H.counit), ca.e(i)))
    rep.check_equal(
        "rca4",
        ca.phi_rho.map_leg(1, H.counit) + ca.phi_rho.map_leg(2, H.counit),
        ca.unit().tensor(one).scale(H.field.from_int(2)))
    return rep


def check_left_comodule_algebra(ca: LeftComoduleAlgebra) -> VerificationReport:
    H = ca.H
    rep = VerificationReport("left comodule algebra %s" % ca.name,
                             {"dim": ca.dim, "field": H.field.name})
    n = ca.dim
    rep.check_bool("assoc", ca.algebra.is_associative() is None)
    rep.check_bool("unit", ca.algebra.unit_laws_hold() is None)
    rep.check_quantified(
        "coact-hom", ((i, j) for i in range(n) for j in range(n)),
        lambda i, j: (ca.coact(ca.algebra.mul_indices(i, j)),
                      ca.mmul(ca.coact(ca.e(i)), ca.coact(ca.e(j)))))
    rep.check_equal("coact-unit", ca.coact(ca.unit()),
                    H.unit().tensor(ca.unit()))
    rep.check_quantified(
        "lca1", ((i,) for i in range(n)),
        lambda i: (ca.mmul(ca.coact(ca.coact(ca.e(i)), leg=1), ca.phi_lam),
                   ca.mmul(ca.phi_lam, ca.coact(ca.e(i)).map_leg(0, H.comul))))
    one = H.unit()
    lhs = ca.mmul(one.tensor(ca.phi_lam),
                  ca.phi_lam.map_leg(1, H.comul),
                  H.phi.tensor(ca.unit()))
    rhs = ca.mmul(ca.phi_lam.map_leg(2, ca.coaction),
                  ca.phi_lam.map_leg(0, H.comul))
    rep.check_equal("lca2", lhs, rhs)
    rep.check_quantified(
        "lca3", ((i,) for i in range(n)),
        lambda i: (ca.coact(ca.e(i)).map_leg(0, H.counit), ca.e(i)))
    rep.check_equal(
        "lca4",
        ca.phi_lam.map_leg(1, H.counit) + ca.phi_lam.map_leg(0, H.counit),
        one.tensor(ca.unit()).scale(H.field.from_int(2)))
    return rep


def check_bicomodule_algebra(ba: BicomoduleAlgebra) -> VerificationReport:
    H = ba.H
    rep = VerificationReport("bicomodule algebra %s" % ba.name,
                             {"dim": ba.dim, "field": H.field.name})
    rep.extend(check_left_comodule_algebra(ba.left), prefix="left/")
    rep.extend(check_right_comodule_algebra(ba.right), prefix="right/")
    left, right = ba.left, ba.right
    n = ba.dim
    rep.check_quantified(
        "bca1", ((i,) for i in range(n)),
        lambda i: (ba.mmul(ba.phi_mid, left.coact(right.coact(ba.algebra.e(i)))),
                   ba.mmul(right.coact(left.coact(ba.algebra.e(i)), leg=1),
                           ba.phi_mid)))
    one = H.unit()
    lhs = ba.mmul(one.tensor(ba.phi_mid),
                  ba.phi_mid.map_leg(1, left.coaction),
                  left.phi_lam.tensor(one))
    rhs = ba.mmul(left.phi_lam.map_leg(2, right.coaction),
                  ba.phi_mid.map_leg(0, H.comul))
    rep.check_equal("bca2", lhs, rhs)
    lhs = ba.mmul(one.tensor(right.phi_rho),
                  ba.phi_mid.map_leg(1, right.coaction),
                  ba.phi_mid.tensor(one))
    rhs = ba.mmul(ba.phi_mid.map_leg(2, H.comul),
                  right.phi_rho.map_leg(0, left.coaction))
    rep.check_equal("bca3", lhs, rhs)
    rep.check_equal(
        "bca4",
        ba.phi_mid.map_leg(2, H.counit).permute((1, 0)) +
        ba.phi_mid.map_leg(0, H.counit),
        ba.algebra.unit_tensor().tensor(one).scale(H.field.from_int(2)))
    return rep


def check_left_module_algebra(ma: LeftModuleAlgebra) -> VerificationReport:
    H = ma.H
    rep = VerificationReport("left module algebra %s" % ma.name,
                             {"dim": ma.dim, "field": H.field.name})
    n = ma.dim
    m = H.dim
    rep.check_bool("carrier-unit", ma.algebra.unit_laws_hold() is None)
    rep.check_quantified(
        "module-assoc", ((i, j, a) for i in range(m) for j in range(m)
                         for a in range(n)),
        lambda i, j, a: (ma.act(H.algebra.mul_indices(i, j), ma.e(a)),
                         ma.act(H.e(i), ma.act(H.e(j), ma.e(a)))))
    rep.check_quantified(
        "module-unit", ((a,) for a in range(n)),
        lambda a: (ma.act(H.unit(), ma.e(a)), ma.e(a)))
    rep.check_quantified(
        "ma1", ((a, b, c) for a in range(n) for b in range(n)
                for c in range(n)),
        lambda a, b, c: (
            ma.mul(ma.mul(ma.e(a), ma.e(b)), ma.e(c)),
            H.assemble(H.phi, lambda X1, X2, X3: ma.mul(
                ma.act(H.e(X1), ma.e(a)),
                ma.mul(ma.act(H.e(X2), ma.e(b)), ma.act(H.e(X3), ma.e(c)))))))
    rep.check_quantified(
        "ma2", ((i, a, b) for i in range(m) for a in range(n)
                for b in range(n)),
        lambda i, a, b: (
            ma.act(H.e(i), ma.mul(ma.e(a), ma.e(b))),
            H.assemble(H.delta(H.e(i)), lambda h1, h2: ma.mul(
                ma.act(H.e(h1), ma.e(a)), ma.act(H.e(h2), ma.e(b))))))
    rep.check_quantified(
        "ma3", ((i,) for i in range(m)),
        lambda i: (ma.act(H.e(i), ma.unit()),
                   ma.unit().scale(H.eps(H.e(i)))))
    return rep


def check_right_module_coalgebra(mc: RightModuleCoalgebra) -> VerificationReport:
    H = mc.H
    rep = VerificationReport("right module coalgebra %s" % mc.name,
                             {"dim": mc.dim, "field": H.field.name})
    n = mc.dim
    m = H.dim
    rep.check_quantified(
        "module-assoc", ((c, i, j) for c in range(n) for i in range(m)
                         for j in range(m)),
        lambda c, i, j: (mc.act(mc.e(c), H.algebra.mul_indices(i, j)),
                         mc.act(mc.act(mc.e(c), H.e(i)), H.e(j))))
    rep.check_quantified(
        "module-unit", ((c,) for c in range(n)),
        lambda c: (mc.act(mc.e(c), H.unit()), mc.e(c)))
    rep.check_quantified(
        "rmc1", ((c,) for c in range(n)),
        lambda c: (mc.act_many(mc.delta(mc.e(c)).map_leg(0, mc.comul), H.phi_inv),
                   mc.delta(mc.e(c)).map_leg(1, mc.comul)))
    rep.check_quantified(
        "rmc2", ((c, i) for c in range(n) for i in range(m)),
        lambda c, i: (mc.delta(mc.act(mc.e(c), H.e(i))),
                      mc.act_many(mc.delta(mc.e(c)), H.delta(H.e(i)))))
    rep.check_quantified(
        "rmc3", ((c, i) for c in range(n) for i in range(m)),
        lambda c, i: (
            Tensor.scalar(mc.eps(mc.act(mc.e(c), H.e(i))), H.field),
            Tensor.scalar(mc.eps(mc.e(c)) * H.eps(H.e(i)), H.field)))
    return rep


# ----------------------------------------------------------------------
# canonical element identities of a right comodule algebra


def verify_tilde_identities(ca: RightComoduleAlgebra,
                            der: Optional[DerivedElements] = None) -> VerificationReport:
    """The identity suite for the canonical elements p~ and q~ of a
    right comodule algebra over a quasi-Hopf algebra."""
    H = ca.H
    if not isinstance(H, QuasiHopfAlgebra):
        raise ValueError("tilde identities need antipode data")
    if der is None:
        der = DerivedElements(H)
    rep = VerificationReport("tilde elements %s" % ca.name,
                             {"dim": ca.dim, "field": H.field.name})
    n = ca.dim
    one = H.unit()
    one_a = ca.unit()
    pt = ca.p_tilde()
    qt = ca.q_tilde()
    unit_ah = one_a.tensor(one)

    rep.check_quantified(
        "tpqr1", ((a,) for a in range(n)),
        lambda a: (ca.assemble(ca.coact(ca.e(a)), lambda a0, a1: ca.mmul(
            ca.coact(ca.e(a0)), pt, one_a.tensor(H.S(H.e(a1))))),
            ca.mmul(pt, ca.e(a).tensor(one))))
    rep.check_quantified(
        "tpqr1a", ((a,) for a in range(n)),
        lambda a: (ca.assemble(ca.coact(ca.e(a)), lambda a0, a1: ca.mmul(
            one_a.tensor(H.Sinv(H.e(a1))), qt, ca.coact(ca.e(a0)))),
            ca.mmul(ca.e(a).tensor(one), qt)))
    rep.check_equal(
        "tpqr2",
        ca.assemble(qt, lambda q1, q2: ca.mmul(
            ca.coact(ca.e(q1)), pt, one_a.tensor(H.S(H.e(q2))))),
        unit_ah)
    rep.check_equal(
        "tpqr2a",
        ca.assemble(pt, lambda p1, p2: ca.mmul(
            one_a.tensor(H.Sinv(H.e(p2))), qt, ca.coact(ca.e(p1)))),
        unit_ah)

    # Phi_rho (rho (x) id)(p~)(p~ (x) 1)
    #   = sum (id (x) Delta)(rho(x1) p~)(1_A (x) g1 S(x3) (x) g2 S(x2))
    lhs = ca.mmul(ca.phi_rho, pt.map_leg(0, ca.coaction), pt.tensor(one))
    rhs = ca.assemble(
        ca.phi_rho_inv.tensor(der.f_inv),
        lambda x1, x2, x3, g1, g2: ca.mmul(
            ca.mmul(ca.coact(ca.e(x1)), pt).map_leg(1, H.comul),
            one_a.tensor(H.mul(H.e(g1), H.S(H.e(x3)))).tensor(
                H.mul(H.e(g2), H.S(H.e(x2))))))
    rep.check_equal("tpr2", lhs, rhs)

    # (q~ (x) 1)(rho (x) id)(q~) Phi_rho^{-1}
    #   = sum (1_A (x) S^{-1}(f2 X3) (x) S^{-1}(f1 X2))
    #         (id (x) Delta)(q~ rho(X1))
    lhs = ca.mmul(qt.tensor(one), qt.map_leg(0, ca.coaction), ca.phi_rho_inv)
    rhs = ca.assemble(
        ca.phi_rho.tensor(der.f),
        lambda X1, X2, X3, f1, f2: ca.mmul(
            one_a.tensor(H.Sinv(H.mul(H.e(f2), H.e(X3)))).tensor(
                H.Sinv(H.mul(H.e(f1), H.e(X2)))),
            ca.mmul(qt, ca.coact(ca.e(X1))).map_leg(1, H.comul)))
    rep.check_equal("tqr2", lhs, rhs)

    # sum X1_<1> p~2 S(X2) (x) X1_<0> p~1 (x) X3
    #   = sum x2 S(x3_1 pL1) (x) x1 (x) x3_2 pL2
    lhs = ca.assemble(ca.phi_rho, lambda X1, X2, X3: ca.assemble(
        ca.coact(ca.e(X1)).tensor(pt),
        lambda a0, a1, p1, p2: H.mul(H.e(a1), H.e(p2), H.S(H.e(X2))).tensor(
            ca.algebra.mul(ca.e(a0), ca.e(p1))).tensor(H.e(X3))))
    rhs = ca.assemble(
        ca.phi_rho_inv.map_leg(2, H.comul).tensor(der.p_L),
        lambda x1, x2, x31, x32, l1, l2: H.mul(
            H.e(x2), H.S(H.mul(H.e(x31), H.e(l1)))).tensor(
                ca.e(x1)).tensor(H.mul(H.e(x32), H.e(l2))))
    rep.check_equal("tprr", lhs, rhs)
    return rep
