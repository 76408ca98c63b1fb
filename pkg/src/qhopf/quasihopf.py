"""Quasi-bialgebras and quasi-Hopf algebras by structure constants.

Conventions. The comultiplication is only coassociative up to the
reassociator Phi: (id (x) Delta)(Delta(h)) = Phi (Delta (x) id)(Delta(h))
Phi^{-1}. Tensor components of Phi are written with capital letters
(X1, X2, X3) and those of Phi^{-1} with small letters (x1, x2, x3) in
comments referencing formulas. All identity checks are exact.
"""

from __future__ import annotations

from typing import Callable, Optional, Tuple

from .algebra import (FinAlgebra, LegMul, invert_in_tensor_algebra,
                      invert_linear_map, mul_legs, tensor_unit)
from .fields import Field, QQ
from .report import VerificationReport
from .tensor import Basis, LinearMap, Tensor, product_basis


class QuasiBialgebra:
    """A quasi-bialgebra: algebra, comultiplication, counit, reassociator."""

    kind = "quasi-bialgebra"

    def __init__(self, algebra: FinAlgebra, comul: LinearMap, counit: LinearMap,
                 phi: Tensor, phi_inv: Optional[Tensor] = None, name: str = ""):
        self.algebra = algebra
        self.comul = comul
        self.counit = counit
        self.phi = phi
        self.name = name or algebra.basis.name
        if phi_inv is None:
            phi_inv = invert_in_tensor_algebra((algebra,) * 3, phi)
            if phi_inv is None:
                raise ValueError("reassociator is not invertible")
        else:
            legs = (algebra.as_leg(),) * 3
            unit3 = tensor_unit((algebra,) * 3)
            if mul_legs(legs, phi, phi_inv) != unit3 or mul_legs(legs, phi_inv, phi) != unit3:
                raise ValueError("supplied reassociator inverse fails the two-sided check")
        self.phi_inv = phi_inv

    # -- basic accessors -----------------------------------------------

    @property
    def field(self) -> Field:
        return self.algebra.field

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

    def unit_pow(self, k: int) -> Tensor:
        return tensor_unit((self.algebra,) * k)

    def leg(self) -> LegMul:
        return self.algebra.as_leg()

    # -- structure map helpers -----------------------------------------

    def mul(self, *xs: Tensor) -> Tensor:
        return self.algebra.mulc(*xs)

    def tmul(self, x: Tensor, y: Tensor) -> Tensor:
        """Multiply in the tensor power algebra H^(x)k, leg by leg."""
        return mul_legs((self.leg(),) * len(x.spaces), x, y)

    def tmulc(self, *xs: Tensor) -> Tensor:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.tmul(acc, x)
        return acc

    def delta(self, x: Tensor) -> Tensor:
        return x.map_leg(0, self.comul)

    def eps(self, x: Tensor):
        """Counit of a one-leg tensor, as a scalar."""
        t = x.map_leg(0, self.counit)
        return t.data.get((), self.field.zero())

    def assemble(self, source: Tensor, builder: Callable[..., Tensor]) -> Tensor:
        """Sum builder(*indices) over the terms of source, weighted by
        the term coefficients. The workhorse for Sweedler-style sums."""
        out = None
        for idx, c in source.data.items():
            t = builder(*idx).scale(c)
            out = t if out is None else out + t
        if out is None:
            raise ValueError("assembling from a zero source")
        return out

    # -- derived structures --------------------------------------------

    def opposite(self) -> "QuasiBialgebra":
        """H^op: opposite multiplication, same coalgebra, inverse
        reassociator."""
        alg_op = self.algebra.opposite()
        b = alg_op.basis
        comul = LinearMap(b, (b, b),
                          {i: dict(col) for i, col in self.comul.cols.items()},
                          self.field)
        counit = LinearMap(b, (), {i: dict(col) for i, col in self.counit.cols.items()},
                           self.field)
        phi = Tensor((b, b, b), dict(self.phi_inv.data), self.field)
        phi_inv = Tensor((b, b, b), dict(self.phi.data), self.field)
        return QuasiBialgebra(alg_op, comul, counit, phi, phi_inv,
                              name=self.name + "^op")

    def tensor_with(self, other: "QuasiBialgebra") -> "QuasiBialgebra":
        """Componentwise tensor product quasi-bialgebra on H (x) K."""
        b1, b2 = self.basis, other.basis
        b = product_basis(b1, b2)
        n2 = b2.dim

        def flat(i, j):
            return i * n2 + j

        mult = {}
        for (i1, j1), v1 in self.algebra.mult.items():
            for (i2, j2), v2 in other.algebra.mult.items():
                key = (flat(i1, i2), flat(j1, j2))
                vec = {}
                for k1, c1 in v1.items():
                    for k2, c2 in v2.items():
                        vec[flat(k1, k2)] = c1 * c2
                mult[key] = vec
        unit = Tensor((b,), {
            (flat(i1, i2),): c1 * c2
            for (i1,), c1 in self.algebra.unit.data.items()
            for (i2,), c2 in other.algebra.unit.data.items()
        }, self.field)
        alg = FinAlgebra(b, mult, unit, self.field)

        comul_cols = {}
        for i1 in range(b1.dim):
            col1 = self.comul.cols.get(i1, {})
            for i2 in range(b2.dim):
                col2 = other.comul.cols.get(i2, {})
                col = {}
                for (a1, c1k), s1 in col1.items():
                    for (a2, c2k), s2 in col2.items():
                        col[(flat(a1, a2), flat(c1k, c2k))] = s1 * s2
                comul_cols[flat(i1, i2)] = col
        comul = LinearMap(b, (b, b), comul_cols, self.field)

        counit_cols = {}
        for i1 in range(b1.dim):
            s1 = self.counit.cols.get(i1, {}).get((), self.field.zero())
            for i2 in range(b2.dim):
                s2 = other.counit.cols.get(i2, {}).get((), self.field.zero())
                counit_cols[flat(i1, i2)] = {(): s1 * s2}
        counit = LinearMap(b, (), counit_cols, self.field)

        def pair_up(t1: Tensor, t2: Tensor) -> Tensor:
            out = Tensor.zero((b, b, b), self.field)
            for idx1, c1 in t1.data.items():
                for idx2, c2 in t2.data.items():
                    key = tuple(flat(a, x) for a, x in zip(idx1, idx2))
                    out.data[key] = out.data.get(key, self.field.zero()) + c1 * c2
            return Tensor((b, b, b), out.data, self.field)

        phi = pair_up(self.phi, other.phi)
        phi_inv = pair_up(self.phi_inv, other.phi_inv)
        return QuasiBialgebra(alg, comul, counit, phi, phi_inv,
                              name="%s(x)%s" % (self.name, other.name))


class QuasiHopfAlgebra(QuasiBialgebra):
    """A quasi-Hopf algebra: quasi-bialgebra plus antipode data."""

    kind = "quasi-hopf"

    def __init__(self, algebra, comul, counit, phi, antipode: LinearMap,
                 alpha: Tensor, beta: Tensor, phi_inv=None, name: str = ""):
        super().__init__(algebra, comul, counit, phi, phi_inv, name)
        self.antipode = antipode
        self.alpha = alpha
        self.beta = beta
        self._antipode_inv: Optional[LinearMap] = None

    @property
    def antipode_inv(self) -> LinearMap:
        if self._antipode_inv is None:
            inv = invert_linear_map(self.antipode)
            if inv is None:
                raise ValueError("antipode is not bijective")
            self._antipode_inv = inv
        return self._antipode_inv

    def S(self, x: Tensor) -> Tensor:
        return x.map_leg(0, self.antipode)

    def Sinv(self, x: Tensor) -> Tensor:
        return x.map_leg(0, self.antipode_inv)


def normalize_alpha_beta(H: QuasiHopfAlgebra) -> QuasiHopfAlgebra:
    """Rescale alpha and beta so that eps(alpha) = eps(beta) = 1.

    Requires eps(alpha) eps(beta) = 1; uses the gauge freedom
    alpha -> u alpha, beta -> beta / u with u = eps(beta)."""
    ea = H.eps(H.alpha)
    eb = H.eps(H.beta)
    if ea * eb != H.field.one():
        raise ValueError("eps(alpha) eps(beta) != 1; not a quasi-Hopf datum")
    if ea == H.field.one() and eb == H.field.one():
        return H
    u = eb
    return QuasiHopfAlgebra(H.algebra, H.comul, H.counit, H.phi, H.antipode,
                            H.alpha.scale(u), H.beta.scale(H.field.one() / u),
                            H.phi_inv, H.name)


# ----------------------------------------------------------------------
# axiom checkers


def _all_pairs(n):
    for i in range(n):
        for j in range(n):
            yield (i, j)


def check_quasibialgebra(H: QuasiBialgebra) -> VerificationReport:
    rep = VerificationReport("quasi-bialgebra %s" % H.name,
                             {"dim": H.dim, "field": H.field.name})
    n = H.dim
    alg = H.algebra
    rep.check_bool("assoc", alg.is_associative() is None)
    rep.check_bool("unit", alg.unit_laws_hold() is None)

    one = H.unit()
    rep.check_quantified(
        "counit-hom", _all_pairs(n),
        lambda i, j: (Tensor.scalar(H.eps(alg.mul_indices(i, j)), H.field),
                      Tensor.scalar(H.eps(H.e(i)) * H.eps(H.e(j)), H.field)))
    rep.check_equal("counit-unit", one.map_leg(0, H.counit),
                    Tensor.scalar(H.field.one(), H.field))
    rep.check_quantified(
        "comul-hom", _all_pairs(n),
        lambda i, j: (H.delta(alg.mul_indices(i, j)),
                      H.tmul(H.delta(H.e(i)), H.delta(H.e(j)))))
    rep.check_equal("comul-unit", H.delta(one), one.tensor(one))

    unit3 = H.unit_pow(3)
    rep.check_equal("phi-inv",
                    H.tmul(H.phi, H.phi_inv) + H.tmul(H.phi_inv, H.phi),
                    unit3 + unit3)

    def q1(i):
        h = H.e(i)
        lhs = H.delta(h).map_leg(1, H.comul)
        rhs = H.tmulc(H.phi, H.delta(h).map_leg(0, H.comul), H.phi_inv)
        return lhs, rhs

    rep.check_quantified("q1", ((i,) for i in range(n)), q1)

    def q2(i):
        h = H.e(i)
        d = H.delta(h)
        lhs = d.map_leg(1, H.counit).tensor(one) + one.tensor(d.map_leg(0, H.counit))
        rhs = h.tensor(one) + one.tensor(h)
        return lhs, rhs

    rep.check_quantified("q2", ((i,) for i in range(n)), q2)

    lhs_q3 = H.tmulc(one.tensor(H.phi), H.phi.map_leg(1, H.comul),
                     H.phi.tensor(one))
    rhs_q3 = H.tmul(H.phi.map_leg(2, H.comul), H.phi.map_leg(0, H.comul))
    rep.check_equal("q3", lhs_q3, rhs_q3)

    rep.check_equal("q4", H.phi.map_leg(1, H.counit), one.tensor(one))
    rep.check_equal("q7",
                    H.phi.map_leg(0, H.counit) + H.phi.map_leg(2, H.counit),
                    (one.tensor(one)).scale(H.field.from_int(2)))
    return rep


def check_quasihopf(H: QuasiHopfAlgebra) -> VerificationReport:
    rep = check_quasibialgebra(H)
    rep.subject = "quasi-hopf %s" % H.name
    n = H.dim
    one = H.unit()

    rep.check_quantified(
        "antipode-antihom", _all_pairs(n),
        lambda i, j: (H.S(H.algebra.mul_indices(i, j)),
                      H.mul(H.S(H.e(j)), H.S(H.e(i)))))
    rep.check_equal("antipode-unit", H.S(one), one)
    try:
        H.antipode_inv
        rep.check_bool("antipode-bijective", True)
    except ValueError:
        rep.check_bool("antipode-bijective", False)

    def q5(i):
        h = H.e(i)
        d = H.delta(h)
        lhs_a = H.assemble(d, lambda a, b: H.mul(H.S(H.e(a)), H.alpha, H.e(b)))
        lhs_b = H.assemble(d, lambda a, b: H.mul(H.e(a), H.beta, H.S(H.e(b))))
        eh = H.eps(h)
        return lhs_a.tensor(lhs_b), H.alpha.scale(eh).tensor(H.beta.scale(eh))

    rep.check_quantified("q5", ((i,) for i in range(n)), q5)

    q6_a = H.assemble(H.phi, lambda a, b, c: H.mul(
        H.e(a), H.beta, H.S(H.e(b)), H.alpha, H.e(c)))
    q6_b = H.assemble(H.phi_inv, lambda a, b, c: H.mul(
        H.S(H.e(a)), H.alpha, H.e(b), H.beta, H.S(H.e(c))))
    rep.check_equal("q6", q6_a.tensor(q6_b), one.tensor(one))

    rep.check_quantified(
        "eps-antipode", ((i,) for i in range(n)),
        lambda i: (Tensor.scalar(H.eps(H.S(H.e(i))), H.field),
                   Tensor.scalar(H.eps(H.e(i)), H.field)))
    rep.check_equal("eps-alpha-beta",
                    Tensor.scalar(H.eps(H.alpha) * H.eps(H.beta), H.field),
                    Tensor.scalar(H.field.one(), H.field))
    return rep


# ----------------------------------------------------------------------
# gauge twisting


def is_gauge(H: QuasiBialgebra, F: Tensor) -> bool:
    one = H.unit()
    if F.map_leg(0, H.counit) != one or F.map_leg(1, H.counit) != one:
        return False
    return invert_in_tensor_algebra((H.algebra,) * 2, F) is not None


def twist(H: QuasiBialgebra, F: Tensor) -> QuasiBialgebra:
    """Twist by a gauge transformation F: new comultiplication
    F Delta(.) F^{-1}, twisted reassociator, and (for quasi-Hopf input)
    twisted alpha and beta. Multiplication, unit, counit and the
    antipode map are unchanged."""
    one = H.unit()
    if F.map_leg(0, H.counit) != one or F.map_leg(1, H.counit) != one:
        raise ValueError("not a gauge transformation: counit normalization fails")
    F_inv = invert_in_tensor_algebra((H.algebra,) * 2, F)
    if F_inv is None:
        raise ValueError("not a gauge transformation: F is not invertible")

    comul_F = LinearMap.from_function(
        H.basis, (H.basis, H.basis),
        lambda i: H.tmulc(F, H.delta(H.e(i)), F_inv),
        H.field)
    phi_F = H.tmulc(one.tensor(F), F.map_leg(1, H.comul), H.phi,
                    F_inv.map_leg(0, H.comul), F_inv.tensor(one))
    phi_F_inv = invert_in_tensor_algebra((H.algebra,) * 3, phi_F)
    name = H.name + "_F"
    if not isinstance(H, QuasiHopfAlgebra):
        return QuasiBialgebra(H.algebra, comul_F, H.counit, phi_F, phi_F_inv, name)

    alpha_F = H.assemble(F_inv, lambda a, b: H.mul(H.S(H.e(a)), H.alpha, H.e(b)))
    beta_F = H.assemble(F, lambda a, b: H.mul(H.e(a), H.beta, H.S(H.e(b))))
    return QuasiHopfAlgebra(H.algebra, comul_F, H.counit, phi_F, H.antipode,
                            alpha_F, beta_F, phi_F_inv, name)


# ----------------------------------------------------------------------
# derived elements


class DerivedElements:
    """The canonical elements built from a quasi-Hopf algebra: the
    antipode twist f (with gamma, delta), p_R, q_R, p_L, q_L and the
    auxiliary elements U and V."""

    def __init__(self, H: QuasiHopfAlgebra):
        self.H = H
        one = H.unit()

        # A = (Phi (x) 1)(Delta (x) id (x) id)(Phi^{-1})
        A = H.tmul(H.phi.tensor(one), H.phi_inv.map_leg(0, H.comul))
        # B = (Delta (x) id (x) id)(Phi)(Phi^{-1} (x) 1)
        B = H.tmul(H.phi.map_leg(0, H.comul), H.phi_inv.tensor(one))

        # gamma = sum S(A2) alpha A3 (x) S(A1) alpha A4
        self.gamma = H.assemble(A, lambda a1, a2, a3, a4: H.mul(
            H.S(H.e(a2)), H.alpha, H.e(a3)).tensor(H.mul(
                H.S(H.e(a1)), H.alpha, H.e(a4))))
        # delta = sum B1 beta S(B4) (x) B2 beta S(B3)
        self.delta = H.assemble(B, lambda b1, b2, b3, b4: H.mul(
            H.e(b1), H.beta, H.S(H.e(b4))).tensor(H.mul(
                H.e(b2), H.beta, H.S(H.e(b3)))))

        def sw_sop(x: Tensor) -> Tensor:
            # (S (x) S)(Delta^op(x)) of a one-leg tensor
            return H.delta(x).permute((1, 0)).map_leg(0, H.antipode).map_leg(1, H.antipode)

        # f = sum (S(x)S)(Delta^op(x1)) gamma Delta(x2 beta S(x3))
        self.f = H.assemble(H.phi_inv, lambda x1, x2, x3: H.tmulc(
            sw_sop(H.e(x1)), self.gamma,
            H.delta(H.mul(H.e(x2), H.beta, H.S(H.e(x3))))))
        # f^{-1} = sum Delta(S(x1) alpha x2) delta (S(x)S)(Delta^op(x3))
        self.f_inv = H.assemble(H.phi_inv, lambda x1, x2, x3: H.tmulc(
            H.delta(H.mul(H.S(H.e(x1)), H.alpha, H.e(x2))),
            self.delta, sw_sop(H.e(x3))))

        # p_R = sum x1 (x) x2 beta S(x3),  q_R = sum X1 (x) S^{-1}(alpha X3) X2
        self.p_R = H.assemble(H.phi_inv, lambda x1, x2, x3: H.e(x1).tensor(
            H.mul(H.e(x2), H.beta, H.S(H.e(x3)))))
        self.q_R = H.assemble(H.phi, lambda X1, X2, X3: H.e(X1).tensor(
            H.mul(H.Sinv(H.mul(H.alpha, H.e(X3))), H.e(X2))))
        # p_L = sum X2 S^{-1}(X1 beta) (x) X3, q_L = sum S(x1) alpha x2 (x) x3
        self.p_L = H.assemble(H.phi, lambda X1, X2, X3: H.mul(
            H.e(X2), H.Sinv(H.mul(H.e(X1), H.beta))).tensor(H.e(X3)))
        self.q_L = H.assemble(H.phi_inv, lambda x1, x2, x3: H.mul(
            H.S(H.e(x1)), H.alpha, H.e(x2)).tensor(H.e(x3)))

        # U = sum g1 S(q_R 2) (x) g2 S(q_R 1)
        self.U = H.assemble(self.f_inv.tensor(self.q_R), lambda g1, g2, q1, q2: H.mul(
            H.e(g1), H.S(H.e(q2))).tensor(H.mul(H.e(g2), H.S(H.e(q1)))))
        # V = sum S^{-1}(f2 p_R 2) (x) S^{-1}(f1 p_R 1)
        self.V = H.assemble(self.f.tensor(self.p_R), lambda f1, f2, p1, p2: H.Sinv(
            H.mul(H.e(f2), H.e(p2))).tensor(H.Sinv(H.mul(H.e(f1), H.e(p1)))))


def derived_elements(H: QuasiHopfAlgebra) -> DerivedElements:
    return DerivedElements(H)


def verify_core_identities(H: QuasiHopfAlgebra,
                           der: Optional[DerivedElements] = None) -> VerificationReport:
    """The full suite of identities relating the antipode twist, the
    canonical p/q elements and the auxiliary U, V elements."""
    if der is None:
        der = DerivedElements(H)
    rep = VerificationReport("core identities %s" % H.name,
                             {"dim": H.dim, "field": H.field.name})
    n = H.dim
    one = H.unit()
    one2 = H.unit_pow(2)
    f, f_inv = der.f, der.f_inv
    p_R, q_R, p_L, q_L = der.p_R, der.q_R, der.p_L, der.q_L
    U, V = der.U, der.V

    rep.check_equal("f-inv", H.tmul(f, f_inv) + H.tmul(f_inv, f), one2 + one2)

    def sw_sop(x: Tensor) -> Tensor:
        return H.delta(x).permute((1, 0)).map_leg(0, H.antipode).map_leg(1, H.antipode)

    # (ca): f Delta(S(h)) f^{-1} = (S (x) S)(Delta^op(h))
    rep.check_quantified("ca", ((i,) for i in range(n)), lambda i: (
        H.tmulc(f, H.delta(H.S(H.e(i))), f_inv), sw_sop(H.e(i))))

    # (gdf): f Delta(alpha) = gamma,  Delta(beta) f^{-1} = delta
    rep.check_equal("gdf-a", H.tmul(f, H.delta(H.alpha)), der.gamma)
    rep.check_equal("gdf-b", H.tmul(H.delta(H.beta), f_inv), der.delta)

    # (pf): Phi_f = (S (x) S (x) S)(X3 (x) X2 (x) X1)
    phi_f = H.tmulc(one.tensor(f), f.map_leg(1, H.comul), H.phi,
                    f_inv.map_leg(0, H.comul), f_inv.tensor(one))
    pf_rhs = H.phi.permute((2, 1, 0))
    for leg in range(3):
        pf_rhs = pf_rhs.map_leg(leg, H.antipode)
    rep.check_equal("pf", phi_f, pf_rhs)

    # (qr1): Delta(h1) p_R [1 (x) S(h2)] = p_R [h (x) 1]
    #        [1 (x) S^{-1}(h2)] q_R Delta(h1) = (h (x) 1) q_R
    rep.check_quantified("qr1-a", ((i,) for i in range(n)), lambda i: (
        H.assemble(H.delta(H.e(i)), lambda a, b: H.tmulc(
            H.delta(H.e(a)), p_R, one.tensor(H.S(H.e(b))))),
        H.tmul(p_R, H.e(i).tensor(one))))
    rep.check_quantified("qr1-b", ((i,) for i in range(n)), lambda i: (
        H.assemble(H.delta(H.e(i)), lambda a, b: H.tmulc(
            one.tensor(H.Sinv(H.e(b))), q_R, H.delta(H.e(a)))),
        H.tmul(H.e(i).tensor(one), q_R)))

    # (ql1): Delta(h2) p_L [S^{-1}(h1) (x) 1] = p_L (1 (x) h)
    #        [S(h1) (x) 1] q_L Delta(h2) = (1 (x) h) q_L
    rep.check_quantified("ql1-a", ((i,) for i in range(n)), lambda i: (
        H.assemble(H.delta(H.e(i)), lambda a, b: H.tmulc(
            H.delta(H.e(b)), p_L, H.Sinv(H.e(a)).tensor(one))),
        H.tmul(p_L, one.tensor(H.e(i)))))
    rep.check_quantified("ql1-b", ((i,) for i in range(n)), lambda i: (
        H.assemble(H.delta(H.e(i)), lambda a, b: H.tmulc(
            H.S(H.e(a)).tensor(one), q_L, H.delta(H.e(b)))),
        H.tmul(one.tensor(H.e(i)), q_L)))

    # (pqr): Delta(q_R1) p_R [1 (x) S(q_R2)] = 1 (x) 1
    #        [1 (x) S^{-1}(p_R2)] q_R Delta(p_R1) = 1 (x) 1
    rep.check_equal("pqr-a", H.assemble(q_R, lambda a, b: H.tmulc(
        H.delta(H.e(a)), p_R, one.tensor(H.S(H.e(b))))), one2)
    rep.check_equal("pqr-b", H.assemble(p_R, lambda a, b: H.tmulc(
        one.tensor(H.Sinv(H.e(b))), q_R, H.delta(H.e(a)))), one2)

    # (pql): [S(p_L1) (x) 1] q_L Delta(p_L2) = 1 (x) 1
    #        Delta(q_L2) p_L [S^{-1}(q_L1) (x) 1] = 1 (x) 1
    rep.check_equal("pql-a", H.assemble(p_L, lambda a, b: H.tmulc(
        H.S(H.e(a)).tensor(one), q_L, H.delta(H.e(b)))), one2)
    rep.check_equal("pql-b", H.assemble(q_L, lambda a, b: H.tmulc(
        H.delta(H.e(b)), p_L, H.Sinv(H.e(a)).tensor(one))), one2)

    # (qr2): (q_R (x) 1)(Delta (x) id)(q_R) Phi^{-1}
    #   = [1 (x) S^{-1}(X3) (x) S^{-1}(X2)][1 (x) S^{-1}(f2) (x) S^{-1}(f1)]
    #     (id (x) Delta)(q_R Delta(X1))
    lhs = H.tmulc(q_R.tensor(one), q_R.map_leg(0, H.comul), H.phi_inv)
    rhs = H.assemble(H.phi.tensor(f), lambda X1, X2, X3, f1, f2: H.tmulc(
        one.tensor(H.Sinv(H.e(X3))).tensor(H.Sinv(H.e(X2))),
        one.tensor(H.Sinv(H.e(f2))).tensor(H.Sinv(H.e(f1))),
        H.tmul(q_R, H.delta(H.e(X1))).map_leg(1, H.comul)))
    rep.check_equal("qr2", lhs, rhs)

    # (pr1): Phi (Delta (x) id)(p_R)(p_R (x) 1)
    #   = (id (x) Delta)(Delta(x1) p_R)(1 (x) f^{-1})(1 (x) S(x3) (x) S(x2))
    lhs = H.tmulc(H.phi, p_R.map_leg(0, H.comul), p_R.tensor(one))
    rhs = H.assemble(H.phi_inv, lambda x1, x2, x3: H.tmulc(
        H.tmul(H.delta(H.e(x1)), p_R).map_leg(1, H.comul),
        one.tensor(f_inv),
        one.tensor(H.S(H.e(x3))).tensor(H.S(H.e(x2)))))
    rep.check_equal("pr1", lhs, rhs)

    # (lq): sum S(x1) q_L1 x2_1 (x) q_L2 x2_2 (x) x3
    #     = sum q_L1 X1 (x) (q_L2)_1 X2 (x) (q_L2)_2 X3
    lhs = H.assemble(H.phi_inv.map_leg(1, H.comul),
                     lambda x1, x21, x22, x3: H.assemble(q_L, lambda a, b: H.mul(
                         H.S(H.e(x1)), H.e(a), H.e(x21)).tensor(
                         H.mul(H.e(b), H.e(x22))).tensor(H.e(x3))))
    rhs = H.tmul(q_L.map_leg(1, H.comul), H.phi)
    rep.check_equal("lq", lhs, rhs)

    # (u1): U[1 (x) S(h)] = Delta(S(h1)) U (h2 (x) 1)
    rep.check_quantified("u1", ((i,) for i in range(n)), lambda i: (
        H.tmul(U, one.tensor(H.S(H.e(i)))),
        H.assemble(H.delta(H.e(i)), lambda a, b: H.tmulc(
            H.delta(H.S(H.e(a))), U, H.e(b).tensor(one)))))

    # (u2): Phi^{-1} (id (x) Delta)(U)(1 (x) U)
    #     = (Delta (x) id)(Delta(S(X1)) U)(X2 (x) X3 (x) 1)
    lhs = H.tmulc(H.phi_inv, U.map_leg(1, H.comul), one.tensor(U))
    rhs = H.assemble(H.phi, lambda X1, X2, X3: H.tmul(
        H.tmul(H.delta(H.S(H.e(X1))), U).map_leg(0, H.comul),
        H.e(X2).tensor(H.e(X3)).tensor(one)))
    rep.check_equal("u2", lhs, rhs)

    # (v1): [1 (x) S^{-1}(h)] V = (h2 (x) 1) V Delta(S^{-1}(h1))
    rep.check_quantified("v1", ((i,) for i in range(n)), lambda i: (
        H.tmul(one.tensor(H.Sinv(H.e(i))), V),
        H.assemble(H.delta(H.e(i)), lambda a, b: H.tmulc(
            H.e(b).tensor(one), V, H.delta(H.Sinv(H.e(a)))))))

    # (v2): (Delta (x) id)(V) Phi^{-1}
    #     = (X2 (x) X3 (x) 1)(1 (x) V)(id (x) Delta)(V Delta(S^{-1}(X1)))
    lhs = H.tmul(V.map_leg(0, H.comul), H.phi_inv)
    rhs = H.assemble(H.phi, lambda X1, X2, X3: H.tmulc(
        H.e(X2).tensor(H.e(X3)).tensor(one),
        one.tensor(V),
        H.tmul(V, H.delta(H.Sinv(H.e(X1)))).map_leg(1, H.comul)))
    rep.check_equal("v2", lhs, rhs)

    # auxiliary scalar-type identities used in the round-trip proofs
    rep.check_equal("fpre-a", H.assemble(f_inv, lambda g1, g2: H.mul(
        H.e(g1), H.S(H.mul(H.e(g2), H.alpha)))), H.beta)
    rep.check_equal("fpre-b", H.assemble(f, lambda f1, f2: H.mul(
        H.Sinv(H.e(f2)), H.beta, H.e(f1))), H.Sinv(H.alpha))
    rep.check_equal("fpre-c", H.assemble(f, lambda f1, f2: H.mul(
        H.e(f2), H.Sinv(H.mul(H.e(f1), H.beta)))), H.S(H.alpha))
    rep.check_equal("fpre-d", H.assemble(f_inv, lambda g1, g2: H.mul(
        H.S(H.e(g1)), H.alpha, H.e(g2))), H.S(H.beta))

    # (f3): sum g2_2 U2 (x) g1 S(g2_1 U1) = sum p_L2 (x) S(p_L1)
    lhs = H.assemble(f_inv.map_leg(1, H.comul).tensor(U),
                     lambda g1, g21, g22, u1, u2: H.mul(
                         H.e(g22), H.e(u2)).tensor(H.mul(
                             H.e(g1), H.S(H.mul(H.e(g21), H.e(u1))))))
    rhs = H.assemble(p_L, lambda a, b: H.e(b).tensor(H.S(H.e(a))))
    rep.check_equal("f3", lhs, rhs)

    # (f4): sum S(p_L2) f1 F1_1 (x) S^{-1}(F2) S(p_L1) f2 F1_2 = q_R
    lhs = H.assemble(p_L.tensor(f).tensor(f.map_leg(0, H.comul)),
                     lambda p1, p2, f1, f2, F11, F12, F2: H.mul(
                         H.S(H.e(p2)), H.e(f1), H.e(F11)).tensor(H.mul(
                             H.Sinv(H.e(F2)), H.S(H.e(p1)), H.e(f2), H.e(F12))))
    rep.check_equal("f4", lhs, q_R)

    # (f5): sum S(g2_2 U2) f1 F1_1 (p_R1)_1 (x)
    #           S^{-1}(F2 p_R2) g1 S(g2_1 U1) f2 F1_2 (p_R1)_2 = 1 (x) 1
    # Assembled from precombined pieces (same sum by linearity):
    # A = sum S(g2_2 U2) (x) g1 S(g2_1 U1), and
    # Z = (Delta (x) S^{-1})(f p_R) so Z = sum (F1 p_R1)_1 (x) (F1 p_R1)_2
    # (x) S^{-1}(F2 p_R2), using that Delta is an algebra map.
    A5 = H.assemble(f_inv.map_leg(1, H.comul).tensor(U),
                    lambda g1, g21, g22, u1, u2: H.S(H.mul(
                        H.e(g22), H.e(u2))).tensor(H.mul(
                            H.e(g1), H.S(H.mul(H.e(g21), H.e(u1))))))
    Z5 = H.tmul(f, p_R).map_leg(0, H.comul).map_leg(2, H.antipode_inv)
    lhs = H.assemble(A5.tensor(f).tensor(Z5),
                     lambda a1, a2, f1, f2, z1, z2, z3: H.mul(
                         H.e(a1), H.e(f1), H.e(z1)).tensor(H.mul(
                             H.e(z3), H.e(a2), H.e(f2), H.e(z2))))
    rep.check_equal("f5", lhs, one2)

    # (f6): sum F1 f1_1 p_R1 (x) f2 S^{-1}(F2 f1_2 p_R2) = sum S(q_L2) (x) q_L1
    lhs = H.assemble(f.tensor(f.map_leg(0, H.comul)).tensor(p_R),
                     lambda F1, F2, f11, f12, f2, p1, p2: H.mul(
                         H.e(F1), H.e(f11), H.e(p1)).tensor(H.mul(
                             H.e(f2), H.Sinv(H.mul(H.e(F2), H.e(f12), H.e(p2))))))
    rhs = H.assemble(q_L, lambda a, b: H.S(H.e(b)).tensor(H.e(a)))
    rep.check_equal("f6", lhs, rhs)

    # (f7): sum S(G1) q_L1 G2_1 g1 (x) q_L2 G2_2 g2 = sum S(p_R2) (x) S(p_R1)
    lhs = H.assemble(f_inv.map_leg(1, H.comul).tensor(q_L).tensor(f_inv),
                     lambda G1, G21, G22, a, b, g1, g2: H.mul(
                         H.S(H.e(G1)), H.e(a), H.e(G21), H.e(g1)).tensor(H.mul(
                             H.e(b), H.e(G22), H.e(g2))))
    rhs = H.assemble(p_R, lambda a, b: H.S(H.e(b)).tensor(H.S(H.e(a))))
    rep.check_equal("f7", lhs, rhs)

    # (f8): sum S^{-1}(F1 f1_1 p_R1) U2_2 g2 (x)
    #           S(U1) f2 S^{-1}(F2 f1_2 p_R2) U2_1 g1 = 1 (x) 1
    # Precombined: P = sum S^{-1}(F1 f1_1 p_R1) (x) S^{-1}(F2 f1_2 p_R2)
    # (x) f2 built leg-wise in H^3, and
    # Q = sum U2_2 g2 (x) S(U1) (x) U2_1 g1.
    P8 = H.tmulc(f.tensor(one), f.map_leg(0, H.comul), p_R.tensor(one))
    P8 = P8.map_leg(0, H.antipode_inv).map_leg(1, H.antipode_inv)
    Q8 = H.assemble(U.map_leg(1, H.comul).tensor(f_inv),
                    lambda u1, u21, u22, g1, g2: H.mul(
                        H.e(u22), H.e(g2)).tensor(H.S(H.e(u1))).tensor(H.mul(
                            H.e(u21), H.e(g1))))
    lhs = H.assemble(P8.tensor(Q8),
                     lambda w1, w2, w3, q1, q2, q3: H.mul(
                         H.e(w1), H.e(q1)).tensor(H.mul(
                             H.e(q2), H.e(w3), H.e(w2), H.e(q3))))
    rep.check_equal("f8", lhs, one2)

    return rep


# ----------------------------------------------------------------------
# the dual view


class DualView:
    """H^* as a coassociative coalgebra and (H, H)-bimodule algebra.

    The convolution product is associative only when Phi is trivial;
    that is exactly what the mbia identities express.
    """

    def __init__(self, H: QuasiBialgebra):
        self.H = H
        field = H.field
        self.basis = H.basis.dual()
        n = H.dim

        # convolution: (e^a e^b)(e_k) = sum e^a(k_1) e^b(k_2)
        mult = {}
        for k in range(n):
            for (a, b), c in H.comul.cols.get(k, {}).items():
                mult.setdefault((a, b), {})[k] = c
        unit = Tensor((self.basis,), {
            (i,): H.eps(H.e(i)) for i in range(n)
        }, field)
        self.conv = FinAlgebra(self.basis, mult, unit, field)

        # comultiplication of H^*: transpose of the multiplication of H
        comul_cols = {}
        for (i, j), vec in H.algebra.mult.items():
            for k, c in vec.items():
                comul_cols.setdefault(k, {})[(i, j)] = c
        self.comul = LinearMap(self.basis, (self.basis, self.basis),
                               comul_cols, field)

        # hit actions: <h -> phi, h'> = phi(h'h), <phi <- h, h'> = phi(hh')
        hit_l = {}
        hit_r = {}
        for (i, j), vec in H.algebra.mult.items():
            for a, c in vec.items():
                hit_l.setdefault((j, a), {})[i] = c
                hit_r.setdefault((a, i), {})[j] = c
        self.hit_l_leg = LegMul(H.basis, self.basis, self.basis, hit_l, field)
        self.hit_r_leg = LegMul(self.basis, H.basis, self.basis, hit_r, field)

    def dual_e(self, a: int) -> Tensor:
        return Tensor.basis_vector(self.basis, a, self.H.field)

    def eps_functional(self) -> Tensor:
        return self.conv.unit_tensor()

    def convolve(self, *phis: Tensor) -> Tensor:
        return self.conv.mulc(*phis)

    def hit_l(self, h: Tensor, phi: Tensor) -> Tensor:
        """h -> phi."""
        return mul_legs((self.hit_l_leg,), h, phi)

    def hit_r(self, phi: Tensor, h: Tensor) -> Tensor:
        """phi <- h."""
        return mul_legs((self.hit_r_leg,), phi, h)

    def apply(self, phi: Tensor, x: Tensor):
        """Evaluate a functional on a one-leg element, as a scalar."""
        acc = self.H.field.zero()
        for (a,), c in phi.data.items():
            v = x.data.get((a,))
            if v:
                acc = acc + c * v
        return acc

    def precompose(self, phi: Tensor, fmap: LinearMap) -> Tensor:
        """phi after fmap (for instance phi o S)."""
        data = {}
        for a in range(self.H.dim):
            col = fmap.cols.get(a, {})
            acc = self.H.field.zero()
            for (b,), c in col.items():
                v = phi.data.get((b,))
                if v:
                    acc = acc + c * v
            if acc:
                data[(a,)] = acc
        return Tensor((self.basis,), data, self.H.field)

    def from_functional(self, fn) -> Tensor:
        """Functional from its values fn(i) on basis vectors."""
        data = {}
        for i in range(self.H.dim):
            v = fn(i)
            if v:
                data[(i,)] = v
        return Tensor((self.basis,), data, self.H.field)


def check_dual_bimodule_algebra(dual: DualView) -> VerificationReport:
    """The quasi-associativity (mbia1) and the bimodule compatibility
    (mbia2) of the convolution algebra on H^*."""
    H = dual.H
    rep = VerificationReport("dual bimodule algebra %s" % H.name,
                             {"dim": H.dim, "field": H.field.name})
    n = H.dim

    def mbia1(a, b, c):
        phi, psi, xi = dual.dual_e(a), dual.dual_e(b), dual.dual_e(c)
        lhs = dual.convolve(dual.convolve(phi, psi), xi)
        rhs = None
        for (X1, X2, X3), c1 in H.phi.data.items():
            for (x1, x2, x3), c2 in H.phi_inv.data.items():
                t1 = dual.hit_r(dual.hit_l(H.e(X1), phi), H.e(x1))
                t2 = dual.hit_r(dual.hit_l(H.e(X2), psi), H.e(x2))
                t3 = dual.hit_r(dual.hit_l(H.e(X3), xi), H.e(x3))
                term = dual.convolve(t1, dual.convolve(t2, t3)).scale(c1 * c2)
                rhs = term if rhs is None else rhs + term
        return lhs, rhs

    rep.check_quantified(
        "mbia1",
        ((a, b, c) for a in range(n) for b in range(n) for c in range(n)),
        mbia1)

    def mbia2(i, a, b):
        h, phi, psi = H.e(i), dual.dual_e(a), dual.dual_e(b)
        d = H.delta(h)
        lhs1 = dual.hit_l(h, dual.convolve(phi, psi))
        rhs1 = H.assemble(d, lambda h1, h2: dual.convolve(
            dual.hit_l(H.e(h1), phi), dual.hit_l(H.e(h2), psi)))
        lhs2 = dual.hit_r(dual.convolve(phi, psi), h)
        rhs2 = H.assemble(d, lambda h1, h2: dual.convolve(
            dual.hit_r(phi, H.e(h1)), dual.hit_r(psi, H.e(h2))))
        return lhs1.tensor(lhs2), rhs1.tensor(rhs2)

    rep.check_quantified(
        "mbia2",
        ((i, a, b) for i in range(n) for a in range(n) for b in range(n)),
        mbia2)
    return rep
