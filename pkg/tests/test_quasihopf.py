from fractions import Fraction

import pytest

from qhopf import (DerivedElements, DualView, LinearMap, QuasiHopfAlgebra,
                   QQ, Tensor, check_dual_bimodule_algebra,
                   check_quasibialgebra, check_quasihopf,
                   cyclic_group_algebra, is_gauge, klein_twist,
                   normalize_alpha_beta, quasi_z2, twist, twisted_klein,
                   verify_core_identities)

F = Fraction

CORPUS_KEYS = ("z2", "z3", "z2z2", "s3", "z2_quasi", "z2z2_twisted")


# ----------------------------------------------------------------------
# axiom checks on the corpus


@pytest.mark.parametrize("key", CORPUS_KEYS)
def test_corpus_passes_axioms(all_corpus, key):
    H = all_corpus[key]
    rep = check_quasibialgebra(H)
    assert rep.passed, [r.tag for r in rep.records if not r.passed]
    rep = check_quasihopf(H)
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


def test_nontrivial_reassociators(all_corpus):
    for key in ("z2_quasi", "z2z2_twisted"):
        H = all_corpus[key]
        assert H.phi != H.unit_pow(3)
    for key in ("z2", "z3", "z2z2", "s3"):
        H = all_corpus[key]
        assert H.phi == H.unit_pow(3)


# ----------------------------------------------------------------------
# frozen reassociator oracles, computed here with plain Fractions


def test_quasi_z2_reassociator_oracle(hq):
    # with p = (e - x)/2: Phi = 1 - 2 p(x)p(x)p, so the coefficient at
    # basis triple (i, j, k) is [ijk == 000] - (-1)^(i+j+k)/4
    for i in range(2):
        for j in range(2):
            for k in range(2):
                expect = F(1 if (i, j, k) == (0, 0, 0) else 0) \
                    - F(-1 if (i + j + k) % 2 else 1, 4)
                assert hq.phi.coeff((i, j, k)) == expect
    assert hq.phi == hq.phi_inv  # this reassociator is an involution


def test_twisted_klein_reassociator_oracle():
    H = twisted_klein()
    # independent oracle: in the character picture the twisted
    # reassociator is (-1)^(xi1 (chi1 psi2 + chi2 psi1)); transform to the
    # group basis, where index g is the bit vector of the group element
    # and e_chi = (1/4) sum_g (-1)^(chi.g) g.
    def dot(x, y):
        return bin(x & y).count("1") & 1

    for g in range(4):
        for h in range(4):
            for k in range(4):
                acc = F(0)
                for chi in range(4):
                    for psi in range(4):
                        for xi in range(4):
                            exp = (xi & 1) * ((chi & 1) * ((psi >> 1) & 1)
                                              + ((chi >> 1) & 1) * (psi & 1))
                            sign = (exp + dot(chi, g) + dot(psi, h)
                                    + dot(xi, k)) & 1
                            acc += F(-1 if sign else 1, 64)
                assert H.phi.coeff((g, h, k)) == acc


# ----------------------------------------------------------------------
# single-coefficient mutations must be caught with a counterexample


def _mutate_phi(H):
    Hm = object.__new__(QuasiHopfAlgebra)
    Hm.__dict__ = dict(H.__dict__)
    bump = Tensor(H.phi.spaces, {(0, 0, 0): H.field.one()}, H.field)
    Hm.phi = H.phi + bump
    return Hm


def _mutate_comul(H):
    cols = {i: dict(col) for i, col in H.comul.cols.items()}
    idx = next(iter(cols[0]))
    cols[0] = dict(cols[0])
    cols[0][idx] = cols[0][idx] + H.field.one()
    comul = LinearMap(H.basis, (H.basis, H.basis), cols, H.field)
    return QuasiHopfAlgebra(H.algebra, comul, H.counit, H.phi, H.antipode,
                            H.alpha, H.beta, phi_inv=H.phi_inv, name=H.name)


def _mutate_antipode(H):
    cols = {i: dict(col) for i, col in H.antipode.cols.items()}
    idx = next(iter(cols[0]))
    cols[0][idx] = cols[0][idx] + H.field.one()
    s = LinearMap(H.basis, (H.basis,), cols, H.field)
    return QuasiHopfAlgebra(H.algebra, H.comul, H.counit, H.phi, s,
                            H.alpha, H.beta, phi_inv=H.phi_inv, name=H.name)


@pytest.mark.parametrize("mutate", [_mutate_phi, _mutate_comul,
                                    _mutate_antipode],
                         ids=["phi", "comul", "antipode"])
def test_mutations_detected_on_quasi_entry(hq, mutate):
    rep = check_quasihopf(mutate(hq))
    failing = [r for r in rep.records if not r.passed]
    assert failing
    assert any(r.counterexample for r in failing)


def test_supplied_bad_phi_inverse_rejected(hq):
    bad_inv = hq.phi_inv + hq.unit_pow(3)
    with pytest.raises(ValueError):
        QuasiHopfAlgebra(hq.algebra, hq.comul, hq.counit, hq.phi,
                         hq.antipode, hq.alpha, hq.beta, phi_inv=bad_inv)


def test_noninvertible_phi_rejected(hq):
    zero3 = Tensor(hq.phi.spaces, {}, hq.field)
    with pytest.raises(ValueError):
        QuasiHopfAlgebra(hq.algebra, hq.comul, hq.counit, zero3,
                         hq.antipode, hq.alpha, hq.beta)


# ----------------------------------------------------------------------
# gauge twisting


def test_identity_twist_is_fixpoint(all_corpus):
    for H in all_corpus.values():
        F1 = H.unit().tensor(H.unit())
        assert is_gauge(H, F1)
        HF = twist(H, F1)
        assert HF.phi.data == H.phi.data
        assert HF.phi_inv.data == H.phi_inv.data
        assert HF.comul.cols == H.comul.cols
        assert HF.alpha.data == H.alpha.data
        assert HF.beta.data == H.beta.data
        assert HF.algebra.mult == H.algebra.mult


def test_twist_round_trip(all_corpus):
    from qhopf import invert_in_tensor_algebra
    H = all_corpus["z2z2"]
    Fw = klein_twist()
    HF = twist(H, Fw)
    rep = check_quasihopf(HF)
    assert rep.passed
    Fw_inv = invert_in_tensor_algebra((H.algebra, H.algebra), Fw)
    back = twist(HF, Fw_inv)
    assert back.phi.data == H.phi.data
    assert back.comul.cols == H.comul.cols
    assert back.alpha.data == H.alpha.data
    assert back.beta.data == H.beta.data


def test_non_gauge_rejected(all_corpus):
    H = all_corpus["z2"]
    # counit-normalized but not invertible: 1(x)1 minus its own support
    zero = Tensor((H.basis, H.basis), {}, H.field)
    assert not is_gauge(H, zero)
    with pytest.raises(ValueError):
        twist(H, zero)
    # invertible but wrong counit normalization
    doubled = H.unit().tensor(H.unit()).scale(H.field.from_int(2))
    assert not is_gauge(H, doubled)
    with pytest.raises(ValueError):
        twist(H, doubled)


def test_group_like_gauge_keeps_trivial_reassociator():
    # F = 1 - 2 p(x)p on k[Z/2] is a gauge transformation whose twisted
    # reassociator stays trivial: the deformation of quasi_z2 is not a
    # twist of the group algebra
    H = cyclic_group_algebra(2)
    p = (H.e(0) - H.e(1)).scale(F(1, 2))
    Fw = H.unit().tensor(H.unit()) - p.tensor(p).scale(F(2))
    assert is_gauge(H, Fw)
    HF = twist(H, Fw)
    assert HF.phi == H.unit_pow(3)
    hq = quasi_z2()
    assert HF.phi != hq.phi


# ----------------------------------------------------------------------
# derived elements and identity suites


def test_core_identities_on_quasi_entries(all_corpus):
    for key in ("z2_quasi", "z2z2_twisted"):
        rep = verify_core_identities(all_corpus[key])
        assert rep.passed, [r.tag for r in rep.records if not r.passed]


def test_antipode_twist_relates_phi_to_reversed_phi(hq):
    # twisting by the derived element f turns the reassociator into
    # (S(x)S(x)S) of the reversed reassociator
    der = DerivedElements(hq)
    HF = twist(hq, der.f)
    expected = hq.phi.permute((2, 1, 0))
    for leg in range(3):
        expected = expected.map_leg(leg, hq.antipode)
    assert HF.phi == expected


def test_derived_twist_element_invertible(hq):
    der = DerivedElements(hq)
    unit2 = hq.unit().tensor(hq.unit())
    assert hq.tmul(der.f, der.f_inv) == unit2
    assert hq.tmul(der.f_inv, der.f) == unit2
    assert der.f.map_leg(0, hq.counit) == hq.unit()
    assert der.f.map_leg(1, hq.counit) == hq.unit()


def test_dual_bimodule_algebra(all_corpus):
    for key in ("z2", "z3", "z2_quasi", "z2z2_twisted"):
        rep = check_dual_bimodule_algebra(DualView(all_corpus[key]))
        assert rep.passed


def test_normalized_alpha_beta_still_quasi_hopf(hq):
    Hn = normalize_alpha_beta(hq)
    rep = check_quasihopf(Hn)
    assert rep.passed
    assert Hn.eps(Hn.alpha) == Hn.field.one()


def test_antipode_inverse(all_corpus):
    H = all_corpus["s3"]
    for i in range(H.dim):
        assert H.Sinv(H.S(H.e(i))) == H.e(i)
        assert H.S(H.Sinv(H.e(i))) == H.e(i)
