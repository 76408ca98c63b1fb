import pytest

from qhopf import (LinearMap, RightComoduleAlgebra, Tensor,
                   canonical_bicomodule, canonical_left_comodule,
                   canonical_module_coalgebra, canonical_right_comodule,
                   check_bicomodule_algebra, check_left_comodule_algebra,
                   check_right_comodule_algebra,
                   check_right_module_coalgebra, verify_tilde_identities)

CORPUS_KEYS = ("z2", "z3", "z2z2", "s3", "z2_quasi", "z2z2_twisted")


@pytest.mark.parametrize("key", CORPUS_KEYS)
def test_canonical_right_comodule(all_corpus, key):
    rep = check_right_comodule_algebra(
        canonical_right_comodule(all_corpus[key]))
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


@pytest.mark.parametrize("key", CORPUS_KEYS)
def test_canonical_left_comodule(all_corpus, key):
    rep = check_left_comodule_algebra(
        canonical_left_comodule(all_corpus[key]))
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


@pytest.mark.parametrize("key", ("z2", "z3", "z2_quasi", "z2z2_twisted"))
def test_canonical_bicomodule(all_corpus, key):
    rep = check_bicomodule_algebra(canonical_bicomodule(all_corpus[key]))
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


@pytest.mark.parametrize("key", ("z2", "z3", "z2z2", "s3"))
def test_canonical_module_coalgebra_over_hopf_seed(all_corpus, key):
    rep = check_right_module_coalgebra(
        canonical_module_coalgebra(all_corpus[key]))
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


@pytest.mark.parametrize("key", ("z2_quasi", "z2z2_twisted", "z3"))
def test_tilde_identities(all_corpus, key):
    rep = verify_tilde_identities(canonical_right_comodule(all_corpus[key]))
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


def test_corrupted_coaction_detected(hq):
    # replace the coaction by a counit-broken map: rho(e_0) gains a term
    cols = {i: dict(col) for i, col in hq.comul.cols.items()}
    cols[0][(1, 1)] = cols[0].get((1, 1), hq.field.zero()) + hq.field.one()
    bad = LinearMap(hq.basis, (hq.basis, hq.basis), cols, hq.field)
    ca = RightComoduleAlgebra(hq, hq.algebra, bad, hq.phi, hq.phi_inv)
    rep = check_right_comodule_algebra(ca)
    failing = [r for r in rep.records if not r.passed]
    assert failing
    assert any(r.counterexample for r in failing)


def test_corrupted_reassociator_rejected(hq):
    bump = Tensor((hq.basis, hq.basis, hq.basis),
                  {(0, 0, 0): hq.field.one()}, hq.field)
    with pytest.raises(ValueError):
        # stale inverse no longer matches the perturbed reassociator
        RightComoduleAlgebra(hq, hq.algebra, hq.comul, hq.phi + bump,
                             hq.phi_inv)


def test_hit_is_counit_normalized(hq):
    ca = canonical_right_comodule(hq)
    eps = Tensor((hq.basis.dual(),),
                 {(i,): hq.eps(hq.e(i)) for i in range(hq.dim)}, hq.field)
    for i in range(hq.dim):
        assert ca.hit(eps, ca.e(i)) == ca.e(i)
