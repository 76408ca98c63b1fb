import pytest

from qhopf import (FinAlgebra, canonical_left_comodule,
                   canonical_right_comodule, check_left_module_algebra,
                   generalized_smash, quasi_smash, smash_product,
                   two_sided_crossed, verify_crossed_decomposition,
                   verify_heisenberg_double, verify_hom_smash)


def _materialized(prod) -> FinAlgebra:
    alg = prod.alg
    assert isinstance(alg, FinAlgebra)
    return alg


@pytest.mark.parametrize("key", ("z2", "z3", "z2_quasi"))
def test_quasi_smash_is_module_algebra(all_corpus, key):
    H = all_corpus[key]
    qs = quasi_smash(canonical_right_comodule(H))
    rep = check_left_module_algebra(qs)
    assert rep.passed, [r.tag for r in rep.records if not r.passed]
    # the carrier is associative up to the reassociator acting through
    # the module structure, so strict associativity holds exactly when
    # the reassociator is trivial
    strict = qs.algebra.is_associative() is None
    assert strict == (H.phi == H.unit_pow(3))
    assert qs.algebra.unit_laws_hold() is None
    assert qs.dim == H.dim * H.dim


@pytest.mark.parametrize("key", ("z2", "z3", "z2_quasi"))
def test_smash_product_is_algebra(all_corpus, key):
    H = all_corpus[key]
    qs = quasi_smash(canonical_right_comodule(H))
    prod = smash_product(qs, threshold=qs.dim * H.dim)
    alg = _materialized(prod)
    assert alg.is_associative() is None
    assert alg.unit_laws_hold() is None
    assert alg.dim == H.dim ** 3


@pytest.mark.parametrize("key", ("z2", "z2_quasi"))
def test_generalized_smash_is_algebra(all_corpus, key):
    H = all_corpus[key]
    qs = quasi_smash(canonical_right_comodule(H))
    cb = canonical_left_comodule(H)
    prod = generalized_smash(qs, cb, threshold=qs.dim * cb.dim)
    alg = _materialized(prod)
    assert alg.is_associative() is None
    assert alg.unit_laws_hold() is None


@pytest.mark.parametrize("key", ("z2", "z2_quasi"))
def test_two_sided_crossed_is_algebra(all_corpus, key):
    H = all_corpus[key]
    rca = canonical_right_comodule(H)
    lcb = canonical_left_comodule(H)
    prod = two_sided_crossed(rca, lcb, threshold=H.dim ** 3)
    alg = _materialized(prod)
    assert alg.is_associative() is None
    assert alg.unit_laws_hold() is None
    assert alg.dim == H.dim ** 3


def test_product_algebra_flatten_round_trip(all_corpus):
    H = all_corpus["z2_quasi"]
    prod = two_sided_crossed(canonical_right_comodule(H),
                             canonical_left_comodule(H),
                             threshold=H.dim ** 3)
    for flat in range(prod.dim):
        idx = prod.split(flat)
        assert prod.join(idx) == flat
    t = prod.e(1, 0, 1)
    assert prod.flatten(prod.unflatten(t)) == t


@pytest.mark.parametrize("key", ("z2", "z2_quasi", "z2z2_twisted"))
def test_heisenberg_double(all_corpus, key):
    rep = verify_heisenberg_double(all_corpus[key])
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


@pytest.mark.parametrize("key", ("z2", "z2_quasi", "z2z2_twisted"))
def test_hom_smash(all_corpus, key):
    rep = verify_hom_smash(canonical_right_comodule(all_corpus[key]))
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


def test_crossed_decomposition(all_corpus):
    rep = verify_crossed_decomposition(all_corpus["z2_quasi"])
    assert rep.passed, [r.tag for r in rep.records if not r.passed]
