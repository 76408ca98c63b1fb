import pytest

from qhopf import (canonical_bimodule_coalgebra, check_bimodule_coalgebra,
                   check_left_module_algebra, check_right_module_coalgebra,
                   cyclic_right_submodule, dual_module_algebra,
                   hhop_module_coalgebra, verify_crossed_module_description)


@pytest.mark.parametrize("key", ("z2", "z3", "z2_quasi", "z2z2_twisted"))
def test_canonical_bimodule_coalgebra(all_corpus, key):
    rep = check_bimodule_coalgebra(
        canonical_bimodule_coalgebra(all_corpus[key]))
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


@pytest.mark.parametrize("key", ("z2", "z2_quasi"))
def test_module_coalgebra_over_enveloping_algebra(all_corpus, key):
    H = all_corpus[key]
    HHop = H.tensor_with(H.opposite())
    C = canonical_bimodule_coalgebra(H)
    mc = hhop_module_coalgebra(C, HHop)
    rep = check_right_module_coalgebra(mc)
    assert rep.passed, [r.tag for r in rep.records if not r.passed]
    ma = dual_module_algebra(mc)
    rep = check_left_module_algebra(ma)
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


def test_crossed_module_description_on_hopf_seed(all_corpus):
    rep = verify_crossed_module_description(all_corpus["z3"], seeds=(0, 1))
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


def test_cyclic_submodule_deterministic(all_corpus):
    from qhopf import (DerivedElements, DualView, canonical_right_comodule,
                       quasi_smash, smash_product)
    H = all_corpus["z2_quasi"]
    ca = canonical_right_comodule(H)
    qs = quasi_smash(ca, DualView(H))
    sm = smash_product(qs, threshold=qs.dim * H.dim)
    b1, act1 = cyclic_right_submodule(sm, 5)
    b2, act2 = cyclic_right_submodule(sm, 5)
    assert b1.labels == b2.labels
    for m in range(b1.dim):
        for g in range(sm.dim):
            assert act1(m, g) == act2(m, g)
    b3, _ = cyclic_right_submodule(sm, 6)
    assert b3.dim >= 1
