import pytest

from qhopf import from_structure_constants, verify_classical_agreement


@pytest.mark.parametrize("key", ("z2", "z3", "z2z2"))
def test_classical_agreement(all_corpus, key):
    rep = verify_classical_agreement(all_corpus[key])
    assert rep.passed, [r.tag for r in rep.records if not r.passed]


def test_quasi_input_rejected(all_corpus):
    with pytest.raises(ValueError):
        from_structure_constants(all_corpus["z2_quasi"])
    with pytest.raises(ValueError):
        from_structure_constants(all_corpus["z2z2_twisted"])


def test_classical_antipode_and_convolution(all_corpus):
    H = all_corpus["z3"]
    ch = from_structure_constants(H)
    # S is inversion on the cyclic group: vec index arithmetic mod 3
    x = {1: H.field.one()}
    sx = ch.apply(ch.s, x)
    assert sx == {2: H.field.one()}
    assert ch.apply(ch.sinv, sx) == x
    # convolution of dual basis functionals of a group algebra is
    # pointwise: e^i * e^j = delta_ij e^i
    one = H.field.one()
    assert ch.conv({1: one}, {1: one}) == {1: one}
    assert ch.conv({1: one}, {2: one}) == {}
