import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhopf import (Basis, QQ, Tensor, canonical_bicomodule,
                   canonical_module_coalgebra, canonical_right_comodule,
                   check_quasihopf, klein_twist, specfile as sf)

B = Basis(("e", "g", "h"), "B")


@pytest.mark.parametrize("key", ("z2", "z3", "z2z2", "s3", "z2_quasi",
                                 "z2z2_twisted"))
def test_quasihopf_round_trip_byte_identical(all_corpus, key):
    H = all_corpus[key]
    text = sf.serialize(sf.quasihopf_to_doc(H))
    doc = sf.parse(text)
    H2 = sf.doc_to_quasihopf(doc)
    assert sf.serialize(sf.quasihopf_to_doc(H2)) == text
    assert check_quasihopf(H2).passed


def test_missing_phi_inverse_recomputed(hq):
    doc = sf.quasihopf_to_doc(hq)
    del doc["data"]["phi-inv"]
    H2 = sf.doc_to_quasihopf(sf.parse(sf.serialize(doc)))
    assert H2.phi_inv.data == hq.phi_inv.data


def test_corrupted_phi_inverse_rejected(hq):
    doc = sf.quasihopf_to_doc(hq)
    rows = doc["data"]["phi-inv"]
    rows[0] = list(rows[0])
    rows[0][-2] += 1
    with pytest.raises(ValueError):
        sf.doc_to_quasihopf(doc)


def test_comodule_and_coalgebra_round_trips(all_corpus):
    hq = all_corpus["z2_quasi"]
    ca = canonical_right_comodule(hq)
    text = sf.serialize(sf.to_doc(ca))
    ca2 = sf.from_doc(sf.parse(text))
    assert sf.serialize(sf.to_doc(ca2)) == text

    ba = canonical_bicomodule(hq)
    text = sf.serialize(sf.to_doc(ba))
    ba2 = sf.from_doc(sf.parse(text))
    assert sf.serialize(sf.to_doc(ba2)) == text

    mc = canonical_module_coalgebra(all_corpus["z3"])
    text = sf.serialize(sf.to_doc(mc))
    mc2 = sf.from_doc(sf.parse(text))
    assert sf.serialize(sf.to_doc(mc2)) == text


def test_twist_round_trip(all_corpus):
    H = all_corpus["z2z2"]
    F = klein_twist()
    doc = sf.parse(sf.serialize(sf.twist_to_doc(H, F)))
    F2 = sf.doc_to_twist(doc, H)
    assert F2 == F
    # twist for the wrong algebra is rejected
    with pytest.raises(ValueError):
        sf.doc_to_twist(doc, all_corpus["z3"])


def test_parse_rejects_malformed_documents():
    with pytest.raises(ValueError):
        sf.parse("not json")
    with pytest.raises(ValueError):
        sf.parse(json.dumps({"format-version": 1, "kind": "nonsense"}))
    with pytest.raises(ValueError):
        sf.parse(json.dumps({"format-version": 99, "kind": "algebra"}))


def test_tensor_rows_validation():
    t = Tensor((B, B), {(0, 1): Fraction(2, 3)}, QQ)
    rows = sf.rows_from_tensor(t)
    assert sf.tensor_from_rows((B, B), rows, QQ) == t
    with pytest.raises(ValueError):
        sf.tensor_from_rows((B, B), [[0, 1, 1, 0]], QQ)  # zero denominator
    with pytest.raises(ValueError):
        sf.tensor_from_rows((B, B), [[0, 5, 1, 1]], QQ)  # index range
    with pytest.raises(ValueError):
        sf.tensor_from_rows((B, B), [[0, 1, 1, 1], [0, 1, 2, 1]], QQ)


def test_provenance_hashes_inputs():
    prov = sf.provenance("construction", {"a.json": "text"})
    assert prov["construction"] == "construction"
    assert prov["inputs"]["a.json"] == sf.file_hash("text")


@given(st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.tuples(st.integers(-9, 9), st.integers(1, 9)), max_size=6))
def test_tensor_rows_hypothesis_round_trip(entries):
    data = {k: Fraction(n, d) for k, (n, d) in entries.items()}
    t = Tensor((B, B), {k: v for k, v in data.items() if v}, QQ)
    rows = sf.rows_from_tensor(t)
    assert sf.tensor_from_rows((B, B), rows, QQ) == t
    # serialized rows are canonical: sorted and duplicate free
    assert rows == sorted(rows)
