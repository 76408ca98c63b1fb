import json

import pytest

from qhopf import cli, specfile as sf


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture()
def corpus_dir(tmp_path):
    d = tmp_path / "corpus"
    code = cli.main(["corpus", "--out", str(d)])
    assert code == 0
    return d


def test_corpus_writes_six_deterministic_files(tmp_path, capsys):
    d1, d2 = tmp_path / "c1", tmp_path / "c2"
    code, out, _ = run(capsys, "corpus", "--out", str(d1))
    assert code == 0
    files = sorted(p.name for p in d1.iterdir())
    assert len(files) == 6
    code, _, _ = run(capsys, "corpus", "--out", str(d2))
    assert code == 0
    for name in files:
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()


def test_check_corpus_files_pass(corpus_dir, capsys):
    for path in sorted(corpus_dir.iterdir()):
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0, path.name
        rep = json.loads(out)
        assert rep["passed"] is True
        assert rep["checks"]


def test_check_detects_mutation(corpus_dir, tmp_path, capsys):
    doc = sf.parse((corpus_dir / "z2_quasi.json").read_text())
    doc["data"]["phi"][0] = list(doc["data"]["phi"][0])
    doc["data"]["phi"][0][-2] += 1
    del doc["data"]["phi-inv"]  # keep the document self-consistent
    bad = tmp_path / "bad.json"
    bad.write_text(sf.serialize(doc))
    code, out, _ = run(capsys, "check", str(bad))
    assert code == 1
    rep = json.loads(out)
    failing = [c["tag"] for c in rep["checks"] if not c["passed"]]
    assert failing
    assert any(tag.startswith("q") for tag in failing)


def test_check_malformed_input_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 2


def test_identity_twist_is_fixpoint(corpus_dir, tmp_path, capsys):
    src = corpus_dir / "z3.json"
    doc = sf.parse(src.read_text())
    H = sf.doc_to_quasihopf(doc)
    tw = tmp_path / "identity-twist.json"
    tw.write_text(sf.serialize(sf.twist_to_doc(
        H, H.unit().tensor(H.unit()))))
    out = tmp_path / "twisted.json"
    code, _, _ = run(capsys, "twist", str(src), str(tw), "--out", str(out))
    assert code == 0
    doc2 = sf.parse(out.read_text())
    # identical except for the header fields (name, provenance)
    for key in ("mult", "unit", "comul", "counit", "phi", "phi-inv",
                "antipode", "alpha", "beta"):
        assert doc2["data"][key] == doc["data"][key]


def test_non_gauge_twist_exits_1(corpus_dir, tmp_path, capsys):
    src = corpus_dir / "z2.json"
    H = sf.doc_to_quasihopf(sf.parse(src.read_text()))
    bad = H.unit().tensor(H.unit()).scale(H.field.from_int(2))
    tw = tmp_path / "bad-twist.json"
    tw.write_text(sf.serialize(sf.twist_to_doc(H, bad)))
    out = tmp_path / "out.json"
    code, _, err = run(capsys, "twist", str(src), str(tw), "--out", str(out))
    assert code == 1
    assert not out.exists()


def test_derive_writes_module_data(corpus_dir, tmp_path, capsys):
    out = tmp_path / "derived.json"
    code, _, _ = run(capsys, "derive", str(corpus_dir / "z2_quasi.json"),
                     "--out", str(out))
    assert code == 0
    doc = sf.parse(out.read_text())
    assert doc["kind"] == "module-data"
    for key in ("gamma", "delta", "twist-element", "twist-element-inv",
                "p-right", "q-right", "p-left", "q-left", "u-element",
                "v-element"):
        assert key in doc["data"]


def test_product_output_is_checkable(corpus_dir, tmp_path, capsys):
    src = corpus_dir / "z2_quasi.json"
    H = sf.doc_to_quasihopf(sf.parse(src.read_text()))
    from qhopf import canonical_right_comodule
    ca_file = tmp_path / "ca.json"
    ca_file.write_text(sf.serialize(sf.to_doc(canonical_right_comodule(H))))
    out = tmp_path / "qs.json"
    code, _, _ = run(capsys, "product", "quasi-smash", str(ca_file),
                     "--out", str(out))
    assert code == 0
    code, outtext, _ = run(capsys, "check", str(out))
    assert code == 0
    assert json.loads(outtext)["passed"] is True


def test_verify_suites_and_determinism(corpus_dir, capsys):
    src = str(corpus_dir / "z2.json")
    for suite in ("axioms", "identities", "heisenberg", "classical"):
        code, out1, _ = run(capsys, "verify", suite, src)
        assert code == 0, suite
        code, out2, _ = run(capsys, "verify", suite, src)
        assert out1 == out2
    code, out1, _ = run(capsys, "--seed", "3", "verify", "modules", src)
    assert code == 0
    code, out2, _ = run(capsys, "--seed", "3", "verify", "modules", src)
    assert out1 == out2


def test_pretty_output(corpus_dir, capsys):
    code, out, _ = run(capsys, "--pretty", "verify", "axioms",
                       str(corpus_dir / "z2_quasi.json"))
    assert code == 0
    assert "verdict: pass" in out
