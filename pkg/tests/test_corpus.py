import shutil

import pytest

from knotwidth import corpus
from knotwidth import diagram as dg


def test_names():
    assert corpus.names() == ["figure_eight", "torus_2_5", "torus_2_7", "trefoil", "unknot"]


def test_manifest_intact():
    assert corpus.verify_manifest() == []
    assert set(corpus.read_manifest()) == {f"{n}.morse" for n in corpus.names()}


@pytest.mark.parametrize("name", corpus.names())
def test_certified(name):
    corpus.certify(name)
    d = corpus.load(name)
    assert dg.parse_diagram(dg.emit_diagram(d)) == d


def test_figure_eight_certificate():
    d = corpus.load("figure_eight")
    assert (dg.component_count(d), dg.crossing_count(d), dg.bridge(d), dg.writhe(d)) == (1, 4, 2, 0)


def test_tamper_detected(tmp_path):
    shutil.copytree(corpus.corpus_dir(), tmp_path / "c")
    target = tmp_path / "c" / "trefoil.morse"
    target.write_text(target.read_text().replace("cap 2", "cap 0"))
    assert corpus.verify_manifest(tmp_path / "c") == ["trefoil.morse"]
    (tmp_path / "c" / "extra.morse").write_text("cup 0\ncap 0\n")
    assert "extra.morse" in corpus.verify_manifest(tmp_path / "c")


def test_rebuild_is_stable(tmp_path):
    shutil.copytree(corpus.corpus_dir(), tmp_path / "c")
    original = (tmp_path / "c" / corpus.MANIFEST).read_text()
    assert corpus.build_manifest(tmp_path / "c") == original


def test_build_refuses_uncertified(tmp_path):
    shutil.copytree(corpus.corpus_dir(), tmp_path / "c")
    # two components: the plat closure with no crossings
    (tmp_path / "c" / "trefoil.morse").write_text("cup 0\ncup 2\ncap 2\ncap 0\n")
    with pytest.raises(corpus.CorpusError, match="not a knot"):
        corpus.build_manifest(tmp_path / "c")


def test_unknown_name():
    with pytest.raises(corpus.CorpusError):
        corpus.load("no_such_knot")
