from pathlib import Path

import pytest

import quivertk as qt

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return qt.Presentation((DATA / name).read_text())


def test_classify_standard_presentation():
    report = qt.classify(load("special_loop.quiver"))
    assert report["clannish"]["holds"]
    assert not report["skewed-gentle"]["holds"]
    assert not report["special-biserial"]["holds"]
    assert report["finite-dimensional"]["holds"]


def test_split_and_envelope():
    p = load("special_loop.quiver")
    s = qt.split(p)
    assert s.vertices == ["1", "2+", "2-", "3", "4"]
    assert s.relations == ["rel +b*a+ + -b*a-", "zero c*+b*a+"]
    assert qt.rho_blocks(s) == [["a+", "a-", "+b", "-b", "c"]]
    assert qt.envelope(p).relations == ["zero b*a", "idem f"]
    assert qt.Presentation(str(s)) == s


def test_split_rep():
    p = load("special_loop.quiver")
    m = qt.Representation(p, (DATA / "special_loop.rep").read_text())
    assert qt.check(m)
    n = qt.split_rep(m)
    assert n.dimension == [1, 1, 1, 1, 1]
    assert qt.check(n)


def test_bands_and_homs():
    k = load("kronecker.quiver")
    assert qt.bands(k, 4) == ["a*b^"]
    m1 = qt.band_module(k, "a*b^", "1")
    m2 = qt.band_module(k, "a*b^", "2")
    assert qt.hom_dim(m1, m2) == 0
    assert qt.end_dim(m1) == 1
    assert qt.component_dim(m1, 1) == 2


def test_strings_and_ranks():
    a3 = load("a3_ba.quiver")
    assert qt.strings(a3, 2) == ["e_1", "e_2", "e_3", "a", "b"]
    assert qt.maximal_rank_sequences(a3, [1, 1, 1]) == [[0, 1], [1, 0]]


def test_idempotents():
    assert qt.idempotent_component([["1", "1"], ["0", "0"]]) == (1, 2)
    with pytest.raises(qt.ValidationError):
        qt.idempotent_component([["2"]])


def test_stability_and_moduli():
    a2 = load("a2.quiver")
    zero = qt.Representation(a2, (DATA / "a2_zero.rep").read_text())
    v = qt.stability(zero, [1, -1])
    assert v["verdict"] == "unstable"
    assert v["certificate"] == [1, 0]
    assert qt.stability(qt.Representation(a2, (DATA / "a2_nonzero.rep").read_text()), [1, -1])["verdict"] == "stable"
    assert qt.moduli_shape([(2, 1), (3, 1), (4, 0)], clannish=True) == "P^2 x P^3"
    with pytest.raises(qt.UnsupportedError):
        qt.moduli_shape([(1, 1)], clannish=False)


def test_parse_error():
    with pytest.raises(qt.ParseError):
        qt.Presentation("vertex 1\nfrobnicate\n")
