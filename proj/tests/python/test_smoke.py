import pytest

import monad


def test_families():
    names = monad.family_names()
    assert "c36_schwarzenberger" in names
    assert "c32" in names


def test_chern_and_spectrum():
    c36 = monad.zoo_build("c36_schwarzenberger")
    assert monad.chern(c36) == [3, 0, 3, 6]
    c32 = monad.zoo_build("c32", [1, 0, 0, 1])
    s = monad.spectrum(c32)
    assert s["found"] and s["k"] == [-1, 0, 0]
    assert s["connected"] and s["in_allowed_list"]
    assert monad.stability(c32).startswith("stable")


def test_trivial_line_bundle_table():
    o = monad.zoo_build("O")
    for l, lo, hi in monad.coh_table(o, 0, 3):
        assert lo == hi
        assert lo[0] == (l + 1) * (l + 2) * (l + 3) // 6


def test_field_override_and_split():
    c36 = monad.zoo_build("c36_schwarzenberger", field="fp:101")
    assert "field fp:101" in c36
    assert monad.split(c36, [2, -3, 1, 0], [6, -7, 0, 1], dual=True) == [1, 1, -2]
    assert monad.chern(monad.zoo_build("c36_schwarzenberger"), field="fp:7") == [3, 0, 3, 6]


def test_parse_errors():
    with pytest.raises(ValueError):
        monad.chern("not a monad")
    with pytest.raises(monad.ParseError):
        monad.chern("monad\nn 3\nfield q\nend\n")


def test_verify_quick_is_deterministic():
    ok, a = monad.verify_paper(seed=3, quick=True)
    _, b = monad.verify_paper(seed=3, quick=True)
    assert ok
    assert a == b
    assert a.count("PASS") == 10
