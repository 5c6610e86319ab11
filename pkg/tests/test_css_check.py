import pytest
from hypothesis import given

from relnerve.css_check import (
    completeness_check_nerve, hom_fiber, horn, segal_check_catvalued, segal_check_sset, spine_pairs,
)
from relnerve.fincat import codiscrete, cyclic_group, interval, is_gaunt, walking_isomorphism, walking_retract
from relnerve.relcat import max_rel, min_rel
from relnerve.simplicial import constant, nerve, standard_simplex
from conftest import categories


def test_nerves_are_segal():
    for C in (interval(2), walking_retract(), cyclic_group(3)):
        rep = segal_check_sset(nerve(C, 3))
        assert rep.ok and [v.level for v in rep.levels] == [2, 3]


def test_horn_fails_segal_at_every_level():
    rep = segal_check_sset(horn(2, 1, 3))
    assert [v.level for v in rep.failures()] == [2, 3]
    assert rep.levels[0].witness == {"kind": "not-surjective", "spine": [[0, 1], [1, 2]]}


def test_discrete_set_is_segal():
    assert segal_check_sset(constant(["a", "b"], 2)).ok


def test_codiscrete_nerve_with_extra_triangle_is_not_injective():
    from relnerve.simplicial import TruncSSet

    X = nerve(interval(1), 2)
    levels = [list(X.levels[0]), list(X.levels[1]), list(X.levels[2]) + ["extra"]]
    faces = {1: X.faces[1], 2: {i: tuple(X.faces[2][i]) + (X.faces[2][i][X.index(2, ("0->0", "0->1"))],) for i in range(3)}}
    degens = {0: X.degeneracies[0], 1: X.degeneracies[1]}
    rep = segal_check_sset(TruncSSet(levels, faces, degens))
    assert rep.levels[0].witness["kind"] == "not-injective"


def test_segal_needs_level_two():
    with pytest.raises(ValueError):
        segal_check_sset(nerve(interval(1), 1))


def test_spine_pairs_count():
    assert len(spine_pairs(nerve(interval(2), 2), 2)) == 10


def test_catvalued_segal():
    for R in (max_rel(interval(1)), min_rel(walking_isomorphism()), max_rel(walking_retract())):
        assert segal_check_catvalued(R, 3).ok


def test_completeness():
    rep = completeness_check_nerve(walking_isomorphism())
    assert not rep and rep.witness == "f"
    assert completeness_check_nerve(interval(3))
    assert not completeness_check_nerve(codiscrete(3))


@given(categories())
def test_completeness_agrees_with_gaunt(C):
    assert bool(completeness_check_nerve(C)) == is_gaunt(C)
    assert segal_check_sset(nerve(C, 3)).ok


def test_hom_fiber():
    X = nerve(walking_retract(), 1)
    assert sorted(hom_fiber(X, ("0",), ("1",))) == [("f",)]
    assert sorted(hom_fiber(X, ("1",), ("1",))) == [("e",), ("id1",)]
    with pytest.raises(ValueError):
        hom_fiber(X, ("9",), ("1",))


def test_horn_sizes():
    H = horn(2, 1, 2)
    assert H.level_sizes[0] == 3 and H.level_sizes[1] == standard_simplex(2, 2).level_sizes[1] - 1
