import itertools

import pytest

from relnerve.bisimplicial import (
    classification_action, classification_cells, classification_diagram, classification_to_pr2_nerve,
    classification_to_t_upper, constant_bisimplicial, diag_star, face_degeneracy_witnesses, i2_star,
    is_bisimplicial_isomorphism, pr2_star, representable, t_lower_shriek, t_lower_shriek_counit, t_upper_shriek,
)
from relnerve.fincat import cyclic_group, interval, walking_isomorphism, walking_retract
from relnerve.relcat import max_rel, min_rel, walking_marked
from relnerve.simplicial import DeltaMap, find_isomorphism, is_isomorphism, monotone_maps, nerve, nerve_codiscrete


def test_min_interval_sizes_are_constant_in_i():
    Y = classification_diagram(min_rel(interval(2)), 2, 2)
    assert Y.size_matrix() == [[3, 3, 3], [6, 6, 6], [10, 10, 10]]


def test_walking_iso_min_sizes():
    # every vertex assignment of the grid extends uniquely: 2^{(n+1)(i+1)} cells
    Y = classification_diagram(min_rel(walking_isomorphism()), 2, 2)
    assert Y.size_matrix() == [[2 ** ((n + 1) * (i + 1)) for i in range(3)] for n in range(3)]


def test_classification_identities():
    for R in (min_rel(walking_retract()), max_rel(interval(1)), walking_marked(2)):
        Y = classification_diagram(R, 2, 2)
        assert Y.check_identities() == []
        assert Y.commutation_violations() == []


def test_elementary_tables_match_precomposition():
    R = min_rel(walking_isomorphism())
    Y = classification_diagram(R, 2, 2)
    for (n, i), cells in Y.levels.items():
        for m1, m2 in itertools.product(range(3), repeat=2):
            for th in monotone_maps(m1, n):
                for ps in monotone_maps(m2, i):
                    for idx, F in enumerate(cells):
                        got = Y.levels[(m1, m2)][Y.act(th, ps, idx)]
                        assert got == classification_action(R, F, th, ps)


def test_bottom_row_is_nerve():
    C = walking_retract()
    Y = classification_diagram(min_rel(C), 2, 1)
    assert find_isomorphism(i2_star(Y), nerve(C, 2)) is not None


def test_left_column_is_nerve_of_weq():
    # (n=0, i) cells are chains of marked arrows
    R = max_rel(interval(1))
    Y = classification_diagram(R, 1, 2)
    assert find_isomorphism(Y.column(0), nerve(R.weq_category(), 2)) is not None


def test_diag_of_representable():
    D = diag_star(representable(1, 1, 2, 2))
    assert D.level_sizes == (4, 9, 16)


def test_diag_requires_square_truncation():
    with pytest.raises(ValueError):
        diag_star(classification_diagram(min_rel(interval(1)), 2, 1))


def test_constant_and_representable_are_valid():
    assert constant_bisimplicial(["a"], 2, 2).check_identities() == []
    assert representable(1, 2, 2, 2).commutation_violations() == []


@pytest.mark.parametrize("C", [interval(1), interval(2), walking_isomorphism(), cyclic_group(2)], ids=str)
def test_t_lower_shriek_of_pr2_is_identity(C):
    X = nerve(C, 3)
    T = t_lower_shriek(pr2_star(X, 3), 3)
    assert is_isomorphism(T, X, t_lower_shriek_counit(X, T))


def test_t_lower_shriek_depth_limit():
    with pytest.raises(ValueError):
        t_lower_shriek(pr2_star(nerve(interval(1), 2), 1), 2)


def test_t_upper_shriek_of_codiscrete():
    # maps Δ^n × (Δ^i)^tgpd -> N(codiscrete [1]) are vertex maps: 2^{(n+1)(i+1)}
    T = t_upper_shriek(nerve_codiscrete(1, 2), 2, 1)
    assert T.size_matrix() == [[2 ** ((n + 1) * (i + 1)) for i in range(2)] for n in range(3)]


def test_t_upper_shriek_needs_a_nerve():
    from relnerve.css_check import horn

    with pytest.raises(ValueError):
        t_upper_shriek(horn(2, 1, 2), 1, 1)


@pytest.mark.parametrize("C", [interval(1), walking_isomorphism()], ids=str)
def test_comparison_with_t_upper(C):
    R, X = min_rel(C), nerve(C, 2)
    Y = classification_diagram(R, 2, 2)
    T = t_upper_shriek(X, 2, 2)
    assert is_bisimplicial_isomorphism(Y, T, classification_to_t_upper(R, Y, T, X))


def test_comparison_with_pr2_nerve_gaunt_only():
    for C, iso in ((interval(2), True), (walking_isomorphism(), False)):
        R = min_rel(C)
        Y = classification_diagram(R, 2, 2)
        P = pr2_star(nerve(C, 2), 2)
        assert is_bisimplicial_isomorphism(Y, P, classification_to_pr2_nerve(R, Y, P)) == iso


def test_face_degeneracy_directions():
    for w in face_degeneracy_witnesses(max_rel(interval(1)), 2):
        assert w["direction"] == ("to identity" if w["i"] > w["j"] else "from identity")
        assert w["witness"].is_valid()


def test_small_sizes():
    assert classification_diagram(min_rel(interval(1)), 3, 3).size_matrix() == [[n + 2] * 4 for n in range(4)]
    Y = classification_diagram(max_rel(interval(1)), 1, 1)
    assert Y.size(1, 1) == 6
    R = max_rel(walking_retract())
    assert classification_diagram(R, 0, 0).size(0, 0) == len(R.base.objects)


def test_diag_of_min_interval():
    D = diag_star(classification_diagram(min_rel(interval(1)), 3, 3))
    assert D.level_sizes == (2, 3, 4, 5)


def test_pr2_round_trips():
    X = nerve(walking_retract(), 3)
    assert i2_star(pr2_star(X, 2)) == X
    assert diag_star(pr2_star(X, 3)) == X
    assert pr2_star(nerve(interval(0), 2), 2).size_matrix() == [[1] * 3] * 3


def test_diag_of_constant():
    from relnerve.simplicial import constant

    assert diag_star(constant_bisimplicial(["a", "b"], 2, 2)) == constant(["a", "b"], 2)


def test_category_of_nerve():
    from relnerve.bisimplicial import category_of_nerve
    from relnerve.fincat import find_isomorphism as cat_iso

    C = walking_retract()
    assert cat_iso(C, category_of_nerve(nerve(C, 2))) is not None
