import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relnerve.fincat import cyclic_group, interval, walking_isomorphism
from relnerve.simplicial import (
    DeltaMap, check_homotopy, constant, constant_homotopy, delta_reverse, find_isomorphism, identity_maps,
    is_isomorphism, monotone_maps, nerve, nerve_codiscrete, product, reverse_check, standard_simplex,
)
from conftest import categories


@st.composite
def delta_maps(draw, max_n=5):
    m = draw(st.integers(0, max_n))
    n = draw(st.integers(0, max_n))
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return DeltaMap(m, n, tuple(vals))


def test_bad_delta_maps():
    with pytest.raises(ValueError):
        DeltaMap(1, 1, (1, 0))
    with pytest.raises(ValueError):
        DeltaMap(1, 1, (0, 2))
    with pytest.raises(ValueError):
        DeltaMap(2, 1, (0, 1))


def test_cosimplicial_identities():
    for n in range(1, 5):
        for i, j in itertools.product(range(n + 1), repeat=2):
            if i < j:
                # δ_j δ_i = δ_i δ_{j-1}
                assert DeltaMap.coface(n + 1, j).after(DeltaMap.coface(n, i)) == \
                    DeltaMap.coface(n + 1, i).after(DeltaMap.coface(n, j - 1))


def test_monotone_map_count():
    for m in range(4):
        for n in range(4):
            assert len(monotone_maps(m, n)) == comb(m + n + 1, m + 1)


def test_reverse_examples():
    assert delta_reverse(DeltaMap.coface(2, 0)) == DeltaMap.coface(2, 2)
    assert delta_reverse(DeltaMap.codegeneracy(2, 0)) == DeltaMap.codegeneracy(2, 2)


@given(delta_maps())
def test_reverse_is_involution(phi):
    assert delta_reverse(delta_reverse(phi)) == phi


@given(delta_maps(), st.data())
def test_reverse_is_functorial(psi, data):
    p = data.draw(st.integers(0, 5))
    vals = sorted(data.draw(st.lists(st.integers(0, p), min_size=psi.n + 1, max_size=psi.n + 1)))
    phi = DeltaMap(psi.n, p, tuple(vals))
    assert delta_reverse(phi.after(psi)) == delta_reverse(phi).after(delta_reverse(psi))


def test_reverse_check_small():
    rep = reverse_check(3)
    assert rep["ok"] and rep["maps"] == sum(comb(m + n + 1, m + 1) for m in range(4) for n in range(4))


@given(delta_maps(max_n=4))
def test_factorization_reproduces_map(phi):
    faces, degens = phi.factorization()
    # act on Δ^n itself: the simplex id_n, pulled back along phi, is phi
    S = standard_simplex(phi.n, max(phi.m, phi.n))
    x = S.index(phi.n, tuple(range(phi.n + 1)))
    assert S.label(phi.m, S.act(phi, x)) == phi.values


def test_nerve_sizes():
    assert nerve(interval(2), 3).level_sizes == (3, 6, 10, 15)
    assert nerve(cyclic_group(3), 2).level_sizes == (1, 3, 9)
    assert nerve_codiscrete(1, 2).level_sizes == (2, 4, 8)
    assert find_isomorphism(nerve(walking_isomorphism(), 3), nerve_codiscrete(1, 3)) is not None


@given(categories(max_objects=3))
def test_nerve_satisfies_simplicial_identities(C):
    assert nerve(C, 3).check_identities() == []


def test_product_of_simplices():
    P = product(standard_simplex(1, 2), standard_simplex(1, 2))
    assert P.level_sizes == (4, 9, 16)
    assert not P.check_identities()


def test_isomorphism_search_rejects_different_shapes():
    assert find_isomorphism(nerve(interval(2), 2), nerve(cyclic_group(3), 2)) is None
    X = nerve(interval(1), 2)
    assert is_isomorphism(X, X, identity_maps(X))


def test_constant_homotopy_passes():
    X = nerve(interval(1), 2)
    Z = nerve(interval(1), 3)
    f = [list(range(n)) for n in X.level_sizes]
    rep = check_homotopy(constant_homotopy(X, Z, f))
    assert rep.ok and rep.checked > 0


def test_broken_homotopy_fails():
    X = nerve(interval(1), 2)
    Z = nerve(interval(1), 3)
    H = constant_homotopy(X, Z, [list(range(n)) for n in X.level_sizes])
    H.h[(0, 0)] = list(reversed(H.h[(0, 0)]))
    rep = check_homotopy(H)
    assert not rep.ok and rep.failure["identity"] == "d0 h[0,n] = f"


def test_constant_set():
    X = constant(["a", "b"], 2)
    assert X.level_sizes == (2, 2, 2) and not X.check_identities()
