import pytest
from hypothesis import given
from hypothesis import strategies as st

from relnerve.homotopy_verify import (
    GridMap, alpha_rho, codegeneracy, coface, compose, eta_map, find_case_conflicts, h_cases, h_map,
    identity_grid, verify_grid_map, verify_zigzag,
)


def test_eta_values():
    assert eta_map(1).values == (((0, 0), (0, 1)), ((1, 1), (1, 1)))
    assert alpha_rho(1).values == (((0, 0), (0, 0)), ((1, 1), (1, 1)))


def test_h_values_small():
    assert h_map(1, 0, 1).values == (((0, 0), (0, 0), (0, 1)), ((0, 0), (0, 0), (0, 1)), ((1, 1), (1, 1), (1, 1)))
    assert h_map(2, 0, 1).values == (((0, 0), (0, 0), (0, 0)), ((0, 0), (0, 0), (0, 1)), ((1, 1), (1, 1), (1, 1)))


def test_h_map_rejects_bad_index():
    with pytest.raises(ValueError):
        h_map(1, 3, 2)
    with pytest.raises(ValueError):
        h_cases(3, 0, 0, 0)


def test_cases_are_exhaustive_and_exclusive():
    assert find_case_conflicts(7) == []


@given(st.integers(0, 6), st.data())
def test_boundaries(n, data):
    # H^{0,n} starts at η; H₁^{n,n} ends at the identity and H₂^{n,n} at αρ
    for eps, other in ((1, identity_grid(n)), (2, alpha_rho(n))):
        assert compose(h_map(eps, 0, n), coface(n + 1, 0)) == eta_map(n)
        assert compose(h_map(eps, n, n), coface(n + 1, n + 1)) == other


@given(st.integers(0, 6), st.data())
def test_h_maps_are_relative(n, data):
    i = data.draw(st.integers(0, n))
    for eps in (1, 2):
        assert verify_grid_map(h_map(eps, i, n))


def test_grid_check_catches_non_monotone():
    g = GridMap.from_function(1, 1, lambda j, k: (1 - j, k))
    rep = verify_grid_map(g)
    assert not rep and rep.failure["property"] == "monotone"


def test_grid_check_catches_unmarked_vertical():
    g = GridMap.from_function(1, 1, lambda j, k: (k, k))
    rep = verify_grid_map(g)
    assert not rep and rep.failure["property"] == "marking"


def test_zigzag_small_passes():
    rep = verify_zigzag(3)
    assert rep.ok and rep.total > 0
    assert set(rep.to_dict()) == {"max_n", "status", "instances_checked", "counts", "entries", "failures"}


def test_zigzag_detects_mutation():
    bad = h_map(1, 0, 1).replace((0, 2), (0, 0))
    rep = verify_zigzag(2, overrides={(1, 0, 1): bad})
    assert not rep.ok
    assert all(f["eps"] == 1 for f in rep.failures)


def test_zigzag_needs_positive_n():
    with pytest.raises(ValueError):
        verify_zigzag(0)


def test_grid_composition_checks_shapes():
    with pytest.raises(ValueError):
        compose(identity_grid(1), identity_grid(2))
    assert compose(codegeneracy(1, 0), coface(2, 0)) == identity_grid(1)


def test_sample_values():
    h1, h2 = h_map(1, 0, 1), h_map(2, 0, 1)
    assert (h1(0, 2), h1(2, 1), h1(1, 2)) == ((0, 1), (1, 1), (0, 1))
    assert (h2(0, 2), h2(1, 2), h2(2, 2)) == ((0, 0), (0, 1), (1, 1))
