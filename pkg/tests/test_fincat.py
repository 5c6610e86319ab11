import itertools

import pytest
from hypothesis import given

from relnerve.fincat import (
    CategoryError, FinCat, FinFunctor, NatTrans, chains, codiscrete, connected_components, cyclic_group,
    discrete, find_isomorphism, find_natural_transformation, functors, fundamental_groupoid, group_order,
    interval, is_equivalence, is_gaunt, nonidentity_isomorphisms, parallel_pair, walking_isomorphism,
    walking_retract,
)
from conftest import categories


def test_interval_sizes():
    for n in range(5):
        C = interval(n)
        assert len(C.objects) == n + 1
        assert len(C.morphisms) == (n + 1) * (n + 2) // 2


def test_compose_and_identities():
    C = walking_retract()
    assert C.compose("g", "f") == "id0"
    assert C.compose("f", "g") == "e"
    assert C.compose("e", "e") == "e"
    assert C.identity("1") == "id1"
    assert C.compose_path(["f", "g", "f"]) == "f"


def test_missing_identity_is_rejected():
    with pytest.raises(CategoryError) as exc:
        FinCat(["x"], {"f": ("x", "x")}, {})
    assert exc.value.code in ("missing-identity", "missing-composite")


def _monoid(table):
    mor = {"1": ("x", "x"), "a": ("x", "x"), "b": ("x", "x")}
    comp = {("1", m): m for m in mor} | {(m, "1"): m for m in mor}
    comp.update(table)
    return FinCat(["x"], mor, comp)


def test_associativity_is_checked():
    # left-zero band: associative
    _monoid({("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"})
    with pytest.raises(CategoryError) as exc:
        # a∘(a∘a) = a∘b = a but (a∘a)∘a = b∘a = b
        _monoid({("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"})
    assert exc.value.code == "non-associative"


def test_inverses_and_gaunt():
    assert walking_isomorphism().inverse("f") == "f_inv"
    assert walking_retract().inverse("f") is None
    assert nonidentity_isomorphisms(cyclic_group(3)) == ["g", "g2"]
    assert is_gaunt(interval(3)) and not is_gaunt(walking_isomorphism())


def test_functor_count_between_intervals():
    # functors [m] -> [n] are monotone maps: C(m+n+1, m+1)
    from math import comb

    for m in range(3):
        for n in range(3):
            assert len(list(functors(interval(m), interval(n)))) == comb(m + n + 1, m + 1)


def test_equivalence_oracle():
    I, P = walking_isomorphism(), interval(0)
    F = FinFunctor(P, I, {"0": "a"}, {"0->0": "id_a"})
    assert is_equivalence(F)
    G = FinFunctor(discrete(2), P, {"0": "0", "1": "0"}, {"0->0": "0->0", "1->1": "0->0"})
    rep = is_equivalence(G)
    assert not rep and rep.witness["kind"] == "not-full"


def test_find_isomorphism_relabelled():
    C = walking_retract()
    assert find_isomorphism(C, C) is not None
    assert find_isomorphism(interval(1), walking_isomorphism()) is None


def test_natural_transformation_search():
    C = interval(1)
    const0 = FinFunctor(C, C, {"0": "0", "1": "0"}, {m: "0->0" for m in C.morphisms})
    ident = FinFunctor.identity(C)
    eta = find_natural_transformation(const0, ident)
    assert eta is not None and eta.is_valid()
    assert find_natural_transformation(ident, const0) is None


def test_fundamental_groupoid_orders():
    assert [group_order(p) for p in fundamental_groupoid(cyclic_group(5))] == [5]
    assert [group_order(p) for p in fundamental_groupoid(interval(2))] == [1]
    assert [group_order(p) for p in fundamental_groupoid(discrete(3))] == [1, 1, 1]
    # the nerve of the parallel pair is a circle
    (p,) = fundamental_groupoid(parallel_pair())
    assert p.generators == ["b"] and p.relators == []
    assert group_order(p, max_cosets=50) is None


def test_chains():
    assert len(chains(interval(2), 2)) == 10
    assert chains(interval(1), 0) == [("0",), ("1",)]


@given(categories())
def test_random_categories_are_valid(C):
    # re-validating from the raw table must succeed and give an equal category
    D = FinCat(C.objects, {m: C.ends(m) for m in C.morphisms}, C.composition_table)
    assert D == C
    assert len(connected_components(C)) >= 1


@given(categories())
def test_gaunt_matches_invertibility_scan(C):
    scan = [f for f in C.morphisms for g in C.morphisms
            if not C.is_identity(f) and C.ends(g) == C.ends(f)[::-1]
            and C.is_identity(C.compose(g, f)) and C.is_identity(C.compose(f, g))]
    assert is_gaunt(C) == (not scan)


@given(categories(max_objects=2))
def test_identity_functor_is_equivalence(C):
    assert is_equivalence(FinFunctor.identity(C))
