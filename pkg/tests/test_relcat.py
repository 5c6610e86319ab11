import pytest

from relnerve.fincat import CategoryError, FinFunctor, cyclic_group, interval, walking_isomorphism, walking_retract
from relnerve.relcat import (
    RelCat, create_weq, max_rel, min_rel, rel_hom_set, rel_product, relative_poset, saturate_markings,
    two_out_of_three_violations, walking_marked,
)


def test_min_and_max():
    assert min_rel(interval(2)).weq == frozenset({"0->0", "1->1", "2->2"})
    assert max_rel(interval(2)).weq == frozenset(interval(2).morphisms)
    assert min_rel(walking_isomorphism()).weq == frozenset({"id_a", "id_b", "f", "f_inv"})


def test_marking_must_contain_isomorphisms():
    with pytest.raises(CategoryError) as exc:
        RelCat(walking_isomorphism(), [])
    assert exc.value.code == "weq-not-saturated"


def test_marking_must_be_closed():
    with pytest.raises(CategoryError) as exc:
        RelCat(interval(2), ["0->1", "1->2"])
    assert exc.value.code == "weq-not-closed"
    assert saturate_markings(interval(2), ["0->1", "1->2"]).is_marked("0->2")


def test_unknown_marked_id():
    with pytest.raises(CategoryError) as exc:
        RelCat(interval(1), ["nope"])
    assert exc.value.code == "dangling-id"


def test_walking_marked_hom_count():
    # relative functors [1]_W -> [1]_W are all monotone maps
    assert len(list(rel_hom_set(walking_marked(1), walking_marked(1)))) == 3
    # relative functors [1]_W -> min([1]) must send 0->1 to an identity
    assert len(list(rel_hom_set(walking_marked(1), min_rel(interval(1))))) == 2


def test_create_weq_satisfies_two_out_of_three():
    C = walking_retract()
    F = FinFunctor(C, cyclic_group(1), {"0": "*", "1": "*"}, {m: "e" for m in C.morphisms})
    R = create_weq(F)
    assert R.weq == frozenset(C.morphisms)
    assert not two_out_of_three_violations(R)


def test_product_marking():
    P = rel_product(walking_marked(1), min_rel(interval(1)))
    assert len(P.base.objects) == 4
    assert "0->1|0->0" in P.weq and "0->0|0->1" not in P.weq


def test_relative_poset_helper():
    R = relative_poset(3, [(0, 1), (1, 2), (0, 2)], [(1, 2)])
    assert R.is_marked("1->2") and not R.is_marked("0->1")
