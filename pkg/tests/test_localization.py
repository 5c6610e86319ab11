import pytest
from hypothesis import given

from relnerve.fincat import (
    FinFunctor, codiscrete, cyclic_group, discrete, find_isomorphism, interval, is_equivalence, parallel_pair,
    walking_isomorphism, walking_retract,
)
from relnerve.generators import markings, posets, relative_posets
from relnerve.localization import (
    bk_weq_check, detect_fractions, evaluate_word, induced_functor, inverts_weq, is_saturated, localize,
    universal_property_violations, word_comparison, word_name,
)
from relnerve.relcat import RelCat, max_rel, min_rel, relative_poset, walking_marked
from conftest import categories

TARGETS = posets(1) + posets(2) + [walking_isomorphism(), cyclic_group(2), walking_retract(), codiscrete(3), discrete(2)]


def test_word_names():
    assert word_name((("f", 1), ("g", -1))) == "~f.g^-1"
    assert word_name(()) == "~"


@given(categories(max_objects=3))
def test_minimal_marking_localizes_to_itself(C):
    loc = localize(min_rel(C))
    assert loc.complete and loc.result == C
    assert is_equivalence(loc.functor)


def test_max_interval_is_contractible():
    loc = localize(max_rel(interval(2)))
    L = loc.result
    assert all(len(L.hom(x, y)) == 1 for x in L.objects for y in L.objects)
    assert inverts_weq(loc)


def test_inverse_words_evaluate():
    loc = localize(max_rel(interval(1)))
    inv = loc.result.inverse(loc.functor.morphism_map["0->1"])
    assert evaluate_word(loc, "1", (("0->1", -1),)) == inv
    assert inv == "~0->1^-1"


def test_fractions_and_rewrite_agree_on_marked_interval():
    R = walking_marked(2)
    a, b = localize(R, "fractions"), localize(R, "rewrite")
    assert a.certificate["kind"] == "fractions" and b.certificate["status"] == "complete"
    assert word_comparison(a, b) is not None and word_comparison(b, a) is not None


def test_fractions_refused_without_ore():
    R = max_rel(parallel_pair())
    ok, bad = detect_fractions(R)
    assert not ok and bad["condition"] == "ore"
    with pytest.raises(ValueError):
        localize(R, "fractions")


def test_infinite_localization_is_inconclusive():
    # inverting both parallel arrows gives π1 of a circle
    loc = localize(max_rel(parallel_pair()), bound=20)
    assert not loc.complete and loc.certificate["status"] == "inconclusive"
    assert "result" not in loc.to_dict()


def test_unknown_strategy():
    with pytest.raises(ValueError):
        localize(min_rel(interval(1)), "magic")


@pytest.mark.parametrize("R", relative_posets(3), ids=lambda R: repr(R)[:60])
def test_posets_fractions_vs_rewrite(R):
    b = localize(R, "rewrite")
    if detect_fractions(R)[0] and b.complete:
        a = localize(R, "fractions")
        assert word_comparison(a, b) is not None


def test_saturation_of_retract():
    R = RelCat(walking_retract(), ["id0", "id1", "f"])
    rep = is_saturated(R)
    assert rep.verdict == "no" and "g" in rep.witnesses
    assert is_saturated(max_rel(walking_retract())).verdict == "yes"
    assert is_saturated(min_rel(interval(2))).verdict == "yes"
    assert is_saturated(max_rel(parallel_pair())).verdict == "unknown"


def test_universal_property_small():
    for R in (walking_marked(1), max_rel(walking_retract()), relative_poset(3, [(0, 1), (0, 2)], [(0, 1)])):
        assert universal_property_violations(localize(R), TARGETS) == []


def test_universal_property_detects_wrong_answer():
    # pretend the localization of [1] with 0->1 marked is [1] itself
    R = walking_marked(1)
    fake = localize(min_rel(interval(1)))
    fake.source = R
    assert universal_property_violations(fake, TARGETS)


def test_bk_weq():
    point = interval(0)
    F = FinFunctor(point, interval(1), {"0": "0"}, {"0->0": "0->0"})
    assert bk_weq_check(F, min_rel(point), max_rel(interval(1))).verdict == "yes"
    assert bk_weq_check(F, min_rel(point), min_rel(interval(1))).verdict == "no"
    ident = FinFunctor.identity(interval(1))
    with pytest.raises(ValueError):
        bk_weq_check(ident, walking_marked(1), min_rel(interval(1)))


def test_induced_functor_is_functorial():
    R1, R2 = walking_marked(2), max_rel(interval(0))
    F = FinFunctor(interval(2), interval(0), {x: "0" for x in "012"}, {m: "0->0" for m in interval(2).morphisms})
    H = induced_functor(F, localize(R1), localize(R2))
    assert H.is_valid()


def test_markings_family_localizes():
    for C in (walking_isomorphism(), cyclic_group(2), walking_retract()):
        for R in markings(C):
            loc = localize(R)
            assert loc.complete and inverts_weq(loc)
