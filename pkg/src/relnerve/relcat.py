"""Relative categories (C, W) with W a wide subcategory containing the isomorphisms."""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, List

from .fincat import CategoryError, FinCat, FinFunctor, functors, interval


class RelCat:
    """A finite category with a marked wide subcategory of weak equivalences.

    The constructor rejects markings that miss an isomorphism or are not
    closed under composition; use :func:`saturate_markings` to close a
    marking explicitly.
    """

    def __init__(self, base: FinCat, weq: Iterable[str]):
        self.base = base
        marked = set(weq) | set(base.identities.values())
        known = set(base.morphisms)
        for m in marked:
            if m not in known:
                raise CategoryError("dangling-id", f"weq names unknown morphism {m}", m)
        for m in base.invertibles():
            if m not in marked:
                raise CategoryError("weq-not-saturated", f"isomorphism {m} is not marked", m)
        for (g, f), h in base.composition_table.items():
            if g in marked and f in marked and h not in marked:
                raise CategoryError("weq-not-closed", f"{g}∘{f}={h} is not marked", h)
        self.weq = frozenset(marked)

    @property
    def weq_sorted(self) -> List[str]:
        return sorted(self.weq)

    def is_marked(self, f: str) -> bool:
        return f in self.weq

    def weq_category(self) -> FinCat:
        return self.base.subcategory(self.weq)

    def satisfies_two_out_of_three(self) -> bool:
        return not two_out_of_three_violations(self)

    def __eq__(self, other):
        return isinstance(other, RelCat) and self.base == other.base and self.weq == other.weq

    def __hash__(self):
        return hash((self.base, self.weq))

    def __repr__(self):
        return f"RelCat({self.base!r}, |W|={len(self.weq)})"


def saturate_markings(base: FinCat, weq: Iterable[str]) -> RelCat:
    """Smallest valid marking containing ``weq``: add isomorphisms, close under composition."""
    marked = set(weq) | set(base.invertibles())
    changed = True
    while changed:
        changed = False
        for (g, f), h in base.composition_table.items():
            if g in marked and f in marked and h not in marked:
                marked.add(h)
                changed = True
    return RelCat(base, marked)


def min_rel(C: FinCat) -> RelCat:
    return RelCat(C, C.invertibles())


def max_rel(C: FinCat) -> RelCat:
    return RelCat(C, C.morphisms)


def walking_marked(n: int) -> RelCat:
    """[n]_W: the poset [n] with every morphism marked."""
    return max_rel(interval(n))


def create_weq(F: FinFunctor) -> RelCat:
    """(C, W) with W the morphisms sent to isomorphisms by F."""
    E = F.codomain
    R = RelCat(F.domain, [f for f in F.domain.morphisms if E.is_invertible(F.morphism_map[f])])
    assert R.satisfies_two_out_of_three()
    return R


def two_out_of_three_violations(R: RelCat) -> List[tuple]:
    out = []
    for (g, f), h in R.base.composition_table.items():
        marks = (g in R.weq, f in R.weq, h in R.weq)
        if sum(marks) == 2:
            out.append((g, f, h))
    return out


def rel_product(R1: RelCat, R2: RelCat) -> RelCat:
    """Product with componentwise marking. Identifiers are 'a|b'."""
    A, B = R1.base, R2.base
    objs = [f"{a}|{b}" for a in A.objects for b in B.objects]
    mor = {
        f"{f}|{g}": (f"{A.source(f)}|{B.source(g)}", f"{A.target(f)}|{B.target(g)}")
        for f in A.morphisms
        for g in B.morphisms
    }
    comp = {}
    for f1, f2 in itertools.product(A.morphisms, repeat=2):
        if A.target(f1) != A.source(f2):
            continue
        for g1, g2 in itertools.product(B.morphisms, repeat=2):
            if B.target(g1) == B.source(g2):
                comp[(f"{f2}|{g2}", f"{f1}|{g1}")] = f"{A.compose(f2, f1)}|{B.compose(g2, g1)}"
    ids = {f"{a}|{b}": f"{A.identity(a)}|{B.identity(b)}" for a in A.objects for b in B.objects}
    P = FinCat(objs, mor, comp, ids, validate=False)
    weq = [f"{f}|{g}" for f in R1.weq for g in R2.weq]
    return RelCat(P, weq)


def is_relative_functor(F: FinFunctor, R1: RelCat, R2: RelCat) -> bool:
    return F.is_valid() and all(F.morphism_map[w] in R2.weq for w in R1.weq)


def rel_hom_set(R1: RelCat, R2: RelCat) -> Iterator[FinFunctor]:
    """All marking-preserving functors R1 -> R2, in canonical order."""
    for F in functors(R1.base, R2.base):
        if all(F.morphism_map[w] in R2.weq for w in R1.weq):
            yield F


def relative_poset(n_objects: int, leq_pairs, weq_pairs) -> RelCat:
    """Helper for tests: a poset on '0'..'n-1' with marked pairs (a, b) meaning a->b."""
    from .fincat import from_preorder

    els = [str(i) for i in range(n_objects)]
    rel = {(a, a) for a in els} | {(str(a), str(b)) for a, b in leq_pairs}
    C = from_preorder(els, lambda a, b: (a, b) in rel)
    return RelCat(C, [f"{a}->{b}" for a, b in weq_pairs])


def opposite(R: RelCat) -> RelCat:
    return RelCat(R.base.opposite(), R.weq)

