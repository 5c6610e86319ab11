"""Families of small categories for randomized and exhaustive checks."""
from __future__ import annotations

import itertools
import random
from typing import Iterator, List

from .fincat import CategoryError, FinCat, from_preorder, transformation_category
from .relcat import RelCat


def random_category(rng: random.Random, max_objects: int = 4, max_set: int = 2, max_generators: int = 4) -> FinCat:
    """A concrete category generated by random functions between small sets."""
    n = rng.randint(1, max_objects)
    objs = [chr(ord("a") + i) for i in range(n)]
    sizes = {x: rng.randint(1, max_set) for x in objs}
    gens = {}
    for k in range(rng.randint(0, max_generators)):
        s, t = rng.choice(objs), rng.choice(objs)
        gens[f"g{k}"] = (s, t, tuple(rng.randrange(sizes[t]) for _ in range(sizes[s])))
    return transformation_category(sizes, gens)


def random_categories(seed: int, count: int, **kw) -> List[FinCat]:
    rng = random.Random(seed)
    return [random_category(rng, **kw) for _ in range(count)]


def posets(n: int) -> List[FinCat]:
    """All partial orders on '0'..'n-1', one per isomorphism class."""
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    seen, out = set(), []
    perms = list(itertools.permutations(range(n)))
    for bits in itertools.product((False, True), repeat=len(pairs)):
        rel = {p for p, on in zip(pairs, bits) if on}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2 and a != c):
            continue
        canon = min(tuple(sorted((p[a], p[b]) for a, b in rel)) for p in perms)
        if canon in seen:
            continue
        seen.add(canon)
        els = [str(i) for i in range(n)]
        out.append(from_preorder(els, lambda x, y, r=frozenset(canon): x == y or (int(x), int(y)) in r))
    return out


def markings(C: FinCat) -> Iterator[RelCat]:
    """Every valid marking of C: subsets of the non-identity morphisms that contain the isomorphisms and are closed."""
    free = [m for m in C.morphisms if not C.is_identity(m)]
    for bits in itertools.product((False, True), repeat=len(free)):
        try:
            yield RelCat(C, [m for m, on in zip(free, bits) if on])
        except CategoryError:
            continue


def relative_posets(max_objects: int) -> List[RelCat]:
    return [R for n in range(1, max_objects + 1) for P in posets(n) for R in markings(P)]
