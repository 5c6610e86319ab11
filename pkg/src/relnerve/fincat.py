"""Finite categories given by total composition tables.

Everything here is exact: invertibility, equivalence and the fundamental
groupoid are decided by exhaustive scans of the composition table.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ._limits import charge


class CategoryError(ValueError):
    """Invalid category data. ``code`` is a stable machine-readable tag."""

    def __init__(self, code: str, message: str, location: str = ""):
        self.code = code
        self.location = location
        super().__init__(f"{code}: {message}" + (f" (at {location})" if location else ""))


class FinCat:
    """A finite category.

    Parameters
    ----------
    objects : iterable of str
    morphisms : mapping id -> (source, target)
    compose : mapping (g, f) -> g∘f, total on composable pairs
    identities : optional mapping object -> morphism id; inferred when omitted
    """

    def __init__(self, objects, morphisms, compose, identities=None, validate=True):
        self.objects: Tuple[str, ...] = tuple(sorted(objects))
        self._mor: Dict[str, Tuple[str, str]] = {m: (s, t) for m, (s, t) in morphisms.items()}
        self.morphisms: Tuple[str, ...] = tuple(sorted(self._mor))
        self._comp: Dict[Tuple[str, str], str] = dict(compose)
        if validate:
            self._check_references()
        if identities is None:
            identities = self._infer_identities()
        self._id: Dict[str, str] = dict(identities)
        if validate:
            self._validate()
        self._hom: Dict[Tuple[str, str], Tuple[str, ...]] = {}
        for m in self.morphisms:
            self._hom.setdefault(self._mor[m], ())
            self._hom[self._mor[m]] += (m,)
        self._inverse_cache: Optional[Dict[str, str]] = None

    # -- validation -------------------------------------------------------
    def _check_references(self):
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise CategoryError("schema", "duplicate object identifier")
        for m, (s, t) in self._mor.items():
            if s not in objs or t not in objs:
                raise CategoryError("dangling-id", f"morphism {m} refers to unknown object", m)
        for (g, f), h in self._comp.items():
            for x in (g, f, h):
                if x not in self._mor:
                    raise CategoryError("dangling-id", f"unknown morphism {x}", f"compose[{g},{f}]")

    def _infer_identities(self):
        ids = {}
        for x in self.objects:
            for e in self.morphisms:
                if self._mor[e] != (x, x) or self._comp.get((e, e)) != e:
                    continue
                unit = all(
                    h == (g if ff == e else ff)
                    for (g, ff), h in self._comp.items()
                    if e in (g, ff)
                )
                if unit:
                    ids[x] = e
                    break
            else:
                raise CategoryError("missing-identity", f"no identity morphism on object {x}", x)
        return ids

    def _validate(self):
        for x in self.objects:
            e = self._id.get(x)
            if e is None or self._mor.get(e) != (x, x):
                raise CategoryError("missing-identity", f"no identity morphism on object {x}", x)
        for f in self.morphisms:
            s, t = self._mor[f]
            for g in self.morphisms:
                if self._mor[g][0] != t:
                    continue
                h = self._comp.get((g, f))
                if h is None:
                    raise CategoryError("missing-composite", f"{g}∘{f} undefined", f"compose[{g},{f}]")
                if self._mor[h] != (s, self._mor[g][1]):
                    raise CategoryError("bad-composite", f"{g}∘{f}={h} has wrong endpoints", f"compose[{g},{f}]")
        for (g, f) in self._comp:
            if self._mor[g][0] != self._mor[f][1]:
                raise CategoryError("bad-composite", f"{g}∘{f} listed but not composable", f"compose[{g},{f}]")
        for f in self.morphisms:
            s, t = self._mor[f]
            if self._comp[(f, self._id[s])] != f or self._comp[(self._id[t], f)] != f:
                raise CategoryError("not-unital", f"identity law fails for {f}", f)
        for f in self.morphisms:
            for g in self.out_of(self._mor[f][1]):
                gf = self._comp[(g, f)]
                for h in self.out_of(self._mor[g][1]):
                    if self._comp[(h, gf)] != self._comp[(self._comp[(h, g)], f)]:
                        raise CategoryError("non-associative", f"({h}∘{g})∘{f} != {h}∘({g}∘{f})", f"{h},{g},{f}")

    # -- basic accessors --------------------------------------------------
    def source(self, f: str) -> str:
        return self._mor[f][0]

    def target(self, f: str) -> str:
        return self._mor[f][1]

    def ends(self, f: str) -> Tuple[str, str]:
        return self._mor[f]

    def identity(self, x: str) -> str:
        return self._id[x]

    @property
    def identities(self) -> Dict[str, str]:
        return dict(self._id)

    def is_identity(self, f: str) -> bool:
        return self._id[self._mor[f][0]] == f

    def compose(self, g: str, f: str) -> str:
        """g∘f (f first)."""
        return self._comp[(g, f)]

    def compose_path(self, path: Sequence[str], start: Optional[str] = None) -> str:
        """Composite of ``path`` read left to right (first arrow first)."""
        if not path:
            return self._id[start]
        out = path[0]
        for g in path[1:]:
            out = self._comp[(g, out)]
        return out

    def hom(self, x: str, y: str) -> Tuple[str, ...]:
        return self._hom.get((x, y), ())

    def out_of(self, x: str) -> List[str]:
        return [m for m in self.morphisms if self._mor[m][0] == x]

    def into(self, y: str) -> List[str]:
        return [m for m in self.morphisms if self._mor[m][1] == y]

    @property
    def composition_table(self) -> Dict[Tuple[str, str], str]:
        return dict(self._comp)

    def inverse(self, f: str) -> Optional[str]:
        if self._inverse_cache is None:
            inv = {}
            for f_ in self.morphisms:
                s, t = self._mor[f_]
                for g in self.hom(t, s):
                    if self._comp[(g, f_)] == self._id[s] and self._comp[(f_, g)] == self._id[t]:
                        inv[f_] = g
                        break
            self._inverse_cache = inv
        return self._inverse_cache.get(f)

    def is_invertible(self, f: str) -> bool:
        return self.inverse(f) is not None

    def invertibles(self) -> Tuple[str, ...]:
        return tuple(m for m in self.morphisms if self.inverse(m) is not None)

    def opposite(self) -> "FinCat":
        return FinCat(
            self.objects,
            {m: (t, s) for m, (s, t) in self._mor.items()},
            {(f, g): h for (g, f), h in self._comp.items()},
            self._id,
            validate=False,
        )

    def subcategory(self, morphisms) -> "FinCat":
        """Wide subcategory on ``morphisms`` (must be closed; identities added)."""
        keep = set(morphisms) | set(self._id.values())
        comp = {}
        for (g, f), h in self._comp.items():
            if g in keep and f in keep:
                if h not in keep:
                    raise CategoryError("weq-not-closed", f"{g}∘{f}={h} leaves the subcategory", h)
                comp[(g, f)] = h
        return FinCat(self.objects, {m: self._mor[m] for m in keep}, comp, self._id, validate=False)

    def __eq__(self, other):
        return (
            isinstance(other, FinCat)
            and self.objects == other.objects
            and self._mor == other._mor
            and self._comp == other._comp
            and self._id == other._id
        )

    def __hash__(self):
        return hash((self.objects, self.morphisms))

    def __repr__(self):
        return f"FinCat({len(self.objects)} objects, {len(self.morphisms)} morphisms)"


@dataclass(frozen=True)
class FinFunctor:
    domain: FinCat
    codomain: FinCat
    object_map: Mapping[str, str]
    morphism_map: Mapping[str, str]

    def __call__(self, f: str) -> str:
        return self.morphism_map[f]

    def violations(self) -> List[str]:
        D, E = self.domain, self.codomain
        out = []
        for x in D.objects:
            if self.object_map.get(x) not in E.objects:
                out.append(f"object {x} unmapped")
        if out:
            return out
        for x in D.objects:
            if self.morphism_map.get(D.identity(x)) != E.identity(self.object_map[x]):
                out.append(f"identity at {x} not preserved")
        for f in D.morphisms:
            s, t = D.ends(f)
            img = self.morphism_map.get(f)
            if img is None or E.ends(img) != (self.object_map[s], self.object_map[t]):
                out.append(f"endpoints of {f} not preserved")
        if out:
            return out
        for (g, f), h in D.composition_table.items():
            if E.compose(self.morphism_map[g], self.morphism_map[f]) != self.morphism_map[h]:
                out.append(f"composite {g}∘{f} not preserved")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def then(self, other: "FinFunctor") -> "FinFunctor":
        """``other`` after ``self``."""
        return FinFunctor(
            self.domain,
            other.codomain,
            {x: other.object_map[y] for x, y in self.object_map.items()},
            {f: other.morphism_map[g] for f, g in self.morphism_map.items()},
        )

    @classmethod
    def identity(cls, C: FinCat) -> "FinFunctor":
        return cls(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms})


@dataclass(frozen=True)
class NatTrans:
    source: FinFunctor
    target: FinFunctor
    components: Mapping[str, str]

    def violations(self) -> List[str]:
        F, G = self.source, self.target
        E = F.codomain
        out = []
        for x in F.domain.objects:
            a = self.components.get(x)
            if a is None or E.ends(a) != (F.object_map[x], G.object_map[x]):
                out.append(f"component at {x} has wrong type")
        if out:
            return out
        for f in F.domain.morphisms:
            s, t = F.domain.ends(f)
            lhs = E.compose(self.components[t], F.morphism_map[f])
            rhs = E.compose(G.morphism_map[f], self.components[s])
            if lhs != rhs:
                out.append(f"naturality square for {f} does not commute")
        return out

    def is_valid(self) -> bool:
        return not self.violations()


def find_natural_transformation(F: FinFunctor, G: FinFunctor) -> Optional[NatTrans]:
    """Some natural transformation F => G, by backtracking over components."""
    A, E = F.domain, F.codomain
    objs = list(A.objects)
    comps: Dict[str, str] = {}

    def ok(x):
        for f in A.morphisms:
            s, t = A.ends(f)
            if x not in (s, t) or s not in comps or t not in comps:
                continue
            if E.compose(comps[t], F.morphism_map[f]) != E.compose(G.morphism_map[f], comps[s]):
                return False
        return True

    def rec(k):
        if k == len(objs):
            return True
        x = objs[k]
        for a in E.hom(F.object_map[x], G.object_map[x]):
            comps[x] = a
            if ok(x) and rec(k + 1):
                return True
            del comps[x]
        return False

    return NatTrans(F, G, dict(comps)) if rec(0) else None


def functors(C: FinCat, D: FinCat) -> Iterator[FinFunctor]:
    """All functors C -> D, in lexicographic order of their morphism images."""
    order = [m for m in C.morphisms if not C.is_identity(m)]
    for omap in itertools.product(D.objects, repeat=len(C.objects)):
        obj = dict(zip(C.objects, omap))
        mmap = {C.identity(x): D.identity(obj[x]) for x in C.objects}
        yield from _extend_functor(C, D, obj, mmap, order, 0)


def _extend_functor(C, D, obj, mmap, order, k):
    if k == len(order):
        yield FinFunctor(C, D, dict(obj), dict(mmap))
        return
    f = order[k]
    s, t = C.ends(f)
    for g in D.hom(obj[s], obj[t]):
        mmap[f] = g
        if _consistent(C, D, mmap, f):
            yield from _extend_functor(C, D, obj, mmap, order, k + 1)
        del mmap[f]


def _consistent(C, D, mmap, f):
    # check all composites whose three entries are now assigned and involve f
    for (a, b), h in C.composition_table.items():
        if f not in (a, b, h):
            continue
        if a in mmap and b in mmap and h in mmap:
            if D.compose(mmap[a], mmap[b]) != mmap[h]:
                return False
    return True


# -- oracles ---------------------------------------------------------------

def core(C: FinCat) -> FinCat:
    """Maximal subgroupoid."""
    return C.subcategory(C.invertibles())


def is_gaunt(C: FinCat) -> bool:
    return all(C.is_identity(m) for m in C.invertibles())


def nonidentity_isomorphisms(C: FinCat) -> List[str]:
    return [m for m in C.invertibles() if not C.is_identity(m)]


@dataclass
class EquivalenceReport:
    equivalence: bool
    witness: Optional[dict] = None

    def __bool__(self):
        return self.equivalence


def is_equivalence(F: FinFunctor) -> EquivalenceReport:
    """Fully faithful and essentially surjective, decided exhaustively."""
    D, E = F.domain, F.codomain
    for x in D.objects:
        for y in D.objects:
            src = D.hom(x, y)
            tgt = E.hom(F.object_map[x], F.object_map[y])
            images = [F.morphism_map[f] for f in src]
            if len(set(images)) != len(images):
                return EquivalenceReport(False, {"kind": "not-faithful", "hom": [x, y]})
            if set(images) != set(tgt):
                return EquivalenceReport(False, {"kind": "not-full", "hom": [x, y]})
    image = set(F.object_map.values())
    for z in E.objects:
        if z in image:
            continue
        if not any(
            E.is_invertible(m) for w in sorted(image) for m in E.hom(w, z)
        ):
            return EquivalenceReport(False, {"kind": "not-essentially-surjective", "object": z})
    return EquivalenceReport(True)


def find_isomorphism(C: FinCat, D: FinCat) -> Optional[FinFunctor]:
    """An isomorphism of categories C -> D, if one exists (exhaustive search)."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    for F in functors(C, D):
        if len(set(F.object_map.values())) == len(C.objects) and len(set(F.morphism_map.values())) == len(C.morphisms):
            return F
    return None


def connected_components(C: FinCat) -> List[List[str]]:
    adj = {x: set() for x in C.objects}
    for m in C.morphisms:
        s, t = C.ends(m)
        adj[s].add(t)
        adj[t].add(s)
    seen, comps = set(), []
    for x in C.objects:
        if x in seen:
            continue
        comp, queue = [], deque([x])
        seen.add(x)
        while queue:
            y = queue.popleft()
            comp.append(y)
            for z in sorted(adj[y]):
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        comps.append(sorted(comp))
    return comps


@dataclass
class Presentation:
    """Group presentation; relators are words of (generator, ±1) letters."""

    basepoint: str
    objects: List[str]
    generators: List[str]
    relators: List[Tuple[Tuple[str, int], ...]] = field(default_factory=list)

    def to_dict(self):
        return {
            "basepoint": self.basepoint,
            "objects": list(self.objects),
            "generators": list(self.generators),
            "relators": [[[g, e] for g, e in r] for r in self.relators],
        }


def fundamental_groupoid(C: FinCat) -> List[Presentation]:
    """π₀ and a presentation of π₁ of the nerve, one entry per component.

    Basepoint is the least object of each component; the spanning tree is
    grown breadth-first with lexicographic tie-breaking.
    """
    result = []
    for comp in connected_components(C):
        base = comp[0]
        members = set(comp)
        tree = set()
        seen = {base}
        queue = deque([base])
        while queue:
            x = queue.popleft()
            for m in C.morphisms:
                if C.is_identity(m):
                    continue
                s, t = C.ends(m)
                if s == x and t not in seen:
                    other = t
                elif t == x and s not in seen:
                    other = s
                else:
                    continue
                tree.add(m)
                seen.add(other)
                queue.append(other)
        gens = [m for m in C.morphisms if C.ends(m)[0] in members and not C.is_identity(m) and m not in tree]
        gset = set(gens)
        relators = []
        for (g, f), h in sorted(C.composition_table.items()):
            if C.ends(f)[0] not in members or C.is_identity(g) or C.is_identity(f):
                continue
            word = [(x, 1) for x in (f, g) if x in gset]
            if h in gset:
                word.append((h, -1))
            word = tuple(_free_reduce(word))
            if word and word not in relators:
                relators.append(word)
        result.append(Presentation(base, comp, gens, relators))
    return result


def _free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return out


def group_order(p: Presentation, max_cosets: int = 10000) -> Optional[int]:
    """Order of the presented group by coset enumeration (None if it does not close).

    Plain HLT enumeration over the trivial subgroup with coincidence handling.
    """
    gens = list(p.generators)
    if not gens:
        return 1
    letters = [(g, 1) for g in gens] + [(g, -1) for g in gens]
    inv = {(g, e): (g, -e) for g, e in letters}
    table: List[Dict] = [dict()]
    parent = [0]

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def merge(a, b):
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            parent[b] = a
            moved, table[b] = table[b], {}
            for x, tgt in moved.items():
                if x in table[a]:
                    queue.append((table[a][x], tgt))
                else:
                    table[a][x] = tgt

    def define(c, x):
        if len(table) >= max_cosets:
            raise OverflowError
        d = len(table)
        table.append({inv[x]: c})
        parent.append(d)
        table[c][x] = d
        return d

    def scan_and_fill(c, rel):
        cur = c
        for x in rel:
            cur = find(cur)
            nxt = table[cur].get(x)
            if nxt is None:
                nxt = define(cur, x)
            cur = find(nxt)
        if find(cur) != find(c):
            merge(cur, c)

    rels = [tuple(r) for r in p.relators]
    try:
        c = 0
        while c < len(table):
            if find(c) == c:
                for rel in rels:
                    if find(c) != c:
                        break
                    scan_and_fill(c, rel)
                if find(c) == c:
                    for x in letters:
                        if find(c) != c:
                            break
                        if x not in table[c]:
                            define(c, x)
            c += 1
    except OverflowError:
        return None
    return sum(1 for i in range(len(table)) if find(i) == i)


# -- functor categories ----------------------------------------------------

def chains(C: FinCat, n: int) -> List[Tuple[str, ...]]:
    """Length-n composable chains (first arrow first); objects when n == 0."""
    if n == 0:
        return [(x,) for x in C.objects]
    out = [(m,) for m in C.morphisms]
    for _ in range(n - 1):
        out = [ch + (g,) for ch in out for g in C.out_of(C.target(ch[-1]))]
    charge(len(out))
    return sorted(out)


def chain_vertices(C: FinCat, chain: Tuple[str, ...], n: int) -> Tuple[str, ...]:
    if n == 0:
        return chain
    return (C.source(chain[0]),) + tuple(C.target(m) for m in chain)


def chain_id(chain: Tuple[str, ...]) -> str:
    return ",".join(chain)


def rel_functor_category(R, n: int) -> FinCat:
    """Fun([n], C)^W: chains of length n, W-componentwise natural transformations."""
    C, W = R.base, R.weq
    if n == 0:
        return C.subcategory(W)
    objs = chains(C, n)
    ids = {ch: chain_id(ch) for ch in objs}
    verts = {ch: chain_vertices(C, ch, n) for ch in objs}
    mor, comps = {}, {}
    for F in objs:
        for G in objs:
            choices = [[w for w in C.hom(a, b) if w in W] for a, b in zip(verts[F], verts[G])]
            for comp in itertools.product(*choices):
                if all(
                    C.compose(comp[p + 1], F[p]) == C.compose(G[p], comp[p]) for p in range(n)
                ):
                    mid = f"{ids[F]}=>{ids[G]}:{'|'.join(comp)}"
                    mor[mid] = (ids[F], ids[G])
                    comps[mid] = comp
    charge(len(mor))
    by_src: Dict[str, List[str]] = {}
    for m, (s, _) in mor.items():
        by_src.setdefault(s, []).append(m)
    index = {(mor[m][0], mor[m][1], comps[m]): m for m in mor}
    table = {}
    for f, (s, t) in mor.items():
        for g in by_src.get(t, []):
            u = mor[g][1]
            c = tuple(C.compose(b, a) for a, b in zip(comps[f], comps[g]))
            table[(g, f)] = index[(s, u, c)]
    identities = {ids[F]: index[(ids[F], ids[F], tuple(C.identity(v) for v in verts[F]))] for F in objs}
    cat = FinCat([ids[F] for F in objs], mor, table, identities, validate=False)
    cat.components = comps  # type: ignore[attr-defined]
    cat.chain_of = {ids[F]: F for F in objs}  # type: ignore[attr-defined]
    return cat


def fiber_product(F: FinFunctor, G: FinFunctor) -> FinCat:
    """Strict pullback A ×_C B of F: A -> C <- B: G. Identifiers are 'a|b'."""
    A, B = F.domain, G.domain
    objs = [f"{a}|{b}" for a in A.objects for b in B.objects if F.object_map[a] == G.object_map[b]]
    mor = {}
    for f in A.morphisms:
        for g in B.morphisms:
            if F.morphism_map[f] == G.morphism_map[g]:
                mor[f"{f}|{g}"] = (f"{A.source(f)}|{B.source(g)}", f"{A.target(f)}|{B.target(g)}")
    pairs = {}
    for m in mor:
        f, g = m.split("|")
        pairs[m] = (f, g)
    comp = {}
    for m1, (f1, g1) in pairs.items():
        for m2, (f2, g2) in pairs.items():
            if mor[m2][0] == mor[m1][1]:
                comp[(m2, m1)] = f"{A.compose(f2, f1)}|{B.compose(g2, g1)}"
    ids = {}
    for o in objs:
        a, b = o.split("|")
        ids[o] = f"{A.identity(a)}|{B.identity(b)}"
    return FinCat(objs, mor, comp, ids, validate=False)


# -- standard examples -------------------------------------------------------

def from_preorder(elements: Sequence[str], leq) -> FinCat:
    """Thin category of a preorder; morphisms are named 'x->y'."""
    mor = {f"{x}->{y}": (x, y) for x in elements for y in elements if leq(x, y)}
    comp = {}
    for f, (x, y) in mor.items():
        for g, (y2, z) in mor.items():
            if y2 == y:
                comp[(g, f)] = f"{x}->{z}"
    return FinCat(elements, mor, comp, {x: f"{x}->{x}" for x in elements})


def interval(n: int) -> FinCat:
    """The poset [n] = {0 < 1 < ... < n}."""
    els = [str(i) for i in range(n + 1)]
    return from_preorder(els, lambda a, b: int(a) <= int(b))


def discrete(k: int) -> FinCat:
    return from_preorder([str(i) for i in range(k)], lambda a, b: a == b)


def codiscrete(k: int) -> FinCat:
    """Codiscrete groupoid on k objects (unique arrow between any two)."""
    return from_preorder([str(i) for i in range(k)], lambda a, b: True)


def walking_isomorphism() -> FinCat:
    mor = {"id_a": ("a", "a"), "id_b": ("b", "b"), "f": ("a", "b"), "f_inv": ("b", "a")}
    comp = {
        ("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
        ("f", "id_a"): "f", ("id_b", "f"): "f",
        ("f_inv", "id_b"): "f_inv", ("id_a", "f_inv"): "f_inv",
        ("f_inv", "f"): "id_a", ("f", "f_inv"): "id_b",
    }
    return FinCat(["a", "b"], mor, comp, {"a": "id_a", "b": "id_b"})


def cyclic_group(k: int) -> FinCat:
    """Z/k as a one-object category; 'e' is the unit, 'g', 'g2', ... powers."""
    names = ["e"] + ["g" if i == 1 else f"g{i}" for i in range(1, k)]
    mor = {nm: ("*", "*") for nm in names}
    comp = {(names[i], names[j]): names[(i + j) % k] for i in range(k) for j in range(k)}
    return FinCat(["*"], mor, comp, {"*": "e"})


def walking_retract() -> FinCat:
    """f: 0 -> 1, g: 1 -> 0 with g∘f = id, e = f∘g idempotent."""
    mor = {"id0": ("0", "0"), "id1": ("1", "1"), "f": ("0", "1"), "g": ("1", "0"), "e": ("1", "1")}
    comp = {
        ("id0", "id0"): "id0", ("id1", "id1"): "id1",
        ("f", "id0"): "f", ("id1", "f"): "f", ("e", "f"): "f",
        ("g", "id1"): "g", ("id0", "g"): "g", ("g", "e"): "g",
        ("e", "id1"): "e", ("id1", "e"): "e", ("e", "e"): "e",
        ("g", "f"): "id0", ("f", "g"): "e",
    }
    return FinCat(["0", "1"], mor, comp, {"0": "id0", "1": "id1"})


def parallel_pair() -> FinCat:
    """Two parallel arrows a, b: 0 -> 1."""
    mor = {"id0": ("0", "0"), "id1": ("1", "1"), "a": ("0", "1"), "b": ("0", "1")}
    comp = {
        ("id0", "id0"): "id0", ("id1", "id1"): "id1",
        ("a", "id0"): "a", ("id1", "a"): "a", ("b", "id0"): "b", ("id1", "b"): "b",
    }
    return FinCat(["0", "1"], mor, comp, {"0": "id0", "1": "id1"})


def transformation_category(sets: Mapping[str, int], generators: Mapping[str, Tuple[str, str, Tuple[int, ...]]]) -> FinCat:
    """Concrete category generated by functions between small finite sets.

    ``sets`` maps object -> size; each generator is (src, tgt, values).
    Morphisms are all composites, identified when equal as functions.
    """
    funcs: Dict[Tuple[str, str, Tuple[int, ...]], None] = {}
    for x, k in sets.items():
        funcs[(x, x, tuple(range(k)))] = None
    frontier = list(generators.values())
    for g in frontier:
        funcs[tuple(g)] = None
    changed = True
    while changed:
        changed = False
        current = list(funcs)
        for (s1, t1, v1) in current:
            for (s2, t2, v2) in current:
                if t1 == s2:
                    h = (s1, t2, tuple(v2[i] for i in v1))
                    if h not in funcs:
                        funcs[h] = None
                        changed = True
    names = {}
    for s, t, v in sorted(funcs):
        names[(s, t, v)] = f"{s}>{t}:{''.join(map(str, v))}"
    mor = {nm: (s, t) for (s, t, v), nm in names.items()}
    comp = {}
    for (s1, t1, v1), f in names.items():
        for (s2, t2, v2), g in names.items():
            if t1 == s2:
                comp[(g, f)] = names[(s1, t2, tuple(v2[i] for i in v1))]
    ids = {x: names[(x, x, tuple(range(k)))] for x, k in sets.items()}
    return FinCat(list(sets), mor, comp, ids)
