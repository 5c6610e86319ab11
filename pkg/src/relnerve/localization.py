"""Localization C[W⁻¹] of finite relative categories, saturation, and Barwick–Kan checks.

Everything here is 1-categorical.  Localized morphisms carry a representing
zigzag word: a tuple of letters ``(name, +1)`` for a morphism of C and
``(name, -1)`` for the formal inverse of a marked one, read left to right
in order of application.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ._limits import charge
from .fincat import FinCat, FinFunctor, functors, is_equivalence
from .relcat import RelCat

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]


@dataclass
class LocResult:
    """``result`` is None exactly when the certificate is an inconclusive bounded rewrite."""

    source: RelCat
    result: Optional[FinCat]
    functor: Optional[FinFunctor]
    certificate: dict
    words: Dict[str, Word] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.result is not None

    def to_dict(self) -> dict:
        from .io import category_to_dict

        out = {"certificate": self.certificate}
        if self.result is not None:
            out["result"] = category_to_dict(self.result)
            out["generator_images"] = {f: self.functor.morphism_map[f] for f in self.source.base.morphisms}
            out["words"] = {m: [[n, s] for n, s in w] for m, w in sorted(self.words.items())}
        return out


def word_name(word: Word) -> str:
    return "~" + ".".join(n if s > 0 else f"{n}^-1" for n, s in word) if word else "~"


# -- calculus of fractions -------------------------------------------------------

def detect_fractions(R: RelCat) -> Tuple[bool, Optional[dict]]:
    """Right calculus of fractions (morphisms f∘w⁻¹): Ore squares and W-cancellation."""
    C, W = R.base, R.weq
    for w in sorted(W):
        z2, y = C.ends(w)
        for f in C.into(y):
            z1 = C.source(f)
            if not _ore_square(C, W, f, w):
                return False, {"condition": "ore", "cospan": [f, w], "objects": [z1, y, z2]}
    for w in sorted(W):
        b = C.source(w)
        for a in C.objects:
            homs = C.hom(a, b)
            for f in homs:
                for g in homs:
                    if f < g and C.compose(w, f) == C.compose(w, g):
                        if not any(
                            C.compose(f, u) == C.compose(g, u) for u in sorted(W) if C.target(u) == a
                        ):
                            return False, {"condition": "cancellation", "pair": [f, g], "weq": w}
    return True, None


def _ore_square(C: FinCat, W, f: str, w: str) -> Optional[Tuple[str, str]]:
    """(w', g) with w' ∈ W and f∘w' = w∘g, if any."""
    z1, z2 = C.source(f), C.source(w)
    for w2 in sorted(W):
        if C.target(w2) != z1:
            continue
        for g in C.hom(C.source(w2), z2):
            if C.compose(f, w2) == C.compose(w, g):
                return w2, g
    return None


def _localize_fractions(R: RelCat) -> LocResult:
    C, W = R.base, R.weq
    spans: Dict[Tuple[str, str], List[Tuple[str, str]]] = {}
    for w in sorted(W):
        z, x = C.ends(w)
        for f in C.out_of(z):
            spans.setdefault((x, C.target(f)), []).append((w, f))
    charge(sum(len(v) for v in spans.values()))
    # (w, f) ~ (w', f') when some u, u' give w∘u = w'∘u' ∈ W and f∘u = f'∘u'
    parent: Dict[Tuple[str, str], Tuple[str, str]] = {}

    def find(s):
        while parent.setdefault(s, s) != s:
            s = parent[s]
        return s

    for key, lst in spans.items():
        for a in lst:
            find(a)
        for i, (w1, f1) in enumerate(lst):
            for (w2, f2) in lst[i + 1:]:
                if find((w1, f1)) == find((w2, f2)):
                    continue
                z1, z2 = C.source(w1), C.source(w2)
                hit = False
                for v in C.objects:
                    for u1 in C.hom(v, z1):
                        wu = C.compose(w1, u1)
                        if wu not in W:
                            continue
                        fu = C.compose(f1, u1)
                        for u2 in C.hom(v, z2):
                            if C.compose(w2, u2) == wu and C.compose(f2, u2) == fu:
                                hit = True
                                break
                        if hit:
                            break
                    if hit:
                        break
                if hit:
                    r1, r2 = find((w1, f1)), find((w2, f2))
                    parent[max(r1, r2)] = min(r1, r2)
    # name classes: least C-morphism (id, f) in the class, else the least span
    classes: Dict[Tuple[str, str], List[Tuple[str, str]]] = {}
    for lst in spans.values():
        for s in lst:
            classes.setdefault(find(s), []).append(s)
    name_of: Dict[Tuple[str, str], str] = {}
    words: Dict[str, Word] = {}
    ends: Dict[str, Tuple[str, str]] = {}
    for root, members in classes.items():
        plain = sorted(f for w, f in members if C.is_identity(w))
        rep = min(members, key=lambda s: (not C.is_identity(s[0]), s))
        word = _span_word(C, rep)
        name = plain[0] if plain else word_name(word)
        name_of[root] = name
        if plain:
            words[name] = () if C.is_identity(plain[0]) else ((plain[0], 1),)
        else:
            words[name] = word
        ends[name] = (C.target(rep[0]), C.target(rep[1]))
    reps = {name_of[r]: min(m, key=lambda s: (not C.is_identity(s[0]), s)) for r, m in classes.items()}
    comp = {}
    for n1, (w1, f1) in reps.items():
        for n2, (w2, f2) in reps.items():
            if ends[n1][1] != ends[n2][0]:
                continue
            sq = _ore_square(C, W, f1, w2)
            if sq is None:
                raise ValueError("Ore condition failed during composition")
            w3, g = sq
            comp[(n2, n1)] = name_of[find((C.compose(w1, w3), C.compose(f2, g)))]
    ids = {x: name_of[find((C.identity(x), C.identity(x)))] for x in C.objects}
    L = FinCat(C.objects, ends, comp, ids)
    F = FinFunctor(C, L, {x: x for x in C.objects}, {f: name_of[find((C.identity(C.source(f)), f))] for f in C.morphisms})
    return LocResult(R, L, F, {"kind": "fractions"}, words)


def _span_word(C: FinCat, span: Tuple[str, str]) -> Word:
    w, f = span
    out = []
    if not C.is_identity(w):
        out.append((w, -1))
    if not C.is_identity(f):
        out.append((f, 1))
    return tuple(out)


# -- bounded rewriting (coset enumeration of representables) -------------------

class _Enumerator:
    """Right action of C[W⁻¹] on morphisms out of one object, by coset enumeration.

    States are typed by their target object.  Relations are scanned from
    every live state in creation order, defining entries on the way (HLT);
    no state deeper than ``bound`` letters is ever created.
    """

    def __init__(self, C: FinCat, W, start: str, bound: int):
        self.C, self.bound = C, bound
        self.letters: Dict[str, List[Letter]] = {x: [] for x in C.objects}
        self.letter_target: Dict[Letter, str] = {}
        for f in C.morphisms:
            if C.is_identity(f):
                continue
            self.letters[C.source(f)].append((f, 1))
            self.letter_target[(f, 1)] = C.target(f)
        for w in sorted(W):
            if C.is_identity(w):
                continue
            self.letters[C.target(w)].append((w, -1))
            self.letter_target[(w, -1)] = C.source(w)
        self.relations: Dict[str, List[Tuple[Word, Word]]] = {x: [] for x in C.objects}
        for f in C.morphisms:
            if C.is_identity(f):
                continue
            for g in C.out_of(C.target(f)):
                if C.is_identity(g):
                    continue
                h = C.compose(g, f)
                rhs = () if C.is_identity(h) else ((h, 1),)
                self.relations[C.source(f)].append((((f, 1), (g, 1)), rhs))
        for w in sorted(W):
            if C.is_identity(w):
                continue
            self.relations[C.source(w)].append((((w, 1), (w, -1)), ()))
            self.relations[C.target(w)].append((((w, -1), (w, 1)), ()))
        self.obj: List[str] = [start]
        self.depth: List[int] = [0]
        self.table: List[Dict[Letter, int]] = [{}]
        self.parent: List[int] = [0]
        self.overflow = False

    def find(self, s: int) -> int:
        while self.parent[s] != s:
            self.parent[s] = self.parent[self.parent[s]]
            s = self.parent[s]
        return s

    def get(self, s: int, a: Letter) -> Optional[int]:
        t = self.table[s].get(a)
        return None if t is None else self.find(t)

    def define(self, s: int, a: Letter) -> Optional[int]:
        if self.depth[s] + 1 > self.bound:
            self.overflow = True
            return None
        t = len(self.obj)
        charge(1)
        self.obj.append(self.letter_target[a])
        self.depth.append(self.depth[s] + 1)
        self.table.append({})
        self.parent.append(t)
        self.table[s][a] = t
        return t

    def merge(self, a: int, b: int):
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.parent[b] = a
            self.depth[a] = min(self.depth[a], self.depth[b])
            for letter, t in self.table[b].items():
                u = self.table[a].get(letter)
                if u is None:
                    self.table[a][letter] = t
                else:
                    queue.append((u, t))
            self.table[b] = {}

    def trace(self, s: int, word: Word, fill: bool) -> Optional[int]:
        for a in word:
            t = self.get(s, a)
            if t is None:
                if not fill:
                    return None
                t = self.define(s, a)
                if t is None:
                    return None
            s = t
        return s

    def run(self) -> bool:
        k = 0
        while k < len(self.obj):
            if self.find(k) == k:
                for a in self.letters[self.obj[k]]:
                    if self.find(k) != k:
                        break
                    if self.get(k, a) is None:
                        self.define(k, a)
                for u, v in self.relations[self.obj[k]]:
                    if self.find(k) != k:
                        break
                    e1 = self.trace(k, u, True)
                    e2 = self.trace(k, v, True)
                    if e1 is not None and e2 is not None and e1 != e2:
                        self.merge(e1, e2)
            k += 1
        return self.closed()

    def closed(self) -> bool:
        for s in self.live():
            for a in self.letters[self.obj[s]]:
                if self.get(s, a) is None:
                    return False
            for u, v in self.relations[self.obj[s]]:
                e1, e2 = self.trace(s, u, False), self.trace(s, v, False)
                if e1 is None or e1 != e2:
                    return False
        return True

    def live(self) -> List[int]:
        return [s for s in range(len(self.obj)) if self.find(s) == s]

    def words(self) -> Dict[int, Word]:
        """Shortest word to every live state (letters in canonical order)."""
        out = {0: ()}
        queue = deque([0])
        while queue:
            s = queue.popleft()
            for a in sorted(self.letters[self.obj[s]], key=_letter_key):
                t = self.get(s, a)
                if t is not None and t not in out:
                    out[t] = out[s] + (a,)
                    queue.append(t)
        return out


def _letter_key(a: Letter):
    return (a[1] < 0, a[0])


def _localize_rewrite(R: RelCat, bound: Optional[int]) -> LocResult:
    C, W = R.base, R.weq
    L = 2 * len(C.morphisms) if bound is None else bound
    cert = {"kind": "bounded_rewrite", "bound": L}
    enums = {}
    for x in C.objects:
        E = _Enumerator(C, W, x, L)
        if not E.run():
            cert["status"] = "inconclusive"
            cert["stuck_at"] = x
            return LocResult(R, None, None, cert)
        enums[x] = E
    cert["status"] = "complete"
    names: Dict[Tuple[str, int], str] = {}
    words: Dict[str, Word] = {}
    ends: Dict[str, Tuple[str, str]] = {}
    for x, E in enums.items():
        ws = E.words()
        plain: Dict[int, List[str]] = {}
        for f in C.out_of(x):
            s = 0 if C.is_identity(f) else E.get(0, (f, 1))
            plain.setdefault(s, []).append(f)
        for s in sorted(ws):
            if s in plain:
                name = min(plain[s])
                words[name] = () if C.is_identity(name) else ((name, 1),)
            else:
                name = word_name(ws[s])
                words[name] = ws[s]
            names[(x, s)] = name
            ends[name] = (x, E.obj[s])
    comp = {}
    for (x, s), n1 in names.items():
        y = enums[x].obj[s]
        for (y2, t), n2 in names.items():
            if y2 != y:
                continue
            u = enums[x].trace(s, words[n2], False)
            comp[(n2, n1)] = names[(x, u)]
    ids = {x: names[(x, 0)] for x in C.objects}
    Lc = FinCat(C.objects, ends, comp, ids)
    fmap = {f: names[(C.source(f), 0 if C.is_identity(f) else enums[C.source(f)].get(0, (f, 1)))] for f in C.morphisms}
    F = FinFunctor(C, Lc, {x: x for x in C.objects}, fmap)
    return LocResult(R, Lc, F, cert, words)


def localize(R: RelCat, strategy: str = "auto", bound: Optional[int] = None) -> LocResult:
    """strategy: "auto" (fractions when available), "fractions" or "rewrite"."""
    if strategy not in ("auto", "fractions", "rewrite"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "fractions":
        ok, bad = detect_fractions(R)
        if not ok:
            raise ValueError(f"no calculus of fractions: {bad}")
        return _localize_fractions(R)
    if strategy == "auto" and detect_fractions(R)[0]:
        return _localize_fractions(R)
    return _localize_rewrite(R, bound)


# -- consumers ----------------------------------------------------------------------

def evaluate_word(loc: LocResult, start: str, word: Word) -> str:
    """The morphism of loc.result named by a zigzag word starting at ``start``."""
    L, F = loc.result, loc.functor
    m = L.identity(start)
    for name, sign in word:
        img = F.morphism_map[name]
        if sign < 0:
            img = L.inverse(img)
            if img is None:
                raise ValueError(f"{name} is not inverted")
        m = L.compose(img, m)
    return m


def word_comparison(a: LocResult, b: LocResult) -> Optional[FinFunctor]:
    """Identity-on-objects functor a.result -> b.result sending each word to itself, if it is an isomorphism."""
    A, B = a.result, b.result
    mmap = {m: evaluate_word(b, A.source(m), a.words[m]) for m in A.morphisms}
    F = FinFunctor(A, B, {x: x for x in A.objects}, mmap)
    if F.violations() or len(set(mmap.values())) != len(B.morphisms) or len(A.morphisms) != len(B.morphisms):
        return None
    return F


def inverts_weq(loc: LocResult) -> bool:
    return all(loc.result.is_invertible(loc.functor.morphism_map[w]) for w in loc.source.weq)


@dataclass
class SaturationReport:
    verdict: str
    witnesses: List[str] = field(default_factory=list)

    def to_dict(self):
        return {"verdict": self.verdict, "witnesses": self.witnesses}


def is_saturated(R: RelCat, bound: Optional[int] = None) -> SaturationReport:
    """W versus the morphisms inverted by the localization; witnesses are the extra ones."""
    loc = localize(R, "auto", bound)
    if not loc.complete:
        return SaturationReport("unknown")
    inverted = {f for f in R.base.morphisms if loc.result.is_invertible(loc.functor.morphism_map[f])}
    extra = sorted(inverted - R.weq)
    return SaturationReport("no" if extra else "yes", extra)


def induced_functor(F: FinFunctor, L1: LocResult, L2: LocResult) -> FinFunctor:
    """The functor L1.result -> L2.result induced by a relative functor F."""
    A, B = L1.result, L2.result
    mmap = {}
    for m in A.morphisms:
        x = F.object_map[A.source(m)]
        img = B.identity(x)
        for name, sign in L1.words[m]:
            g = L2.functor.morphism_map[F.morphism_map[name]]
            if sign < 0:
                g = B.inverse(g)
            img = B.compose(g, img)
        mmap[m] = img
    return FinFunctor(A, B, dict(F.object_map), mmap)


@dataclass
class BKReport:
    verdict: str
    witness: Optional[dict] = None

    def to_dict(self):
        return {"verdict": self.verdict, "witness": self.witness}


def bk_weq_check(F: FinFunctor, R1: RelCat, R2: RelCat, bound: Optional[int] = None) -> BKReport:
    """Does F induce an equivalence of (1-categorical) localizations?"""
    bad = [w for w in sorted(R1.weq) if F.morphism_map[w] not in R2.weq]
    if bad:
        raise ValueError(f"not marking-preserving: {bad[0]}")
    L1, L2 = localize(R1, "auto", bound), localize(R2, "auto", bound)
    if not (L1.complete and L2.complete):
        return BKReport("unknown")
    rep = is_equivalence(induced_functor(F, L1, L2))
    return BKReport("yes" if rep else "no", rep.witness)


def universal_property_violations(loc: LocResult, targets: Iterable[FinCat]) -> List[dict]:
    """For each target D: functors C -> D inverting W must factor uniquely through loc.

    Factorizations are counted by enumerating all functors loc.result -> D.
    """
    R, L, Q = loc.source, loc.result, loc.functor
    C = R.base
    out = []
    for t, D in enumerate(targets):
        inverting = {}
        for G in functors(C, D):
            if all(D.is_invertible(G.morphism_map[w]) for w in R.weq):
                inverting[_key(G)] = 0
        for H in functors(L, D):
            composite = Q.then(H)
            key = _key(composite)
            if key not in inverting:
                out.append({"target": t, "problem": "composite does not invert W"})
                continue
            inverting[key] += 1
        for key, count in inverting.items():
            if count != 1:
                out.append({"target": t, "problem": "no factorization" if count == 0 else "non-unique", "count": count})
                break
    return out


def _key(G: FinFunctor):
    return tuple(sorted(G.object_map.items())), tuple(sorted(G.morphism_map.items()))
