"""Truncated bisimplicial sets, the classification diagram, and t_!, t^!, diag*, pr*, i*.

Coordinates are ``(n, i)``: ``n`` is the direction of ``[n]`` (the nerve
direction) and ``i`` that of ``[i]_W`` (the marked, groupoidal direction).
"""
from __future__ import annotations

import itertools
from typing import Callable, Dict, List, NamedTuple, Sequence, Tuple

from ._limits import charge
from .fincat import FinCat, FinFunctor, find_natural_transformation, rel_functor_category
from .relcat import RelCat
from .simplicial import DeltaMap, TruncSSet, _chain_act, monotone_maps


class TruncBiSSet:
    """Bisimplicial set known on ``n <= d1``, ``i <= d2``.

    ``hfaces[(n, i)][k]`` : Y_{n,i} -> Y_{n-1,i} and ``hdegens[(n, i)][k]`` :
    Y_{n,i} -> Y_{n+1,i}; ``vfaces``/``vdegens`` likewise in ``i``.
    """

    def __init__(self, levels, hfaces, hdegens, vfaces, vdegens, meta=None):
        self.levels = {key: tuple(v) for key, v in levels.items()}
        self.d1 = max(n for n, _ in self.levels)
        self.d2 = max(i for _, i in self.levels)
        self.hfaces, self.hdegens = hfaces, hdegens
        self.vfaces, self.vdegens = vfaces, vdegens
        self.meta = dict(meta or {})
        self._index = {key: {x: j for j, x in enumerate(v)} for key, v in self.levels.items()}

    @classmethod
    def from_action(cls, levels, act: Callable, meta=None):
        """``act(y, θ, ψ)`` applies (θ: [n']->[n], ψ: [i']->[i]) to y ∈ Y_{n,i}."""

        def elementary(y, n, i, axis, kind, k):
            op = DeltaMap.coface if kind == "d" else DeltaMap.codegeneracy
            if axis == "h":
                return act(y, op(n, k), DeltaMap.identity(i))
            return act(y, DeltaMap.identity(n), op(i, k))

        return cls.from_elementary(levels, elementary, meta)

    @classmethod
    def from_elementary(cls, levels, op: Callable, meta=None):
        """``op(y, n, i, axis, kind, k)`` applies one face ("d") or degeneracy ("s")
        in axis "h" (first coordinate) or "v" (second) to y ∈ Y_{n,i}."""
        levels = {key: tuple(v) for key, v in levels.items()}
        index = {key: {x: j for j, x in enumerate(v)} for key, v in levels.items()}
        d1 = max(n for n, _ in levels)
        d2 = max(i for _, i in levels)
        hf, hd, vf, vd = {}, {}, {}, {}
        for (n, i), ys in levels.items():
            if n >= 1:
                tgt = index[(n - 1, i)]
                hf[(n, i)] = {k: tuple(tgt[op(y, n, i, "h", "d", k)] for y in ys) for k in range(n + 1)}
            if n < d1:
                tgt = index[(n + 1, i)]
                hd[(n, i)] = {k: tuple(tgt[op(y, n, i, "h", "s", k)] for y in ys) for k in range(n + 1)}
            if i >= 1:
                tgt = index[(n, i - 1)]
                vf[(n, i)] = {k: tuple(tgt[op(y, n, i, "v", "d", k)] for y in ys) for k in range(i + 1)}
            if i < d2:
                tgt = index[(n, i + 1)]
                vd[(n, i)] = {k: tuple(tgt[op(y, n, i, "v", "s", k)] for y in ys) for k in range(i + 1)}
        return cls(levels, hf, hd, vf, vd, meta)

    @property
    def truncations(self) -> Tuple[int, int]:
        return self.d1, self.d2

    def size(self, n: int, i: int) -> int:
        return len(self.levels[(n, i)])

    def size_matrix(self) -> List[List[int]]:
        return [[self.size(n, i) for i in range(self.d2 + 1)] for n in range(self.d1 + 1)]

    def index(self, n, i, label) -> int:
        return self._index[(n, i)][label]

    def row(self, i: int) -> TruncSSet:
        """Fix the second coordinate; simplicial in n."""
        return TruncSSet(
            [self.levels[(n, i)] for n in range(self.d1 + 1)],
            {n: self.hfaces[(n, i)] for n in range(1, self.d1 + 1)},
            {n: self.hdegens[(n, i)] for n in range(self.d1)},
        )

    def column(self, n: int) -> TruncSSet:
        """Fix the first coordinate; simplicial in i."""
        return TruncSSet(
            [self.levels[(n, i)] for i in range(self.d2 + 1)],
            {i: self.vfaces[(n, i)] for i in range(1, self.d2 + 1)},
            {i: self.vdegens[(n, i)] for i in range(self.d2)},
        )

    def act(self, theta: DeltaMap, psi: DeltaMap, idx: int) -> int:
        """Y(θ, ψ) on the element ``idx`` of Y_{θ.n, ψ.n}."""
        n, i = theta.n, psi.n
        f1, s1 = theta.factorization()
        f2, s2 = psi.factorization()
        for k in f1:
            idx = self.hfaces[(n, i)][k][idx]
            n -= 1
        for k in s1:
            idx = self.hdegens[(n, i)][k][idx]
            n += 1
        for k in f2:
            idx = self.vfaces[(n, i)][k][idx]
            i -= 1
        for k in s2:
            idx = self.vdegens[(n, i)][k][idx]
            i += 1
        return idx

    def _generators(self):
        """(name, source key, target key, table) for every elementary operator."""
        for (n, i) in sorted(self.levels):
            for k, t in self.hfaces.get((n, i), {}).items():
                yield f"h.d{k}", (n, i), (n - 1, i), t
            for k, t in self.hdegens.get((n, i), {}).items():
                yield f"h.s{k}", (n, i), (n + 1, i), t
            for k, t in self.vfaces.get((n, i), {}).items():
                yield f"v.d{k}", (n, i), (n, i - 1), t
            for k, t in self.vdegens.get((n, i), {}).items():
                yield f"v.s{k}", (n, i), (n, i + 1), t

    def check_identities(self) -> List[str]:
        out = []
        for i in range(self.d2 + 1):
            out += [f"row {i}: {v}" for v in self.row(i).check_identities()]
        for n in range(self.d1 + 1):
            out += [f"column {n}: {v}" for v in self.column(n).check_identities()]
        out += self.commutation_violations()
        return out

    def commutation_violations(self) -> List[str]:
        ops = {}
        for name, src, tgt, table in self._generators():
            ops.setdefault(src, []).append((name, tgt, table))
        out = []
        for src, lst in ops.items():
            for hname, htgt, htab in lst:
                if not hname.startswith("h"):
                    continue
                for vname, vtgt, vtab in lst:
                    if not vname.startswith("v"):
                        continue
                    corner = (htgt[0], vtgt[1])
                    if corner not in self.levels:
                        continue
                    h2 = _find_op(ops, vtgt, hname)
                    v2 = _find_op(ops, htgt, vname)
                    if h2 is None or v2 is None:
                        continue
                    for y in range(len(self.levels[src])):
                        if h2[vtab[y]] != v2[htab[y]]:
                            out.append(f"{hname} and {vname} do not commute at {src}, element {y}")
                            break
        return out

    def to_dict(self) -> dict:
        def tables(d):
            return {f"{n},{i}": {str(k): list(t) for k, t in v.items()} for (n, i), v in sorted(d.items())}

        return {
            "truncations": [self.d1, self.d2],
            "level_sizes": self.size_matrix(),
            "horizontal": {"faces": tables(self.hfaces), "degeneracies": tables(self.hdegens)},
            "vertical": {"faces": tables(self.vfaces), "degeneracies": tables(self.vdegens)},
        }

    def __repr__(self):
        return f"TruncBiSSet(sizes={self.size_matrix()})"


def _find_op(ops, key, name):
    for nm, _, table in ops.get(key, []):
        if nm == name:
            return table
    return None


def bisimplicial_map_violations(Y: TruncBiSSet, Z: TruncBiSSet, maps: Dict[Tuple[int, int], Sequence[int]]) -> List[str]:
    """Where levelwise maps Y -> Z fail to commute with the structure maps."""
    zops = {(name, src): table for name, src, _, table in Z._generators()}
    out = []
    for name, src, tgt, table in Y._generators():
        if src not in maps or tgt not in maps:
            continue
        ztab = zops.get((name, src))
        if ztab is None:
            continue
        for y in range(len(Y.levels[src])):
            if maps[tgt][table[y]] != ztab[maps[src][y]]:
                out.append(f"{name} at {src}, element {y}")
                break
    return out


def is_bisimplicial_isomorphism(Y: TruncBiSSet, Z: TruncBiSSet, maps) -> bool:
    for key, ys in Y.levels.items():
        if key not in Z.levels or sorted(maps[key]) != list(range(len(Z.levels[key]))) or len(ys) != len(Z.levels[key]):
            return False
    return not bisimplicial_map_violations(Y, Z, maps)


# -- the classification diagram ---------------------------------------------------

class Grid(NamedTuple):
    """A functor [n] × [i] -> C by its objects and generating arrows.

    ``objects[p][q]``; ``horiz[p][q]`` : (p, q) -> (p+1, q); ``vert[p][q]`` :
    (p, q) -> (p, q+1).
    """

    objects: Tuple[Tuple[str, ...], ...]
    horiz: Tuple[Tuple[str, ...], ...]
    vert: Tuple[Tuple[str, ...], ...]

    @property
    def n(self) -> int:
        return len(self.objects) - 1

    @property
    def i(self) -> int:
        return len(self.objects[0]) - 1


def grid_arrow(C: FinCat, F: Grid, a: Tuple[int, int], b: Tuple[int, int]) -> str:
    """F applied to the unique arrow a <= b of the product poset."""
    (p0, q0), (p1, q1) = a, b
    if p0 > p1 or q0 > q1:
        raise ValueError(f"{a} is not below {b}")
    path = [F.horiz[p][q0] for p in range(p0, p1)] + [F.vert[p1][q] for q in range(q0, q1)]
    return C.compose_path(path, start=F.objects[p0][q0])


def precompose_grid(C: FinCat, F: Grid, m1: int, m2: int, G: Callable[[int, int], Tuple[int, int]]) -> Grid:
    """F ∘ G for a monotone G : [m1] × [m2] -> [n] × [i]."""
    objects = tuple(tuple(F.objects[G(p, q)[0]][G(p, q)[1]] for q in range(m2 + 1)) for p in range(m1 + 1))
    horiz = tuple(tuple(grid_arrow(C, F, G(p, q), G(p + 1, q)) for q in range(m2 + 1)) for p in range(m1))
    vert = tuple(tuple(grid_arrow(C, F, G(p, q), G(p, q + 1)) for q in range(m2)) for p in range(m1 + 1))
    return Grid(objects, horiz, vert)


def _column_chains(C: FinCat, allowed, i: int):
    """Chains of length i through ``allowed`` morphisms, as (vertices, arrows)."""
    if i == 0:
        return [((x,), ()) for x in C.objects]
    out = [((C.source(m), C.target(m)), (m,)) for m in C.morphisms if m in allowed]
    for _ in range(i - 1):
        out = [
            (vs + (C.target(g),), ms + (g,))
            for vs, ms in out
            for g in C.out_of(vs[-1])
            if g in allowed
        ]
    return out


def _transformations(C: FinCat, c1, c2):
    """All tuples h_q : c1(q) -> c2(q) making every square commute."""
    (v1, m1), (v2, m2) = c1, c2
    out = [()]
    for q in range(len(v1)):
        nxt = []
        for partial in out:
            for h in C.hom(v1[q], v2[q]):
                if q == 0 or C.compose(h, m1[q - 1]) == C.compose(m2[q - 1], partial[-1]):
                    nxt.append(partial + (h,))
        out = nxt
    return out


def classification_cells(R: RelCat, n: int, i: int) -> List[Grid]:
    """Relative functors [n] × [i]_W -> (C, W): grids whose vertical arrows lie in W."""
    C = R.base
    cols = _column_chains(C, R.weq, i)
    trans = {}
    partial = [((c,), ()) for c in range(len(cols))]
    for _ in range(n):
        nxt = []
        for cs, hs in partial:
            for c2 in range(len(cols)):
                key = (cs[-1], c2)
                if key not in trans:
                    trans[key] = _transformations(C, cols[cs[-1]], cols[c2])
                for h in trans[key]:
                    nxt.append((cs + (c2,), hs + (h,)))
        partial = nxt
        charge(len(partial))
    out = []
    for cs, hs in partial:
        objects = tuple(cols[c][0] for c in cs)
        vert = tuple(cols[c][1] for c in cs)
        out.append(Grid(objects, tuple(hs), vert))
    return sorted(out)


def _grid_elementary(C: FinCat):
    """Faces and degeneracies of grids, acting on one row or column at a time."""

    def drop(seq, k, n, arrows, merge):
        # seq has n+1 entries; arrows has n entries between consecutive ones
        pts = seq[:k] + seq[k + 1:]
        if k == 0:
            arr = arrows[1:]
        elif k == n:
            arr = arrows[:-1]
        else:
            arr = arrows[: k - 1] + (merge(arrows[k], arrows[k - 1]),) + arrows[k + 1:]
        return pts, arr

    def op(F, n, i, axis, kind, k):
        objs, hz, vt = F.objects, F.horiz, F.vert
        if axis == "h":
            if kind == "d":
                pts, arr = drop(objs, k, n, hz, lambda g, f: tuple(C.compose(a, b) for a, b in zip(g, f)))
                vt2 = vt[:k] + vt[k + 1:]
                return Grid(pts, arr, vt2)
            ids = tuple(C.identity(x) for x in objs[k])
            return Grid(objs[:k + 1] + objs[k:], hz[:k] + (ids,) + hz[k:], vt[:k + 1] + vt[k:])
        if kind == "d":
            cols, verts = [], []
            for p in range(n + 1):
                pts, arr = drop(objs[p], k, i, vt[p], C.compose)
                cols.append(pts)
                verts.append(arr)
            hz2 = tuple(row[:k] + row[k + 1:] for row in hz)
            return Grid(tuple(cols), hz2, tuple(verts))
        objs2 = tuple(col[:k + 1] + col[k:] for col in objs)
        vt2 = tuple(vt[p][:k] + (C.identity(objs[p][k]),) + vt[p][k:] for p in range(n + 1))
        hz2 = tuple(row[:k + 1] + row[k:] for row in hz)
        return Grid(objs2, hz2, vt2)

    return op


def classification_diagram(R: RelCat, d1: int, d2: int) -> TruncBiSSet:
    """Rezk's classification diagram: (n, i)-cells are relative functors [n] × [i]_W -> R."""
    levels = {(n, i): classification_cells(R, n, i) for n in range(d1 + 1) for i in range(d2 + 1)}
    return TruncBiSSet.from_elementary(levels, _grid_elementary(R.base), meta={"relcat": R})


def classification_action(R: RelCat, F: Grid, theta: DeltaMap, psi: DeltaMap) -> Grid:
    """Direct action by precomposition with θ × ψ (the oracle for the elementary tables)."""
    return precompose_grid(R.base, F, theta.m, psi.m, lambda p, q: (theta.values[p], psi.values[q]))


# -- diag*, pr*, i* ---------------------------------------------------------------

def diag_star(Y: TruncBiSSet) -> TruncSSet:
    """(diag* Y)_k = Y_{k,k}."""
    if Y.d1 != Y.d2:
        raise ValueError(f"diag_star needs equal truncations, got {Y.truncations}")
    d = Y.d1
    faces = {
        k: {j: tuple(Y.hfaces[(k, k - 1)][j][Y.vfaces[(k, k)][j][y]] for y in range(Y.size(k, k))) for j in range(k + 1)}
        for k in range(1, d + 1)
    }
    degens = {
        k: {j: tuple(Y.hdegens[(k, k + 1)][j][Y.vdegens[(k, k)][j][y]] for y in range(Y.size(k, k))) for j in range(k + 1)}
        for k in range(d)
    }
    return TruncSSet([Y.levels[(k, k)] for k in range(d + 1)], faces, degens, meta=dict(Y.meta))


def pr2_star(X: TruncSSet, depth: int) -> TruncBiSSet:
    """Constant in the marked direction: (pr* X)_{n,i} = X_n for i <= depth."""
    d = X.truncation
    levels = {(n, i): X.levels[n] for n in range(d + 1) for i in range(depth + 1)}
    ident = {(n, i): tuple(range(len(X.levels[n]))) for n in range(d + 1) for i in range(depth + 1)}
    hf = {(n, i): X.faces[n] for n in range(1, d + 1) for i in range(depth + 1)}
    hd = {(n, i): X.degeneracies[n] for n in range(d) for i in range(depth + 1)}
    vf = {(n, i): {k: ident[(n, i)] for k in range(i + 1)} for n in range(d + 1) for i in range(1, depth + 1)}
    vd = {(n, i): {k: ident[(n, i)] for k in range(i + 1)} for n in range(d + 1) for i in range(depth)}
    return TruncBiSSet(levels, hf, hd, vf, vd)


def i2_star(Y: TruncBiSSet) -> TruncSSet:
    """Restriction to the bottom row: (i* Y)_n = Y_{n,0}; right adjoint to pr2_star."""
    return Y.row(0)


def representable(p: int, q: int, d1: int, d2: int) -> TruncBiSSet:
    """Δ^{p,q}: (n, i)-cells are pairs of monotone maps [n] -> [p], [i] -> [q]."""
    levels = {
        (n, i): [(a.values, b.values) for a in monotone_maps(n, p) for b in monotone_maps(i, q)]
        for n in range(d1 + 1)
        for i in range(d2 + 1)
    }
    return TruncBiSSet.from_action(
        levels, lambda y, th, ps: (tuple(y[0][v] for v in th.values), tuple(y[1][v] for v in ps.values))
    )


def constant_bisimplicial(points, d1: int, d2: int) -> TruncBiSSet:
    levels = {(n, i): tuple(sorted(points)) for n in range(d1 + 1) for i in range(d2 + 1)}
    return TruncBiSSet.from_action(levels, lambda y, th, ps: y)


# -- t_! (left Kan extension along Δ^n × (Δ^i)^tgpd) ------------------------------------

class _UnionFind:
    def __init__(self):
        self.parent: Dict = {}

    def find(self, x):
        parent = self.parent
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _monotone_surjections(k: int, n: int):
    return [phi.values for phi in monotone_maps(k, n) if phi.is_surjective]


def _surjections(k: int, i: int):
    return [b for b in itertools.product(range(i + 1), repeat=k + 1) if len(set(b)) == i + 1]


def _image_factor(values: Tuple[int, ...], n: int) -> Tuple[DeltaMap, Tuple[int, ...]]:
    """values = μ ∘ e with μ: [n0] -> [n] the monotone image inclusion and e surjective."""
    image = sorted(set(values))
    rank = {v: r for r, v in enumerate(image)}
    return DeltaMap(len(image) - 1, n, tuple(image)), tuple(rank[v] for v in values)


def t_lower_shriek(Y: TruncBiSSet, d: int) -> TruncSSet:
    """Coend of Y against ([n], [i]) ↦ Δ^n × (Δ^i)^tgpd, up to level d.

    Every generator (y, a, b) is first reduced to one where a: [k] ->> [n]
    and b: [k] ->> [i] are surjective (pushing the image inclusions into y);
    the remaining coend relations come from codegeneracies in either
    coordinate and are closed with union-find.  Classes are represented by
    their least generator ``(n, i, y, a, b)``.  Level k only needs Y on
    n, i <= k, hence ``d <= min(d1, d2)``.
    """
    if d > min(Y.d1, Y.d2):
        raise ValueError(f"t_lower_shriek to level {d} needs truncation >= ({d}, {d}), have {Y.truncations}")
    levels, reps = [], []
    for k in range(d + 1):
        uf = _UnionFind()
        gens = []
        for n in range(k + 1):
            A = _monotone_surjections(k, n)
            for i in range(k + 1):
                B = _surjections(k, i)
                for y in range(Y.size(n, i)):
                    for a in A:
                        for b in B:
                            gens.append((n, i, y, a, b))
        charge(len(gens))
        for g in gens:
            uf.find(g)
        for n in range(k):
            for i in range(k + 1):
                for j in range(n + 1):
                    sigma = DeltaMap.codegeneracy(n, j)
                    table = Y.hdegens[(n, i)][j]
                    A = _monotone_surjections(k, n + 1)
                    B = _surjections(k, i)
                    for z in range(Y.size(n, i)):
                        for a in A:
                            a2 = tuple(sigma.values[v] for v in a)
                            for b in B:
                                uf.union((n + 1, i, table[z], a, b), (n, i, z, a2, b))
        for i in range(k):
            for n in range(k + 1):
                for j in range(i + 1):
                    sigma = DeltaMap.codegeneracy(i, j)
                    table = Y.vdegens[(n, i)][j]
                    A = _monotone_surjections(k, n)
                    B = _surjections(k, i + 1)
                    for z in range(Y.size(n, i)):
                        for a in A:
                            for b in B:
                                b2 = tuple(sigma.values[v] for v in b)
                                uf.union((n, i + 1, table[z], a, b), (n, i, z, a, b2))
        classes = sorted({uf.find(g) for g in gens})
        levels.append(classes)
        reps.append(uf)

    def reduce(n, i, y, a, b):
        mu, a0 = _image_factor(a, n)
        nu, b0 = _image_factor(b, i)
        y0 = Y.act(mu, nu, y)
        return (mu.m, nu.m, y0, a0, b0)

    index = [{c: j for j, c in enumerate(lv)} for lv in levels]
    faces, degens = {}, {}
    for k in range(1, d + 1):
        faces[k] = {}
        for t in range(k + 1):
            row = []
            for (n, i, y, a, b) in levels[k]:
                g = reduce(n, i, y, a[:t] + a[t + 1:], b[:t] + b[t + 1:])
                row.append(index[k - 1][reps[k - 1].find(g)])
            faces[k][t] = tuple(row)
    for k in range(d):
        degens[k] = {}
        for t in range(k + 1):
            row = []
            for (n, i, y, a, b) in levels[k]:
                g = (n, i, y, a[: t + 1] + a[t:], b[: t + 1] + b[t:])
                row.append(index[k + 1][reps[k + 1].find(g)])
            degens[k][t] = tuple(row)
    consumed = {k: (k, k) for k in range(d + 1)}
    return TruncSSet(levels, faces, degens, meta={"consumed": consumed})


def t_lower_shriek_counit(X: TruncSSet, T: TruncSSet) -> List[List[int]]:
    """Canonical comparison t_!(pr2_star(X)) -> X: class of (y, a, b) ↦ X(a)(y)."""
    out = []
    for k, lv in enumerate(T.levels):
        out.append([X.act(DeltaMap(k, n, a), y) for (n, i, y, a, b) in lv])
    return out


# -- t^! (maps out of Δ^n × (Δ^i)^tgpd) -----------------------------------------------

def _edge_composition(X: TruncSSet) -> Dict[Tuple[int, int], int]:
    """(e1, e2) -> d1 of the unique 2-simplex with spine (e1, e2); X must be strict Segal at 2."""
    comp = {}
    F = X.faces[2]
    for x in range(X.level_sizes[2]):
        key = (F[2][x], F[0][x])
        if key in comp:
            raise ValueError("X is not a nerve: two 2-simplices share a spine")
        comp[key] = F[1][x]
    for e1 in range(X.level_sizes[1]):
        for e2 in range(X.level_sizes[1]):
            if X.faces[1][0][e1] == X.faces[1][1][e2] and (e1, e2) not in comp:
                raise ValueError("X is not a nerve: a composable pair has no filler")
    return comp


def category_of_nerve(X: TruncSSet) -> FinCat:
    """The category whose nerve is X: objects "v<k>", morphisms "e<k>" by index in X_0, X_1."""
    comp = _edge_composition(X)
    src, tgt = X.faces[1][1], X.faces[1][0]
    ends = {f"e{e}": (f"v{src[e]}", f"v{tgt[e]}") for e in range(X.level_sizes[1])}
    table = {(f"e{e2}", f"e{e1}"): f"e{c}" for (e1, e2), c in comp.items()}
    ids = {f"v{v}": f"e{X.degeneracies[0][0][v]}" for v in range(X.level_sizes[0])}
    return FinCat([f"v{v}" for v in range(X.level_sizes[0])], ends, table, ids)


def _product_skeleton(n: int, i: int):
    """Vertices, edges and triangles of Δ^n × (Δ^i)^tgpd as coordinate tuples."""
    verts = [(a, b) for a in range(n + 1) for b in range(i + 1)]
    edges = [((a0, a1), (b0, b1)) for a0 in range(n + 1) for a1 in range(a0, n + 1) for b0 in range(i + 1) for b1 in range(i + 1)]
    tris = [
        (a, b)
        for a in itertools.combinations_with_replacement(range(n + 1), 3)
        for b in itertools.product(range(i + 1), repeat=3)
    ]
    return verts, edges, tris


def _maps_into_nerve(X: TruncSSet, comp, n: int, i: int):
    """All simplicial maps Δ^n × (Δ^i)^tgpd -> X, as dicts edge -> X_1 index."""
    verts, edges, tris = _product_skeleton(n, i)
    src = X.faces[1][1]
    tgt = X.faces[1][0]
    degen = X.degeneracies[0][0]
    nondeg = [e for e in edges if not (e[0][0] == e[0][1] and e[1][0] == e[1][1])]
    nondeg.sort(key=lambda e: (max((e[0][0], e[1][0]), (e[0][1], e[1][1])), e))
    tri_edges = []
    for a, b in tris:
        e01 = ((a[0], a[1]), (b[0], b[1]))
        e12 = ((a[1], a[2]), (b[1], b[2]))
        e02 = ((a[0], a[2]), (b[0], b[2]))
        tri_edges.append((e01, e12, e02))
    pos = {e: k for k, e in enumerate(nondeg)}
    watch: Dict[int, List[int]] = {}
    for t, es in enumerate(tri_edges):
        last = max(pos.get(e, -1) for e in es)
        watch.setdefault(last, []).append(t)
    results = []
    vimg: Dict[Tuple[int, int], int] = {}
    eimg: Dict = {}

    def val(e):
        if e in eimg:
            return eimg[e]
        (a0, a1), (b0, b1) = e
        return degen[vimg[(a0, b0)]]

    def rec(k):
        if k == len(nondeg):
            full = dict(eimg)
            for e in edges:
                if e not in full:
                    full[e] = degen[vimg[(e[0][0], e[1][0])]]
            results.append(full)
            return
        e = nondeg[k]
        u, v = (e[0][0], e[1][0]), (e[0][1], e[1][1])
        for x in range(X.level_sizes[1]):
            su, tv = src[x], tgt[x]
            if u in vimg and vimg[u] != su:
                continue
            if v in vimg and vimg[v] != tv:
                continue
            added = [w for w in (u, v) if w not in vimg]
            vimg.setdefault(u, su)
            vimg.setdefault(v, tv)
            eimg[e] = x
            if all(comp.get((val(a), val(b))) == val(c) for a, b, c in (tri_edges[t] for t in watch.get(k, []))):
                rec(k + 1)
            del eimg[e]
            for w in added:
                del vimg[w]

    if not nondeg:
        return [{edges[0]: degen[x]} for x in range(X.level_sizes[0])]
    rec(0)
    return results


def t_upper_shriek(X: TruncSSet, d1: int, d2: int) -> TruncBiSSet:
    """t^!(X)_{n,i} = simplicial maps Δ^n × (Δ^i)^tgpd -> X.

    X must be a nerve (strict Segal through level 2, truncation >= 2); such
    X is 2-coskeletal, so a map is fixed by its 2-skeleton.  Cells are
    labelled by the tuple of edge images in the canonical edge order.
    """
    if X.truncation < 2:
        raise ValueError("t_upper_shriek needs X known to level 2")
    comp = _edge_composition(X)
    levels, edge_lists = {}, {}
    for n in range(d1 + 1):
        for i in range(d2 + 1):
            _, edges, _ = _product_skeleton(n, i)
            edge_lists[(n, i)] = edges
            maps = _maps_into_nerve(X, comp, n, i)
            charge(len(maps))
            levels[(n, i)] = sorted(tuple(m[e] for e in edges) for m in maps)

    def act(y, theta, psi):
        src_edges = edge_lists[(theta.n, psi.n)]
        img = dict(zip(src_edges, y))
        return tuple(
            img[((theta.values[a0], theta.values[a1]), (psi.values[b0], psi.values[b1]))]
            for (a0, a1), (b0, b1) in edge_lists[(theta.m, psi.m)]
        )

    Z = TruncBiSSet.from_action(levels, act, meta={"edges": edge_lists})
    return Z


def classification_to_t_upper(R: RelCat, Y: TruncBiSSet, T: TruncBiSSet, X: TruncSSet) -> Dict[Tuple[int, int], List[int]]:
    """Comparison classification_diagram(min C) -> t^!(nerve C).

    A grid functor with invertible verticals extends uniquely over
    [n] × codiscrete[i]; the edge (a0, b0) -> (a1, b1) goes to the arrow
    F(a0, b1 <- b0) followed by the horizontal F(a0 -> a1) at height b1.
    """
    C = R.base
    maps = {}
    for key, grids in Y.levels.items():
        edges = T.meta["edges"][key]
        row = []
        for F in grids:
            lab = []
            for (a0, a1), (b0, b1) in edges:
                if b0 <= b1:
                    v = grid_arrow(C, F, (a0, b0), (a0, b1))
                else:
                    v = C.inverse(grid_arrow(C, F, (a0, b1), (a0, b0)))
                h = grid_arrow(C, F, (a0, b1), (a1, b1))
                lab.append(X.index(1, (C.compose(h, v),)))
            row.append(T.index(key[0], key[1], tuple(lab)))
        maps[key] = row
    return maps


def classification_to_pr2_nerve(R: RelCat, Y: TruncBiSSet, P: TruncBiSSet) -> Dict[Tuple[int, int], List[int]]:
    """Comparison classification_diagram(min C) -> pr2_star(nerve C): restrict to the bottom row."""
    maps = {}
    for (n, i), grids in Y.levels.items():
        row = []
        for F in grids:
            lab = (F.objects[0][0],) if n == 0 else tuple(F.horiz[p][0] for p in range(n))
            row.append(P.index(n, i, lab))
        maps[(n, i)] = row
    return maps


# -- the max case ---------------------------------------------------------------------

def face_degeneracy_functor(R: RelCat, n: int, i: int, j: int) -> FinFunctor:
    """The endofunctor σ_j δ_i of Fun([n], R)^W: restriction along δ^i σ^j : [n] -> [n]."""
    C = R.base
    A = rel_functor_category(R, n)
    theta = DeltaMap.coface(n, i).after(DeltaMap.codegeneracy(n - 1, j))
    act = _chain_act(C)
    ids = {ch: o for o, ch in A.chain_of.items()}
    omap = {o: ids[act(A.chain_of[o], theta)] for o in A.objects}
    index = {(A.source(m), A.target(m), A.components[m]): m for m in A.morphisms}
    mmap = {
        m: index[(omap[A.source(m)], omap[A.target(m)], tuple(A.components[m][theta(p)] for p in range(n + 1)))]
        for m in A.morphisms
    }
    return FinFunctor(A, A, omap, mmap)


def face_degeneracy_witnesses(R: RelCat, n: int) -> List[dict]:
    """For each σ_j δ_i on Fun([n], R)^W, a natural transformation to or from the identity (or None)."""
    out = []
    for i in range(n + 1):
        for j in range(n):
            E = face_degeneracy_functor(R, n, i, j)
            I = FinFunctor.identity(E.domain)
            to_id = find_natural_transformation(E, I)
            from_id = None if to_id is not None else find_natural_transformation(I, E)
            direction = "to identity" if to_id is not None else ("from identity" if from_id is not None else None)
            out.append({"i": i, "j": j, "direction": direction, "witness": to_id or from_id})
    return out
