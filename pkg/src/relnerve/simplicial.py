"""The simplex category, truncated simplicial sets, nerves, simplicial homotopies.

A :class:`TruncSSet` stores levels ``X_0 .. X_d`` (canonically ordered
element labels) and integer face/degeneracy tables.  Any other monotone
map acts through its epi-mono factorization.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from ._limits import charge
from .fincat import FinCat, chain_vertices, chains


@dataclass(frozen=True, order=True)
class DeltaMap:
    """Weakly monotone map [m] -> [n] given by its list of values."""

    m: int
    n: int
    values: Tuple[int, ...]

    def __post_init__(self):
        v = tuple(self.values)
        object.__setattr__(self, "values", v)
        if len(v) != self.m + 1:
            raise ValueError(f"expected {self.m + 1} values, got {len(v)}")
        if any(not 0 <= x <= self.n for x in v):
            raise ValueError(f"values {v} out of range [0, {self.n}]")
        if any(a > b for a, b in zip(v, v[1:])):
            raise ValueError(f"values {v} not monotone")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def after(self, other: "DeltaMap") -> "DeltaMap":
        """self ∘ other."""
        if other.n != self.m:
            raise ValueError("maps not composable")
        return DeltaMap(other.m, self.n, tuple(self.values[x] for x in other.values))

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.n + 1))

    @classmethod
    def identity(cls, n: int) -> "DeltaMap":
        return cls(n, n, tuple(range(n + 1)))

    @classmethod
    def coface(cls, n: int, i: int) -> "DeltaMap":
        """δ_i : [n-1] -> [n], skipping i."""
        return cls(n - 1, n, tuple(x if x < i else x + 1 for x in range(n)))

    @classmethod
    def codegeneracy(cls, n: int, j: int) -> "DeltaMap":
        """σ_j : [n+1] -> [n], hitting j twice."""
        return cls(n + 1, n, tuple(x if x <= j else x - 1 for x in range(n + 2)))

    def factorization(self) -> Tuple[List[int], List[int]]:
        """(faces, degeneracies) such that the action of self on a simplicial set is:
        apply ``d_i`` for i in ``faces`` (in order), then ``s_j`` for j in ``degeneracies``."""
        image = set(self.values)
        faces = sorted((x for x in range(self.n + 1) if x not in image), reverse=True)
        degens = [j for j in range(self.m) if self.values[j] == self.values[j + 1]]
        return faces, degens


def monotone_maps(m: int, n: int) -> List[DeltaMap]:
    return [DeltaMap(m, n, v) for v in itertools.combinations_with_replacement(range(n + 1), m + 1)]


def delta_reverse(phi: DeltaMap) -> DeltaMap:
    """The coordinate-reversal involution of Δ: i ↦ n − φ(m − i)."""
    return DeltaMap(phi.m, phi.n, tuple(phi.n - phi.values[phi.m - i] for i in range(phi.m + 1)))


def reverse_check(max_n: int) -> dict:
    """Exhaustive check that delta_reverse is an involutive functor on Δ_{<= max_n}.

    Covers every monotone map between [m], [n] with m, n <= max_n and every
    composable pair of them.
    """
    maps = {(m, n): monotone_maps(m, n) for m in range(max_n + 1) for n in range(max_n + 1)}
    out = {"maps": 0, "involution_failures": 0, "identity_failures": 0, "pairs": 0, "functoriality_failures": 0}
    for lst in maps.values():
        for phi in lst:
            out["maps"] += 1
            if delta_reverse(delta_reverse(phi)) != phi:
                out["involution_failures"] += 1
    for n in range(max_n + 1):
        if delta_reverse(DeltaMap.identity(n)) != DeltaMap.identity(n):
            out["identity_failures"] += 1
    # value tuples keep the O(pairs) loop cheap; every reversal still comes from delta_reverse
    rev = {(m, n, phi.values): delta_reverse(phi).values for (m, n), lst in maps.items() for phi in lst}
    for (m, n), inner in maps.items():
        for p in range(max_n + 1):
            for phi in maps[(n, p)]:
                pv, rpv = phi.values, rev[(n, p, phi.values)]
                for psi in inner:
                    out["pairs"] += 1
                    composite = tuple(pv[x] for x in psi.values)
                    if rev[(m, p, composite)] != tuple(rpv[x] for x in rev[(m, n, psi.values)]):
                        out["functoriality_failures"] += 1
    out["ok"] = not (out["involution_failures"] or out["identity_failures"] or out["functoriality_failures"])
    return out


class TruncSSet:
    """A simplicial set known up to level ``d``.

    ``faces[k][i]`` is the table of ``d_i : X_k -> X_{k-1}`` and
    ``degeneracies[k][j]`` the table of ``s_j : X_k -> X_{k+1}``.
    """

    def __init__(self, levels, faces, degeneracies, meta=None):
        self.levels: Tuple[Tuple[Hashable, ...], ...] = tuple(tuple(lv) for lv in levels)
        self.faces = {k: {i: tuple(t) for i, t in fk.items()} for k, fk in faces.items()}
        self.degeneracies = {k: {j: tuple(t) for j, t in dk.items()} for k, dk in degeneracies.items()}
        self.meta: Dict = dict(meta or {})
        self._index = [{x: i for i, x in enumerate(lv)} for lv in self.levels]

    @classmethod
    def from_action(cls, levels: Sequence[Sequence[Hashable]], act: Callable[[Hashable, DeltaMap], Hashable], meta=None):
        """Build from labelled levels and the action ``act(x, φ)`` of φ: [m] -> [k] on x ∈ X_k."""
        levels = [tuple(lv) for lv in levels]
        index = [{x: i for i, x in enumerate(lv)} for lv in levels]
        d = len(levels) - 1
        faces, degens = {}, {}
        for k in range(1, d + 1):
            faces[k] = {
                i: tuple(index[k - 1][act(x, DeltaMap.coface(k, i))] for x in levels[k]) for i in range(k + 1)
            }
        for k in range(d):
            degens[k] = {
                j: tuple(index[k + 1][act(x, DeltaMap.codegeneracy(k, j))] for x in levels[k]) for j in range(k + 1)
            }
        return cls(levels, faces, degens, meta)

    @property
    def truncation(self) -> int:
        return len(self.levels) - 1

    @property
    def level_sizes(self) -> Tuple[int, ...]:
        return tuple(len(lv) for lv in self.levels)

    def index(self, k: int, label) -> int:
        return self._index[k][label]

    def label(self, k: int, idx: int):
        return self.levels[k][idx]

    def face(self, k: int, i: int, idx: int) -> int:
        return self.faces[k][i][idx]

    def degeneracy(self, k: int, j: int, idx: int) -> int:
        return self.degeneracies[k][j][idx]

    def act(self, phi: DeltaMap, idx: int) -> int:
        """X(φ) applied to the simplex ``idx`` of X_{φ.n}; lands in X_{φ.m}."""
        faces, degens = phi.factorization()
        if max(phi.m, phi.n) > self.truncation:
            raise ValueError("map exceeds truncation")
        k = phi.n
        for i in faces:
            idx = self.faces[k][i][idx]
            k -= 1
        for j in degens:
            idx = self.degeneracies[k][j][idx]
            k += 1
        return idx

    def check_identities(self, limit: int = 1) -> List[str]:
        """Violations of the simplicial identities (at most ``limit`` reported per kind)."""
        out: List[str] = []
        d = self.truncation
        F, S = self.faces, self.degeneracies
        for k in range(2, d + 1):
            for i in range(k + 1):
                for j in range(i + 1, k + 1):
                    # d_i d_j = d_{j-1} d_i  (i < j)
                    for x in range(len(self.levels[k])):
                        if F[k - 1][i][F[k][j][x]] != F[k - 1][j - 1][F[k][i][x]]:
                            out.append(f"d{i}d{j}=d{j - 1}d{i} fails at level {k}, simplex {x}")
                            break
        for k in range(d - 1):
            for j in range(k + 1):
                for i in range(j + 1):
                    # s_i s_j = s_{j+1} s_i  (i <= j)
                    for x in range(len(self.levels[k])):
                        if S[k + 1][i][S[k][j][x]] != S[k + 1][j + 1][S[k][i][x]]:
                            out.append(f"s{i}s{j}=s{j + 1}s{i} fails at level {k}, simplex {x}")
                            break
        for k in range(d):
            for j in range(k + 1):
                for i in range(k + 2):
                    for x in range(len(self.levels[k])):
                        y = F[k + 1][i][S[k][j][x]]
                        if i < j:
                            ok = y == S[k - 1][j - 1][F[k][i][x]]
                        elif i in (j, j + 1):
                            ok = y == x
                        else:
                            ok = y == S[k - 1][j][F[k][i - 1][x]]
                        if not ok:
                            out.append(f"d{i}s{j} identity fails at level {k}, simplex {x}")
                            break
        return out

    def to_dict(self) -> dict:
        return {
            "truncation": self.truncation,
            "level_sizes": list(self.level_sizes),
            "faces": {str(k): {str(i): list(t) for i, t in fk.items()} for k, fk in self.faces.items()},
            "degeneracies": {str(k): {str(j): list(t) for j, t in dk.items()} for k, dk in self.degeneracies.items()},
        }

    def __eq__(self, other):
        return (
            isinstance(other, TruncSSet)
            and self.levels == other.levels
            and self.faces == other.faces
            and self.degeneracies == other.degeneracies
        )

    def __repr__(self):
        return f"TruncSSet(sizes={self.level_sizes})"


# -- constructions ------------------------------------------------------------

def _chain_act(C: FinCat):
    def act(ch, phi: DeltaMap):
        n = phi.n
        verts = chain_vertices(C, ch, n)
        if phi.m == 0:
            return (verts[phi.values[0]],)
        out = []
        for a, b in zip(phi.values, phi.values[1:]):
            out.append(C.compose_path(ch[a:b], start=verts[a]) if b > a else C.identity(verts[a]))
        return tuple(out)

    return act


def nerve(C: FinCat, d: int) -> TruncSSet:
    """Nerve up to level d. Level-0 labels are 1-tuples of objects, higher
    levels are tuples of morphism ids (first arrow first)."""
    levels = [chains(C, k) for k in range(d + 1)]
    X = TruncSSet.from_action(levels, _chain_act(C), meta={"nerve_of": C})
    return X


def nerve_codiscrete(i: int, d: int) -> TruncSSet:
    """Nerve of the codiscrete groupoid on {0..i}: level k is all (k+1)-tuples."""
    levels = [list(itertools.product(range(i + 1), repeat=k + 1)) for k in range(d + 1)]
    charge(sum(map(len, levels)))
    return TruncSSet.from_action(levels, lambda x, phi: tuple(x[v] for v in phi.values))


def standard_simplex(n: int, d: int) -> TruncSSet:
    """Δ^n: level k is the monotone maps [k] -> [n], as value tuples."""
    levels = [[phi.values for phi in monotone_maps(k, n)] for k in range(d + 1)]
    return TruncSSet.from_action(levels, lambda x, phi: tuple(x[v] for v in phi.values))


def constant(points: Sequence[Hashable], d: int) -> TruncSSet:
    levels = [tuple(sorted(points))] * (d + 1)
    return TruncSSet.from_action(levels, lambda x, phi: x)


def product(X: TruncSSet, Y: TruncSSet) -> TruncSSet:
    d = min(X.truncation, Y.truncation)
    levels = [list(itertools.product(range(len(X.levels[k])), range(len(Y.levels[k])))) for k in range(d + 1)]
    charge(sum(map(len, levels)))
    return TruncSSet.from_action(levels, lambda p, phi: (X.act(phi, p[0]), Y.act(phi, p[1])))


# -- maps and isomorphisms ----------------------------------------------------

def simplicial_map_violations(X: TruncSSet, Y: TruncSSet, maps: Sequence[Sequence[int]]) -> List[str]:
    """Where the levelwise maps fail to commute with faces and degeneracies."""
    out = []
    d = min(X.truncation, Y.truncation, len(maps) - 1)
    for k in range(1, d + 1):
        for i in range(k + 1):
            for x in range(len(X.levels[k])):
                if maps[k - 1][X.faces[k][i][x]] != Y.faces[k][i][maps[k][x]]:
                    out.append(f"d{i} at level {k}, simplex {x}")
                    break
    for k in range(d):
        for j in range(k + 1):
            for x in range(len(X.levels[k])):
                if maps[k + 1][X.degeneracies[k][j][x]] != Y.degeneracies[k][j][maps[k][x]]:
                    out.append(f"s{j} at level {k}, simplex {x}")
                    break
    return out


def is_isomorphism(X: TruncSSet, Y: TruncSSet, maps) -> bool:
    if X.level_sizes != Y.level_sizes or len(maps) != len(X.levels):
        return False
    if any(sorted(m) != list(range(len(lv))) for m, lv in zip(maps, Y.levels)):
        return False
    return not simplicial_map_violations(X, Y, maps)


def find_isomorphism(X: TruncSSet, Y: TruncSSet) -> Optional[List[List[int]]]:
    """Exhaustive search for an isomorphism X -> Y of truncated simplicial sets.

    Simplices are assigned level by level; a candidate for x ∈ X_k must
    agree with all faces already fixed at level k-1 and with the images of
    its own degeneracies from below.
    """
    if X.level_sizes != Y.level_sizes:
        return None
    d = X.truncation
    maps: List[List[Optional[int]]] = [[None] * n for n in X.level_sizes]
    used: List[set] = [set() for _ in range(d + 1)]

    def face_sig(Z, k, z, m=None):
        if k == 0:
            return ()
        if m is None:
            return tuple(Z.faces[k][i][z] for i in range(k + 1))
        return tuple(m[Z.faces[k][i][z]] for i in range(k + 1))

    order = [(k, x) for k in range(d + 1) for x in range(X.level_sizes[k])]
    # Degenerate simplices are forced by lower levels; put them first within a level.
    forced = {}
    for k in range(d):
        for j in range(k + 1):
            for x in range(X.level_sizes[k]):
                forced.setdefault((k + 1, X.degeneracies[k][j][x]), (k, j, x))

    def candidates(k, x):
        if (k, x) in forced:
            kk, j, xx = forced[(k, x)]
            return [Y.degeneracies[kk][j][maps[kk][xx]]]
        want = face_sig(X, k, x, maps[k - 1]) if k else None
        return [y for y in range(Y.level_sizes[k]) if y not in used[k] and (k == 0 or face_sig(Y, k, y) == want)]

    def rec(pos):
        if pos == len(order):
            return True
        k, x = order[pos]
        for y in candidates(k, x):
            if y in used[k]:
                continue
            if k and face_sig(Y, k, y) != face_sig(X, k, x, maps[k - 1]):
                continue
            maps[k][x] = y
            used[k].add(y)
            if rec(pos + 1):
                return True
            used[k].discard(y)
            maps[k][x] = None
        return False

    if not rec(0):
        return None
    result = [list(m) for m in maps]  # type: ignore[arg-type]
    return result if is_isomorphism(X, Y, result) else None


# -- simplicial homotopies (May form) -------------------------------------------

@dataclass
class SimplicialHomotopy:
    """A family h[(j, n)] : X_n -> Z_{n+1} from ``f`` to ``g`` (levelwise index tables)."""

    source: TruncSSet
    target: TruncSSet
    f: Sequence[Sequence[int]]
    g: Sequence[Sequence[int]]
    h: Dict[Tuple[int, int], Sequence[int]]


@dataclass
class HomotopyReport:
    ok: bool
    checked: int = 0
    failure: Optional[dict] = None
    counts: Dict[str, int] = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def check_homotopy(H: SimplicialHomotopy) -> HomotopyReport:
    """Check the May identities for a simplicial homotopy within the truncation.

    Boundary identities, the three-case face identity and the two-case
    degeneracy identity are each checked at every simplex.
    """
    X, Z = H.source, H.target
    top = min(X.truncation, Z.truncation - 1)
    for n in range(top + 1):
        for j in range(n + 1):
            t = H.h.get((j, n))
            if t is None or len(t) != X.level_sizes[n]:
                raise ValueError(f"homotopy component h[{j},{n}] missing or of wrong size")
    counts: Dict[str, int] = {}
    h = H.h
    ZF, ZS, XF, XS = Z.faces, Z.degeneracies, X.faces, X.degeneracies

    def fail(name, n, i, j, x):
        return HomotopyReport(False, sum(counts.values()), {"identity": name, "n": n, "i": i, "j": j, "simplex": x}, counts)

    def tick(name):
        counts[name] = counts.get(name, 0) + 1

    for n in range(top + 1):
        for x in range(X.level_sizes[n]):
            tick("boundary-source")
            if ZF[n + 1][0][h[(0, n)][x]] != H.f[n][x]:
                return fail("d0 h[0,n] = f", n, 0, 0, x)
            tick("boundary-target")
            if ZF[n + 1][n + 1][h[(n, n)][x]] != H.g[n][x]:
                return fail("d[n+1] h[n,n] = g", n, n + 1, n, x)
        for j in range(n + 1):
            for i in range(n + 2):
                for x in range(X.level_sizes[n]):
                    lhs = ZF[n + 1][i][h[(j, n)][x]]
                    if i < j:
                        name, rhs = "face i<j", h[(j - 1, n - 1)][XF[n][i][x]]
                    elif i == j and i != 0:
                        name, rhs = "face i=j", ZF[n + 1][i][h[(i - 1, n)][x]]
                    elif i > j + 1:
                        name, rhs = "face i>j+1", h[(j, n - 1)][XF[n][i - 1][x]]
                    else:
                        continue
                    tick(name)
                    if lhs != rhs:
                        return fail(name, n, i, j, x)
            if n + 1 > top:
                continue
            for i in range(n + 2):
                for x in range(X.level_sizes[n]):
                    lhs = ZS[n + 1][i][h[(j, n)][x]]
                    if i <= j:
                        name, rhs = "degeneracy i<=j", h[(j + 1, n + 1)][XS[n][i][x]]
                    else:
                        name, rhs = "degeneracy i>j", h[(j, n + 1)][XS[n][i - 1][x]]
                    tick(name)
                    if lhs != rhs:
                        return fail(name, n, i, j, x)
    return HomotopyReport(True, sum(counts.values()), None, counts)


def constant_homotopy(X: TruncSSet, Z: TruncSSet, f: Sequence[Sequence[int]]) -> SimplicialHomotopy:
    """h[j, n] = s_j ∘ f_n, a homotopy from f to itself."""
    top = min(X.truncation, Z.truncation - 1)
    h = {(j, n): [Z.degeneracies[n][j][f[n][x]] for x in range(X.level_sizes[n])] for n in range(top + 1) for j in range(n + 1)}
    return SimplicialHomotopy(X, Z, f, f, h)


def identity_maps(X: TruncSSet) -> List[List[int]]:
    return [list(range(n)) for n in X.level_sizes]
