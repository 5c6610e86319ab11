"""Segal and completeness checks; hom-sets of simplicial objects."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .fincat import FinCat, FinFunctor, chain_id, is_equivalence, nonidentity_isomorphisms, rel_functor_category
from .relcat import RelCat
from .simplicial import DeltaMap, TruncSSet, standard_simplex


@dataclass
class LevelVerdict:
    level: int
    verdict: bool
    witness: Any = None

    def to_dict(self):
        return {"level": self.level, "verdict": "pass" if self.verdict else "fail", "witness": self.witness}


@dataclass
class CheckReport:
    levels: List[LevelVerdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.verdict for v in self.levels)

    def __bool__(self):
        return self.ok

    def failures(self) -> List[LevelVerdict]:
        return [v for v in self.levels if not v.verdict]

    def to_list(self) -> List[dict]:
        return [v.to_dict() for v in self.levels]


def spine(X: TruncSSet, k: int, x: int) -> Tuple[int, ...]:
    """The edges (j, j+1) of the k-simplex x."""
    return tuple(X.act(DeltaMap(1, k, (j, j + 1)), x) for j in range(k))


def spine_pairs(X: TruncSSet, k: int) -> List[Tuple[int, ...]]:
    """X_1 ×_{X_0} ... ×_{X_0} X_1 (k factors), glued target-to-source."""
    src, tgt = X.faces[1][1], X.faces[1][0]
    out = [(e,) for e in range(X.level_sizes[1])]
    for _ in range(k - 1):
        out = [p + (e,) for p in out for e in range(X.level_sizes[1]) if src[e] == tgt[p[-1]]]
    return out


def segal_check_sset(X: TruncSSet) -> CheckReport:
    """Strict Segal condition: every spine map X_k -> X_1 ×_{X_0} ... is a bijection."""
    if X.truncation < 2:
        raise ValueError("segal_check_sset needs truncation >= 2")
    report = CheckReport()
    for k in range(2, X.truncation + 1):
        seen: Dict[Tuple[int, ...], int] = {}
        witness = None
        for x in range(X.level_sizes[k]):
            sp = spine(X, k, x)
            if sp in seen:
                witness = {"kind": "not-injective", "simplices": [_lab(X, k, seen[sp]), _lab(X, k, x)]}
                break
            seen[sp] = x
        if witness is None:
            for p in spine_pairs(X, k):
                if p not in seen:
                    witness = {"kind": "not-surjective", "spine": [_lab(X, 1, e) for e in p]}
                    break
        report.levels.append(LevelVerdict(k, witness is None, witness))
    return report


def _lab(X, k, idx):
    lab = X.label(k, idx)
    return list(lab) if isinstance(lab, tuple) else lab


def _edge_restriction(C: FinCat, Fk: FinCat, F1: FinCat, k: int, j: int) -> Tuple[Dict[str, str], Dict[str, str]]:
    index1 = {(F1.source(m), F1.target(m), F1.components[m]): m for m in F1.morphisms}
    objs = {o: chain_id((Fk.chain_of[o][j],)) for o in Fk.objects}
    mors = {
        m: index1[(objs[Fk.source(m)], objs[Fk.target(m)], Fk.components[m][j:j + 2])]
        for m in Fk.morphisms
    }
    return objs, mors


def segal_check_catvalued(R: RelCat, n_max: int) -> CheckReport:
    """Is Fun([k], R)^W -> Fun([1], R)^W ×_{Fun([0], R)^W} ... an equivalence, for 2 <= k <= n_max?"""
    C = R.base
    F1 = rel_functor_category(R, 1)
    report = CheckReport()
    for k in range(2, n_max + 1):
        Fk = rel_functor_category(R, k)
        # iterated pullback, built directly: k-tuples of Fun([1]) cells with matching ends
        pobjs = [p for p in itertools.product(F1.objects, repeat=k) if all(
            C.target(F1.chain_of[p[j]][0]) == C.source(F1.chain_of[p[j + 1]][0]) for j in range(k - 1))]
        pmor = {}
        by_ends: Dict[Tuple[str, str], List[str]] = {}
        for m in F1.morphisms:
            by_ends.setdefault((F1.source(m), F1.target(m)), []).append(m)
        pid = {p: ";".join(p) for p in pobjs}
        pcomp = {}
        for a in pobjs:
            for b in pobjs:
                for ms in itertools.product(*(by_ends.get((a[j], b[j]), []) for j in range(k))):
                    if all(F1.components[ms[j]][1] == F1.components[ms[j + 1]][0] for j in range(k - 1)):
                        pmor[";".join(ms)] = (pid[a], pid[b], ms)
        for m1, (s1, t1, ms1) in pmor.items():
            for m2, (s2, t2, ms2) in pmor.items():
                if s2 == t1:
                    pcomp[(m2, m1)] = ";".join(F1.compose(g, f) for g, f in zip(ms2, ms1))
        pids = {pid[p]: ";".join(F1.identity(o) for o in p) for p in pobjs}
        P = FinCat(list(pid.values()), {m: (s, t) for m, (s, t, _) in pmor.items()}, pcomp, pids, validate=False)
        restr = [_edge_restriction(C, Fk, F1, k, j) for j in range(k)]
        omap = {o: ";".join(r[0][o] for r in restr) for o in Fk.objects}
        mmap = {m: ";".join(r[1][m] for r in restr) for m in Fk.morphisms}
        Phi = FinFunctor(Fk, P, omap, mmap)
        rep = is_equivalence(Phi)
        report.levels.append(LevelVerdict(k, bool(rep), None if rep else rep.witness))
    return report


@dataclass
class CompletenessReport:
    complete: bool
    witness: Optional[str] = None

    def __bool__(self):
        return self.complete

    def to_dict(self):
        return {"level": 1, "verdict": "pass" if self.complete else "fail", "witness": self.witness}


def completeness_check_nerve(C: FinCat) -> CompletenessReport:
    """The nerve of C is complete iff C is gaunt; a failing report names a nonidentity isomorphism."""
    isos = nonidentity_isomorphisms(C)
    return CompletenessReport(not isos, isos[0] if isos else None)


def hom_fiber(X: TruncSSet, x, y) -> List:
    """Labels of the edges e with d1(e) = x and d0(e) = y; x, y are labels of X_0."""
    if X.truncation < 1:
        raise ValueError("hom_fiber needs truncation >= 1")
    try:
        xi, yi = X.index(0, x), X.index(0, y)
    except KeyError as exc:
        raise ValueError(f"not a vertex: {exc.args[0]!r}") from None
    src, tgt = X.faces[1][1], X.faces[1][0]
    return [X.label(1, e) for e in range(X.level_sizes[1]) if src[e] == xi and tgt[e] == yi]


def horn(n: int, k: int, d: int) -> TruncSSet:
    """Λ^n_k: simplices of Δ^n missing some vertex other than k."""
    full = standard_simplex(n, d)
    omit = [set(range(n + 1)) - {j} for j in range(n + 1) if j != k]

    def keep(vals):
        return any(set(vals) <= face for face in omit)

    levels = [[v for v in full.levels[m] if keep(v)] for m in range(d + 1)]
    return TruncSSet.from_action(levels, lambda v, phi: tuple(v[i] for i in phi.values))
