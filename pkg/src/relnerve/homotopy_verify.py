"""The grid maps η, H₁, H₂ on [n] × [n]_W and an exhaustive check of the zigzag they form.

Grids compose like functions (``compose(g, f)`` is g after f).  Cofaces
and codegeneracies act on grids diagonally, so the simplicial identities
for the homotopies appear here in opposite (corepresented) form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .simplicial import DeltaMap

Point = Tuple[int, int]


@dataclass(frozen=True)
class GridMap:
    """A map [m] × [m] -> [n] × [n]; ``values[j][k]`` is the image of (j, k)."""

    m: int
    n: int
    values: Tuple[Tuple[Point, ...], ...]

    def __call__(self, j: int, k: int) -> Point:
        return self.values[j][k]

    @classmethod
    def from_function(cls, m: int, n: int, fn: Callable[[int, int], Point]) -> "GridMap":
        vals = tuple(tuple(tuple(fn(j, k)) for k in range(m + 1)) for j in range(m + 1))
        for row in vals:
            for a, b in row:
                if not (0 <= a <= n and 0 <= b <= n):
                    raise ValueError(f"value {(a, b)} outside [{n}] x [{n}]")
        return cls(m, n, vals)

    def points(self):
        return itertools.product(range(self.m + 1), repeat=2)

    def replace(self, point: Point, value: Point) -> "GridMap":
        rows = [list(r) for r in self.values]
        rows[point[0]][point[1]] = tuple(value)
        return GridMap(self.m, self.n, tuple(tuple(r) for r in rows))


def compose(g: GridMap, f: GridMap) -> GridMap:
    if f.n != g.m:
        raise ValueError(f"cannot compose [{g.m}]-grid map after map into [{f.n}]")
    return GridMap.from_function(f.m, g.n, lambda j, k: g(*f(j, k)))


def identity_grid(n: int) -> GridMap:
    return GridMap.from_function(n, n, lambda j, k: (j, k))


def diagonal(phi: DeltaMap) -> GridMap:
    """φ × φ."""
    return GridMap.from_function(phi.m, phi.n, lambda j, k: (phi(j), phi(k)))


def coface(n: int, i: int) -> GridMap:
    return diagonal(DeltaMap.coface(n, i))


def codegeneracy(n: int, i: int) -> GridMap:
    return diagonal(DeltaMap.codegeneracy(n, i))


def eta_map(n: int) -> GridMap:
    return GridMap.from_function(n, n, lambda i, j: (i, i) if i >= j else (i, j))


def alpha_rho(n: int) -> GridMap:
    """Diagonal after first projection: (j, k) ↦ (j, j)."""
    return GridMap.from_function(n, n, lambda j, k: (j, j))


def h_cases(eps: int, i: int, j: int, k: int) -> List[Point]:
    """Images prescribed by every case of the defining formula that applies to (j, k)."""
    out = []
    if eps == 1:
        if j <= i and k <= i:
            out.append((j, k))
        if j > i and j >= k:
            out.append((j - 1, j - 1))
        if k > i >= j:
            out.append((j, k - 1))
        if k > j > i:
            out.append((j - 1, k - 1))
    elif eps == 2:
        if j <= i:
            out.append((j, j))
        if j > i and j >= k:
            out.append((j - 1, j - 1))
        if k > j > i:
            out.append((j - 1, k - 1))
    else:
        raise ValueError("eps must be 1 or 2")
    return out


def h_map(eps: int, i: int, n: int) -> GridMap:
    """H_eps^{i,n} : [n+1] × [n+1] -> [n] × [n]."""
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")

    def fn(j, k):
        cases = h_cases(eps, i, j, k)
        if len(cases) != 1:
            raise ValueError(f"H_{eps}^{{{i},{n}}}({j},{k}) matches {len(cases)} cases")
        return cases[0]

    return GridMap.from_function(n + 1, n, fn)


@dataclass
class GridReport:
    ok: bool
    checked: int
    failure: Optional[dict] = None

    def __bool__(self):
        return self.ok


def verify_grid_map(g: GridMap) -> GridReport:
    """Monotonicity and marking preservation over all comparable pairs of grid points."""
    checked = 0
    pts = list(g.points())
    for p in pts:
        for q in pts:
            if not (p[0] <= q[0] and p[1] <= q[1]):
                continue
            a, b = g(*p), g(*q)
            checked += 1
            if not (a[0] <= b[0] and a[1] <= b[1]):
                return GridReport(False, checked, {"property": "monotone", "pair": [list(p), list(q)]})
            if p[0] == q[0] and a[0] != b[0]:
                return GridReport(False, checked, {"property": "marking", "pair": [list(p), list(q)]})
    return GridReport(True, checked)


# -- the zigzag ------------------------------------------------------------------------

@dataclass
class ZigzagReport:
    max_n: int
    entries: List[dict] = field(default_factory=list)
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def total(self) -> int:
        return sum(e["instances_checked"] for e in self.entries)

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for e in self.entries:
            out[e["identity_name"]] = out.get(e["identity_name"], 0) + e["instances_checked"]
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "status": "pass" if self.ok else "fail",
            "instances_checked": self.total,
            "counts": self.counts(),
            "entries": self.entries,
            "failures": self.failures,
        }


class _Recorder:
    def __init__(self, report: ZigzagReport):
        self.report = report

    def equal(self, name: str, n: int, i, lhs: GridMap, rhs: GridMap, context: dict):
        bad = None
        count = 0
        for p in lhs.points():
            count += 1
            if lhs(*p) != rhs(*p):
                bad = {"point": list(p), "lhs": list(lhs(*p)), "rhs": list(rhs(*p))}
                break
        self._add(name, n, i, count, bad, context)

    def grid(self, name: str, n: int, i, g: GridMap, context: dict):
        rep = verify_grid_map(g)
        self._add(name, n, i, rep.checked, rep.failure, context)

    def _add(self, name, n, i, count, bad, context):
        entry = {"n": n, "i": i, "identity_name": name, "instances_checked": count, "status": "pass" if bad is None else "fail"}
        self.report.entries.append(entry)
        if bad is not None:
            self.report.failures.append(dict(entry, **context, detail=bad))


def verify_zigzag(max_n: int, overrides: Optional[Dict[Tuple[int, int, int], GridMap]] = None) -> ZigzagReport:
    """Check every identity of the zigzag id ~ η ~ αρ for 0 <= i <= n <= max_n.

    ``overrides`` maps (eps, i, n) to a replacement for H_eps^{i,n}, to exercise
    the failure path.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    overrides = overrides or {}
    report = ZigzagReport(max_n)
    rec = _Recorder(report)
    # the family must be defined one level past max_n for the degeneracy identities
    top = max_n + 1
    H: Dict[Tuple[int, int, int], GridMap] = {}
    for eps in (1, 2):
        for n in range(top + 1):
            for i in range(n + 1):
                covered = 0
                for j, k in itertools.product(range(n + 2), repeat=2):
                    covered += 1
                    c = h_cases(eps, i, j, k)
                    if len(c) != 1:
                        rec._add(f"H{eps}.cases", n, i, 1, {"point": [j, k], "matches": len(c)}, {"eps": eps})
                        break
                else:
                    if n <= max_n:
                        rec._add(f"H{eps}.cases", n, i, covered, None, {"eps": eps})
                H[(eps, i, n)] = overrides.get((eps, i, n)) or _h_or_fallback(eps, i, n)

    for n in range(max_n + 1):
        eta = eta_map(n)
        rec.grid("eta.relative", n, None, eta, {})
        diag_fixed = GridMap.from_function(n, n, lambda j, k: eta(j, j))
        rec.equal("eta.diagonal_fixed", n, None, diag_fixed, GridMap.from_function(n, n, lambda j, k: (j, j)), {})
        if n >= 1:
            for i in range(n + 1):
                rec.equal("eta.natural.coface", n, i, compose(eta, coface(n, i)), compose(coface(n, i), eta_map(n - 1)), {})
        for i in range(n + 1):
            rec.equal("eta.natural.codegeneracy", n, i, compose(eta, codegeneracy(n, i)), compose(codegeneracy(n, i), eta_map(n + 1)), {})
        count, bad = 0, None
        for j in range(n + 1):
            count += 1
            if _first_projection(_diagonal_point(j)) != j and bad is None:
                bad = {"point": j}
        rec._add("retraction.rho_alpha", n, None, count, bad, {})

    for eps in (1, 2):
        pre = f"H{eps}"
        for n in range(max_n + 1):
            ctx = {"eps": eps}
            for j in range(n + 1):
                rec.grid(f"{pre}.relative", n, j, H[(eps, j, n)], ctx)
            rec.equal(f"{pre}.boundary.d0", n, 0, compose(H[(eps, 0, n)], coface(n + 1, 0)), eta_map(n), ctx)
            other = identity_grid(n) if eps == 1 else alpha_rho(n)
            rec.equal(f"{pre}.boundary.d_last", n, n, compose(H[(eps, n, n)], coface(n + 1, n + 1)), other, ctx)
            for j in range(n + 1):
                h = H[(eps, j, n)]
                for i in range(n + 2):
                    d = coface(n + 1, i)
                    if i < j:
                        rec.equal(f"{pre}.face.i<j", n, j, compose(h, d), compose(coface(n, i), H[(eps, j - 1, n - 1)]), dict(ctx, face=i))
                    elif i == j and j != 0:
                        rec.equal(f"{pre}.face.i=j", n, j, compose(h, d), compose(H[(eps, j - 1, n)], d), dict(ctx, face=i))
                    elif i > j + 1:
                        rec.equal(f"{pre}.face.i>j+1", n, j, compose(h, d), compose(coface(n, i - 1), H[(eps, j, n - 1)]), dict(ctx, face=i))
                for i in range(n + 2):
                    s = codegeneracy(n + 1, i)
                    if i <= j:
                        rec.equal(f"{pre}.degeneracy.i<=j", n, j, compose(h, s), compose(codegeneracy(n, i), H[(eps, j + 1, n + 1)]), dict(ctx, degeneracy=i))
                    else:
                        rec.equal(f"{pre}.degeneracy.i>j", n, j, compose(h, s), compose(codegeneracy(n, i - 1), H[(eps, j, n + 1)]), dict(ctx, degeneracy=i))
        # values on vertices are degenerate edges: H^{0,0} factors through σ₀ × σ₀
        h00 = H[(eps, 0, 0)]
        through = compose(GridMap.from_function(0, 0, lambda j, k: h00(0, 0)), codegeneracy(0, 0))
        rec.equal(f"{pre}.vertex_degenerate", 0, 0, h00, through, {"eps": eps})
    return report


def _diagonal_point(j: int) -> Point:
    return (j, j)


def _first_projection(p: Point) -> int:
    return p[0]


def _h_or_fallback(eps: int, i: int, n: int) -> GridMap:
    # a case conflict is already recorded; take the first match so the other checks still run
    try:
        return h_map(eps, i, n)
    except ValueError:
        return GridMap.from_function(n + 1, n, lambda j, k: (h_cases(eps, i, j, k) or [(0, 0)])[0])


def find_case_conflicts(max_n: int) -> List[dict]:
    """Grid points matched by zero or several cases of either formula."""
    out = []
    for eps in (1, 2):
        for n in range(max_n + 1):
            for i in range(n + 1):
                for j, k in itertools.product(range(n + 2), repeat=2):
                    c = h_cases(eps, i, j, k)
                    if len(c) != 1:
                        out.append({"eps": eps, "i": i, "n": n, "point": [j, k], "matches": c})
    return out
