"""Command-line interface.

Exit codes: 0 success or check passed, 1 check failed, 2 usage, parse
error or enumeration cap (RNK_MAX_CELLS), 3 inconclusive.
"""
from __future__ import annotations

import argparse
import random
import sys
from typing import List, Optional, Tuple

from ._limits import CellLimitExceeded, budget
from .fincat import CategoryError, FinCat, fundamental_groupoid, group_order
from .io import dumps, functor_from_dict, jsonable, parse_category
from .relcat import RelCat, max_rel, min_rel

OK, FAILED, USAGE, INCONCLUSIVE = 0, 1, 2, 3


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_category(fh.read())


def _relcat(X, marking: str) -> RelCat:
    C = X.base if isinstance(X, RelCat) else X
    if marking == "min":
        return min_rel(C)
    if marking == "max":
        return max_rel(C)
    return X if isinstance(X, RelCat) else min_rel(C)


def _category(X) -> FinCat:
    return X.base if isinstance(X, RelCat) else X


def _sset_dict(X, with_labels=True) -> dict:
    out = X.to_dict()
    if with_labels:
        out["levels"] = jsonable(X.levels)
    return out


# -- commands: each returns (exit code, payload) ---------------------------------

def cmd_nerve(a) -> Tuple[int, dict]:
    from .simplicial import nerve

    return OK, _sset_dict(nerve(_category(_load(a.input)), a.d))


def cmd_rezk_nerve(a):
    from .bisimplicial import classification_diagram

    Y = classification_diagram(_relcat(_load(a.input), a.marking), a.d1, a.d2)
    return OK, Y.to_dict()


def cmd_segal(a):
    from .css_check import segal_check_catvalued, segal_check_sset
    from .simplicial import nerve

    X = _load(a.input)
    if a.catvalued:
        rep = segal_check_catvalued(_relcat(X, a.marking), a.n_max)
    else:
        rep = segal_check_sset(nerve(_category(X), a.d))
    return (OK if rep.ok else FAILED), {"levels": rep.to_list(), "verdict": "pass" if rep.ok else "fail"}


def cmd_complete(a):
    from .css_check import completeness_check_nerve

    rep = completeness_check_nerve(_category(_load(a.input)))
    return (OK if rep else FAILED), rep.to_dict()


def cmd_hom(a):
    from .css_check import hom_fiber
    from .simplicial import nerve

    C = _category(_load(a.input))
    for x in (a.x, a.y):
        if x not in C.objects:
            raise CategoryError("dangling-id", f"unknown object {x}", x)
    fiber = hom_fiber(nerve(C, 1), (a.x,), (a.y,))
    return OK, {"source": a.x, "target": a.y, "morphisms": sorted(e[0] for e in fiber)}


def cmd_localize(a):
    from .localization import localize

    R = _relcat(_load(a.input), a.marking)
    loc = localize(R, a.strategy, a.bound)
    return (OK if loc.complete else INCONCLUSIVE), loc.to_dict()


def cmd_saturated(a):
    from .localization import is_saturated

    rep = is_saturated(_relcat(_load(a.input), a.marking), a.bound)
    code = {"yes": OK, "no": FAILED, "unknown": INCONCLUSIVE}[rep.verdict]
    return code, rep.to_dict()


def cmd_bk_weq(a):
    import json

    from .localization import bk_weq_check

    with open(a.functor, encoding="utf-8") as fh:
        F, src, tgt = functor_from_dict(json.load(fh))
    R1 = src if isinstance(src, RelCat) else min_rel(src)
    R2 = tgt if isinstance(tgt, RelCat) else min_rel(tgt)
    rep = bk_weq_check(F, R1, R2, a.bound)
    code = {"yes": OK, "no": FAILED, "unknown": INCONCLUSIVE}[rep.verdict]
    return code, rep.to_dict()


def cmd_pi1(a):
    C = _category(_load(a.input))
    comps = []
    code = OK
    for p in fundamental_groupoid(C):
        order = group_order(p, a.max_cosets)
        if order is None:
            code = INCONCLUSIVE
        comps.append(dict(p.to_dict(), order=order))
    return code, {"components": comps}


def cmd_verify_zigzag(a):
    from .homotopy_verify import verify_zigzag

    rep = verify_zigzag(a.max_n)
    full = rep.to_dict()
    if a.emit_report:
        _write(a.emit_report, full)
        a.emit_report = None
    summary = {k: full[k] for k in ("max_n", "status", "instances_checked", "counts", "failures")}
    return (OK if rep.ok else FAILED), summary


def cmd_involution(a):
    from .simplicial import reverse_check

    rep = reverse_check(a.max_n)
    return (OK if rep["ok"] else FAILED), rep


def cmd_tshriek(a):
    from .bisimplicial import pr2_star, t_lower_shriek, t_lower_shriek_counit, t_upper_shriek
    from .simplicial import is_isomorphism, nerve

    C = _category(_load(a.input))
    if a.upper:
        X = nerve(C, 2)
        return OK, t_upper_shriek(X, a.d1, a.d2).to_dict()
    X = nerve(C, a.d)
    T = t_lower_shriek(pr2_star(X, a.d), a.d)
    counit = t_lower_shriek_counit(X, T)
    out = _sset_dict(T)
    out["counit_is_isomorphism"] = is_isomorphism(T, X, counit)
    return OK, out


def cmd_diag(a):
    from .bisimplicial import classification_diagram, diag_star

    Y = classification_diagram(_relcat(_load(a.input), a.marking), a.d, a.d)
    return OK, _sset_dict(diag_star(Y))


def _write(path: str, payload):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(payload))


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relnerve", description="Finite relative categories and their nerves.")
    p.add_argument("--seed", type=int, default=0, help="seed for any randomized step (default 0)")
    p.add_argument("--emit-report", metavar="PATH", help="also write the JSON report to PATH")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, inp=True, marking=False):
        sp = sub.add_parser(name, help=helptext)
        if inp:
            sp.add_argument("--in", dest="input", required=True, help="category document (JSON)")
        if marking:
            sp.add_argument("--marking", choices=["given", "min", "max"], default="given",
                            help="weak equivalences: from the document (minimal when absent), min or max")
        sp.add_argument("--emit-report", metavar="PATH", default=argparse.SUPPRESS)
        sp.set_defaults(func=fn)
        return sp

    add("nerve", cmd_nerve, "nerve up to a level").add_argument("--d", type=int, default=3)
    sp = add("rezk-nerve", cmd_rezk_nerve, "classification diagram", marking=True)
    sp.add_argument("--d1", type=int, default=2)
    sp.add_argument("--d2", type=int, default=2)
    sp = add("segal", cmd_segal, "Segal condition for the nerve or the Rezk pre-nerve", marking=True)
    sp.add_argument("--d", type=int, default=3)
    sp.add_argument("--catvalued", action="store_true", help="check Fun([k], R)^W levelwise instead")
    sp.add_argument("--n-max", type=int, default=3)
    add("complete", cmd_complete, "completeness of the nerve (gauntness)")
    sp = add("hom", cmd_hom, "hom-set from the nerve")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp = add("localize", cmd_localize, "1-categorical localization", marking=True)
    sp.add_argument("--strategy", choices=["auto", "fractions", "rewrite"], default="auto")
    sp.add_argument("--bound", type=int, default=None, help="rewrite depth bound (default 2 * #morphisms)")
    sp = add("saturated", cmd_saturated, "saturation of the marking", marking=True)
    sp.add_argument("--bound", type=int, default=None)
    sp = add("bk-weq", cmd_bk_weq, "Barwick-Kan weak equivalence check", inp=False)
    sp.add_argument("--functor", required=True, help="functor document (JSON)")
    sp.add_argument("--bound", type=int, default=None)
    sp = add("pi1", cmd_pi1, "fundamental groupoid presentations and group orders")
    sp.add_argument("--max-cosets", type=int, default=10000)
    sp = add("verify-zigzag", cmd_verify_zigzag, "exhaustive check of the grid homotopies", inp=False)
    sp.add_argument("--max-n", type=int, default=6)
    sp = add("involution", cmd_involution, "delta_reverse is an involutive functor", inp=False)
    sp.add_argument("--max-n", type=int, default=5)
    sp = add("tshriek", cmd_tshriek, "t_! of pr2*(nerve), or t^! of the nerve with --upper")
    sp.add_argument("--d", type=int, default=3)
    sp.add_argument("--upper", action="store_true")
    sp.add_argument("--d1", type=int, default=2)
    sp.add_argument("--d2", type=int, default=2)
    sp = add("diag", cmd_diag, "diagonal of the classification diagram", marking=True)
    sp.add_argument("--d", type=int, default=2)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    random.seed(a.seed)
    try:
        with budget():
            code, payload = a.func(a)
    except CategoryError as exc:
        sys.stderr.write(dumps({"error": exc.code, "message": str(exc), "location": exc.location}))
        return USAGE
    except CellLimitExceeded as exc:
        sys.stderr.write(dumps({"error": "cell-limit", "message": str(exc)}))
        return USAGE
    except (OSError, ValueError) as exc:
        sys.stderr.write(dumps({"error": "usage", "message": str(exc)}))
        return USAGE
    sys.stdout.write(dumps(payload))
    if a.emit_report:
        _write(a.emit_report, payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
