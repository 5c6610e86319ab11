"""JSON documents for categories, relative categories and functors."""
from __future__ import annotations

import json
from typing import Any, Union

from .fincat import CategoryError, FinCat, FinFunctor
from .relcat import RelCat

SCHEMA = 1
_CATEGORY_KEYS = {"schema", "objects", "morphisms", "composition", "weq", "name"}


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _schema(cond: bool, message: str, location: str = ""):
    if not cond:
        raise CategoryError("schema", message, location)


def _strings(value, where: str):
    _schema(isinstance(value, list) and all(isinstance(x, str) for x in value), f"{where} must be a list of strings", where)
    _schema(len(set(value)) == len(value), f"duplicate entries in {where}", where)
    return value


def category_from_dict(doc: dict) -> Union[FinCat, RelCat]:
    _schema(isinstance(doc, dict), "document must be a JSON object")
    extra = set(doc) - _CATEGORY_KEYS
    _schema(not extra, f"unknown keys {sorted(extra)}")
    _schema(doc.get("schema") == SCHEMA, f"schema must be {SCHEMA}", "schema")
    objects = _strings(doc.get("objects"), "objects")
    mors = doc.get("morphisms")
    _schema(isinstance(mors, list), "morphisms must be a list", "morphisms")
    ends = {}
    for k, m in enumerate(mors):
        where = f"morphisms[{k}]"
        _schema(isinstance(m, dict) and set(m) == {"id", "src", "tgt"}, "morphism needs exactly id, src, tgt", where)
        _schema(all(isinstance(m[x], str) for x in ("id", "src", "tgt")), "morphism fields must be strings", where)
        _schema(m["id"] not in ends, f"duplicate morphism {m['id']}", where)
        ends[m["id"]] = (m["src"], m["tgt"])
    rows = doc.get("composition")
    _schema(isinstance(rows, list), "composition must be a list", "composition")
    comp = {}
    for k, row in enumerate(rows):
        where = f"composition[{k}]"
        _schema(isinstance(row, list) and len(row) == 3 and all(isinstance(x, str) for x in row), "rows are [g, f, g∘f]", where)
        g, f, h = row
        _schema(comp.get((g, f), h) == h, f"conflicting composites for {g}∘{f}", where)
        comp[(g, f)] = h
    C = FinCat(objects, ends, comp)
    if "weq" in doc:
        return RelCat(C, _strings(doc["weq"], "weq"))
    return C


def parse_category(text: str) -> Union[FinCat, RelCat]:
    """Validated FinCat, or RelCat when the document carries ``weq``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CategoryError("schema", f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None
    return category_from_dict(doc)


def category_to_dict(X: Union[FinCat, RelCat]) -> dict:
    C = X.base if isinstance(X, RelCat) else X
    doc = {
        "schema": SCHEMA,
        "objects": list(C.objects),
        "morphisms": [{"id": m, "src": C.source(m), "tgt": C.target(m)} for m in C.morphisms],
        "composition": [[g, f, h] for (g, f), h in sorted(C.composition_table.items())],
    }
    if isinstance(X, RelCat):
        doc["weq"] = X.weq_sorted
    return doc


def emit_category(X: Union[FinCat, RelCat]) -> str:
    return dumps(category_to_dict(X))


def functor_from_dict(doc: dict):
    """{"schema", "source", "target", "objects": {...}, "morphisms": {...}} -> (F, source, target)."""
    _schema(isinstance(doc, dict) and doc.get("schema") == SCHEMA, "functor document needs schema 1")
    for key in ("source", "target", "objects", "morphisms"):
        _schema(key in doc, f"missing {key}", key)
    src = category_from_dict(doc["source"])
    tgt = category_from_dict(doc["target"])
    A = src.base if isinstance(src, RelCat) else src
    B = tgt.base if isinstance(tgt, RelCat) else tgt
    omap, mmap = dict(doc["objects"]), dict(doc["morphisms"])
    for x in A.objects:
        if x not in omap:
            raise CategoryError("dangling-id", f"object {x} has no image", "objects")
    for m in A.morphisms:
        if m not in mmap:
            if A.is_identity(m):
                mmap[m] = B.identity(omap[A.source(m)])
            else:
                raise CategoryError("dangling-id", f"morphism {m} has no image", "morphisms")
    F = FinFunctor(A, B, omap, mmap)
    bad = F.violations()
    if bad:
        raise CategoryError("bad-functor", bad[0], "morphisms")
    return F, src, tgt


def functor_to_dict(F: FinFunctor, source=None, target=None) -> dict:
    return {
        "schema": SCHEMA,
        "source": category_to_dict(source if source is not None else F.domain),
        "target": category_to_dict(target if target is not None else F.codomain),
        "objects": dict(sorted(F.object_map.items())),
        "morphisms": dict(sorted(F.morphism_map.items())),
    }


def jsonable(x):
    """Tuples to lists, recursively; dict keys to strings."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x
