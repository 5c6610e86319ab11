"""Input coercion shared by the estimator wrappers."""
from __future__ import annotations

import json

from .fincat import FinCat
from .io import category_from_dict, parse_category
from .relcat import RelCat, min_rel


def check_relcat(X) -> RelCat:
    """Accept a RelCat, a FinCat (minimal marking), a document dict or JSON text."""
    if isinstance(X, RelCat):
        return X
    if isinstance(X, FinCat):
        return min_rel(X)
    if isinstance(X, dict):
        X = category_from_dict(X)
    elif isinstance(X, str):
        X = parse_category(X)
    else:
        raise TypeError(f"expected a relative category, got {type(X).__name__}")
    return X if isinstance(X, RelCat) else min_rel(X)


def check_nonnegative(name: str, value: int) -> int:
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
    return value


def check_is_fitted(est, attr: str):
    if not hasattr(est, attr):
        from sklearn.exceptions import NotFittedError

        raise NotFittedError(f"{type(est).__name__} is not fitted yet; call fit first")


def as_json(obj) -> str:
    return json.dumps(obj, sort_keys=True)
