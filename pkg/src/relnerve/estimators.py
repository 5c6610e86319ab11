"""Estimator-style wrappers (fit / transform / predict) over the functional API."""
from __future__ import annotations

from sklearn.base import BaseEstimator

from .bisimplicial import classification_diagram
from .homotopy_verify import verify_zigzag
from .localization import localize
from .validation import check_is_fitted, check_nonnegative, check_relcat


class RezkNerve(BaseEstimator):
    """fit stores the classification diagram; transform returns its level sizes."""

    def __init__(self, d1=2, d2=2):
        self.d1 = d1
        self.d2 = d2

    def fit(self, X, y=None):
        check_nonnegative("d1", self.d1)
        check_nonnegative("d2", self.d2)
        self.relcat_ = check_relcat(X)
        self.diagram_ = classification_diagram(self.relcat_, self.d1, self.d2)
        return self

    def transform(self, X=None):
        check_is_fitted(self, "diagram_")
        if X is not None:
            return RezkNerve(self.d1, self.d2).fit(X).diagram_.size_matrix()
        return self.diagram_.size_matrix()


class Localizer(BaseEstimator):
    """fit localizes; predict says which morphisms of C become invertible."""

    def __init__(self, strategy="auto", bound=None):
        self.strategy = strategy
        self.bound = bound

    def fit(self, X, y=None):
        self.relcat_ = check_relcat(X)
        self.result_ = localize(self.relcat_, self.strategy, self.bound)
        return self

    def transform(self, morphisms):
        check_is_fitted(self, "result_")
        if not self.result_.complete:
            raise ValueError("localization is inconclusive")
        return [self.result_.functor.morphism_map[m] for m in morphisms]

    def predict(self, morphisms):
        L = self.result_.result
        return [L.is_invertible(m) for m in self.transform(morphisms)]


class ZigzagVerifier(BaseEstimator):
    def __init__(self, max_n=6):
        self.max_n = max_n

    def fit(self, X=None, y=None):
        check_nonnegative("max_n", self.max_n)
        self.report_ = verify_zigzag(self.max_n)
        return self

    def predict(self, X=None):
        check_is_fitted(self, "report_")
        return self.report_.ok
