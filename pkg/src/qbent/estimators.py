"""scikit-learn style wrappers: truth tables in, spectral features out.

Only the transforms fit this shape; constructions and searches stay plain
functions.  ``fit`` just validates the shape and records it.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cyclotomic import is_zero_array, norm_sq_array
from .metrics import cor_batch, divisibility_order_batch, nonlinearity_batch
from .spectrum import plateaued_order_batch, regular_batch, walsh_batch
from .validation import check_space, check_tables


class WalshTransformer(TransformerMixin, BaseEstimator):
    """Map truth tables to exact spectra.

    ``output="norm_sq"`` gives ``|W_f(y)|^2`` per point (shape ``(m, q^n)``);
    ``output="full"`` gives the full-basis coefficient counts
    (shape ``(m, q^n, q)``).
    """

    def __init__(self, q: int = 2, n: int = 2, output: str = "norm_sq"):
        self.q = q
        self.n = n
        self.output = output

    def fit(self, X, y=None):
        check_space(self.q, self.n)
        if self.output not in ("norm_sq", "full"):
            raise ValueError(f"unknown output {self.output!r}")
        check_tables(X, self.q, self.n)
        self.n_features_in_ = self.q**self.n
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        full = walsh_batch(check_tables(X, self.q, self.n), self.q, self.n)
        if self.output == "full":
            return full
        value, is_int = norm_sq_array(full)
        if not is_int.all():
            raise ArithmeticError("non-rational |W|^2")
        return value.astype(np.int64)


class SpectralProfile(TransformerMixin, BaseEstimator):
    """One row of integer features per function.

    Columns: plateaued order (-1 if none), regular, balanced, nonlinearity,
    correlation immunity, Walsh support size, divisibility order.
    """

    feature_names = ("plateaued_s", "regular", "balanced", "nl", "cor", "support_size", "divisibility_order")

    def __init__(self, q: int = 2, n: int = 2):
        self.q = q
        self.n = n

    def fit(self, X, y=None):
        check_space(self.q, self.n)
        check_tables(X, self.q, self.n)
        self.n_features_in_ = self.q**self.n
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        q, n = self.q, self.n
        T = check_tables(X, q, n)
        full = walsh_batch(T, q, n)
        s = plateaued_order_batch(full, q, n)
        counts = np.stack([np.count_nonzero(T == a, axis=1) for a in range(q)], axis=1)
        support = np.count_nonzero(~is_zero_array(full), axis=-1)
        cols = [
            s,
            regular_batch(full, q, n, s).astype(np.int64),
            np.all(counts == q ** (n - 1), axis=1).astype(np.int64),
            nonlinearity_batch(T, q, n),
            cor_batch(T, q, n),
            support,
            np.array(divisibility_order_batch(full, q)),
        ]
        return np.stack(cols, axis=1).astype(np.int64)

    def get_feature_names_out(self, input_features=None):
        return np.array(self.feature_names, dtype=object)
