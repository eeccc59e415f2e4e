"""Input checks shared by the estimator layer and the CLI."""
from __future__ import annotations

import numpy as np

from .cyclotomic import check_prime
from .functions import QFunc


def check_space(q: int, n: int) -> None:
    check_prime(q)
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def check_tables(X, q: int, n: int) -> np.ndarray:
    """Coerce ``X`` to an ``(m, q^n)`` int64 array of values in ``0..q-1``.

    Accepts a 2-d array-like, a single 1-d table, or a sequence of
    :class:`QFunc` on F_q^n.
    """
    check_space(q, n)
    if isinstance(X, QFunc):
        X = [X]
    if isinstance(X, (list, tuple)) and X and isinstance(X[0], QFunc):
        for f in X:
            if (f.q, f.n) != (q, n):
                raise ValueError(f"function on F_{f.q}^{f.n} given where F_{q}^{n} was expected")
        X = [f.table for f in X]
    arr = np.asarray(X)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != q**n:
        raise ValueError(f"expected tables of length {q**n}, got shape {arr.shape}")
    if arr.dtype.kind not in "iub":
        if arr.dtype.kind == "f" and np.all(arr == np.round(arr)):
            arr = arr.astype(np.int64)
        else:
            raise ValueError(f"tables must hold integers, got dtype {arr.dtype}")
    arr = arr.astype(np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= q):
        raise ValueError(f"table values must lie in 0..{q - 1}")
    return arr


def check_table(x, q: int, n: int) -> np.ndarray:
    arr = check_tables(x, q, n)
    if arr.shape[0] != 1:
        raise ValueError("expected a single table")
    return arr[0]
