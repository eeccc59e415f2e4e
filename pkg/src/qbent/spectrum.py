"""Exact Walsh-Hadamard spectra over Z[xi] and spectral classification.

``W_f(y) = sum_x xi^(f(x) - <x, y>)`` is kept unnormalized, so every
coefficient is a cyclotomic integer and every classification question is an
exact integer identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from .cyclotomic import (
    CycInt,
    canonical_array,
    equals_scaled_root,
    full_dtype,
    is_zero_array,
    as_rational_integer,
    norm_sq_array,
    norm_sq_full,
    roll_root,
    to_cycints,
    unit_decompose,
)
from .functions import QFunc, inner_product_matrix, point_array


def _butterfly(full: np.ndarray, q: int, n: int, sign: int = -1) -> np.ndarray:
    """Apply the kernel ``xi^(sign * x_i y_i)`` along every coordinate.

    ``full`` has shape ``(batch, q^n, q)``; coordinate ``x_1`` is the fastest
    varying, i.e. the last of the ``n`` reshaped point axes.
    """
    batch = full.shape[0]
    a = full.reshape((batch,) + (q,) * n + (q,))
    for axis in range(1, n + 1):
        parts = [np.take(a, x, axis=axis) for x in range(q)]
        out = []
        for y in range(q):
            acc = parts[0].copy()
            for x in range(1, q):
                acc = acc + roll_root(parts[x], sign * x * y)
            out.append(acc)
        a = np.stack(out, axis=axis)
    return a.reshape(batch, q**n, q)


def _one_hot(tables: np.ndarray, q: int, dtype) -> np.ndarray:
    tables = np.asarray(tables, dtype=np.int64)
    full = np.zeros(tables.shape + (q,), dtype=dtype)
    np.put_along_axis(full, tables[..., None], 1, axis=-1)
    return full


def walsh_batch(tables: np.ndarray, q: int, n: int) -> np.ndarray:
    """Spectra of many functions at once.

    ``tables`` has shape ``(batch, q^n)``; the result has shape
    ``(batch, q^n, q)`` in the full basis (entry ``[b, y, j]`` counts the points
    ``x`` with ``f_b(x) - <x, y> = j``).
    """
    tables = np.atleast_2d(tables)
    dtype = full_dtype(q**n)
    return _butterfly(_one_hot(tables, q, dtype), q, n)


def transform_array(values: np.ndarray, q: int, n: int, sign: int = -1) -> np.ndarray:
    """Unnormalized transform of an arbitrary ``(q^n, q)`` full-basis array."""
    values = np.asarray(values)
    if values.dtype != object:
        bound = int(np.abs(values).max(initial=0)) * q ** (n + 1)
        values = values.astype(full_dtype(bound))
    return _butterfly(values[None], q, n, sign)[0]


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    q: int
    n: int
    full: np.ndarray = field(repr=False)

    def __getitem__(self, index: int) -> CycInt:
        return CycInt.from_full(self.q, self.full[index].tolist())

    def __len__(self):
        return self.q**self.n

    @property
    def w(self) -> list:
        return to_cycints(self.full)

    @property
    def canonical(self) -> np.ndarray:
        return canonical_array(self.full)

    @property
    def nonzero(self) -> np.ndarray:
        return ~is_zero_array(self.full)

    @property
    def support_size(self) -> int:
        return int(np.count_nonzero(self.nonzero))

    def norms(self) -> np.ndarray:
        """``|W(y)|^2`` as integers; raises if any is not a rational integer."""
        value, is_int = norm_sq_array(self.full)
        if not is_int.all():
            raise ArithmeticError("|W|^2 is not rational; spectrum is corrupted")
        return value

    def parseval_total(self) -> int:
        """``sum_y |W(y)|^2``, summed in the ring; must be the integer ``q^(2n)``."""
        total = CycInt.from_full(self.q, norm_sq_full(self.full).sum(axis=0).tolist())
        value = as_rational_integer(total)
        if value is None:
            raise ArithmeticError("sum of |W|^2 is not rational; spectrum is corrupted")
        return value

    def histogram(self) -> Dict[object, int]:
        """``|W|^2`` value -> count; values outside Z (only possible for q >= 5)
        are keyed by their ``q:[...]`` text form."""
        value, is_int = norm_sq_array(self.full)
        if is_int.all():
            vals, counts = np.unique(value, return_counts=True)
            return {int(v): int(c) for v, c in zip(vals, counts)}
        out: Dict[object, int] = {}
        for row, ok, v in zip(norm_sq_full(self.full).tolist(), is_int, value):
            key = int(v) if ok else str(CycInt.from_full(self.q, row))
            out[key] = out.get(key, 0) + 1
        return out


def walsh_transform(f: QFunc) -> WalshSpectrum:
    """Exact spectrum via ``n`` butterfly stages of the ``q x q`` kernel."""
    return WalshSpectrum(f.q, f.n, walsh_batch(f.table[None], f.q, f.n)[0])


def naive_walsh(f: QFunc) -> list:
    """``O(q^(2n))`` double sum with scalar ring arithmetic; an oracle only."""
    q = f.q
    M = inner_product_matrix(q, f.n)
    out = []
    for y in range(q**f.n):
        acc = [0] * q
        for x in range(q**f.n):
            acc[(int(f.table[x]) - int(M[x, y])) % q] += 1
        out.append(CycInt.from_full(q, acc))
    return out


def inversion_check(f: QFunc) -> bool:
    """Transform twice; expect ``q^n * xi^f(-x)``."""
    q, n = f.q, f.n
    twice = transform_array(walsh_transform(f).full, q, n)
    pts = point_array(q, n)
    neg = ((-pts) % q) @ (q ** np.arange(n))
    target = _one_hot(f.table[neg], q, np.int64) * q**n
    return bool(np.all(is_zero_array(twice - target)))


@dataclass
class SpectralClass:
    is_bent: bool
    plateaued_s: Optional[int]
    regular: bool
    dual: Optional[QFunc] = None
    sign_table: Optional[list] = None


def plateaued_order_batch(full: np.ndarray, q: int, n: int) -> np.ndarray:
    """Plateaued order ``s`` per spectrum in a batch, or -1."""
    value, is_int = norm_sq_array(full)
    nonzero = ~is_zero_array(full)
    ok = np.all(is_int, axis=-1)
    support = nonzero.sum(axis=-1)
    out = np.full(full.shape[0], -1, dtype=np.int64)
    for s in range(n + 1):
        mag = q ** (n + s)
        hit = ok & (support == q ** (n - s)) & np.all(np.where(nonzero, value == mag, True), axis=-1)
        out[hit] = s
    return out


def regular_batch(full: np.ndarray, q: int, n: int, s: np.ndarray) -> np.ndarray:
    """Regularity per spectrum given plateaued orders ``s`` (-1 = none)."""
    out = np.zeros(full.shape[0], dtype=bool)
    for sv in np.unique(s):
        if sv < 0 or (n + sv) % 2:
            continue
        rows = s == sv
        m, _ = equals_scaled_root(full[rows], q ** ((n + int(sv)) // 2))
        zero = is_zero_array(full[rows])
        out[rows] = np.all(m | zero, axis=-1)
    return out


def classify(f: QFunc) -> SpectralClass:
    q, n = f.q, f.n
    spec = walsh_transform(f)
    s = int(plateaued_order_batch(spec.full[None], q, n)[0])
    if s < 0:
        return SpectralClass(False, None, False)
    regular = bool(regular_batch(spec.full[None], q, n, np.array([s]))[0])
    sign_table = None
    if (n + s) % 2 == 0:
        mag = q ** ((n + s) // 2)
        sign_table = []
        for w in spec.w:
            c, b = unit_decompose(w)
            sign_table.append(None if c == 0 else ("+" if c == mag else "-", b))
    dual = None
    if regular and s == 0:
        _, a = equals_scaled_root(spec.full, q ** (n // 2))
        dual = QFunc(q, n, a)
    return SpectralClass(s == 0, s, regular, dual, sign_table)


def autocorrelation(f: QFunc) -> np.ndarray:
    """``A(z) = sum_x xi^(f(x) - f(x - z))`` as a full-basis ``(q^n, q)`` array."""
    q, n = f.q, f.n
    pts = point_array(q, n)
    weights = q ** np.arange(n)
    t = f.table.astype(np.int64)
    out = np.zeros((q**n, q), dtype=np.int64)
    for z in range(q**n):
        shifted = ((pts - pts[z]) % q) @ weights
        out[z] = np.bincount((t - t[shifted]) % q, minlength=q)
    return out


def bent_convolution_check(f: QFunc) -> bool:
    """``xi^f`` autocorrelation equals ``q^n`` at 0 and vanishes elsewhere."""
    A = autocorrelation(f)
    target = np.zeros_like(A)
    target[0, 0] = f.q**f.n
    return bool(np.all(is_zero_array(A - target)))


def plateaued_convolution_check(f: QFunc) -> bool:
    """Time-domain plateau identity ``A * xi^f = q^(n+s) xi^f``.

    ``A`` is the autocorrelation of ``xi^f``; its transform is ``|W|^2``, so
    the convolution has transform ``|W|^2 W``, which equals ``q^(n+s) W``
    exactly when ``|W|^2`` only takes the values 0 and ``q^(n+s)``.
    The spectral form of the same identity is checked alongside.
    """
    q, n = f.q, f.n
    spec = walsh_transform(f)
    norms = spec.norms()
    nz = spec.nonzero
    levels = np.unique(norms[nz])
    if len(levels) != 1:
        return False
    mu_sq = int(levels[0])
    # spectral: |W|^2 * W == mu^2 * W
    lhs = spec.full * norms[:, None]
    spectral_ok = bool(np.all(is_zero_array(lhs - mu_sq * spec.full)))

    A = autocorrelation(f)
    pts = point_array(q, n)
    weights = q ** np.arange(n)
    t = f.table.astype(np.int64)
    conv = np.zeros((q**n, q), dtype=object)
    for z in range(q**n):
        shifted = ((pts[z] - pts) % q) @ weights
        conv[z] = np.sum(roll_root_rows(A, t[shifted], q), axis=0)
    target = _one_hot(t, q, object) * mu_sq
    direct_ok = bool(np.all(is_zero_array(conv - target)))
    return spectral_ok and direct_ok


def roll_root_rows(A: np.ndarray, shifts: np.ndarray, q: int) -> np.ndarray:
    """Multiply row ``w`` of ``A`` by ``xi^shifts[w]``."""
    idx = (np.arange(q)[None, :] - shifts[:, None]) % q
    return np.take_along_axis(A, idx, axis=1)


def uncertainty_check(g, q: int, n: int) -> Tuple[int, int]:
    """``(|supp g|, |supp g_hat|)`` for a table of cyclotomic integers on F_q^n.

    ``g`` is either a sequence of ``q^n`` :class:`CycInt` values or a
    ``(q^n, q)`` full-basis array.
    """
    if isinstance(g, np.ndarray) and g.ndim == 2:
        full = g
    else:
        full = np.array([v.full() for v in g], dtype=object)
    if full.shape != (q**n, q):
        raise ValueError(f"expected {q**n} values")
    supp = ~is_zero_array(full)
    if not supp.any():
        raise ValueError("the uncertainty principle needs a nonzero input")
    hat = transform_array(full, q, n)
    return int(supp.sum()), int(np.count_nonzero(~is_zero_array(hat)))


def support_difference_sizes(f: QFunc, g: QFunc) -> Tuple[int, int]:
    """``(|supp(xi^f - xi^g)|, |supp(W_f - W_g)|)``."""
    a = walsh_transform(f).full
    b = walsh_transform(g).full
    return int(np.count_nonzero(f.table != g.table)), int(np.count_nonzero(~is_zero_array(a - b)))


def scale_power(full: np.ndarray, q: int) -> int:
    """Largest ``k`` with every coefficient divisible by ``q^k``."""
    canon = canonical_array(full)
    flat = [int(v) for v in np.ravel(canon) if int(v)]
    if not flat:
        raise ValueError("zero spectrum")
    k = 0
    while all(v % q ** (k + 1) == 0 for v in flat):
        k += 1
    return k

