"""Truth tables of q-ary functions and the maps acting on them.

A function ``f: F_q^n -> F_q`` is stored as the vector of its ``q^n`` values;
the point ``x = (x_1, ..., x_n)`` lives at index ``x_1 + x_2 q + ... + x_n q^(n-1)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .cyclotomic import check_prime


class QFormatError(ValueError):
    """Malformed ``.qf`` text.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        loc = f"line {line}" + (f", column {column}" if column else "") if line else ""
        super().__init__(f"{loc}: {message}" if loc else message)
        self.line = line
        self.column = column


class ShapeMismatchError(ValueError):
    pass


@lru_cache(maxsize=None)
def point_array(q: int, n: int) -> np.ndarray:
    """All points of F_q^n as a read-only ``(q^n, n)`` array in index order."""
    idx = np.arange(q**n)
    pts = np.empty((q**n, n), dtype=np.int64)
    for i in range(n):
        pts[:, i] = (idx // q**i) % q
    pts.setflags(write=False)
    return pts


def point_index(x: Sequence[int], q: int) -> int:
    return sum(int(v) * q**i for i, v in enumerate(x))


@lru_cache(maxsize=None)
def inner_product_matrix(q: int, n: int) -> np.ndarray:
    """``M[x, y] = <x, y> mod q`` over all index pairs."""
    pts = point_array(q, n)
    m = (pts @ pts.T) % q
    m.setflags(write=False)
    return m


def inner_product(x: Sequence[int], y: Sequence[int], q: int) -> int:
    if len(x) != len(y):
        raise ShapeMismatchError(f"vectors of length {len(x)} and {len(y)}")
    return sum(int(a) * int(b) for a, b in zip(x, y)) % q


def hamming_weight(u: Sequence[int]) -> int:
    return sum(1 for v in u if v)


@dataclass(frozen=True, eq=False)
class QFunc:
    """Truth table of ``f: F_q^n -> F_q`` (``q`` prime)."""

    q: int
    n: int
    table: np.ndarray = field(repr=False)

    def __post_init__(self):
        q = check_prime(self.q)
        if self.n < 1:
            raise ValueError("a function needs at least one variable")
        t = np.asarray(self.table)
        if t.shape != (q**self.n,):
            raise ShapeMismatchError(f"table must have {q**self.n} entries, got {t.size}")
        if t.size and (t.min() < 0 or t.max() >= q):
            raise ValueError(f"table entries must lie in 0..{q - 1}")
        t = t.astype(np.uint8)
        t.setflags(write=False)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "table", t)

    @classmethod
    def from_callable(cls, q: int, n: int, fn: Callable[[tuple], int]) -> "QFunc":
        pts = point_array(q, n)
        return cls(q, n, np.array([fn(tuple(int(v) for v in p)) % q for p in pts]))

    @classmethod
    def constant(cls, q: int, n: int, c: int = 0) -> "QFunc":
        return cls(q, n, np.full(q**n, c % q))

    def __call__(self, x: Sequence[int]) -> int:
        return int(self.table[point_index(x, self.q)])

    def __eq__(self, other):
        if not isinstance(other, QFunc):
            return NotImplemented
        return self.q == other.q and self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.q, self.n, self.table.tobytes()))

    def __add__(self, other: "QFunc") -> "QFunc":
        _check_same_shape(self, other)
        return QFunc(self.q, self.n, (self.table.astype(np.int64) + other.table) % self.q)

    def __sub__(self, other: "QFunc") -> "QFunc":
        _check_same_shape(self, other)
        return QFunc(self.q, self.n, (self.table.astype(np.int64) - other.table) % self.q)

    def key(self) -> bytes:
        return self.table.tobytes()

    def to_text(self) -> str:
        return serialize_qfunc(self)


def _check_same_shape(f: QFunc, g: QFunc):
    if f.q != g.q or f.n != g.n:
        raise ShapeMismatchError(f"functions on F_{f.q}^{f.n} and F_{g.q}^{g.n}")


def parse_qfunc(text: str) -> QFunc:
    """Parse the two-line ``.qf`` format: ``"<q> <n>"`` then the table digits."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 2:
        raise QFormatError(f"expected 2 lines, got {len(lines)}", line=max(len(lines), 1))
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise QFormatError("header must be '<q> <n>'", line=1)
    q, n = int(header[0]), int(header[1])
    try:
        check_prime(q)
    except ValueError as exc:
        raise QFormatError(str(exc), line=1, column=1) from None
    if n < 1:
        raise QFormatError("n must be at least 1", line=1, column=len(header[0]) + 2)
    body = lines[1]
    for col, ch in enumerate(body, start=1):
        if not ch.isdigit() or int(ch) >= q:
            raise QFormatError(f"bad digit {ch!r} for q={q}", line=2, column=col)
    if len(body) != q**n:
        raise QFormatError(f"table length {len(body)} != q^n = {q**n}", line=2)
    return QFunc(q, n, np.frombuffer(body.encode(), dtype=np.uint8) - ord("0"))


def serialize_qfunc(f: QFunc) -> str:
    return f"{f.q} {f.n}\n" + "".join(str(int(v)) for v in f.table) + "\n"


def read_qfunc(path) -> QFunc:
    with open(path, encoding="ascii") as fh:
        return parse_qfunc(fh.read())


def write_qfunc(f: QFunc, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_qfunc(f))


def hamming_distance(f: QFunc, g: QFunc) -> int:
    _check_same_shape(f, g)
    return int(np.count_nonzero(f.table != g.table))


def value_counts(f: QFunc) -> np.ndarray:
    return np.bincount(f.table, minlength=f.q)


def is_balanced(f: QFunc) -> bool:
    return bool(np.all(value_counts(f) == f.q ** (f.n - 1)))


@dataclass(frozen=True)
class AffineFunc:
    """``l(x) = <x, y> + a``."""

    y: tuple
    a: int = 0

    def table(self, q: int) -> np.ndarray:
        n = len(self.y)
        return (point_array(q, n) @ np.asarray(self.y, dtype=np.int64) + self.a) % q

    def as_qfunc(self, q: int) -> QFunc:
        return QFunc(q, len(self.y), self.table(q))


def all_affine(q: int, n: int):
    for y in itertools.product(range(q), repeat=n):
        for a in range(q):
            yield AffineFunc(y, a)


def matrix_rank_mod(m: np.ndarray, q: int) -> int:
    """Rank over F_q by Gaussian elimination."""
    a = np.array(m, dtype=np.int64) % q
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r, c]), None)
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, c]), -1, q)) % q
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] = (a[r] - a[r, c] * a[rank]) % q
        rank += 1
    return rank


@dataclass(frozen=True, eq=False)
class AffineTransform:
    """``A(x) = L x + u`` with ``L`` invertible over F_q."""

    q: int
    L: np.ndarray
    u: np.ndarray

    def __post_init__(self):
        L = np.asarray(self.L, dtype=np.int64) % self.q
        u = np.asarray(self.u, dtype=np.int64) % self.q
        n = L.shape[0]
        if L.shape != (n, n) or u.shape != (n,):
            raise ShapeMismatchError("L must be n x n and u of length n")
        if matrix_rank_mod(L, self.q) != n:
            raise ValueError("linear part is singular over F_q")
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "u", u)

    @property
    def n(self) -> int:
        return self.L.shape[0]

    def apply_points(self, pts: np.ndarray) -> np.ndarray:
        return (pts @ self.L.T + self.u) % self.q

    def compose(self, inner: "AffineTransform") -> "AffineTransform":
        """``(self o inner)(x) = L1 (L2 x + u2) + u1``."""
        return AffineTransform(self.q, self.L @ inner.L, self.L @ inner.u + self.u)

    @classmethod
    def identity(cls, q: int, n: int) -> "AffineTransform":
        return cls(q, np.eye(n, dtype=np.int64), np.zeros(n, dtype=np.int64))

    @classmethod
    def random(cls, q: int, n: int, rng: np.random.Generator) -> "AffineTransform":
        while True:
            L = rng.integers(0, q, size=(n, n))
            if matrix_rank_mod(L, q) == n:
                return cls(q, L, rng.integers(0, q, size=n))


def apply_affine_transform(
    f: QFunc, A: AffineTransform, ell: Optional[AffineFunc] = None
) -> QFunc:
    """``g(x) = f(L x + u) + l(x)``."""
    if A.q != f.q or A.n != f.n:
        raise ShapeMismatchError("transform and function disagree on (q, n)")
    pts = point_array(f.q, f.n)
    moved = A.apply_points(pts)
    weights = f.q ** np.arange(f.n)
    values = f.table[moved @ weights].astype(np.int64)
    if ell is not None:
        values = values + ell.table(f.q)
    return QFunc(f.q, f.n, values % f.q)


@dataclass(frozen=True)
class Isotopy:
    """Permutations ``(tau_0, tau_1, ..., tau_n)`` of ``{0..q-1}``, as tuples."""

    taus: tuple

    def __post_init__(self):
        taus = tuple(tuple(int(v) for v in t) for t in self.taus)
        q = len(taus[0]) if taus else 0
        for t in taus:
            if sorted(t) != list(range(q)):
                raise ValueError(f"{t} is not a permutation of 0..{q - 1}")
        object.__setattr__(self, "taus", taus)

    @property
    def arity(self) -> int:
        return len(self.taus) - 1

    def then(self, outer: "Isotopy") -> "Isotopy":
        """The isotopy equal to applying ``self`` first and ``outer`` second."""
        if outer.arity != self.arity:
            raise ShapeMismatchError("isotopies of different arity")
        # g = t0(f(t1 x)), h = s0(g(s1 x)) = s0 t0 f(t1 s1 x)
        t0 = tuple(outer.taus[0][v] for v in self.taus[0])
        inner = [
            tuple(self.taus[i][outer.taus[i][v]] for v in range(len(self.taus[0])))
            for i in range(1, len(self.taus))
        ]
        return Isotopy((t0, *inner))

    @classmethod
    def identity(cls, q: int, n: int) -> "Isotopy":
        return cls(tuple(tuple(range(q)) for _ in range(n + 1)))


def apply_isotopy_table(table: np.ndarray, q: int, n: int, iso: Isotopy) -> np.ndarray:
    if iso.arity != n:
        raise ShapeMismatchError(f"isotopy of arity {iso.arity} on a function of {n} variables")
    pts = point_array(q, n)
    moved = np.stack([np.asarray(iso.taus[i + 1])[pts[:, i]] for i in range(n)], axis=1)
    inner = np.asarray(table)[moved @ (q ** np.arange(n))]
    return np.asarray(iso.taus[0])[inner]


def apply_isotopy(f: QFunc, iso: Isotopy) -> QFunc:
    """``g(x_1..x_n) = tau_0(f(tau_1 x_1, ..., tau_n x_n))``."""
    return QFunc(f.q, f.n, apply_isotopy_table(f.table, f.q, f.n, iso))


# F_4 = {0, 1, a, a+1} with a^2 = a + 1, element x*a + y stored as 2x + y;
# addition is XOR of the bit pairs.
GF4_ADD = np.array([[i ^ j for j in range(4)] for i in range(4)], dtype=np.int64)


def _gf4_mul(i: int, j: int) -> int:
    # carry-less product reduced by a^2 = a + 1
    p = 0
    for k in range(2):
        if (j >> k) & 1:
            p ^= i << k
    if p & 4:
        p ^= 0b111
    return p


GF4_MUL = np.array([[_gf4_mul(i, j) for j in range(4)] for i in range(4)], dtype=np.int64)


def gf4_affine_table(coeffs: Sequence[int], const: int) -> np.ndarray:
    """``sum_i c_i x_i + const`` over F_4^n in the index convention of ``QFunc``."""
    n = len(coeffs)
    pts = point_array(4, n)
    out = np.full(4**n, const, dtype=np.int64)
    for i, c in enumerate(coeffs):
        out = GF4_ADD[out, GF4_MUL[c, pts[:, i]]]
    return out
