"""Exact arithmetic in the ring Z[xi] of cyclotomic integers, xi = exp(2*pi*i/q), q prime.

Scalars are :class:`CycInt` values held in the canonical basis
``1, xi, ..., xi^(q-2)``.  Array helpers at the bottom of the module work on
numpy arrays in the *full* basis ``1, xi, ..., xi^(q-1)`` (trailing axis of
length ``q``); those are what the fast transform and the exhaustive scans use.
"""
from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np


class InvalidModulusError(ValueError):
    pass


class ModulusMismatchError(ValueError):
    pass


class UnsupportedExactRealError(ValueError):
    pass


@lru_cache(maxsize=None)
def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


def check_prime(q) -> int:
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)) or not is_prime(int(q)):
        raise InvalidModulusError(f"modulus must be a prime, got {q!r}")
    return int(q)


class CycInt:
    """Immutable element of Z[xi_q] in canonical form.

    ``coeffs[j]`` is the coefficient of ``xi^j`` for ``j < q - 1``; the
    relation ``1 + xi + ... + xi^(q-1) = 0`` has already been applied.
    """

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Iterable[int] = ()):
        q = check_prime(q)
        c = [int(v) for v in coeffs]
        if len(c) > q - 1:
            # fold anything of degree >= q-1 back into the basis
            full = [0] * q
            for j, v in enumerate(c):
                full[j % q] += v
            top = full[q - 1]
            c = [v - top for v in full[: q - 1]]
        else:
            c = c + [0] * (q - 1 - len(c))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def from_full(cls, q: int, full: Sequence[int]) -> "CycInt":
        """Build from coefficients of ``1, xi, ..., xi^(q-1)``."""
        top = int(full[q - 1])
        return cls(q, [int(full[j]) - top for j in range(q - 1)])

    @classmethod
    def integer(cls, q: int, n: int) -> "CycInt":
        return cls(q, [n])

    # ring structure

    def _check(self, other) -> "CycInt":
        if isinstance(other, (int, np.integer)):
            return CycInt.integer(self.q, int(other))
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.q != self.q:
            raise ModulusMismatchError(f"cannot combine q={self.q} with q={other.q}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycInt(self.q, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.q, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycInt(self.q, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        q = self.q
        full = [0] * q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    full[(i + j) % q] += a * b
        return CycInt.from_full(q, full)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in Z[xi]")
        result = CycInt.integer(self.q, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = CycInt.integer(self.q, int(other))
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CycInt({self.q}, {list(self.coeffs)})"

    def __str__(self):
        return f"{self.q}:{list(self.coeffs)}"

    def full(self) -> Tuple[int, ...]:
        """Coefficients in the full basis with a zero in the ``xi^(q-1)`` slot."""
        return self.coeffs + (0,)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.q)
        return sum(c * z**j for j, c in enumerate(self.coeffs))


def parse_cycint(text: str) -> CycInt:
    """Inverse of ``str(CycInt)``: ``"3:[0, -3]"``."""
    head, _, body = text.partition(":")
    body = body.strip()
    if not body.startswith("[") or not body.endswith("]"):
        raise ValueError(f"malformed cyclotomic integer {text!r}")
    inner = body[1:-1].strip()
    coeffs = [int(v) for v in inner.split(",")] if inner else []
    q = check_prime(int(head))
    if len(coeffs) != q - 1:
        raise ValueError(f"expected {q - 1} coefficients, got {len(coeffs)}")
    return CycInt(q, coeffs)


def cyc_root(q: int, k: int) -> CycInt:
    """Canonical form of ``xi^k``."""
    q = check_prime(q)
    full = [0] * q
    full[k % q] = 1
    return CycInt.from_full(q, full)


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def cyc_sub(a: CycInt, b: CycInt) -> CycInt:
    return a - b


def cyc_neg(a: CycInt) -> CycInt:
    return -a


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def cyc_conj(a: CycInt) -> CycInt:
    """Complex conjugation, ``xi^k -> xi^(q-k)``."""
    q = a.q
    full = [0] * q
    for j, c in enumerate(a.coeffs):
        full[(-j) % q] += c
    return CycInt.from_full(q, full)


def cyc_norm_sq(a: CycInt) -> CycInt:
    return a * cyc_conj(a)


def as_rational_integer(a: CycInt) -> Optional[int]:
    if any(a.coeffs[1:]):
        return None
    return a.coeffs[0]


def unit_decompose(a: CycInt) -> Optional[Tuple[int, int]]:
    """Return ``(c, b)`` with ``a == c * xi^b``, or ``None``.

    Zero decomposes as ``(0, 0)``.  For ``q = 2`` every element is an integer
    and the sign is moved into the root so that ``c >= 0``.
    """
    q = a.q
    if q == 2:
        v = a.coeffs[0]
        return (v, 0) if v >= 0 else (-v, 1)
    full = a.full()
    # c*xi^b has full-basis form t*(1,...,1) + c*e_b; at most one slot differs
    for b in range(q):
        others = [full[j] for j in range(q) if j != b]
        if all(v == others[0] for v in others):
            c = full[b] - others[0]
            if c == 0:
                return (0, 0)
            return (c, b)
    return None


def divisible_by(a: CycInt, p: int) -> bool:
    if p < 1:
        raise ValueError("divisor must be positive")
    return all(c % p == 0 for c in a.coeffs)


def twice_real_part(a: CycInt) -> int:
    """Exact ``2 * Re(a)``; only defined for ``q`` in ``{2, 3}``."""
    if a.q == 2:
        return 2 * a.coeffs[0]
    if a.q == 3:
        c0, c1 = a.coeffs
        return 2 * c0 - c1
    raise UnsupportedExactRealError(
        f"real parts are irrational for q={a.q}; compare norm_sq instead"
    )


# ---------------------------------------------------------------------------
# full-basis array helpers
#
# An array ``A`` of shape (..., q) stands for sum_j A[..., j] * xi^j.  Two such
# arrays denote the same cyclotomic integer iff their difference is constant
# along the last axis.


def full_dtype(bound: int):
    """int64 while ``bound`` (a bound on |coefficients|) is safely representable."""
    return np.int64 if bound < 2**62 else object


def canonical_array(full: np.ndarray) -> np.ndarray:
    return full[..., :-1] - full[..., -1:]


def roll_root(full: np.ndarray, k: int) -> np.ndarray:
    """Multiply every entry by ``xi^k``."""
    return np.roll(full, k % full.shape[-1], axis=-1)


def conj_array(full: np.ndarray) -> np.ndarray:
    q = full.shape[-1]
    idx = [(-j) % q for j in range(q)]
    return full[..., idx]


def mul_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entrywise ring product of two full-basis arrays (broadcasting)."""
    q = a.shape[-1]
    out = None
    for j in range(q):
        term = a[..., j : j + 1] * roll_root(b, j)
        out = term if out is None else out + term
    return out


def norm_sq_full(full: np.ndarray) -> np.ndarray:
    """``|a|^2`` of each entry in the full basis (the cyclic autocorrelation)."""
    q = full.shape[-1]
    return np.stack([np.sum(full * roll_root(full, -k), axis=-1) for k in range(q)], axis=-1)


def norm_sq_array(full: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Return ``(value, is_integer)`` for ``|a|^2`` of each entry.

    ``|a|^2 = sum_k r_k xi^k`` with ``r_k`` the cyclic autocorrelation of the
    coefficients; it is the rational integer ``r_0 - r_1`` iff
    ``r_1 = ... = r_{q-1}``.
    """
    q = full.shape[-1]
    r = [np.sum(full * roll_root(full, -k), axis=-1) for k in range(q)]
    if q == 2:
        return r[0] - r[1], np.ones_like(r[0], dtype=bool)
    is_int = np.ones(r[0].shape, dtype=bool)
    for k in range(2, q):
        is_int &= r[k] == r[1]
    return r[0] - r[1], is_int


def is_zero_array(full: np.ndarray) -> np.ndarray:
    return np.all(full == full[..., :1], axis=-1)


def equals_scaled_root(full: np.ndarray, scale: int) -> Tuple[np.ndarray, np.ndarray]:
    """Test each entry for the form ``scale * xi^a``.

    Returns ``(matches, a)`` where ``a`` is the exponent for matching entries.
    """
    q = full.shape[-1]
    matches = np.zeros(full.shape[:-1], dtype=bool)
    which = np.zeros(full.shape[:-1], dtype=np.int64)
    for a in range(q):
        shifted = full.copy()
        shifted[..., a] = shifted[..., a] - scale
        hit = is_zero_array(shifted) & ~matches
        which[hit] = a
        matches |= hit
    return matches, which


def to_cycints(full: np.ndarray) -> list:
    """Flatten a full-basis array into a list of :class:`CycInt`."""
    q = full.shape[-1]
    flat = full.reshape(-1, q)
    return [CycInt.from_full(q, row) for row in flat.tolist()]


def from_cycints(values: Sequence[CycInt], q: int) -> np.ndarray:
    rows = [v.full() for v in values]
    bound = max((abs(c) for r in rows for c in r), default=0)
    return np.array(rows, dtype=full_dtype(bound)).reshape(len(rows), q)
