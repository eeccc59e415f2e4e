"""Explicit bent and plateaued families, the transformations that build new
plateaued functions from old ones, and quaternary quasigroups."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from .functions import GF4_ADD, QFunc, hamming_distance, point_array, point_index
from .spectrum import classify, walsh_transform
from .subspaces import Coset, affine_on


class ConstructionError(ValueError):
    pass


class OverlappingSupportsError(ConstructionError):
    def __init__(self, a, b):
        super().__init__(f"Walsh supports of family members {a} and {b} overlap")
        self.pair = (a, b)


def make_qn(q: int, n: int) -> QFunc:
    """``Q_n(v_1..v_n, u_1..u_n) = v_1 u_1 + ... + v_n u_n`` on F_q^(2n)."""
    pts = point_array(q, 2 * n)
    return QFunc(q, 2 * n, np.sum(pts[:, :n] * pts[:, n:], axis=1) % q)


def make_diag_squares(n: int) -> QFunc:
    pts = point_array(3, n)
    return QFunc(3, n, np.sum(pts * pts, axis=1) % 3)


def base_pair(q: int) -> Tuple[QFunc, QFunc]:
    """The minimal-distance seed pairs: (R, R') over F_2^4 and (T, T') over F_3."""
    if q == 2:
        R = QFunc.from_callable(2, 4, lambda x: (x[0] + x[1]) * (x[2] + x[3]) + x[0] + x[2])
        R2 = QFunc.from_callable(2, 4, lambda x: (x[0] + x[3]) * (x[2] + x[1]) + x[0] + x[2])
        return R, R2
    if q == 3:
        T = QFunc.from_callable(3, 1, lambda x: x[0] ** 2)
        T2 = QFunc.from_callable(3, 1, lambda x: x[0] + 2 * x[0] ** 2)
        return T, T2
    raise ConstructionError(f"no seed pair for q={q}")


def _check_permutation(table: Sequence[int], size: int, name: str) -> np.ndarray:
    t = np.asarray(table, dtype=np.int64)
    if t.shape != (size,) or sorted(t.tolist()) != list(range(size)):
        raise ConstructionError(f"{name} is not a bijection on {size} points")
    return t


def mm_plateaued(tau: Sequence[int], sigma: Sequence[int], f: QFunc, k: int) -> QFunc:
    """``F(x, y, z) = <tau(x), y> + <sigma(x^k), z> + f(x)`` on F_q^(2n+k).

    ``tau`` and ``sigma`` are bijections given as index tables on F_q^n and
    F_q^k; ``x^k`` is the first ``k`` coordinates of ``x``.  Variables are
    ordered ``x`` (fastest), then ``y``, then ``z``.
    """
    q, n = f.q, f.n
    if k < 0 or k > n:
        raise ConstructionError(f"need 0 <= k <= n, got k={k}, n={n}")
    tau = _check_permutation(tau, q**n, "tau")
    sigma = _check_permutation(sigma, q**k, "sigma")
    N = 2 * n + k
    pts = point_array(q, N)
    x, y, z = pts[:, :n], pts[:, n : 2 * n], pts[:, 2 * n :]
    xi = x @ (q ** np.arange(n))
    tx = point_array(q, n)[tau[xi]]
    xk = x[:, :k] @ (q ** np.arange(k)) if k else np.zeros(len(pts), dtype=np.int64)
    sx = point_array(q, k)[sigma[xk]] if k else np.zeros((len(pts), 0), dtype=np.int64)
    values = np.sum(tx * y, axis=1) + np.sum(sx * z, axis=1) + f.table[xi]
    return QFunc(q, N, values % q)


def mm_support(tau: Sequence[int], sigma: Sequence[int], q: int, n: int, k: int) -> set:
    """Predicted Walsh support ``{(u, tau(x), sigma(x^k))}`` as index set."""
    tau = np.asarray(tau)
    sigma = np.asarray(sigma)
    base = point_array(q, n)
    out = set()
    for xi in range(q**n):
        x = base[xi]
        v = base[tau[xi]]
        w = point_array(q, k)[sigma[point_index(x[:k], q)]] if k else ()
        for u in base:
            out.add(point_index(list(u) + list(v) + list(w), q))
    return out


def fix_coordinates(g: QFunc, a: Sequence[int]) -> QFunc:
    """``f(x, y) = g(x, a)`` for the last ``k = len(a)`` coordinates.

    ``W_f(u, v) = q^k theta(v) W_h(u)`` with ``h = g(., a)`` the slice on the
    first ``n`` coordinates, so the plateaued order of ``f`` is that of ``h``
    plus ``k``.
    """
    q = g.q
    k = len(a)
    if k == 0:
        return g
    n = g.n - k
    if n < 1:
        raise ConstructionError("must keep at least one free coordinate")
    offset = point_index(a, q) * q**n
    sl = g.table[offset : offset + q**n]
    return QFunc(q, g.n, np.tile(sl, q**k))


def slice_function(g: QFunc, a: Sequence[int]) -> QFunc:
    """``h(x) = g(x, a)`` as a function of the first ``n - len(a)`` variables."""
    q, k = g.q, len(a)
    n = g.n - k
    offset = point_index(a, q) * q**n
    return QFunc(q, n, g.table[offset : offset + q**n])


def extend_linear(f: QFunc, a: Sequence[int]) -> QFunc:
    """``g(x, y) = f(x) + <a, y>`` with ``k = len(a)`` new trailing variables."""
    q, n, k = f.q, f.n, len(a)
    if k == 0:
        return f
    ys = point_array(q, k) @ np.asarray(a, dtype=np.int64)
    values = f.table.astype(np.int64)[None, :] + ys[:, None]
    return QFunc(q, n + k, (values % q).reshape(-1))


def glue_disjoint(family: Mapping[tuple, QFunc], k: int, check: bool = True) -> QFunc:
    """``g(x, y) = f^(-y)(x)``: the member indexed by ``a = -y`` on each slice.

    ``family`` maps every ``a`` in F_q^k (as a tuple) to a function on F_q^n.
    With ``check`` the members must be plateaued of one order ``s >= k`` with
    pairwise disjoint Walsh supports, which makes ``g`` (s-k)-plateaued.
    """
    members = list(family.values())
    if not members:
        raise ConstructionError("empty family")
    q, n = members[0].q, members[0].n
    keys = [tuple(int(v) for v in a) for a in point_array(q, k)]
    missing = [a for a in keys if a not in family]
    if missing:
        raise ConstructionError(f"family is missing member(s) {missing[:3]}")
    for a in keys:
        if family[a].q != q or family[a].n != n:
            raise ConstructionError(f"member {a} lives on a different space")
    if check:
        supports = {}
        orders = set()
        for a in keys:
            spec = walsh_transform(family[a])
            supports[a] = spec.nonzero
            orders.add(classify(family[a]).plateaued_s)
        for i, a in enumerate(keys):
            for b in keys[i + 1 :]:
                if np.any(supports[a] & supports[b]):
                    raise OverlappingSupportsError(a, b)
        if None in orders or len(orders) != 1:
            raise ConstructionError(f"members must share one plateaued order, got {sorted(map(str, orders))}")
        s = orders.pop()
        if s < k:
            raise ConstructionError(f"gluing over k={k} needs order s >= k, got s={s}")
    slices = []
    for y in point_array(q, k):
        a = tuple(int(v) for v in (-y) % q)
        slices.append(family[a].table)
    return QFunc(q, n + k, np.concatenate(slices))


def subspace_modification(f: QFunc, C: Coset, c: int) -> QFunc:
    """``f + c * chi[C]`` for an s-plateaued ``f`` affine on ``C`` with
    ``dim C = (s + n) / 2``; the result is again s-plateaued."""
    q = f.q
    if c % q == 0:
        raise ConstructionError("c must be nonzero")
    s = classify(f).plateaued_s
    if s is None:
        raise ConstructionError("f is not plateaued")
    if (s + f.n) % 2 or C.dim != (s + f.n) // 2:
        raise ConstructionError(f"coset dimension {C.dim} != (s + n) / 2 with s={s}, n={f.n}")
    if affine_on(f, C) is None:
        raise ConstructionError("f is not affine on the coset")
    t = f.table.astype(np.int64)
    idx = C.indices()
    t[idx] = (t[idx] + c) % q
    return QFunc(q, f.n, t)


@dataclass(frozen=True)
class PlateauedPairSpec:
    q: int
    s: int
    t: int

    def __post_init__(self):
        if self.q not in (2, 3):
            raise ConstructionError("minimal pairs are built for q in {2, 3}")
        if self.t < 0 or self.s < (2 if self.q == 2 else 0):
            raise ConstructionError(f"invalid (q, s, t) = ({self.q}, {self.s}, {self.t})")

    @property
    def n(self) -> int:
        return (2 if self.q == 2 else 1) + self.s + 2 * self.t

    @property
    def k1(self) -> int:
        return self.s - 2 + self.t if self.q == 2 else self.s + self.t

    @property
    def k2(self) -> int:
        return self.t

    @property
    def distance(self) -> int:
        if self.q == 2:
            return 2 ** ((self.s + self.n - 2) // 2)
        return 3 ** ((self.s + self.n - 1) // 2)


def minimal_pair(spec: PlateauedPairSpec) -> Tuple[QFunc, QFunc]:
    """Two s-plateaued functions of ``spec.n`` variables at the minimum distance.

    Extend the seed pair linearly over ``k1`` coordinates, then glue the
    members ``g_a`` with ``a = (b, 0, ..., 0)`` over ``k2`` coordinates; the
    second function swaps ``g_0`` for its partner ``g'_0``.
    """
    q, k1, k2 = spec.q, spec.k1, spec.k2
    base, partner = base_pair(q)

    def g(seed: QFunc, a: Sequence[int]) -> QFunc:
        return extend_linear(seed, a)

    family: Dict[tuple, QFunc] = {}
    for b in point_array(q, k2):
        a = tuple(int(v) for v in b) + (0,) * (k1 - k2)
        family[tuple(int(v) for v in b)] = g(base, a)
    zero = (0,) * k2
    swapped = dict(family)
    swapped[zero] = g(partner, (0,) * k1)
    if k2 == 0:
        return family[()], swapped[()]
    return glue_disjoint(family, k2), glue_disjoint(swapped, k2)


# -- quaternary quasigroups ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class Q4Func:
    """Function F_4^n -> F_4, element ``(x, y)`` of F_2^2 encoded as ``2x + y``."""

    n: int
    table: np.ndarray = field(repr=False)

    q = 4

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (4**self.n,) or t.min() < 0 or t.max() > 3:
            raise ConstructionError(f"a Q4Func of {self.n} variables needs {4**self.n} values in 0..3")
        t = t.astype(np.uint8)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    def __eq__(self, other):
        return isinstance(other, Q4Func) and self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((4, self.n, self.table.tobytes()))

    def to_text(self) -> str:
        return f"4 {self.n}\n" + "".join(str(int(v)) for v in self.table) + "\n"


def semilinear_quasigroup(b: QFunc) -> Q4Func:
    """``f((x_1, y_1), ..., (x_n, y_n)) = (x_1 + ... + x_n, y_1 + ... + y_n + b(x_1, ..., x_n))``.

    The Boolean function sits in the second component, fed by the first bits;
    putting ``b(y)`` there alone would not give a quasigroup (fixing all but
    one argument must leave a bijection of F_4).  ``b = 0`` gives the linear
    quasigroup.
    """
    if b.q != 2:
        raise ConstructionError("b must be Boolean")
    n = b.n
    pts = point_array(4, n)
    hi, lo = pts >> 1, pts & 1
    sx = np.bitwise_xor.reduce(hi, axis=1)
    sy = np.bitwise_xor.reduce(lo, axis=1)
    return Q4Func(n, 2 * sx + (sy ^ b.table[hi @ (2 ** np.arange(n))]))


def is_latin_table(table: np.ndarray, q: int, n: int) -> bool:
    """Every restriction to a line (one free coordinate) is a bijection."""
    cube = np.asarray(table).reshape((q,) * n)
    for axis in range(n):
        srt = np.sort(cube, axis=axis)
        expect = np.arange(q).reshape([q if j == axis else 1 for j in range(n)])
        if not np.all(srt == expect):
            return False
    return True


def is_quasigroup(f) -> bool:
    return is_latin_table(f.table, f.q, f.n)


def chain_quasigroup(h: Q4Func, m: int) -> Q4Func:
    """``H(x_1..x_m) = h(x_1, h(x_2, ..., h(x_{m-1}, x_m)...))``."""
    if h.n != 2 or not is_latin_table(h.table, 4, 2):
        raise ConstructionError("h must be a Latin square (binary quasigroup of order 4)")
    if m < 2:
        raise ConstructionError("arity must be at least 2")
    op = h.table.reshape(4, 4).T  # op[x1, x2] = h(x1, x2)
    pts = point_array(4, m)
    acc = pts[:, m - 1]
    for i in range(m - 2, -1, -1):
        acc = op[pts[:, i], acc]
    return Q4Func(m, acc)


def linear_quasigroup(n: int) -> Q4Func:
    pts = point_array(4, n)
    acc = np.zeros(len(pts), dtype=np.int64)
    for i in range(n):
        acc = GF4_ADD[acc, pts[:, i]]
    return Q4Func(n, acc)


def pair_distance(pair: Tuple[QFunc, QFunc]) -> int:
    return hamming_distance(*pair)
