"""Linear algebra over F_q: subspaces in reduced row-echelon form, cosets,
duals, isotropic subspaces of quadratic forms, and restrictions to cosets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from .cyclotomic import CycInt, check_prime
from .functions import AffineFunc, QFunc, point_array, point_index


def rref(rows: Sequence[Sequence[int]], q: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    """Reduced row-echelon form over F_q with zero rows dropped."""
    a = np.array(rows, dtype=np.int64).reshape(-1, n) % q
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, a.shape[0]) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, q)) % q
        for i in range(a.shape[0]):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % q
        r += 1
        if r == a.shape[0]:
            break
    return tuple(tuple(int(v) for v in row) for row in a[:r])


@dataclass(frozen=True)
class Subspace:
    q: int
    n: int
    basis: Tuple[Tuple[int, ...], ...]

    @classmethod
    def span(cls, q: int, n: int, vectors: Sequence[Sequence[int]] = ()) -> "Subspace":
        check_prime(q)
        if not len(vectors):
            return cls(q, n, ())
        return cls(q, n, rref(vectors, q, n))

    @classmethod
    def full(cls, q: int, n: int) -> "Subspace":
        return cls(q, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, v in enumerate(row) if v) for row in self.basis)

    def points(self) -> np.ndarray:
        """All ``q^dim`` elements as rows."""
        if not self.basis:
            return np.zeros((1, self.n), dtype=np.int64)
        coords = point_array(self.q, self.dim)
        return (coords @ np.array(self.basis, dtype=np.int64)) % self.q

    def contains(self, v: Sequence[int]) -> bool:
        return Subspace.span(self.q, self.n, list(self.basis) + [list(v)]).dim == self.dim

    def reduce(self, v: Sequence[int]) -> Tuple[int, ...]:
        """Canonical coset representative: zero out the pivot coordinates."""
        w = np.array(v, dtype=np.int64) % self.q
        for row, p in zip(self.basis, self.pivots):
            if w[p]:
                w = (w - w[p] * np.array(row)) % self.q
        return tuple(int(x) for x in w)

    def to_json(self) -> list:
        return [list(r) for r in self.basis]


@dataclass(frozen=True)
class Coset:
    subspace: Subspace
    rep: Tuple[int, ...]

    @classmethod
    def of(cls, subspace: Subspace, rep: Sequence[int]) -> "Coset":
        return cls(subspace, subspace.reduce(rep))

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def points(self) -> np.ndarray:
        return (self.subspace.points() + np.array(self.rep, dtype=np.int64)) % self.subspace.q

    def indices(self) -> np.ndarray:
        q = self.subspace.q
        return self.points() @ (q ** np.arange(self.subspace.n))

    def indicator(self) -> np.ndarray:
        s = self.subspace
        chi = np.zeros(s.q**s.n, dtype=np.int64)
        chi[self.indices()] = 1
        return chi


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(q: int, n: int, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of F_q^n exactly once, via RREF shapes."""
    check_prime(q)
    if k < 0 or k > n:
        return
    for pivots in itertools.combinations(range(n), k):
        # free slots: row r, column c > pivots[r], c not a pivot
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            m = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                m[r][p] = 1
            for (r, c), v in zip(free, values):
                m[r][c] = v
            yield Subspace(q, n, tuple(tuple(row) for row in m))


def enumerate_cosets(S: Subspace) -> Iterator[Coset]:
    free = [c for c in range(S.n) if c not in S.pivots]
    for values in itertools.product(range(S.q), repeat=len(free)):
        rep = [0] * S.n
        for c, v in zip(free, values):
            rep[c] = v
        yield Coset(S, tuple(rep))


def dual_subspace(S: Subspace) -> Subspace:
    """``{y : <x, y> = 0 for all x in S}``, read off the RREF null space."""
    q, n = S.q, S.n
    pivots = S.pivots
    free = [c for c in range(n) if c not in pivots]
    vectors = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, p in zip(S.basis, pivots):
            v[p] = (-row[f]) % q
        vectors.append(v)
    return Subspace.span(q, n, vectors)


def totally_isotropic_subspaces(Qf: QFunc, dim: int) -> Iterator[Subspace]:
    """All ``dim``-dimensional subspaces on which ``Qf`` vanishes identically.

    Grows isotropic subspaces one basis vector at a time and deduplicates each
    level by RREF.
    """
    q, m = Qf.q, Qf.n
    if Qf.table[0] != 0:
        raise ValueError("a quadratic form must vanish at the origin")
    zero_mask = Qf.table == 0
    pts = point_array(q, m)
    weights = q ** np.arange(m)
    candidates = [tuple(int(v) for v in pts[i]) for i in np.flatnonzero(zero_mask) if i]

    level = {()}
    for _ in range(dim):
        nxt = set()
        for basis in level:
            S = Subspace(q, m, basis)
            span_pts = S.points()
            for v in candidates:
                if S.basis and S.contains(v):
                    continue
                vv = np.array(v, dtype=np.int64)
                ok = True
                for c in range(1, q):
                    shifted = (span_pts + c * vv) % q
                    if not zero_mask[shifted @ weights].all():
                        ok = False
                        break
                if ok:
                    nxt.add(rref(list(basis) + [v], q, m))
        level = nxt
    for basis in sorted(level):
        yield Subspace(q, m, basis)


def affine_on(f: QFunc, C: Coset) -> Optional[AffineFunc]:
    """If ``f`` restricted to ``C`` is affine in the coset coordinates, return it.

    Coset coordinates ``t`` parametrize ``rep + sum_r t_r basis_r``.  The
    returned :class:`AffineFunc` has ``y`` = coefficients on ``t`` and ``a`` =
    the value at ``rep``.
    """
    q = f.q
    values = f.table[C.indices()].astype(np.int64)
    c0 = int(values[0])
    k = C.dim
    # index of basis_r in the enumeration of C.points() is q^r
    alphas = tuple(int((values[q**r] - c0) % q) for r in range(k))
    expected = AffineFunc(alphas, c0).table(q) if k else np.array([c0])
    if np.array_equal(values % q, expected):
        return AffineFunc(alphas, c0)
    return None


def poisson_check(f: QFunc, C: Coset) -> Tuple[CycInt, CycInt]:
    """Both sides of the shifted Poisson summation formula.

    ``lhs = sum_{y in a + G} W_f(y)`` from the fast transform;
    ``rhs = q^dim(G) * sum_{x in G^perp} xi^(f(x) - <x, a>)`` by direct summation.
    """
    from .spectrum import walsh_transform

    q = f.q
    W = walsh_transform(f)
    lhs = CycInt(q)
    for i in C.indices():
        lhs = lhs + W[int(i)]
    a = C.rep
    acc = [0] * q
    for x in dual_subspace(C.subspace).points():
        e = int(f.table[point_index(x, q)]) - int(np.dot(x, a))
        acc[e % q] += 1
    rhs = CycInt.from_full(q, acc) * q**C.dim
    return lhs, rhs
