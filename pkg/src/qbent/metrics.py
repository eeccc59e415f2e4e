"""Nonlinearity, strong nonlinearity, correlation immunity and Walsh divisibility."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .cyclotomic import UnsupportedExactRealError, canonical_array, is_zero_array, roll_root
from .functions import (
    GF4_ADD,
    QFunc,
    gf4_affine_table,
    hamming_weight,
    inner_product_matrix,
    is_balanced,
    point_array,
)
from .spectrum import classify, walsh_batch, walsh_transform


class BudgetExceededError(RuntimeError):
    pass


class PreconditionError(ValueError):
    pass


DEFAULT_BUDGET = 10**8


def nonlinearity_batch(tables: np.ndarray, q: int, n: int) -> np.ndarray:
    """``q^n - max_{y,a} #{x : f(x) - <x,y> = a}`` for each row of ``tables``."""
    tables = np.atleast_2d(np.asarray(tables, dtype=np.int64))
    M = inner_product_matrix(q, n)
    best = np.zeros(tables.shape[0], dtype=np.int64)
    for y in range(q**n):
        diff = (tables - M[:, y]) % q
        for a in range(q):
            best = np.maximum(best, np.count_nonzero(diff == a, axis=1))
    return q**n - best


def nonlinearity(f: QFunc) -> int:
    return int(nonlinearity_batch(f.table[None], f.q, f.n)[0])


def nonlinearity_from_spectrum(full: np.ndarray, q: int, n: int) -> np.ndarray:
    """Spectral nonlinearity for a batch of full-basis spectra, ``q`` in {2, 3}."""
    if q == 2:
        w = full[..., 0] - full[..., 1]
        return 2 ** (n - 1) - np.abs(w).max(axis=-1) // 2
    if q == 3:
        # 2 Re(xi^a W) = 2 c_a - c_{a+1} - c_{a+2} in the full basis, after rolling by a
        best = None
        for a in range(3):
            r = roll_root(full, a)
            twice_re = 2 * r[..., 0] - r[..., 1] - r[..., 2]
            best = twice_re if best is None else np.maximum(best, twice_re)
        top = best.max(axis=-1)
        # nl = 2 * 3^(n-1) - (2/3) max Re = 2 * 3^(n-1) - max(2 Re) / 3
        if np.any(top % 3):
            raise ArithmeticError("non-integral spectral nonlinearity")
        return 2 * 3 ** (n - 1) - top // 3
    raise UnsupportedExactRealError(f"spectral nonlinearity needs q in {{2, 3}}, got {q}")


def nonlinearity_spectral(f: QFunc) -> int:
    return int(nonlinearity_from_spectrum(walsh_transform(f).full[None], f.q, f.n)[0])


# -- strong nonlinearity ------------------------------------------------------


def _group_add(q: int) -> np.ndarray:
    if q == 4:
        return GF4_ADD
    return np.add.outer(np.arange(q), np.arange(q)) % q


def _affine_tables(q: int, n: int) -> np.ndarray:
    """Every affine function over F_q^n (F_4 when ``q == 4``)."""
    rows = []
    for coeffs in itertools.product(range(q), repeat=n):
        for c in range(q):
            if q == 4:
                rows.append(gf4_affine_table(coeffs, c))
            else:
                rows.append((point_array(q, n) @ np.array(coeffs) + c) % q)
    return np.array(rows, dtype=np.int64)


def _best_outer_agreement(f: np.ndarray, inner: np.ndarray, q: int) -> np.ndarray:
    """``max over tau_0`` of ``#{x : f(x) = tau_0(inner(x))}`` per row of ``inner``."""
    counts = np.zeros((inner.shape[0], q, q), dtype=np.int64)
    for a in range(q):
        fa = f == a
        for b in range(q):
            counts[:, a, b] = np.count_nonzero((inner == b) & fa, axis=1)
    perms = np.array(list(itertools.permutations(range(q))))
    # tau_0 maps b -> perms[p][b]; agreement = sum_b counts[perms[p][b], b]
    cols = np.arange(q)
    scores = counts[:, perms, cols]  # (rows, q!, q)
    return scores.sum(axis=-1).max(axis=-1)


def strong_nonlinearity_table(
    table: np.ndarray, q: int, n: int, budget: int = DEFAULT_BUDGET, method: str = "reduced"
) -> int:
    """Distance from ``table`` to all isotopes of affine functions.

    ``method="brute"`` walks every affine function and every isotopy.
    ``method="reduced"`` uses that ``c * x_i`` with ``c != 0`` is itself a
    permutation of ``x_i`` and additive constants are permutations of the
    output, so it suffices to take the sums ``sum_{i in S} x_i`` over subsets
    ``S`` and permute only the coordinates in ``S``.
    """
    f = np.asarray(table, dtype=np.int64)
    size = q**n
    perms_q = math.factorial(q)
    add = _group_add(q)
    pts = point_array(q, n)
    if method == "brute":
        bases = list(_affine_tables(q, n))
        cost = len(bases) * perms_q**n * size * perms_q
        free_sets = [tuple(range(n))] * len(bases)
    elif method == "reduced":
        bases, free_sets = [], []
        for k in range(n + 1):
            for S in itertools.combinations(range(n), k):
                b = np.zeros(size, dtype=np.int64)
                for i in S:
                    b = add[b, pts[:, i]]
                bases.append(b)
                free_sets.append(S)
        cost = sum(perms_q ** len(S) for S in free_sets) * size * perms_q
    else:
        raise ValueError(f"unknown method {method!r}")
    if cost > budget:
        raise BudgetExceededError(f"strong nonlinearity needs ~{cost} steps, budget is {budget}")

    best = 0
    for base, S in zip(bases, free_sets):
        for inner in _inner_isotopes(base, q, n, S):
            best = max(best, int(_best_outer_agreement(f, inner, q).max()))
            if best == size:
                return 0
    return size - best


def _inner_isotopes(base, q, n, S, chunk: int = 4096):
    """Yield blocks of ``base`` with the coordinates in ``S`` permuted, over all
    choices of those permutations."""
    if not S:
        yield base[None]
        return
    pts = point_array(q, n)
    weights = q ** np.arange(n)
    perms = np.array(list(itertools.permutations(range(q))))
    combos = itertools.product(range(len(perms)), repeat=len(S))
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return
        idx = np.array(block)
        moved = np.broadcast_to(pts, (len(block),) + pts.shape).copy()
        for j, i in enumerate(S):
            moved[:, :, i] = perms[idx[:, j][:, None], pts[None, :, i]]
        yield base[moved @ weights]


def strong_nonlinearity(f, budget: int = DEFAULT_BUDGET, method: str = "reduced") -> int:
    """Strong nonlinearity of a :class:`QFunc` or quaternary ``Q4Func``."""
    return strong_nonlinearity_table(f.table, f.q, f.n, budget=budget, method=method)


# -- correlation immunity ----------------------------------------------------


def correlation_immunity(f: QFunc) -> int:
    """Largest ``m`` in ``1..n-1`` such that, for every value, its count is the
    same on every face obtained by fixing ``m`` coordinates; 0 if none."""
    return correlation_immunity_table(f.table, f.q, f.n)


def correlation_immunity_table(table: np.ndarray, q: int, n: int) -> int:
    # axis j of the reshaped cube is coordinate x_{n-j}
    cube = np.asarray(table).reshape((q,) * n)
    best = 0
    for m in range(1, n):
        ok = True
        for fixed in itertools.combinations(range(n), m):
            free_axes = tuple(j for j in range(n) if j not in fixed)
            for a in range(q):
                counts = np.count_nonzero(cube == a, axis=free_axes)
                if not np.all(counts == counts.flat[0]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = m
    return best


def correlation_immunity_spectral(f: QFunc) -> int:
    """``min{wt(u) : W_f(u) != 0} - 1`` for balanced ``f``."""
    if not is_balanced(f):
        raise PreconditionError("the spectral formula only holds for balanced functions")
    spec = walsh_transform(f)
    pts = point_array(f.q, f.n)
    weights = [hamming_weight(pts[i]) for i in np.flatnonzero(spec.nonzero)]
    return min(weights) - 1


def walsh_divisibility_order(f: QFunc) -> int:
    return divisibility_order_batch(walsh_transform(f).full[None], f.q)[0]


def divisibility_order_batch(full: np.ndarray, q: int) -> list:
    """Largest ``k`` with every coefficient of every ``W(z)`` divisible by ``q^k``."""
    canon = canonical_array(full).reshape(full.shape[0], -1)
    out = []
    for row in canon:
        g = 0
        for v in row.tolist():
            g = np.gcd(g, int(v))
        k = 0
        while g and g % q ** (k + 1) == 0:
            k += 1
        out.append(k)
    return out


# -- nonlinearity / correlation immunity tradeoff ------------------------------


def tradeoff_bound(q: int, n: int, cor: int):
    """Upper bound on nl of a balanced function with correlation immunity ``cor``."""
    if q == 2:
        return 2 ** (n - 1) - 2 ** (cor + 1)
    if q == 3:
        return 2 * 3 ** (n - 1) - Fraction(3) ** (cor - 1)
    raise UnsupportedExactRealError(f"no tradeoff bound for q={q}")


def ternary_nl_bound_holds(nl: int, n: int) -> bool:
    """Exact test of ``nl <= 2 * 3^(n-1) - 3^(n/2 - 1)``, also for odd ``n``."""
    gap = 2 * 3 ** (n - 1) - nl
    # gap >= 3^(n/2 - 1)  <=>  gap >= 0 and 9 * gap^2 >= 3^n
    return gap >= 0 and 9 * gap * gap >= 3**n


@dataclass
class TradeoffCheck:
    bound: object
    nl: int
    cor: int
    holds: bool
    equality: bool
    equality_implies_plateaued: bool
    plateaued_s: Optional[int] = None


def tarannikov_check(f: QFunc) -> TradeoffCheck:
    if f.q not in (2, 3):
        raise UnsupportedExactRealError(f"tradeoff bound only stated for q in {{2, 3}}, got {f.q}")
    if not is_balanced(f):
        raise PreconditionError("the tradeoff bound needs a balanced function")
    cor = correlation_immunity(f)
    if f.q == 2 and cor > f.n - 2:
        raise PreconditionError("binary bound needs cor(f) <= n - 2")
    nl = nonlinearity(f)
    bound = tradeoff_bound(f.q, f.n, cor)
    equality = nl == bound
    s = classify(f).plateaued_s if equality else None
    return TradeoffCheck(
        bound=bound,
        nl=nl,
        cor=cor,
        holds=nl <= bound,
        equality=equality,
        equality_implies_plateaued=(not equality) or s is not None,
        plateaued_s=s,
    )


@dataclass
class MetricReport:
    nl: int
    cor: int
    balanced: bool
    divisibility_order: int
    nl_bound_ternary: Optional[Fraction] = None
    strong_nl: Optional[int] = None


def metric_report(f: QFunc, strong: bool = False, budget: int = DEFAULT_BUDGET) -> MetricReport:
    balanced = is_balanced(f)
    cor = correlation_immunity(f)
    return MetricReport(
        nl=nonlinearity(f),
        cor=cor,
        balanced=balanced,
        divisibility_order=walsh_divisibility_order(f),
        nl_bound_ternary=tradeoff_bound(3, f.n, cor) if f.q == 3 and balanced else None,
        strong_nl=strong_nonlinearity(f, budget=budget) if strong else None,
    )


def spectral_support_weights(full: np.ndarray, q: int, n: int) -> np.ndarray:
    """Minimum Hamming weight of the Walsh support per spectrum in a batch."""
    pts = point_array(q, n)
    wt = np.count_nonzero(pts, axis=1)
    nz = ~is_zero_array(full)
    return np.where(nz, wt[None, :], n + 1).min(axis=-1)


def cor_batch(tables: np.ndarray, q: int, n: int) -> np.ndarray:
    return np.array([correlation_immunity_table(t, q, n) for t in np.atleast_2d(tables)])

