"""Randomized instance checks for the plateaued constructions.

Each ``check_*`` draws one instance from ``rng``, builds the function, and
returns True when both the spectral identity and the plateaued-order claim
hold exactly.  Shared by the unit tests and the acceptance runner.
"""
import numpy as np

from qbent.constructions import (
    base_pair,
    extend_linear,
    fix_coordinates,
    glue_disjoint,
    make_diag_squares,
    make_qn,
    mm_plateaued,
    mm_support,
    slice_function,
)
from qbent.cyclotomic import is_zero_array, roll_root
from qbent.functions import AffineFunc, AffineTransform, QFunc, apply_affine_transform, point_array
from qbent.spectrum import classify, walsh_transform


def _index(parts, q):
    """Point index of a concatenation of coordinate blocks given as block indices."""
    out, shift = 0, 1
    for idx, length in parts:
        out += idx * shift
        shift *= q**length
    return out


def _spectrum(f):
    return walsh_transform(f).full


def _same(a, b):
    return bool(np.all(is_zero_array(np.asarray(a) - np.asarray(b))))


def random_plateaued(rng, q, n):
    """A random function that is plateaued about half the time."""
    if rng.random() < 0.5:
        return QFunc(q, n, rng.integers(0, q, size=q**n))
    seeds = [AffineFunc(tuple(rng.integers(0, q, size=n).tolist()), 0).as_qfunc(q)]
    if n % 2 == 0:
        seeds.append(make_qn(q, n // 2))
    if q == 3:
        seeds.append(make_diag_squares(n))
    if q == 2 and n == 4:
        seeds.append(base_pair(2)[0])
    f = seeds[int(rng.integers(len(seeds)))]
    A = AffineTransform.random(q, n, rng)
    ell = AffineFunc(tuple(rng.integers(0, q, size=n).tolist()), int(rng.integers(q)))
    return apply_affine_transform(f, A, ell)


def _order_plus(s, k):
    return None if s is None else s + k


def check_mm(rng, q, n, k):
    tau = rng.permutation(q**n)
    sigma = rng.permutation(q**k)
    f = QFunc(q, n, rng.integers(0, q, size=q**n))
    F = mm_plateaued(tau, sigma, f, k)
    W = _spectrum(F)
    expected = np.zeros_like(W)
    pts = point_array(q, n)
    for xi in range(q**n):
        x = pts[xi]
        xk = int(x[:k] @ (q ** np.arange(k))) if k else 0
        for ui in range(q**n):
            e = (int(f.table[xi]) - int(pts[ui] @ x)) % q
            idx = _index([(ui, n), (int(tau[xi]), n), (int(sigma[xk]), k)], q)
            expected[idx, e] = q ** (n + k)
    support = set(np.flatnonzero(~is_zero_array(W)).tolist())
    return (
        _same(W, expected)
        and support == mm_support(tau, sigma, q, n, k)
        and classify(F).plateaued_s == k
    )


def check_fix(rng, q, n, k):
    g = random_plateaued(rng, q, n + k)
    a = rng.integers(0, q, size=k).tolist()
    f = fix_coordinates(g, a)
    h = slice_function(g, a)
    Wf = _spectrum(f)
    Wh = _spectrum(h)
    expected = np.zeros_like(Wf)
    expected[: q**n] = q**k * Wh
    return _same(Wf, expected) and classify(f).plateaued_s == _order_plus(classify(h).plateaued_s, k)


def check_extend(rng, q, n, k):
    f = random_plateaued(rng, q, n)
    a = rng.integers(0, q, size=k).tolist()
    g = extend_linear(f, a)
    Wg = _spectrum(g)
    Wf = _spectrum(f)
    expected = np.zeros_like(Wg)
    ai = int(np.asarray(a, dtype=np.int64) @ (q ** np.arange(k))) if k else 0
    expected[ai * q**n : (ai + 1) * q**n] = q**k * Wf
    return _same(Wg, expected) and classify(g).plateaued_s == _order_plus(classify(f).plateaued_s, k)


def _disjoint_family(rng, q, n, k):
    """Affine members with distinct linear parts: n-plateaued, disjoint supports."""
    keys = [tuple(int(v) for v in a) for a in point_array(q, k)]
    linear = rng.choice(q**n, size=len(keys), replace=False)
    pts = point_array(q, n)
    return {
        a: AffineFunc(tuple(pts[c].tolist()), int(rng.integers(q))).as_qfunc(q) for a, c in zip(keys, linear)
    }


def _extended_family(rng, q, n, k):
    """``h(x') + <a, x''>`` with ``h`` on ``n - k`` variables; order s(h) + k."""
    h = random_plateaued(rng, q, n - k)
    keys = [tuple(int(v) for v in a) for a in point_array(q, k)]
    return {a: extend_linear(h, a) for a in keys}, h


def check_glue(rng, q, n, k):
    keys = [tuple(int(v) for v in a) for a in point_array(q, k)]
    # identity on an arbitrary family
    family = {a: QFunc(q, n, rng.integers(0, q, size=q**n)) for a in keys}
    g = glue_disjoint(family, k, check=False)
    Wg = _spectrum(g)
    expected = np.zeros_like(Wg)
    pts_k = point_array(q, k)
    for vi in range(q**k):
        acc = np.zeros((q**n, q), dtype=Wg.dtype)
        for a in keys:
            acc = acc + roll_root(_spectrum(family[a]), int(np.dot(a, pts_k[vi])))
        expected[vi * q**n : (vi + 1) * q**n] = acc
    if not _same(Wg, expected):
        return False
    if k > n:
        return True  # no disjoint family of order >= k exists
    if k < n and rng.random() < 0.5:
        family, h = _extended_family(rng, q, n, k)
        s_h = classify(h).plateaued_s
        if s_h is None:
            return classify(glue_disjoint(family, k, check=False)).plateaued_s is None
        return classify(glue_disjoint(family, k)).plateaued_s == s_h
    family = _disjoint_family(rng, q, n, k)
    return classify(glue_disjoint(family, k)).plateaued_s == n - k


CHECKS = {"mm": check_mm, "fix": check_fix, "extend": check_extend, "glue": check_glue}


def grid():
    for q in (2, 3):
        for n in (1, 2):
            for k in (0, 1, 2):
                yield q, n, k


def run_suite(rng, instances=100):
    """Return ``{(name, q, n, k): passed_count}`` over the acceptance grid."""
    results = {}
    for name, check in CHECKS.items():
        for q, n, k in grid():
            if name == "mm" and k > n:
                continue
            results[(name, q, n, k)] = sum(bool(check(rng, q, n, k)) for _ in range(instances))
    return results
