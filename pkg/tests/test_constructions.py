import numpy as np
import pytest

import props
from qbent.constructions import (
    ConstructionError,
    OverlappingSupportsError,
    PlateauedPairSpec,
    Q4Func,
    base_pair,
    chain_quasigroup,
    extend_linear,
    fix_coordinates,
    glue_disjoint,
    is_quasigroup,
    linear_quasigroup,
    make_diag_squares,
    make_qn,
    minimal_pair,
    mm_plateaued,
    semilinear_quasigroup,
    subspace_modification,
)
from qbent.cyclotomic import unit_decompose
from qbent.functions import QFunc, hamming_distance, point_array
from qbent.metrics import correlation_immunity_table, nonlinearity
from qbent.search import SearchTask, class_tables
from qbent.spectrum import classify, walsh_transform
from qbent.subspaces import Coset, Subspace, affine_on, enumerate_cosets, enumerate_subspaces


def test_qn_examples():
    Q1 = make_qn(3, 1)
    pts = point_array(3, 2)
    assert Q1.table.tolist() == [(v * u) % 3 for v, u in pts.tolist()]
    c = classify(Q1)
    assert c.is_bent and c.regular
    assert classify(make_qn(2, 2)).is_bent
    assert set(walsh_transform(make_qn(2, 2)).histogram()) == {16}


def test_diag_squares_examples():
    assert make_diag_squares(1) == base_pair(3)[0]
    b = make_diag_squares(2)
    for w in walsh_transform(b).w:
        c, _ = unit_decompose(w)
        assert c == -3
    assert nonlinearity(b) == 5


def test_mm_examples(rng):
    F = mm_plateaued([0, 1], [0, 1], QFunc.constant(2, 1), 1)
    assert F.n == 3 and classify(F).plateaued_s == 1
    F = mm_plateaued(rng.permutation(9), [0], QFunc(3, 2, rng.integers(0, 3, 9)), 0)
    assert classify(F).is_bent
    for _ in range(50):
        k = int(rng.integers(0, 3))
        assert props.check_mm(rng, 3, 2, k)


def test_mm_errors():
    f = QFunc.constant(3, 1)
    with pytest.raises(ConstructionError):
        mm_plateaued([0, 0, 1], [0], f, 0)
    with pytest.raises(ConstructionError):
        mm_plateaued([0, 1, 2], list(range(9)), f, 2)


def test_fix_examples(rng):
    g = make_qn(3, 1)
    assert fix_coordinates(g, []) == g
    T = base_pair(3)[0]
    g = extend_linear(T, [1])
    assert classify(g).plateaued_s == 1
    assert classify(fix_coordinates(g, [0])).plateaued_s == 1
    for _ in range(50):
        assert props.check_fix(rng, 3, 1, 1)


def test_fixing_a_coordinate_follows_the_slice():
    # Q_1 is bent, but fixing u leaves the slice v -> a*v, which is affine
    Q1 = make_qn(3, 1)
    assert classify(fix_coordinates(Q1, [1])).plateaued_s == 2
    assert classify(fix_coordinates(Q1, [0])).plateaued_s == 2


def test_extend_examples(rng):
    T = base_pair(3)[0]
    assert classify(extend_linear(T, [1])).plateaued_s == 1
    g = extend_linear(T, [0])
    nz = walsh_transform(g).nonzero
    assert not nz[3:].any()
    for _ in range(50):
        assert props.check_extend(rng, 3, 2, int(rng.integers(0, 3)))


def test_glue_examples(rng):
    R = base_pair(2)[0]
    family = {(a,): extend_linear(R, [a]) for a in range(2)}
    g = glue_disjoint(family, 1)
    assert g.n == 6 and classify(g).plateaued_s == 2
    bent = make_qn(3, 1)
    with pytest.raises(OverlappingSupportsError) as info:
        glue_disjoint({(a,): bent for a in range(3)}, 1)
    assert info.value.pair == ((0,), (1,))
    with pytest.raises(ConstructionError):
        glue_disjoint({(0,): bent}, 1)
    for _ in range(30):
        assert props.check_glue(rng, 3, 2, 1)


def test_glue_selector_is_negated_index():
    fams = {(a,): QFunc.constant(3, 1, a) for a in range(3)}
    g = glue_disjoint(fams, 1, check=False)
    # slice y holds member -y
    assert g.table.tolist() == [0, 0, 0, 2, 2, 2, 1, 1, 1]


def test_subspace_modification_examples():
    Q1 = make_qn(3, 1)
    line = Coset.of(Subspace.span(3, 2, [(1, 0)]), (0, 0))
    outs = [subspace_modification(Q1, line, c) for c in (1, 2)]
    for g in outs:
        cls = classify(g)
        assert cls.is_bent and cls.regular
        assert hamming_distance(g, Q1) == 3
    assert outs[0] != outs[1]
    with pytest.raises(ConstructionError):
        subspace_modification(Q1, Coset.of(Subspace.span(3, 2), (0, 0)), 1)
    with pytest.raises(ConstructionError):
        subspace_modification(Q1, Coset.of(Subspace.span(3, 2, [(1, 1)]), (0, 0)), 1)
    with pytest.raises(ConstructionError):
        subspace_modification(Q1, line, 0)


def test_subspace_modification_preserves_order():
    for f in [base_pair(2)[0], make_qn(2, 2), make_qn(3, 2)]:
        s = classify(f).plateaued_s
        dim = (s + f.n) // 2
        hits = 0
        for S in enumerate_subspaces(f.q, f.n, dim):
            for C in enumerate_cosets(S):
                if affine_on(f, C) is None:
                    continue
                for c in range(1, f.q):
                    g = subspace_modification(f, C, c)
                    cls = classify(g)
                    assert cls.plateaued_s == s
                    if classify(f).regular:
                        assert cls.regular
                    hits += 1
        assert hits > 0


def _constructed_plateaued():
    T = base_pair(3)[0]
    R, R2 = base_pair(2)
    return [
        make_qn(3, 1),
        make_diag_squares(2),
        extend_linear(T, [1]),
        fix_coordinates(make_qn(3, 1), [2]),
        R,
        R2,
        make_qn(2, 2),
        mm_plateaued([0, 2, 1, 3], [0], QFunc(2, 2, [0, 1, 1, 0]), 0),
        extend_linear(make_qn(2, 1), [1, 1]),
    ]


def test_dimension_bound_on_affine_cosets():
    for f in _constructed_plateaued():
        s = classify(f).plateaued_s
        assert s is not None
        for dim in range((s + f.n) // 2 + 1, f.n + 1):
            for S in enumerate_subspaces(f.q, f.n, dim):
                for C in enumerate_cosets(S):
                    assert affine_on(f, C) is None


def test_minimal_pair_examples():
    R, R2 = base_pair(2)
    assert minimal_pair(PlateauedPairSpec(2, 2, 0)) == (R, R2)
    T, T2 = base_pair(3)
    assert minimal_pair(PlateauedPairSpec(3, 0, 0)) == (T, T2)
    spec = PlateauedPairSpec(2, 3, 1)
    a, b = minimal_pair(spec)
    assert spec.n == 7 and a.n == 7
    assert classify(a).plateaued_s == classify(b).plateaued_s == 3
    assert hamming_distance(a, b) == 16 == spec.distance


@pytest.mark.parametrize("q,s,t", [(2, 1, 0), (4, 1, 0), (3, 0, -1)])
def test_minimal_pair_rejects_bad_params(q, s, t):
    with pytest.raises(ConstructionError):
        PlateauedPairSpec(q, s, t)


def test_semilinear_quasigroup():
    f = semilinear_quasigroup(QFunc(2, 2, [0, 0, 0, 1]))
    assert is_quasigroup(f)
    assert correlation_immunity_table(f.table, 4, 2) == 1
    assert semilinear_quasigroup(QFunc.constant(2, 2)) == linear_quasigroup(2)
    with pytest.raises(ConstructionError):
        semilinear_quasigroup(QFunc.constant(3, 1))


def test_chain_quasigroup():
    h = linear_quasigroup(2)
    assert chain_quasigroup(h, 3) == linear_quasigroup(3)
    with pytest.raises(ConstructionError):
        chain_quasigroup(Q4Func(2, np.zeros(16, dtype=int)), 3)


@pytest.mark.parametrize("q,expected", [(2, 8), (3, 162)])
def test_bent_count_lower_bound(q, expected):
    count = len(class_tables(SearchTask(q, 2, "bent")))
    assert count >= expected
    if q == 2:
        assert count == expected
