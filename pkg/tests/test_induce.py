from fractions import Fraction

import pytest
from gmpy2 import mpq

from ietlab.exactnum import exact, golden_mean, sqrt_int
from ietlab.iet import identity_iet, rotation
from ietlab.induce import (
    BudgetExhausted,
    TowerViolated,
    NotIrrational,
    find_tower,
    first_return,
    iet3_from_rotation,
    renormalized_lengths,
    tower_book,
)

PHI = golden_mean()
SILVER = sqrt_int(2) - 1


def test_first_return_whole_interval_is_identity_time():
    r = rotation(SILVER)
    ind = first_return(r, (0, 1))
    assert ind.iet == r
    assert set(ind.return_times) == {1}


def test_first_return_silver_wing():
    # orbit walk: returns after 2 steps on [1-2a, a), after 3 on [0, 1-2a)
    r = rotation(SILVER)
    ind = first_return(r, (exact(0), SILVER))
    assert ind.iet.r == 2
    assert sorted(set(ind.return_times)) == [2, 3]


def test_first_return_pointwise_oracle():
    r = rotation(SILVER)
    ind = first_return(r, (exact(0), SILVER))
    lo, hi = ind.interval
    width = hi - lo
    for num in range(1, 24):
        x = lo + width * mpq(num, 24)
        k = ind.iet.interval_index((x - lo) / width)
        y = x
        for _ in range(ind.return_times[k]):
            y = r(y)
        assert (y - lo) / width == ind.iet((x - lo) / width)


def test_first_return_columns_tile_whole_interval():
    # the tower over the columns partitions [0,1) exactly
    r3 = iet3_from_rotation(PHI, mpq(2, 3))
    ind = first_return(r3, (exact(0), exact(mpq(1, 5))))
    total = exact(0)
    segs = []
    for (a, b, n) in ind.columns:
        seg = (a, b)
        for i in range(n):
            segs.append(seg)
            total = total + (seg[1] - seg[0])
            if i < n - 1:
                j = r3.interval_index(seg[0])
                h = r3.trans[j]
                seg = (seg[0] + h, seg[1] + h)
    assert total == exact(1)
    segs.sort(key=lambda s: s[0])
    for (a1, b1), (a2, b2) in zip(segs, segs[1:]):
        assert b1 <= a2
    assert segs[0][0] == exact(0) and segs[-1][1] == exact(1)


def test_nested_induction_composes():
    # inducing on [0,b) then on a prefix equals inducing once on the prefix
    b = exact(mpq(2, 3))
    b2 = exact(mpq(1, 4))
    r = rotation(PHI)
    t1 = first_return(r, (exact(0), b)).iet
    t2 = first_return(t1, (exact(0), b2 / b)).iet
    t3 = first_return(r, (exact(0), b2)).iet
    assert t2.strip_labels() == t3.strip_labels()
    # pointwise as well
    for num in range(1, 16):
        x = exact(mpq(num, 16))
        assert t2(x) == t3(x)


def test_first_return_budget():
    with pytest.raises(BudgetExhausted):
        first_return(rotation(exact(mpq(1, 5))), (exact(mpq(1, 16)), exact(mpq(1, 8))), max_steps=3)


def test_find_tower_golden():
    tw = find_tower(rotation(PHI), mpq(1, 10))
    assert tw.base_measure < exact(mpq(1, 10))
    assert tw.total_measure >= exact(mpq(1, 2))
    assert len(tw.floors) == tw.height


def test_find_tower_three_iet():
    t = iet3_from_rotation(PHI, mpq(3, 5))
    tw = find_tower(t, mpq(1, 20))
    assert tw.base_measure < exact(mpq(1, 20))
    assert tw.total_measure >= exact(Fraction(1, 3))
    ordered = sorted(tw.floors, key=lambda f: f[0])
    for (a1, b1), (a2, b2) in zip(ordered, ordered[1:]):
        assert b1 <= a2


def test_find_tower_identity_degenerates():
    with pytest.raises((TowerViolated, BudgetExhausted)):
        find_tower(identity_iet(), mpq(1, 10))


def test_iet3_from_rotation():
    t = iet3_from_rotation(SILVER, mpq(3, 4))
    assert t.r == 3 and t.perm == (3, 2, 1)
    total = exact(0)
    for L in t.lengths:
        total = total + L
    assert total == exact(1)
    # agrees pointwise with first_return
    ind = first_return(rotation(SILVER), (exact(0), exact(mpq(3, 4))))
    assert t == ind.iet


def test_iet3_golden_self_similar():
    t = iet3_from_rotation(PHI, PHI)
    assert t.r == 2  # the golden window renormalizes to a rotation again


def test_iet3_edge_cases():
    assert iet3_from_rotation(PHI, 1) == rotation(PHI).with_labels([1, 1])
    with pytest.raises(NotIrrational):
        iet3_from_rotation(exact(mpq(1, 3)), mpq(1, 2))


def test_renormalized_lengths():
    leb = [mpq(1, 4)] * 4
    sing = [mpq(1, 2), mpq(1, 6), mpq(1, 6), mpq(1, 6)]
    assert renormalized_lengths(leb, sing, 1) == tuple(exact(x) for x in leb)
    assert renormalized_lengths(leb, sing, 0) == tuple(exact(x) for x in sing)
    mixed = renormalized_lengths(leb, sing, mpq(1, 2))
    assert [str(x) for x in mixed] == ["3/8", "5/24", "5/24", "5/24"]
    total = exact(0)
    for x in mixed:
        total = total + x
    assert total == exact(1)
    with pytest.raises(Exception):
        renormalized_lengths([mpq(1, 2), mpq(1, 2)], sing, mpq(1, 2))


def test_tower_book_example_sequence():
    tb = tower_book([10**3, 10**7, 10**15], [10, 10**3, 10**5], (1, 1, 1, 1))
    # stated recurrence: b2' = b4 + m' b2 + n' b3
    assert tb.rows[1][1] == 1 + 10**7 * 1 + 10**3 * 1
    # flags are reported, not raised
    assert set(tb.conditions) == {"cond1", "cond2", "cond3"}
    # the two series' terms decrease strictly
    assert all(a > b for a, b in zip(tb.series_b_terms, tb.series_b_terms[1:]))
    assert all(a > b for a, b in zip(tb.series_a_terms, tb.series_a_terms[1:]))


def test_tower_book_all_ones_fails_condition1():
    tb = tower_book([1, 1], [1, 1], (1, 1, 1, 1))
    assert not any(tb.conditions["cond1"].values())


def test_tower_book_consequence_flags():
    # a fast-growing sequence satisfying conditions 1 and 2 (condition 3 is
    # jointly incompatible with them; see the acceptance notes)
    m = [2, 100, 10**6, 10**17]
    n = [1, 4, 50, 40000]
    tb = tower_book(m, n, (1, 3, 2, 1))
    assert all(tb.conditions["cond1"].values())
    assert all(tb.conditions["cond2"].values())
    assert all(tb.consequences["cons1"].values())
    # lower half of the printed consequence-2 always holds for such growth
    assert all(tb.consequences["cons2_lower"].values())


def test_tower_book_custom_rule():
    def rule(k, row, m_next, n_next):
        return (row[2], row[3])  # freeze b3, b4

    tb = tower_book([10, 100], [1, 2], (1, 5, 4, 3), rule=rule)
    assert tb.rows[1][2] == 4 and tb.rows[1][3] == 3
