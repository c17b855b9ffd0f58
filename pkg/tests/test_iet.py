import random

import pytest
from gmpy2 import mpq

from ietlab.exactnum import circle_add, exact, golden_mean, sqrt_int
from ietlab.iet import (
    BadLengths,
    BadPermutation,
    build_iet,
    compose,
    delta_prime_n,
    delta_prime_profile,
    delta_set,
    identity_iet,
    keane_certificate,
    power,
    rotation,
)

PHI = golden_mean()
SILVER = sqrt_int(2) - 1


def three_iet():
    return build_iet([mpq(1, 2), mpq(1, 4), mpq(1, 4)], (3, 2, 1))


def random_iet(rng, r):
    cuts = sorted(rng.sample(range(1, 64), r - 1))
    lengths = [mpq(b - a, 64) for a, b in zip([0] + cuts, cuts + [64])]
    perm = list(range(1, r + 1))
    rng.shuffle(perm)
    return build_iet(lengths, perm)


def test_build_rotation_form():
    t = build_iet([1 - SILVER, SILVER], (2, 1))
    assert t == rotation(SILVER)
    assert t.trans == (SILVER, SILVER - 1)


def test_build_three_iet_displacements():
    # by the displacement sums: h1 = l2+l3, h2 = -l1+l3, h3 = -(l1+l2)
    t = three_iet()
    assert [str(b) for b in t.breaks] == ["0", "1/2", "3/4", "1"]
    assert t.trans == (exact(mpq(1, 2)), exact(mpq(-1, 4)), exact(mpq(-3, 4)))


def test_build_identity_permutation_allowed():
    t = build_iet([mpq(1, 2), mpq(1, 2)], (1, 2))
    assert t == identity_iet()
    assert t.is_identity


def test_build_rejects_bad_input():
    with pytest.raises(BadLengths):
        build_iet([mpq(1, 2), mpq(1, 3)], (2, 1))
    with pytest.raises(BadLengths):
        build_iet([mpq(3, 2), mpq(-1, 2)], (2, 1))
    with pytest.raises(BadPermutation):
        build_iet([mpq(1, 2), mpq(1, 2)], (1, 1))


def test_evaluate():
    t = three_iet()
    assert t(exact(mpq(1, 10))) == exact(mpq(6, 10))
    r = rotation(SILVER)
    assert r(exact(0)) == SILVER
    assert identity_iet()(exact(mpq(5, 8))) == exact(mpq(5, 8))


def test_invert():
    assert rotation(SILVER).invert() == rotation(1 - SILVER)
    assert identity_iet().invert() == identity_iet()
    t = three_iet()
    ti = t.invert()
    assert ti.lengths == (exact(mpq(1, 4)), exact(mpq(1, 4)), exact(mpq(1, 2)))
    assert ti.perm == (3, 2, 1)
    for num in range(100):
        x = exact(mpq(num, 100))
        assert ti(t(x)) == x


def test_compose_rotations():
    a, b = PHI, (PHI * PHI).mod1()  # same quadratic field by design
    assert compose(rotation(a), rotation(b)) == rotation(circle_add(a, b))
    c = exact(mpq(2, 7))
    assert compose(rotation(a), rotation(c)) == rotation(circle_add(a, c))


def test_mixed_fields_rejected_in_compose():
    with pytest.raises(Exception):
        compose(rotation(PHI), rotation(SILVER))


def test_compose_inverse_gives_identity():
    rng = random.Random(5)
    for _ in range(50):
        t = random_iet(rng, rng.randrange(2, 6))
        assert compose(t, t.invert()) == identity_iet()
        assert compose(t.invert(), t) == identity_iet()


def test_compose_interval_count_bound():
    t = build_iet([PHI * PHI, (1 - PHI) / 2, 1 - PHI * PHI - (1 - PHI) / 2], (3, 2, 1))
    u = t
    for n in range(2, 51):
        u = compose(t, u)
        assert u.r <= 2 * n + 1


def test_compose_associative():
    rng = random.Random(17)
    for _ in range(20):
        a = random_iet(rng, rng.randrange(2, 5))
        b = random_iet(rng, rng.randrange(2, 5))
        c = random_iet(rng, rng.randrange(2, 5))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_partition_identity():
    rng = random.Random(23)
    for _ in range(30):
        t = random_iet(rng, rng.randrange(2, 7))
        total = exact(0)
        for L in t.lengths:
            total = total + L
        assert total == exact(1)
        # image intervals tile [0,1): validated by the constructor, re-check
        images = sorted((t.breaks[k] + t.trans[k], t.breaks[k + 1] + t.trans[k]) for k in range(t.r))
        cursor = exact(0)
        for lo, hi in images:
            assert lo == cursor
            cursor = hi
        assert cursor == exact(1)


def test_power_matches_iteration():
    t = three_iet()
    assert power(t, 0) == identity_iet()
    p7 = power(t, 7)
    for num in range(100):
        x = exact(mpq(num, 100))
        y = x
        for _ in range(7):
            y = t(y)
        assert p7(x) == y
    assert power(t, 7, squaring=False) == p7


def test_power_rotation():
    assert power(rotation(PHI), 5) == rotation((5 * PHI).mod1())


def test_delta_set():
    assert delta_set(rotation(PHI)).points == frozenset({PHI})
    assert delta_set(identity_iet()).points == frozenset({exact(0)})
    got = delta_set(three_iet()).points
    assert got == frozenset({exact(mpq(1, 2)), exact(mpq(3, 4)), exact(mpq(1, 4))})


def test_delta_prime_rotation_trivial():
    for alpha in (PHI, SILVER, exact(mpq(2, 7))):
        dp = delta_prime_n(rotation(alpha), 20)
        assert dp.points == frozenset({exact(0)})


def test_delta_prime_monotone_and_bounded():
    t = three_iet()
    prev = delta_prime_n(t, 1)
    assert exact(0) in prev.points
    for n in range(2, 8):
        cur = delta_prime_n(t, n)
        assert prev <= cur
        assert cur.card < t.r**2 * n**3
        prev = cur


def test_delta_prime_profile_matches_pointwise():
    t = three_iet()
    prof = dict(delta_prime_profile(t, 8, [2, 4, 8]))
    for n, card in prof.items():
        assert delta_prime_n(t, n).card == card


def test_keane():
    assert keane_certificate(rotation(SILVER), 1000).status == "certified"
    v = keane_certificate(rotation(exact(mpq(1, 3))), 5)
    assert v.status == "violated" and v.k == 3
    assert keane_certificate(three_iet(), 50).status == "violated"
    assert keane_certificate(identity_iet(), 5).status == "inconclusive"
