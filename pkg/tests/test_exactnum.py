import random

import mpmath
import pytest
from gmpy2 import mpq

from ietlab.exactnum import (
    IncompatibleField,
    circle_add,
    circle_point,
    circle_sub,
    compare,
    exact,
    golden_mean,
    nearest_int_dist,
    parse_exact,
    sqrt_int,
)


def test_circle_add_basic():
    assert circle_add(exact(mpq(1, 4)), exact(mpq(1, 2))) == exact(mpq(3, 4))
    assert circle_add(exact(mpq(3, 4)), exact(mpq(3, 4))) == exact(mpq(1, 2))


def test_circle_add_cancels_radicals():
    # (sqrt5 - 2) + (3 - sqrt5) = 1 = 0 mod 1
    x = circle_point(sqrt_int(5) - 2)
    y = circle_point(3 - sqrt_int(5))
    assert circle_add(x, y) == exact(0)


def test_circle_sub_quadratic():
    got = circle_sub(exact(mpq(1, 3)), circle_point(sqrt_int(2) - 1))
    assert got == exact(mpq(7, 3)) - sqrt_int(2)
    assert abs(got.to_float() - 0.9191197709) < 1e-9


def test_circle_sub_self_is_zero():
    for num in range(0, 9):
        x = exact(mpq(num, 9))
        assert circle_sub(x, x) == exact(0)


def test_circle_roundtrip_property():
    rng = random.Random(7)
    pts = [circle_point(exact(mpq(rng.randrange(0, 997), 997))) for _ in range(50)]
    pts += [circle_point(exact(mpq(rng.randrange(1, 99), 100)) * (sqrt_int(3) - 1)) for _ in range(50)]
    for x in pts:
        for y in pts[:10]:
            assert circle_add(circle_sub(x, y), y) == x
        assert circle_add(x, exact(0)) == x
        assert circle_sub(x, exact(0)) == x


def test_nearest_int_dist():
    assert nearest_int_dist(exact(mpq(3, 10))) == exact(mpq(3, 10))
    assert nearest_int_dist(exact(mpq(3, 4))) == exact(mpq(1, 4))
    phi = golden_mean()
    assert nearest_int_dist(5 * phi) == 5 * phi - 3  # brute force over 2, 3, 4
    cands = [abs((5 * phi - n).to_float()) for n in (2, 3, 4)]
    assert abs(nearest_int_dist(5 * phi).to_float() - min(cands)) < 1e-15


def test_nearest_reflection_symmetry():
    rng = random.Random(11)
    for _ in range(100):
        x = exact(mpq(rng.randrange(1, 10**6), 10**6)) + rng.randrange(-3, 3)
        f = x.mod1()
        assert nearest_int_dist(x) == nearest_int_dist(1 - f)


def test_compare():
    assert compare(exact(mpq(2, 3)), exact(mpq(6666, 10000))) > 0
    assert compare(sqrt_int(2) - 1, exact(mpq(29, 70))) < 0
    x = sqrt_int(7) / 3
    assert compare(x, x) == 0


def test_compare_mixed_fields_rejected():
    with pytest.raises(IncompatibleField):
        _ = (sqrt_int(2) + sqrt_int(3)).sign()


def test_compare_agrees_with_128bit_floats():
    rng = random.Random(3)
    disagreements = 0
    with mpmath.workprec(128):
        s5 = mpmath.sqrt(5)
        for _ in range(10**4):
            a1, b1 = rng.randrange(-50, 50), rng.randrange(-50, 50)
            a2, b2 = rng.randrange(-50, 50), rng.randrange(-50, 50)
            d1, d2 = rng.randrange(1, 100), rng.randrange(1, 100)
            x = exact(mpq(a1, d1)) + exact(mpq(b1, d1)) * sqrt_int(5)
            y = exact(mpq(a2, d2)) + exact(mpq(b2, d2)) * sqrt_int(5)
            fx = mpmath.mpf(a1) / d1 + mpmath.mpf(b1) / d1 * s5
            fy = mpmath.mpf(a2) / d2 + mpmath.mpf(b2) / d2 * s5
            if abs(fx - fy) > mpmath.mpf(10) ** -20:
                want = -1 if fx < fy else 1
                if compare(x, y) != want:
                    disagreements += 1
    assert disagreements == 0


def test_floor():
    phi = golden_mean()
    assert (5 * phi).floor() == 3
    assert (-5 * phi).floor() == -4
    assert exact(mpq(-7, 2)).floor() == -4
    assert (sqrt_int(2) * 1000).floor() == 1414
    big = sqrt_int(2) * (10**30)
    assert str(big.floor()).startswith("1414213562373095048")


def test_squarefree_normalization():
    assert sqrt_int(8) == 2 * sqrt_int(2)
    assert sqrt_int(9) == exact(3)
    assert sqrt_int(12).d == 3
    with pytest.raises(ValueError):
        sqrt_int(0)


def test_parse_exact():
    assert parse_exact("3/4") == exact(mpq(3, 4))
    assert parse_exact("0.125") == exact(mpq(1, 8))
    assert parse_exact("1/2+1/2*sqrt(5)") == (1 + sqrt_int(5)) / 2
    assert parse_exact("sqrt(2)-1") == sqrt_int(2) - 1
    assert parse_exact("golden") == golden_mean()
    assert parse_exact("(sqrt(5)-1)/2") == golden_mean()
    assert parse_exact("sqrt(5)/2-1/2") == golden_mean()
    with pytest.raises(ValueError):
        parse_exact("sqrt(x)")
    with pytest.raises(TypeError):
        exact(0.5)


def test_str_roundtrip():
    vals = [exact(mpq(3, 7)), golden_mean(), sqrt_int(2) - 1, exact(-2), 2 - sqrt_int(3)]
    for v in vals:
        assert parse_exact(str(v)) == v


def test_division():
    phi = golden_mean()
    assert (exact(1) / phi) == phi + 1  # 1/phi = phi + 1 for the golden mean
    assert (sqrt_int(2) / sqrt_int(2)) == exact(1)
    with pytest.raises(ZeroDivisionError):
        exact(1) / exact(0)
