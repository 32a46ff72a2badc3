from fractions import Fraction

import pytest

from combregret.dyadic import HALF, ONE, ZERO, Dyadic, average2, compare

# a small grid of values, canonical and not, positive and negative
SAMPLES = [
    Dyadic(0),
    Dyadic(1),
    Dyadic(-1),
    Dyadic(7),
    Dyadic(1, 1),
    Dyadic(-3, 2),
    Dyadic(5, 4),
    Dyadic(2341, 8),
    Dyadic(37451, 12),
    Dyadic(1, 60),
    Dyadic(-12345, 17),
]


def test_normalization_cancels_factors_of_two():
    d = Dyadic(6, 3)
    assert (d.num, d.exp) == (3, 2)
    z = Dyadic(0, 7)
    assert (z.num, z.exp) == (0, 0)
    unchanged = Dyadic(2341, 8)
    assert (unchanged.num, unchanged.exp) == (2341, 8)
    # even integers keep exponent zero rather than going negative
    four = Dyadic(4, 0)
    assert (four.num, four.exp) == (4, 0)


def test_scaling_roundtrip():
    for d in SAMPLES:
        for m in range(5):
            assert Dyadic(d.num << m, d.exp + m) == d


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Dyadic(1, -1)


def test_immutability():
    d = Dyadic(3, 2)
    with pytest.raises(AttributeError):
        d.num = 5


def test_arithmetic_matches_fractions():
    for a in SAMPLES:
        fa = a.as_fraction()
        assert (-a).as_fraction() == -fa
        assert a.half().as_fraction() == fa / 2
        for b in SAMPLES:
            fb = b.as_fraction()
            assert (a + b).as_fraction() == fa + fb
            assert (a - b).as_fraction() == fa - fb
            assert (a * b).as_fraction() == fa * fb


def test_average2():
    assert average2(HALF, HALF) == HALF
    assert average2(ONE, ZERO) == HALF
    assert average2(Dyadic(3, 2), Dyadic(1, 1)) == Dyadic(5, 3)
    for a in SAMPLES:
        for b in SAMPLES:
            m = average2(a, b)
            assert m == average2(b, a)
            lo, hi = (a, b) if a <= b else (b, a)
            assert lo <= m <= hi


def test_compare_trichotomy():
    assert compare(HALF, HALF) == 0
    assert compare(Dyadic(2341, 8), Dyadic(37451, 12)) == 1
    assert compare(ZERO, Dyadic(1, 60)) == -1
    for a in SAMPLES:
        for b in SAMPLES:
            c = compare(a, b)
            assert c == -compare(b, a)
            assert (c == 0) == (a.as_fraction() == b.as_fraction())


def test_decimal_strings_are_exact():
    assert Dyadic(2341, 8).decimal() == "9.14453125"
    assert Dyadic(37451, 12).decimal() == "9.143310546875"
    assert ZERO.decimal() == "0"
    assert Dyadic(7).decimal() == "7"
    assert Dyadic(-3, 2).decimal() == "-0.75"
    assert Dyadic(3, 2).decimal() == "0.75"
    assert Dyadic(1, 10).decimal() == "0.0009765625"


def test_decimal_roundtrip():
    for d in SAMPLES:
        assert Dyadic.from_decimal(d.decimal()) == d
    assert Dyadic.from_decimal("9.14453125") == Dyadic(2341, 8)
    with pytest.raises(ValueError):
        Dyadic.from_decimal("0.2")
    with pytest.raises(ValueError):
        Dyadic.from_decimal("1/2")


def test_interchange_parse():
    for d in SAMPLES:
        assert Dyadic.parse(d.interchange()) == d
    assert Dyadic.parse("2341/2^8") == Dyadic(2341, 8)
    assert Dyadic.parse(" -3/2^2 ") == Dyadic(-3, 2)
    assert Dyadic.parse("7") == Dyadic(7)
    for bad in ("1/3", "1/2^-1", "x", "2^8", ""):
        with pytest.raises(ValueError):
            Dyadic.parse(bad)


def test_from_float_is_exact():
    for x in (0.5, 0.75, -2.25, 9.14453125, 1.0, 0.0):
        d = Dyadic.from_float(x)
        assert float(d) == x
    assert Dyadic.from_float(0.5) == HALF


def test_int_mixing():
    assert Dyadic(1, 1) + 1 == Dyadic(3, 1)
    assert 1 - HALF == HALF
    assert 2 * HALF == ONE
    assert HALF < 1
    assert Dyadic(5, 1) > 2


def test_hash_and_equality():
    assert Dyadic(2, 1) == ONE
    assert hash(Dyadic(2341, 8)) == hash(Fraction(2341, 256))
    seen = {Dyadic(1, 1): "a", Dyadic(2, 2): "b"}
    assert len(seen) == 1 and seen[HALF] == "b"
    values = sorted([ONE, ZERO, HALF, Dyadic(-1)])
    assert values == [Dyadic(-1), ZERO, HALF, ONE]
