import pytest

from zpzp2.mixed_code import inner_product
from zpzp2.ring_arith import RingError, check_prime, digits, inv_mod_p, inv_mod_p2
from zpzp2.words import MixedWord, ShapeError, word_order


@pytest.mark.parametrize("p, theta, expected", [(3, 0, (0, 0)), (3, 7, (1, 2)), (5, 6, (1, 1))])
def test_digits(p, theta, expected):
    assert digits(theta, p) == expected


@pytest.mark.parametrize("p, a, expected", [(3, 2, 2), (5, 4, 4), (3, 1, 1)])
def test_inv_mod_p(p, a, expected):
    assert inv_mod_p(a, p) == expected


def test_inv_mod_p_zero():
    with pytest.raises(RingError, match="no inverse"):
        inv_mod_p(0, 3)


def test_inv_mod_p2():
    for p in (3, 5, 7):
        for a in range(1, p * p):
            if a % p:
                assert a * inv_mod_p2(a, p) % (p * p) == 1
    with pytest.raises(RingError):
        inv_mod_p2(3, 3)


@pytest.mark.parametrize("bad", [2, 4, 9, 1, 0, 101])
def test_check_prime_rejects(bad):
    with pytest.raises(RingError):
        check_prime(bad)


def w(text, p=3):
    return MixedWord.parse(p, text)


def test_word_arithmetic():
    assert w("1|4") + w("2|7") == w("0|2")
    assert 3 * w("2|4") == w("0|3")
    assert w("1|4") * w("2|5") == w("2|2")
    assert w("1|4") - w("1|4") == MixedWord.zero(3, 1, 1)


def test_word_order():
    assert word_order(MixedWord.zero(3, 1, 1)) == 1
    assert word_order(w("1|0")) == 3
    assert word_order(w("0|1")) == 9
    assert word_order(w("0|3")) == 3


def test_parse_and_str():
    assert str(w("2|4,0")) == "2|4,0"
    assert w("|3").alpha == 0
    assert w("1,2|").beta == 0
    with pytest.raises(ValueError):
        MixedWord.parse(3, "1,2")


def test_normalization():
    assert w("4|10") == w("1|1")


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        w("1|4") + w("1,1|4")
    with pytest.raises(ShapeError):
        w("1|4") + MixedWord.parse(5, "1|4")


def test_inner_product():
    assert inner_product(w("1|2"), w("2|5")) == 7
    assert inner_product(w("1|2"), MixedWord.zero(3, 1, 1)) == 0
    assert inner_product(w("1,2|"), w("2,2|")) == 0
