from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tricoble.fields import (GF, QQ, FpElement, fraction_to_decimal_str,
                             is_prime, normalize_int_vector, vector_content)


def test_is_prime_small_cases():
    def reference(n):
        return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))

    for n in range(-3, 500):
        assert is_prime(n) == reference(n), n


def test_is_prime_rejects_carmichael_and_strong_pseudoprimes():
    # 561 = 3*11*17 fools the Fermat test; 3215031751 = 151*751*28351 is a
    # strong pseudoprime to bases 2, 3, 5, 7 simultaneously
    assert not is_prime(561)
    assert not is_prime(3215031751)
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 67 - 1)


@given(st.integers(min_value=0, max_value=28), st.integers(min_value=0, max_value=28))
def test_fp_arithmetic_matches_integer_arithmetic(a, b):
    p = 29
    x, y = FpElement(a, p), FpElement(b, p)
    assert int(x + y) == (a + b) % p
    assert int(x - y) == (a - b) % p
    assert int(x * y) == (a * b) % p
    assert int(-x) == (-a) % p
    if b % p:
        assert int((x / y) * y) == a % p


def test_fp_division_by_zero():
    p = 29
    with pytest.raises(ZeroDivisionError):
        FpElement(1, p) / FpElement(0, p)


def test_fp_pow_and_fermat():
    K = GF(31)
    for a in range(1, 31):
        assert K.of(a) ** 30 == K.one


def test_fp_mixed_int_operands():
    x = FpElement(5, 29)
    assert x + 24 == FpElement(0, 29)
    assert 3 * x == FpElement(15, 29)
    assert 1 - x == FpElement(-4, 29)


def test_gf_rejects_composites():
    with pytest.raises(ValueError):
        GF(1)
    with pytest.raises(ValueError):
        GF(15)
    assert GF(29) == GF(29)
    assert GF(29) != GF(31)
    assert GF(29).char == 29
    assert QQ.char == 0


def test_qq_of_accepts_ints_fractions_and_strings():
    assert QQ.of(3) == Fraction(3)
    assert QQ.of(Fraction(1, 2)) == Fraction(1, 2)
    assert QQ.zero == 0 and QQ.one == 1


def test_vector_content():
    assert vector_content([6, -9, 12]) == 3
    assert vector_content([0, 0, 5]) == 5
    assert vector_content([7]) == 7


def test_normalize_int_vector_examples():
    assert normalize_int_vector([2, 4, 6]) == (1, 2, 3)
    assert normalize_int_vector([-2, 4]) == (1, -2)
    assert normalize_int_vector([0, -3, 9]) == (0, 1, -3)
    assert normalize_int_vector([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)


@given(st.lists(st.fractions(max_denominator=40), min_size=1, max_size=6)
       .filter(lambda v: any(v)),
       st.fractions(max_denominator=12).filter(lambda c: c != 0))
def test_normalize_int_vector_is_projective_canonical(vec, scale):
    # proportional vectors share one canonical representative
    a = normalize_int_vector(vec)
    b = normalize_int_vector([scale * x for x in vec])
    assert a == b
    assert normalize_int_vector(list(a)) == a
    lead = next(x for x in a if x)
    assert lead > 0


def test_fraction_to_decimal_str():
    assert fraction_to_decimal_str(Fraction(1, 3), 5) == "0.33333"
    assert fraction_to_decimal_str(Fraction(-1, 8), 3) == "-0.125"
    assert fraction_to_decimal_str(Fraction(7), 2) == "7.00"
