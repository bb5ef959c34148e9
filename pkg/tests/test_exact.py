import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from primecong.exact import (
    VALUATION_INFINITY,
    NonInvertibleDenominatorError,
    ResidueClass,
    binomial,
    congruent,
    format_rational,
    integer_kth_root,
    padic_valuation,
    parse_integer,
    parse_rational,
    pow_integer,
    rational_mod,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) < 10**12)
moduli = st.sampled_from([2, 3, 4, 5, 7, 9, 12, 25, 27, 49, 121, 125, 343, 1000, 1331])


def coprime_rational(m):
    return rationals.filter(lambda x: math.gcd(x.denominator, m) == 1)


@pytest.mark.parametrize(
    "x, p, expected",
    [(Fraction(1, 6), 5, 0), (Fraction(-1, 30), 5, -1), (Fraction(250, 3), 5, 3), (Fraction(-7, 49), 7, -1)],
)
def test_padic_valuation(x, p, expected):
    assert padic_valuation(x, p) == expected


def test_padic_valuation_of_zero_is_sentinel():
    assert padic_valuation(0, 3) is VALUATION_INFINITY


def test_padic_valuation_rejects_composite():
    with pytest.raises(ValueError):
        padic_valuation(Fraction(1, 2), 6)


def test_rational_mod_examples():
    assert rational_mod(Fraction(-1, 6), 25) == ResidueClass(4, 25)
    assert rational_mod(Fraction(7), 7).value == 0
    with pytest.raises(NonInvertibleDenominatorError):
        rational_mod(Fraction(1, 5), 25)


def test_rational_mod_bad_modulus():
    with pytest.raises(ValueError):
        rational_mod(1, 1)


def test_residue_class_bounds():
    with pytest.raises(ValueError):
        ResidueClass(5, 5)
    with pytest.raises(ValueError):
        ResidueClass(-1, 5)


def test_congruent_examples():
    assert congruent(258, 3, 5)
    assert congruent(Fraction(-3, 7), Fraction(-3, 7), 10)
    assert congruent(15, 9, 3)
    assert not congruent(10, 1, 27)
    with pytest.raises(NonInvertibleDenominatorError):
        congruent(Fraction(1, 3), 0, 9)


@given(data=st.data(), m=moduli)
def test_rational_mod_is_ring_homomorphism(data, m):
    a = data.draw(coprime_rational(m))
    b = data.draw(coprime_rational(m))
    ra, rb = rational_mod(a, m).value, rational_mod(b, m).value
    assert rational_mod(a + b, m).value == (ra + rb) % m
    assert rational_mod(a * b, m).value == (ra * rb) % m


@given(data=st.data(), m=moduli)
def test_congruence_matches_prime_power_divisibility(data, m):
    a = data.draw(coprime_rational(m))
    b = data.draw(st.one_of(coprime_rational(m), st.just(a + m * data.draw(st.integers(-5, 5)))))
    diff_num = (a - b).numerator
    factors = {}
    n = m
    q = 2
    while n > 1:
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
        q += 1
    expected = all(diff_num % (q**e) == 0 for q, e in factors.items())
    assert congruent(a, b, m) == expected


@pytest.mark.parametrize("n, k, expected", [(63, 3, 3), (64, 3, 4), (50, 3, 3), (0, 5, 0), (1, 7, 1), (10**40, 4, 10**10)])
def test_integer_kth_root_examples(n, k, expected):
    assert integer_kth_root(n, k) == expected


def test_integer_kth_root_rejects_negative():
    with pytest.raises(ValueError):
        integer_kth_root(-1, 3)


@given(n=st.integers(0, 10**60), k=st.integers(1, 5))
def test_integer_kth_root_brackets(n, k):
    r = integer_kth_root(n, k)
    assert r**k <= n < (r + 1) ** k


def test_binomial_examples():
    assert binomial(9, 4) == 126
    assert binomial(7, 3) == 35
    assert binomial(12, 0) == 1
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


@given(n=st.integers(2, 300), data=st.data())
def test_binomial_pascal(n, data):
    k = data.draw(st.integers(1, n - 1))
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_pow_integer():
    assert pow_integer(2, 5) == 32
    assert pow_integer(4, 5) == 1024
    assert pow_integer(7, 6) == 117649
    assert pow_integer(-3, 3) == -27
    assert pow_integer(5, 0) == 1


@given(b=st.integers(-1000, 1000), e=st.integers(0, 60))
def test_pow_integer_matches_builtin(b, e):
    assert pow_integer(b, e) == b**e


def test_format_and_parse():
    assert format_rational(Fraction(-1, 30)) == "-1/30"
    assert format_rational(Fraction(6, 1)) == "6"
    assert parse_rational("-1/30") == Fraction(-1, 30)
    assert parse_rational("4/2") == 2
    assert parse_integer("-123") == -123
    for bad in ["1.5", "1/", "", "abc", "1_000"]:
        with pytest.raises(ValueError):
            parse_rational(bad)
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@given(x=rationals)
def test_rational_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x


@given(n=st.integers(-(10**50), 10**50))
def test_integer_text_round_trip(n):
    assert parse_integer(str(n)) == n
