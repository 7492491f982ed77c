from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclorep import numtheory as nt
from cyclorep.errors import DivisionByZero, NotDivisible, ZeroPolynomial
from cyclorep.polyring import (
    ZERO_DEGREE,
    Poly,
    cyclotomic,
    divide_exact,
    divisible,
    from_json,
    newton_girard_coefficients,
    poly_divmod,
    poly_gcd,
    pretty,
    profile,
    squarefree_part,
    substitute_power,
    to_json,
)

X = Poly.x()
PHI6 = Poly([1, -1, 1])

small_polys = st.lists(st.integers(-20, 20), max_size=8).map(Poly)


def test_multiply_examples():
    assert (X + 1) * (X - 1) == Poly([-1, 0, 1])
    assert PHI6 + Poly() == PHI6
    assert PHI6 * Poly([-1, -1, 0, 1]) == Poly([-1, 0, 0, 0, -1, 1])


def test_divide_exact_examples():
    assert divide_exact(Poly([-1, 0, 1]), X - 1) == X + 1
    assert divide_exact(Poly.monomial(6) - 1, PHI6) == Poly([-1, -1, 0, 1, 1])
    with pytest.raises(NotDivisible):
        divide_exact(Poly([1, 0, 1]), X + 1)


def test_divide_exact_rejects_fractional_quotient():
    with pytest.raises(NotDivisible):
        divide_exact(Poly([0, 1]), Poly([0, 2]))


def test_divisible_examples():
    f = Poly([-1, 0, 0, 0, -1, 1])
    assert divisible(f, PHI6)
    assert divisible(f, f)
    assert not divisible(f, Poly([1, 1, 1]))


def test_substitute_power_examples():
    assert substitute_power(PHI6, 1) == PHI6
    assert substitute_power(PHI6, 2) == Poly([1, 0, -1, 0, 1])
    assert substitute_power(X - 1, 3) == Poly.monomial(3) - 1
    with pytest.raises(ValueError):
        substitute_power(PHI6, 0)


def test_cyclotomic_examples():
    assert cyclotomic(1) == X - 1
    assert cyclotomic(6) == PHI6
    assert cyclotomic(30) == Poly([1, 1, 0, -1, -1, -1, 0, 1, 1])
    with pytest.raises(ValueError):
        cyclotomic(0)


@pytest.mark.parametrize("n, height, flat, order", [(6, 1, True, 1), (105, 2, False, 3), (30, 1, True, 2)])
def test_profile_examples(n, height, flat, order):
    p = profile(n)
    assert (p.height, p.flat, p.order) == (height, flat, order)
    assert p.totient == p.phi_n.degree == nt.totient(n)


def test_newton_girard_examples():
    for n in (2, 6, 7, 30, 105):
        assert newton_girard_coefficients(n, 1) == [nt.mobius(n)]
    assert newton_girard_coefficients(30, 3) == [-1, 0, 1]
    assert newton_girard_coefficients(6, 2) == [1, 1]
    with pytest.raises(ValueError):
        newton_girard_coefficients(6, 3)


def test_squarefree_examples():
    assert squarefree_part((X - 1) ** 2) == X - 1
    assert squarefree_part(PHI6) == PHI6
    q = Poly([2, 1, 1])
    assert squarefree_part((X - 2) * q ** 2) == (X - 2) * q
    with pytest.raises(ZeroPolynomial):
        squarefree_part(Poly())


def test_product_identity():
    for n in range(1, 201):
        prod = Poly([1])
        for d in nt.divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == Poly.monomial(n) - 1, n


def test_radical_identity():
    for n in range(1, 201):
        n0 = nt.radical(n)
        if n0 < n:
            assert cyclotomic(n) == substitute_power(cyclotomic(n0), n // n0)


def test_prime_step_identity():
    for n in range(1, 40):
        for p in (2, 3, 5, 7):
            if n % p:
                assert cyclotomic(p * n) * cyclotomic(n) == substitute_power(cyclotomic(n), p)


def test_newton_girard_matches_coefficients():
    for n in range(1, 121):
        phi = cyclotomic(n)
        t_max = nt.totient(n)
        e = [1] + newton_girard_coefficients(n, t_max)
        for t in range(t_max + 1):
            assert phi[t_max - t] == (-1) ** t * e[t]


def test_palindromic():
    for n in range(3, 121):
        t_max = nt.totient(n)
        e = [1] + newton_girard_coefficients(n, t_max)
        assert e == e[::-1]


def test_flatness_census():
    assert all(profile(n).flat for n in range(1, 105))
    assert profile(105).height == 2


def test_zero_polynomial_degree_is_sentinel():
    assert Poly().degree == ZERO_DEGREE
    assert Poly([0, 0]).is_zero
    with pytest.raises(DivisionByZero):
        poly_divmod(X, Poly())


def test_rational_arithmetic():
    half = Poly([Fraction(1, 2), 1])
    assert not half.is_integral
    assert (half * 2) == Poly([1, 2])
    assert (half * 2).is_integral
    q, r = poly_divmod(Poly([1, 0, 1]), Poly([0, 2]))
    assert q == Poly([0, Fraction(1, 2)]) and r == Poly([1])


def test_gcd_is_monic():
    a = (X - 1) * (X + 2) * 3
    b = (X - 1) * (X - 5) * 7
    assert poly_gcd(a, b) == X - 1
    assert poly_gcd(Poly.monomial(7), PHI6) == Poly([1])


def test_json_and_pretty():
    assert to_json(PHI6) == ["1", "-1", "1"]
    assert pretty(PHI6) == "x^2 - x + 1"
    assert pretty(Poly([0, 0, Fraction(1, 2)])) == "1/2*x^2"
    assert pretty(Poly()) == "0"
    assert pretty(-X) == "-x"
    assert to_json(Poly([Fraction(-3, 4)])) == ["-3/4"]


@given(small_polys, small_polys)
def test_division_identity(a, b):
    if b.is_zero:
        return
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(small_polys, small_polys, small_polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert a * b == b * a


@given(st.lists(st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000), max_size=8))
def test_json_roundtrip(coeffs):
    p = Poly(coeffs)
    assert from_json(to_json(p)) == p


@given(st.integers(1, 150))
def test_cyclotomic_degree_and_monic(n):
    phi = cyclotomic(n)
    assert phi.degree == nt.totient(n)
    assert phi.is_monic
    assert phi[0] == (-1 if n == 1 else 1)
