import math
from fractions import Fraction

import pytest

from tamegal import numtheory as nt


def test_primes_upto_matches_naive():
    def naive(n):
        return [p for p in range(2, n + 1) if all(p % d for d in range(2, p))]

    assert nt.primes_upto(100).tolist() == naive(100)
    assert nt.primes_upto(1).tolist() == []


@pytest.mark.parametrize(
    "n,expect",
    [(1, False), (2, True), (97, True), (91, False), (2**31 - 1, True), (10**12 + 39, True)],
)
def test_is_prime(n, expect):
    assert nt.is_prime(n) is expect


def test_factorize_roundtrip():
    for n in (1, 2, 12, 360, 2**20, 999999, 10**12 + 39, 600851475143):
        fac = nt.factorize(n)
        prod = 1
        for p, a in fac.items():
            assert nt.is_prime(p)
            prod *= p**a
        assert prod == n


def test_divisors():
    assert nt.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert nt.divisors(1) == [1]


def test_valuations():
    assert nt.valuation(49 * 3, 7) == 2
    assert nt.rational_valuation(Fraction(49, 3), 7) == 2
    assert nt.rational_valuation(Fraction(3, 125), 5) == -3
    with pytest.raises(ValueError):
        nt.rational_valuation(Fraction(0), 5)


def test_unit_residue():
    # 50/3 = 2 * 5^2 / 3; unit part mod 5 is 2 * 3^-1 = 4
    assert nt.unit_residue(Fraction(50, 3), 5) == (2 * pow(3, -1, 5)) % 5


def test_multiplicative_order_mod():
    assert nt.multiplicative_order_mod(3, 7) == 6
    assert nt.multiplicative_order_mod(2, 7) == 3
    assert nt.multiplicative_order_mod(7, 9) == 3
    with pytest.raises(ValueError):
        nt.multiplicative_order_mod(3, 9)


def test_legendre_symbol_matches_square_search():
    for p in (3, 5, 7, 11, 13):
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert nt.legendre_symbol(a, p) == (1 if a in squares else -1)
        assert nt.legendre_symbol(p, p) == 0


def test_square_predicates():
    assert nt.is_rational_square(Fraction(9, 16))
    assert not nt.is_rational_square(Fraction(8, 16))
    assert nt.is_squarefree(30)
    assert not nt.is_squarefree(12)


def test_gcd_zero_convention():
    # stratum arithmetic relies on gcd(d, 0) = d
    assert math.gcd(9, 0) == 9
