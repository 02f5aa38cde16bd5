"""Integer and rational arithmetic helpers shared across the toolkit.

Primality uses trial division below a fixed bound and deterministic
Miller-Rabin witnesses above it; factoring uses Brent's cycle variant of
Pollard rho.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

import numpy as np

_TRIAL_BOUND = 1_000_000
# Deterministic witness set for all 64-bit integers (and well beyond).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (simple numpy sieve)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _miller_rabin(n: int) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    if n < _TRIAL_BOUND:
        if n < 4:
            return True
        if n % 2 == 0:
            return False
        for f in range(3, math.isqrt(n) + 1, 2):
            if n % f == 0:
                return False
        return True
    return _miller_rabin(n)


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"factor search failed for {n}")


@functools.lru_cache(maxsize=1 << 18)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return tuple(sorted(out.items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}.

    Memoized underneath; group-theoretic callers hit the same small orders
    constantly.
    """
    n = int(n)
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    return dict(_factorize_cached(n))


@functools.lru_cache(maxsize=1 << 16)
def prime_divisor_count(n: int) -> int:
    """Number of distinct prime divisors of n >= 1."""
    return len(_factorize_cached(int(n)))


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, a in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(a + 1)]
    return sorted(ds)


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def valuation(n: int, p: int) -> int:
    """Exponent of p in n; n must be nonzero."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(x: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    return valuation(x.numerator, p) - valuation(x.denominator, p)


def unit_residue(x: Fraction, p: int) -> int:
    """Residue mod p of the p-unit part of x, i.e. of x / p^v_p(x)."""
    x = Fraction(x)
    v = rational_valuation(x, p)
    num = x.numerator // p**max(v, 0)
    den = x.denominator // p**max(-v, 0)
    return num * pow(den, -1, p) % p


def multiplicative_order_mod(a: int, n: int) -> int:
    """Order of a in (Z/n)^*.  Meant for desk-scale moduli."""
    n = int(n)
    if n == 1:
        return 1
    a = int(a) % n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    k = 1
    x = a
    while x != 1:
        x = x * a % n
        k += 1
        if k > n:
            raise ArithmeticError("order search exceeded the modulus")
    return k


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p."""
    a %= p
    if a == 0:
        return 0
    s = pow(a, (p - 1) // 2, p)
    return -1 if s == p - 1 else 1


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_rational_square(x: Fraction) -> bool:
    x = Fraction(x)
    return x >= 0 and is_perfect_square(x.numerator) and is_perfect_square(x.denominator)


def is_squarefree(n: int) -> bool:
    n = abs(int(n))
    if n == 0:
        return False
    return all(a == 1 for a in factorize(n).values()) if n > 1 else True
