"""Prime stratification and cyclotomic congruence sets over the rationals.

For an odd prime p not dividing d, the d-th roots of unity present p-adically
form exactly the gcd(d, p-1)-th roots; that gcd indexes the stratum of p.
Strata partition the odd primes prime to d, and their Dirichlet densities are
exact rationals obtained by counting residues mod d.

Also here: the two-congruence prime sets used by the obstruction arguments
(split in one cyclotomic field, non-split in another) and the quadratic-
residue pigeonhole for biquadratic fields (a prime unramified in a biquadratic
field always splits in at least one of its three quadratic subfields, because
the product of the three Legendre symbols is +1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import numtheory


@dataclass
class PrimeStratum:
    """Primes p <= bound with gcd(d, p-1) = e, plus density data."""

    d: int
    e: int
    primes: list[int]
    bound: int
    empirical_density: Fraction
    predicted_density: Fraction

    def as_dict(self):
        return {
            "d": self.d,
            "e": self.e,
            "bound": self.bound,
            "count": len(self.primes),
            "primes": self.primes if len(self.primes) <= 2000 else self.primes[:2000],
            "truncated": len(self.primes) > 2000,
            "empirical_density": str(self.empirical_density),
            "predicted_density": str(self.predicted_density),
        }


def stratum_of(p: int, d: int) -> int:
    """The divisor e of d with mu_d meeting the p-adics in exactly mu_e."""
    p, d = int(p), int(d)
    if p == 2 or not numtheory.is_prime(p):
        raise ValueError(f"{p} must be an odd prime")
    if d < 1 or d % p == 0:
        raise ValueError(f"p={p} must not divide d={d}")
    return math.gcd(d, p - 1)


def predicted_stratum_density(d: int, e: int) -> Fraction:
    """Dirichlet density of the stratum: residues a mod d with gcd(d, a-1) = e,
    among the phi(d) invertible residues."""
    if d % e:
        raise ValueError(f"e={e} must divide d={d}")
    if d == 1:
        return Fraction(1)
    # math.gcd(d, 0) = d, matching the a = 1 residue landing in the top stratum
    units = [a for a in range(d) if math.gcd(a, d) == 1]
    hits = sum(1 for a in units if math.gcd(d, a - 1) == e)
    return Fraction(hits, len(units))


def enumerate_stratum(d: int, e: int, bound: int) -> PrimeStratum:
    """All odd primes p <= bound, p not dividing d, with gcd(d, p-1) = e."""
    d, e, bound = int(d), int(e), int(bound)
    if d < 1 or e < 1 or d % e:
        raise ValueError(f"e={e} must divide d={d}")
    primes = numtheory.primes_upto(bound)
    primes = primes[primes > 2]
    primes = primes[d % primes != 0] if d > 1 else primes
    g = np.gcd(d, primes - 1)
    members = primes[g == e]
    total = int(primes.size)
    emp = Fraction(int(members.size), total) if total else Fraction(0)
    return PrimeStratum(
        d=d,
        e=e,
        primes=[int(p) for p in members],
        bound=bound,
        empirical_density=emp,
        predicted_density=predicted_stratum_density(d, e),
    )


def lemma32_prime_set(q: int, r: int, bound: int) -> list[int]:
    """Primes p <= bound split completely in the r-th cyclotomic field but not
    in the q-th: p = 1 mod r and p != 1 mod q.

    q = 2 is rejected (p != 1 mod 2 is vacuous for odd p).  Only the
    cyclotomic component of the construction is computed here; conditions in
    auxiliary fields attached to a specific cover are out of scope.  An empty
    result at the given bound is an error, never silently returned.
    """
    q, r, bound = int(q), int(r), int(bound)
    if q == 2:
        raise ValueError("q = 2 rejected: the non-split condition is vacuous for odd primes")
    if not numtheory.is_prime(q) or not numtheory.is_prime(r):
        raise ValueError("q and r must be primes")
    if q == r:
        raise ValueError("q and r must be distinct")
    primes = numtheory.primes_upto(bound)
    members = primes[(primes % r == 1) & (primes % q != 1)]
    out = [int(p) for p in members]
    if not out:
        raise ValueError(
            f"no primes = 1 mod {r}, != 1 mod {q} below {bound}; raise the bound"
        )
    return out


def biquadratic_split(a: int, b: int, p: int) -> set[int]:
    """Indices (1-based) of the quadratic subfields by sqrt(a), sqrt(b),
    sqrt(ab) of the biquadratic field in which the odd prime p splits.

    Requires p coprime to 2ab and a, b squarefree with a, b, ab/gcd(a,b)^2
    all non-squares.  Always nonempty: the three Legendre symbols multiply
    to (ab)^2 = +1, so they cannot all be -1.
    """
    a, b, p = int(a), int(b), int(p)
    if p == 2 or not numtheory.is_prime(p):
        raise ValueError(f"{p} must be an odd prime")
    if a == 0 or b == 0 or (2 * a * b) % p == 0:
        raise ValueError("p must not divide 2ab (unramified case only)")
    if not numtheory.is_squarefree(a) or not numtheory.is_squarefree(b):
        raise ValueError("a and b must be squarefree")
    g = math.gcd(a, b)
    third = (a * b) // (g * g)
    for value, name in ((a, "a"), (b, "b"), (third, "ab")):
        if value > 0 and numtheory.is_perfect_square(value):
            raise ValueError(f"degenerate input: {name} is a square, field is not biquadratic")
    symbols = [
        numtheory.legendre_symbol(a, p),
        numtheory.legendre_symbol(b, p),
        numtheory.legendre_symbol(a * b, p),
    ]
    out = {i + 1 for i, s in enumerate(symbols) if s == 1}
    assert out, "symbol product identity violated"
    return out
