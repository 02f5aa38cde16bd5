"""Stratifying primes by the roots of unity their p-adic fields contain.

For p odd and prime to d, the d-th roots of unity present in the p-adics
are exactly the e-th ones for e = gcd(d, p - 1).  The strata partition the
primes, their densities are exact residue counts mod d, and membership
controls the degree of the cyclotomic layer in Kummer splitting fields.

Run:  python demos/04_prime_strata.py
"""

from tamegal import biquadratic_split, enumerate_stratum, lemma32_prime_set, stratum_of
from tamegal.numtheory import divisors
from tamegal.padic_oracle import kummer_local_invariants

d = 9
print(f"strata for d = {d}, primes up to 10^5:")
for e in divisors(d):
    s = enumerate_stratum(d, e, 100_000)
    print(
        f"  e = {e}: {len(s.primes):>5} primes, "
        f"empirical density {float(s.empirical_density):.4f}, "
        f"predicted {s.predicted_density} = {float(s.predicted_density):.4f}"
    )

print()
print("the stratum index drives the residue degree of X^9 - p over Q_p:")
for p in (7, 19, 37, 43, 73):
    e = stratum_of(p, d)
    f = kummer_local_invariants(p, d, 1, 1).f
    print(f"  p = {p:>2}: gcd(9, p-1) = {e}, splitting field residue degree f = {f} = 9/{e}")

print()
print("primes split in one cyclotomic field but not another:")
print(f"  p = 1 mod 5, p != 1 mod 3, below 200: {lemma32_prime_set(3, 5, 200)}")
print(f"  p = 1 mod 3, p != 1 mod 5, below 100: {lemma32_prime_set(5, 3, 100)}")

print()
print("biquadratic pigeonhole: a prime unramified in the field with")
print("sqrt(a), sqrt(b) always splits in one of the three quadratic")
print("subfields, because the three Legendre symbols multiply to +1:")
for p in (7, 11, 13, 17):
    split = biquadratic_split(3, 5, p)
    names = {1: "sqrt(3)", 2: "sqrt(5)", 3: "sqrt(15)"}
    print(f"  p = {p:>2}: splits in {', '.join(names[j] for j in sorted(split))}")
