"""Tame local Galois groups as generating pairs, and local feasibility.

The Galois group of the maximal tamely ramified extension of the p-adics is
generated by two elements sigma, tau with the single relation
sigma^-1 tau sigma = tau^p, and ord(tau) coprime to p.  A finite group G
therefore occurs as a tame local Galois group at p exactly when it has a
generating pair satisfying that relation; the inertia subgroup is <tau>.

Run:  python demos/02_tame_local_galois.py
"""

from tamegal import (
    LocalExtensionSpec,
    cyclic_tame_exists,
    enumerate_tame_pairs,
    grunwald_feasible,
    parse_group_spec,
)
from tamegal.numtheory import primes_upto

# -- cyclic extensions: ramification index e exists iff e | p - 1 -----------

print("degree-6 cyclic extensions of Q_p with full ramification (e = 6):")
for p in (5, 7, 11, 13, 19):
    print(f"  p = {p:>2}: {'exists' if cyclic_tame_exists(p, 6, 6) else 'none':>6}"
          f"   (6 {'divides' if (p - 1) % 6 == 0 else 'does not divide'} p - 1 = {p - 1})")

# -- the quaternion group is never local when sqrt(-1) is present -----------

print()
print("tame generating pairs of the quaternion group of order 8:")
q8 = parse_group_spec("Q8")
for p in primes_upto(40).tolist():
    if p == 2:
        continue
    pairs = enumerate_tame_pairs(q8, p)
    tag = f"{len(pairs)} pairs" if pairs else "none"
    print(f"  p = {p:>2} ({p % 4} mod 4): {tag}")
print("The pattern p = 3 mod 4 is exact: squaring the relation forces the")
print("Frobenius to act on inertia by inversion, which needs p = -1 mod 4.")

# -- one prime at a time: feasibility of prescribed local data --------------

print()
s3 = parse_group_spec("S3")
problems = [
    LocalExtensionSpec(7, 3, 1),   # totally ramified cubic at 7
    LocalExtensionSpec(11, 1, 2),  # unramified quadratic at 11
    LocalExtensionSpec(5, 3, 2),   # the full group as decomposition group at 5
    LocalExtensionSpec(5, 2, 2),   # impossible: needs an order-4 subgroup
]
report = grunwald_feasible(s3, problems)
print("prescribed local data inside S3:")
for spec, ok in zip(report.problems, report.feasible):
    print(f"  p={spec.p}, e={spec.e}, f={spec.f}: {'feasible' if ok else 'infeasible'}")
print(f"all feasible: {report.all_feasible}")
