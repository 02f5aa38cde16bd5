import math
import random
from fractions import Fraction

import pytest

from tamegal import covers as cv
from tamegal import numtheory as nt


def test_cover_construction_and_parsing():
    c = cv.parse_cover_spec("d=3,m=1,c=1")
    assert (c.d, c.m, c.c) == (3, 1, Fraction(1))
    c = cv.parse_cover_spec("d=6,m=4,c=-5/7")
    assert c.c == Fraction(-5, 7)
    with pytest.raises(ValueError):
        cv.parse_cover_spec("d=3,m=1")
    with pytest.raises(ValueError):
        cv.KummerCover(1, 1, Fraction(1))
    with pytest.raises(ValueError):
        cv.KummerCover(3, 1, Fraction(0))


def test_branch_data_examples():
    assert cv.branch_data(cv.KummerCover(3, 1, Fraction(1))) == [
        cv.BranchDatum(cv.ZERO, 3),
        cv.BranchDatum(cv.INFINITY, 3),
    ]
    assert cv.branch_data(cv.KummerCover(4, 2, Fraction(1))) == [
        cv.BranchDatum(cv.ZERO, 2),
        cv.BranchDatum(cv.INFINITY, 2),
    ]
    assert cv.branch_data(cv.KummerCover(2, 2, Fraction(1))) == []


def test_intersection_multiplicity_examples():
    assert cv.intersection_multiplicity(Fraction(49, 3), cv.ZERO, 7) == 2
    assert cv.intersection_multiplicity(Fraction(5), cv.ZERO, 7) == 0
    assert cv.intersection_multiplicity(Fraction(3, 125), cv.INFINITY, 5) == 3
    assert cv.intersection_multiplicity(Fraction(1, 7), cv.ZERO, 7) == 0  # clamped
    with pytest.raises(ValueError):
        cv.intersection_multiplicity(Fraction(0), cv.ZERO, 7)


def test_predict_examples():
    pred = cv.predict_specialization(cv.KummerCover(9, 1, Fraction(1)), Fraction(7), 7)
    assert (pred.predicted_e, pred.predicted_f) == (9, 3)
    assert (pred.point, pred.multiplicity) == (cv.ZERO, 1)

    pred = cv.predict_specialization(cv.KummerCover(3, 1, Fraction(1)), Fraction(7**3 * 2), 7)
    assert pred.predicted_e == 1 and pred.predicted_f is None
    assert pred.multiplicity == 3

    pred = cv.predict_specialization(cv.KummerCover(3, 1, Fraction(1)), Fraction(5), 7)
    assert pred.predicted_e == 1 and pred.multiplicity == 0 and pred.point is None

    with pytest.raises(ValueError):
        cv.predict_specialization(cv.KummerCover(3, 1, Fraction(1)), Fraction(0), 7)


def test_exceptional_primes_declared():
    c = cv.KummerCover(6, 1, Fraction(5, 21))
    assert all(c.is_exceptional(p) for p in (2, 3, 5, 7))
    assert not c.is_exceptional(11)
    pred = cv.predict_specialization(c, Fraction(11), 5)
    assert pred.exceptional and pred.predicted_f is None


def test_verify_examples():
    c3 = cv.KummerCover(3, 1, Fraction(1))
    r = cv.verify_beckmann(c3, Fraction(7), 7)
    assert (r.predicted_e, r.predicted_f, r.oracle_e, r.oracle_f) == (3, 1, 3, 1)
    assert r.agree

    r = cv.verify_beckmann(c3, Fraction(2), 7)
    assert r.predicted_e == 1 and r.predicted_f is None
    assert (r.oracle_e, r.oracle_f) == (1, 3)  # 2 is not a cube mod 7
    assert r.agree

    r = cv.verify_beckmann(c3, Fraction(5), 5)
    assert (r.predicted_e, r.predicted_f) == (3, 2)
    assert (r.oracle_e, r.oracle_f) == (3, 2)
    assert r.agree


def test_report_serialization():
    r = cv.verify_beckmann(cv.KummerCover(3, 1, Fraction(1)), Fraction(7), 7)
    d = r.as_dict()
    assert d["cover"] == "d=3,m=1,c=1"
    assert d["intersection"] == {"point": "zero", "multiplicity": 1}
    assert d["agree"] is True
    line = r.to_json_line()
    assert line.startswith("{") and '"agree": true' in line


@pytest.mark.parametrize(
    "cover",
    [
        cv.KummerCover(3, 1, Fraction(1)),
        cv.KummerCover(4, 2, Fraction(1)),
        cv.KummerCover(9, 3, Fraction(2)),
        cv.KummerCover(6, 4, Fraction(5, 7)),
        cv.KummerCover(6, 2, Fraction(-3)),
        cv.KummerCover(2, 2, Fraction(5)),
        cv.KummerCover(27, 9, Fraction(10, 3)),
        cv.KummerCover(12, 8, Fraction(7, 5)),
    ],
)
def test_sweep_laws_general_family(cover):
    reports, summary = cv.sweep(cover, prime_bound=2000, samples=120, seed=17)
    assert summary["disagreements"] == 0
    e_i = cover.branch_inertia_order
    for r in reports:
        if r.exceptional:
            continue
        k = r.intersection[1]
        # ramification-order law
        assert r.oracle_e == e_i // math.gcd(e_i, k)
        # coprime-multiplicity residue law
        if math.gcd(k, e_i) == 1:
            assert r.predicted_f == r.oracle_f
        # unramified by default
        if k == 0:
            assert r.oracle_e == 1


def test_scaling_invariance():
    rng = random.Random(23)
    cover = cv.KummerCover(6, 1, Fraction(5))
    primes = [p for p in (7, 11, 13, 17, 19, 23) if not cover.is_exceptional(p)]
    for _ in range(40):
        p = rng.choice(primes)
        t0 = Fraction(rng.randint(1, 500), rng.randint(1, 500)) * Fraction(p) ** rng.randint(
            -2, 2
        )
        if t0 == 0:
            continue
        u = Fraction(rng.randint(1, 50), rng.randint(1, 50))
        while nt.rational_valuation(u, p) != 0:
            u = Fraction(rng.randint(1, 50), rng.randint(1, 50))
        base = cv.verify_beckmann(cover, t0, p)
        scaled = cv.verify_beckmann(cover, t0 * u**cover.d, p)
        assert (base.oracle_e, base.predicted_e) == (scaled.oracle_e, scaled.predicted_e)
        assert base.intersection[1] == scaled.intersection[1]
        assert base.predicted_f == scaled.predicted_f


def test_degenerate_cover_always_unramified():
    for cover in (cv.KummerCover(2, 2, Fraction(1)), cv.KummerCover(3, 6, Fraction(5))):
        reports, summary = cv.sweep(cover, prime_bound=500, samples=60, seed=3)
        assert summary["disagreements"] == 0
        assert all(r.oracle_e == 1 for r in reports)
        assert cv.branch_data(cover) == []


def test_negative_specialization_points():
    c3 = cv.KummerCover(3, 1, Fraction(1))
    r = cv.verify_beckmann(c3, Fraction(-7), 7)
    assert r.intersection == (cv.ZERO, 1)
    assert (r.oracle_e, r.predicted_e) == (3, 3)
    assert r.agree
    # -1 is a cube mod 7, 2 is not: sign changes f at unramified primes
    r_neg = cv.verify_beckmann(c3, Fraction(-2), 7)
    assert r_neg.agree and r_neg.oracle_e == 1
    reports, summary = cv.sweep(cv.KummerCover(4, 1, Fraction(3)), 1500, 150, seed=5)
    assert summary["disagreements"] == 0
    assert any(r.t0 < 0 for r in reports)


def test_sweep_determinism_and_threads():
    cover = cv.KummerCover(3, 1, Fraction(1))
    r1, s1 = cv.sweep(cover, 1000, 50, seed=9)
    r2, s2 = cv.sweep(cover, 1000, 50, seed=9)
    r3, s3 = cv.sweep(cover, 1000, 50, seed=9, threads=4)
    assert [r.as_dict() for r in r1] == [r.as_dict() for r in r2] == [r.as_dict() for r in r3]
    assert s1 == s2 == s3
    r4, _ = cv.sweep(cover, 1000, 50, seed=10)
    assert [r.as_dict() for r in r4] != [r.as_dict() for r in r1]


def test_oracle_agrees_at_wild_prime_is_rejected():
    cover = cv.KummerCover(9, 1, Fraction(1))
    with pytest.raises(Exception):
        cv.verify_beckmann(cover, Fraction(5), 3)  # 3 divides d: wild for the oracle
