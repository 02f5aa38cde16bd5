import json
import math
import random

import numpy as np
import pytest

from tamegal import groups as G
from tamegal import numtheory as nt


# ---------------------------------------------------------------------------
# independent reference tables


def quaternion_symbol_table():
    """The unit quaternions as symbols, multiplied by the textbook rules."""
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(a, b):
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        if a == "1":
            out = b
        elif b == "1":
            out = a
        else:
            out = base[(a, b)]
        if out.startswith("-"):
            sign, out = -sign, out[1:]
        return out if sign == 1 else "-" + out

    index = {u: n for n, u in enumerate(units)}
    table = [[index[mul(a, b)] for b in units] for a in units]
    return table, index


S3_TABLE = [
    # e, (12), (13), (23), (123), (132) composed left-to-right as functions
    [0, 1, 2, 3, 4, 5],
    [1, 0, 4, 5, 2, 3],
    [2, 5, 0, 4, 3, 1],
    [3, 4, 5, 0, 1, 2],
    [4, 3, 1, 2, 5, 0],
    [5, 2, 3, 1, 0, 4],
]


def test_quaternion_reference_table_is_q8():
    table, index = quaternion_symbol_table()
    ref = G.FiniteGroup(table, label="Q8-ref")
    assert G.is_isomorphic(ref, G.generalized_quaternion(8))
    # order of i computed by brute powers through the symbol table
    x, n = index["i"], 0
    cur = index["1"]
    while True:
        cur = table[cur][x]
        n += 1
        if cur == index["1"]:
            break
    assert n == 4
    assert G.element_order(ref, index["i"]) == 4


def test_element_order_examples():
    c6 = G.cyclic(6)
    assert G.element_order(c6, 1) == 6
    assert G.element_order(c6, 0) == 1
    q8 = G.generalized_quaternion(8)
    assert sorted(G.element_order(q8, x) for x in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]
    with pytest.raises(G.GroupError):
        G.element_order(c6, 6)


def test_semidirect_s3_example():
    got = G.semidirect_cyclic(3, 2, -1)
    assert got.order == 6
    assert sorted(got.orders.tolist()).count(2) == 3
    assert G.is_isomorphic(got, G.FiniteGroup(S3_TABLE, label="S3-ref"))


def test_semidirect_trivial_action_is_cyclic():
    for p in (1, 2, 5, 12):
        assert G.is_isomorphic(G.semidirect_cyclic(p, 1, 1), G.cyclic(p))


def test_semidirect_order21_nonabelian():
    g = G.semidirect_cyclic(7, 3, 2)
    assert g.order == 21
    assert not g.is_abelian
    center = [
        z
        for z in range(21)
        if all(g.mul(z, x) == g.mul(x, z) for x in range(21))
    ]
    assert center == [0]


def test_semidirect_precondition_errors():
    with pytest.raises(G.GroupError, match="k\\^Q"):
        G.semidirect_cyclic(5, 2, 2)  # ord_5(2) = 4 does not divide 2
    with pytest.raises(G.GroupError, match="gcd"):
        G.semidirect_cyclic(6, 2, 3)


def test_table_validation_rejects_bad_tables():
    with pytest.raises(G.GroupError):
        G.FiniteGroup([[0, 1], [1, 1]])  # not a Latin square
    with pytest.raises(G.GroupError):
        G.FiniteGroup([[1, 0], [0, 1]])  # identity not at 0
    # associative Latin square with identity: fine
    G.FiniteGroup([[0, 1], [1, 0]]).check_table()


def test_detect_obstructions_examples():
    v4 = G.direct_product(G.cyclic(2), G.cyclic(2))
    kinds = [w.kind for w in G.detect_obstructions(v4)]
    assert kinds == [G.NON_CYCLIC_ABELIAN]

    kinds = [w.kind for w in G.detect_obstructions(G.cyclic(6))]
    assert kinds == [G.COMPOSITE_ORDER_ELEMENT]

    kinds = [w.kind for w in G.detect_obstructions(G.generalized_quaternion(8))]
    assert kinds == [G.ORDER_FOUR_ELEMENT]

    assert G.detect_obstructions(G.cyclic(1)) == []
    assert G.detect_obstructions(G.symmetric(3)) == []


@pytest.mark.parametrize(
    "group",
    [
        G.direct_product(G.cyclic(2), G.cyclic(2)),
        G.cyclic(6),
        G.cyclic(20),
        G.generalized_quaternion(16),
        G.symmetric(4),
        G.alternating(4),
        G.dihedral(6),
        G.semidirect_cyclic(9, 3, 4),
    ],
)
def test_obstruction_witnesses_reverify(group):
    for w in G.detect_obstructions(group):
        assert w.verify(group), (group.label, w)


def test_sylow_shape_examples():
    assert G.sylow_shape(G.symmetric(3), 3) == G.SylowShape(G.SYLOW_CYCLIC, 3)
    assert G.sylow_shape(G.generalized_quaternion(8), 2) == G.SylowShape(
        G.SYLOW_GENERALIZED_QUATERNION, 8
    )
    v4 = G.direct_product(G.cyclic(2), G.cyclic(2))
    assert G.sylow_shape(v4, 2) == G.SylowShape(G.SYLOW_OTHER, 4)
    with pytest.raises(G.GroupError):
        G.sylow_shape(G.symmetric(3), 5)


def test_sylow_shape_more_structures():
    assert G.sylow_shape(G.symmetric(4), 2).kind == G.SYLOW_OTHER  # dihedral of order 8
    assert G.sylow_shape(G.symmetric(4), 2).order == 8
    assert G.sylow_shape(G.alternating(5), 2) == G.SylowShape(G.SYLOW_OTHER, 4)
    assert G.sylow_shape(G.generalized_quaternion(32), 2).kind == G.SYLOW_GENERALIZED_QUATERNION
    big = G.direct_product(G.generalized_quaternion(16), G.cyclic(3))
    assert G.sylow_shape(big, 2).kind == G.SYLOW_GENERALIZED_QUATERNION
    assert G.sylow_shape(big, 3) == G.SylowShape(G.SYLOW_CYCLIC, 3)


def test_frobenius_examples():
    f = G.frobenius_cyclic_decomposition(G.symmetric(3))
    assert (f.P, f.Q) == (3, 2)
    assert G.frobenius_cyclic_decomposition(G.cyclic(15)) is None
    f21 = G.frobenius_cyclic_decomposition(G.semidirect_cyclic(7, 3, 2))
    assert (f21.P, f21.Q) == (7, 3)
    # kernel/complement element sets check out
    g = G.semidirect_cyclic(7, 3, 2)
    assert len(f21.kernel) == 7 and len(f21.complement) == 3
    for k in f21.kernel:
        if k == 0:
            continue
        for h in f21.complement:
            if h == 0:
                continue
            assert g.mul(k, h) != g.mul(h, k)


def test_frobenius_presence_matches_faithful_prime_action():
    # For C_P x| C_Q (P, Q >= 2) the decomposition exists iff k has order Q
    # modulo every prime divisor of P.
    rng = random.Random(1)
    triples = []
    for P in range(2, 64):
        for Q in range(2, 512 // P + 1):
            for k in range(1, P):
                if math.gcd(k, P) == 1 and pow(k, Q, P) == 1:
                    triples.append((P, Q, k))
    for P, Q, k in rng.sample(triples, 150):
        g = G.semidirect_cyclic(P, Q, k)
        expected = all(
            nt.multiplicative_order_mod(k % p, p) == Q for p in nt.factorize(P)
        )
        got = G.frobenius_cyclic_decomposition(g) is not None
        assert got == expected, (P, Q, k)


def test_classify_examples():
    r = G.classify(G.symmetric(3))
    assert r.hg_real and r.hg_sqrt_minus1 and r.pd1_candidate
    assert r.frobenius_decomposition == (3, 2)

    r = G.classify(G.generalized_quaternion(8))
    assert not r.hg_real and r.hg_sqrt_minus1 and not r.pd1_candidate

    r = G.classify(G.cyclic(9))
    assert r.hg_real and not r.pd1_candidate and r.hg_sqrt_minus1

    r = G.classify(G.cyclic(1))
    assert r.is_trivial
    assert not (r.hg_real or r.hg_sqrt_minus1 or r.pd1_candidate)
    assert r.sylow_shapes == {} and r.obstructions == []


def test_classify_more_groups():
    cases = {
        "C2": (True, True, True),
        "C4": (False, True, False),
        "C8": (False, True, False),
        "C12": (False, False, False),
        "D5": (True, True, True),
        "D9": (True, True, False),
        "D15": (False, False, False),
        "Q16": (False, True, False),
        "SD:5,4,2": (False, True, False),
        "SD:13,3,3": (True, True, True),
        "A4": (False, False, False),
    }
    for spec, (real, sqrt, pd1) in cases.items():
        r = G.classify(G.parse_group_spec(spec))
        assert (r.hg_real, r.hg_sqrt_minus1, r.pd1_candidate) == (real, sqrt, pd1), spec


def test_report_invariants():
    for spec in ("S3", "Q8", "C9", "C12", "D6", "SD:7,3,2", "A4"):
        r = G.classify(G.parse_group_spec(spec))
        if r.hg_real:
            assert r.obstructions == []
        if r.frobenius_decomposition:
            P, Q = r.frobenius_decomposition
            assert math.gcd(P, Q) == 1
            assert P * Q == G.parse_group_spec(spec).order


def test_classify_is_relabeling_invariant():
    rng = np.random.default_rng(42)
    for spec in ("S3", "Q8", "C12", "D6", "SD:7,3,2", "SD:5,4,3", "A4"):
        g = G.parse_group_spec(spec)
        base = G.classify(g)
        for _ in range(3):
            perm = np.concatenate([[0], 1 + rng.permutation(g.order - 1)])
            h = G.relabeled(g, perm)
            r = G.classify(h)
            assert r.hg_real == base.hg_real
            assert r.hg_sqrt_minus1 == base.hg_sqrt_minus1
            assert r.pd1_candidate == base.pd1_candidate
            assert r.frobenius_decomposition == base.frobenius_decomposition
            assert sorted(w.kind for w in r.obstructions) == sorted(
                w.kind for w in base.obstructions
            )


def test_parse_group_spec():
    assert G.parse_group_spec("C6").order == 6
    assert G.parse_group_spec("D4").order == 8
    assert G.parse_group_spec("Q16").order == 16
    assert G.parse_group_spec("S4").order == 24
    assert G.parse_group_spec("A5").order == 60
    assert G.parse_group_spec("SD:7,3,2").order == 21
    x = G.parse_group_spec("X:C2*C2*C2")
    assert x.order == 8 and x.max_order == 2
    for bad in ("", "C", "Zoo", "Q12", "S9", "SD:4,2", "X:C2"):
        with pytest.raises(G.GroupError):
            G.parse_group_spec(bad)


def test_group_json_io(tmp_path):
    g = G.dihedral(4)
    path = tmp_path / "d4.json"
    path.write_text(json.dumps({"order": g.order, "table": g.table.tolist()}))
    loaded = G.parse_group_spec(str(path))
    assert G.is_isomorphic(loaded, g)
    assert G.parse_group_spec("@" + str(path)).order == 8
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"order": 3, "table": [[0, 1], [1, 0]]}))
    with pytest.raises(G.GroupError):
        G.parse_group_spec(str(bad))


def test_nested_product_spec_with_semidirect():
    g = G.parse_group_spec("X:SD:3,2,2*C5")
    assert g.order == 30
    assert G.is_isomorphic(g, G.direct_product(G.symmetric(3), G.cyclic(5)))


def test_negative_action_parameter_normalized():
    assert G.is_isomorphic(G.semidirect_cyclic(7, 2, -1), G.dihedral(7))


def test_order_caps():
    with pytest.raises(G.GroupError):
        G.cyclic(G.ORDER_CAP + 1)
    with pytest.raises(G.GroupError):
        G.direct_product(G.cyclic(64), G.cyclic(64))


def test_report_serialization_stable_fields():
    r = G.classify(G.symmetric(3))
    d = r.as_dict()
    assert set(d) == {
        "group_label",
        "is_trivial",
        "hg_real",
        "hg_sqrt_minus1",
        "pd1_candidate",
        "frobenius_decomposition",
        "sylow_shapes",
        "obstructions",
    }
    json.dumps(d)  # JSON-serializable

    assert d["frobenius_decomposition"] == [3, 2]
    assert d["sylow_shapes"]["2"] == {"kind": "Cyclic", "order": 2}


def test_is_isomorphic_negative_and_positive():
    assert not G.is_isomorphic(G.dihedral(4), G.generalized_quaternion(8))
    assert not G.is_isomorphic(G.cyclic(8), G.dihedral(4))
    assert G.is_isomorphic(G.dihedral(3), G.symmetric(3))
    assert G.is_isomorphic(
        G.direct_product(G.cyclic(3), G.cyclic(5)), G.cyclic(15)
    )
