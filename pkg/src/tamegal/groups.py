"""Finite groups as Cayley tables, with eligibility classification.

Groups are plain index tables: elements are 0..order-1, element 0 is the
identity, and table[i, j] is the index of the product.  All predicates are
decided by brute force on the table (order cap 2048), which keeps the whole
module free of any external group database.

The three classification flags reported by :func:`classify`:

* ``hg_real``      -- cyclic of order 2 or an odd prime power, or a Frobenius
                      group with cyclic kernel and complement whose orders are
                      each 2 or an odd prime power;
* ``hg_sqrt_minus1`` -- cyclic of prime power order, Frobenius with both parts
                      cyclic of prime power order, or generalized quaternion;
* ``pd1_candidate``  -- cyclic of prime order, dihedral of order 2p (p >= 3
                      prime), or C_p x| C_3 with p = 1 mod 3 prime.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass

import numpy as np

from . import numtheory

ORDER_CAP = 2048
_FULL_ASSOC_LIMIT = 256
_SPOT_TRIPLES = 2000

NON_CYCLIC_ABELIAN = "NonCyclicAbelian"
COMPOSITE_ORDER_ELEMENT = "CompositeOrderElement"
ORDER_FOUR_ELEMENT = "OrderFourElement"

SYLOW_CYCLIC = "Cyclic"
SYLOW_GENERALIZED_QUATERNION = "GeneralizedQuaternion"
SYLOW_OTHER = "Other"


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group given by its Cayley table of element indices."""

    def __init__(self, table, label: str = "G", validate: bool = True):
        arr = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GroupError("Cayley table must be square")
        n = arr.shape[0]
        if n < 1 or n > ORDER_CAP:
            raise GroupError(f"order {n} outside 1..{ORDER_CAP}")
        self.table = arr
        self.order = n
        self.label = label
        self._inv = None
        self._orders = None
        self._pow = None
        self._conj = None
        self._cyclic_subs = None
        if validate:
            self.check_table()
        self.table.setflags(write=False)

    # -- validation ---------------------------------------------------------

    def check_table(self):
        """Latin square, two-sided identity at 0, associativity.

        Associativity is checked on all triples up to order 256 and on a
        deterministic random sample above that.
        """
        t, n = self.table, self.order
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entries out of range")
        ar = np.arange(n)
        if not (np.sort(t, axis=1) == ar).all() or not (np.sort(t, axis=0) == ar[:, None]).all():
            raise GroupError("table rows/columns are not permutations")
        if not (t[0] == ar).all() or not (t[:, 0] == ar).all():
            raise GroupError("element 0 is not a two-sided identity")
        if n <= _FULL_ASSOC_LIMIT:
            left = t[t, :]  # left[a, b, c] = t[t[a, b], c]
            right = t[:, t]  # right[a, b, c] = t[a, t[b, c]]
            if not (left == right).all():
                raise GroupError("associativity fails")
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, _SPOT_TRIPLES))
            if not (t[t[a, b], c] == t[a, t[b, c]]).all():
                raise GroupError("associativity fails (spot check)")

    # -- cached structure ---------------------------------------------------

    @property
    def inv(self) -> np.ndarray:
        if self._inv is None:
            rows, cols = np.nonzero(self.table == 0)
            inv = np.empty(self.order, dtype=np.int64)
            inv[rows] = cols
            self._inv = inv
        return self._inv

    def _power_data(self):
        if self._pow is None:
            n = self.order
            t = self.table
            ar = np.arange(n, dtype=np.int32)
            orders = np.zeros(n, dtype=np.int64)
            rows = [np.zeros(n, dtype=np.int32), ar]
            cur = ar
            m = 1
            while True:
                done = (cur == 0) & (orders == 0)
                orders[done] = m
                if (orders != 0).all():
                    break
                cur = t[cur, ar]  # fancy indexing allocates a fresh row
                rows.append(cur)
                m += 1
            self._pow = np.vstack(rows)
            self._orders = orders
        return self._pow, self._orders

    @property
    def orders(self) -> np.ndarray:
        return self._power_data()[1]

    @property
    def pow_table(self) -> np.ndarray:
        """Row m holds g^m for every g (m up to the largest element order)."""
        return self._power_data()[0]

    @property
    def max_order(self) -> int:
        return int(self.orders.max())

    @property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders))

    @property
    def is_cyclic(self) -> bool:
        return self.max_order == self.order

    @property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @property
    def conj(self) -> np.ndarray:
        """conj[s, t] = s^-1 t s."""
        if self._conj is None:
            n = self.order
            x = self.table[self.inv]
            self._conj = self.table[x, np.arange(n)[:, None]]
        return self._conj

    # -- basic operations ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def power(self, g: int, m: int) -> int:
        o = int(self.orders[g])
        return int(self.pow_table[m % o, g])

    def element_order(self, g: int) -> int:
        if not 0 <= g < self.order:
            raise GroupError(f"element index {g} out of range for order {self.order}")
        return int(self.orders[g])

    def cyclic_subgroup(self, g: int) -> np.ndarray:
        o = int(self.orders[g])
        return np.sort(self.pow_table[:o, g])

    def subgroup_closure(self, gens) -> np.ndarray:
        """Smallest subgroup containing gens, as a sorted index array."""
        cur = np.unique(np.concatenate([[0], np.asarray(list(gens), dtype=np.int64)]))
        while True:
            prod = np.unique(self.table[np.ix_(cur, cur)])
            if prod.size == cur.size:
                return prod
            cur = prod

    def cyclic_subgroups(self):
        """All distinct cyclic subgroups as (order, generator, sorted elements).

        Single pass: when a new subgroup <g> is found, every other generator
        of it (the powers of g of full order) is marked visited, so each
        subgroup is materialized exactly once.
        """
        if self._cyclic_subs is None:
            pow_table, orders = self._power_data()
            handled = np.zeros(self.order, dtype=bool)
            subs = []
            for g in range(self.order):
                if handled[g]:
                    continue
                o = int(orders[g])
                col = pow_table[:o, g]
                gens = col[orders[col] == o]
                handled[gens] = True
                subs.append((o, g, np.sort(col)))
            self._cyclic_subs = subs
        return self._cyclic_subs

    def center(self) -> np.ndarray:
        comm = self.table == self.table.T
        return np.flatnonzero(comm.all(axis=1))

    def is_normal(self, elems: np.ndarray) -> bool:
        """Whether the subgroup with the given sorted element set is normal."""
        mask = np.zeros(self.order, dtype=bool)
        mask[elems] = True
        # conjugates of a generating set suffice; use all elements for safety
        return bool(mask[self.conj[:, elems]].all())

    def subgroup(self, elems, label: str | None = None) -> "FiniteGroup":
        """The subgroup on the given (closed) element set, reindexed."""
        el = np.unique(np.asarray(list(elems), dtype=np.int64))
        sub = self.table[np.ix_(el, el)]
        if not np.isin(sub, el).all():
            raise GroupError("element set is not closed under multiplication")
        table = np.searchsorted(el, sub)
        return FiniteGroup(table, label=label or f"{self.label}|sub{len(el)}", validate=False)

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order})"


# ---------------------------------------------------------------------------
# constructors


def cyclic(n: int) -> FiniteGroup:
    if n < 1 or n > ORDER_CAP:
        raise GroupError(f"cyclic order {n} outside 1..{ORDER_CAP}")
    ar = np.arange(n, dtype=np.int64)
    return FiniteGroup(np.add.outer(ar, ar) % n, label=f"C{n}", validate=False)


def semidirect_cyclic(P: int, Q: int, k: int) -> FiniteGroup:
    """C_P x| C_Q with presentation a^P = b^Q = 1, b^-1 a b = a^k.

    Elements a^i b^j are indexed as i + P*j.  Requires gcd(k, P) = 1 and the
    multiplicative order of k mod P to divide Q.
    """
    P, Q = int(P), int(Q)
    if P < 1 or Q < 1 or P * Q > ORDER_CAP:
        raise GroupError(f"orders ({P}, {Q}) invalid or product above {ORDER_CAP}")
    k = int(k) % P if P > 1 else 0
    if P > 1:
        if math.gcd(k, P) != 1:
            raise GroupError(f"action invalid: gcd({k}, {P}) = {math.gcd(k, P)} != 1")
        if pow(k, Q, P) != 1:
            raise GroupError(
                f"action invalid: k^Q = {k}^{Q} = {pow(k, Q, P)} mod {P}, expected 1"
            )
    n = P * Q
    ip = np.arange(P, dtype=np.int32)
    if P > 1:
        kbar = pow(k, -1, P)
        kbar_pows = np.array([pow(kbar, j, P) for j in range(Q)], dtype=np.int32)
    else:
        kbar_pows = np.ones(Q, dtype=np.int32)
    # block structure: the (i1, i2) part depends on j1 only, the j part is a
    # Q x Q pattern; assemble per j1-block to keep the modular work at P*n
    twists = np.outer(kbar_pows, ip) % P  # twists[j1, i2] = kbar^j1 * i2 mod P
    jrow = np.arange(Q, dtype=np.int32)
    table = np.empty((n, n), dtype=np.int32)
    for j1 in range(Q):
        core = (ip[:, None] + twists[j1][None, :]) % P
        jadd = np.repeat(P * ((j1 + jrow) % Q), P)
        table[j1 * P : (j1 + 1) * P, :] = np.tile(core, (1, Q)) + jadd[None, :]
    return FiniteGroup(table, label=f"SD:{P},{Q},{k}", validate=False)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (rotations r^i, reflections r^i s)."""
    if n < 1 or 2 * n > ORDER_CAP:
        raise GroupError(f"dihedral parameter {n} out of range")
    g = semidirect_cyclic(n, 2, n - 1 if n > 1 else 0)
    return FiniteGroup(g.table, label=f"D{n}", validate=False)


def generalized_quaternion(order: int) -> FiniteGroup:
    """Generalized quaternion group of the given 2-power order >= 8.

    Presentation x^(order/2) = 1, y^2 = x^(order/4), y^-1 x y = x^-1;
    element x^i y^j is indexed as i + (order/2)*j.
    """
    N = int(order)
    if N < 8 or N & (N - 1) or N > ORDER_CAP:
        raise GroupError(f"generalized quaternion order must be a 2-power >= 8, got {N}")
    half = N // 2
    idx = np.arange(N, dtype=np.int64)
    i1, j1 = (idx % half)[:, None], (idx // half)[:, None]
    i2, j2 = (idx % half)[None, :], (idx // half)[None, :]
    i = np.where(j1 == 0, i1 + i2, i1 - i2 + np.where(j2 == 1, half // 2, 0)) % half
    j = (j1 + j2) % 2
    return FiniteGroup(i + half * j, label=f"Q{N}", validate=False)


def _perm_group(perms: list[tuple[int, ...]], label: str) -> FiniteGroup:
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for a, pa in enumerate(perms):
        for b, pb in enumerate(perms):
            table[a, b] = index[tuple(pa[x] for x in pb)]
    return FiniteGroup(table, label=label, validate=False)


def symmetric(m: int) -> FiniteGroup:
    if m < 1 or math.factorial(m) > ORDER_CAP:
        raise GroupError(f"symmetric degree {m} out of range")
    return _perm_group(list(itertools.permutations(range(m))), f"S{m}")


def _parity(perm) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return inv % 2


def alternating(m: int) -> FiniteGroup:
    if m < 3 or math.factorial(m) // 2 > ORDER_CAP:
        raise GroupError(f"alternating degree {m} out of range")
    perms = [p for p in itertools.permutations(range(m)) if _parity(p) == 0]
    return _perm_group(perms, f"A{m}")


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """A x B with (x, y) indexed as x*|B| + y."""
    if a.order * b.order > ORDER_CAP:
        raise GroupError("direct product exceeds the order cap")
    table = (a.table[:, None, :, None] * b.order + b.table[None, :, None, :]).reshape(
        a.order * b.order, a.order * b.order
    )
    return FiniteGroup(table, label=f"{a.label}x{b.label}", validate=False)


def relabeled(g: FiniteGroup, perm) -> FiniteGroup:
    """The same group with elements renamed by a bijection fixing 0."""
    perm = np.asarray(perm, dtype=np.int64)
    if perm[0] != 0:
        raise GroupError("relabeling must fix the identity")
    inv_perm = np.empty_like(perm)
    inv_perm[perm] = np.arange(g.order)
    table = perm[g.table[np.ix_(inv_perm, inv_perm)]]
    return FiniteGroup(table, label=f"{g.label}~", validate=False)


# ---------------------------------------------------------------------------
# spec mini-language


def from_json_dict(data: dict, label: str | None = None) -> FiniteGroup:
    if "table" not in data:
        raise GroupError("group JSON needs a 'table' field")
    table = data["table"]
    if "order" in data and len(table) != int(data["order"]):
        raise GroupError("declared order does not match the table size")
    return FiniteGroup(table, label=label or data.get("label", "G"), validate=True)


def parse_group_spec(spec: str) -> FiniteGroup:
    """Parse "C<n>", "D<n>", "Q<8|16|32>", "S<3|4>", "A<4|5>", "SD:<P>,<Q>,<k>",
    "X:<spec>*<spec>", or a path to a JSON file {"order": n, "table": [[...]]}.
    """
    spec = spec.strip()
    if not spec:
        raise GroupError("empty group spec")
    if spec.startswith("@") or spec.endswith(".json") or os.path.sep in spec:
        path = spec[1:] if spec.startswith("@") else spec
        with open(path, "r", encoding="utf-8") as fh:
            return from_json_dict(json.load(fh), label=os.path.basename(path))
    if spec.startswith("X:"):
        parts = spec[2:].split("*")
        if len(parts) < 2:
            raise GroupError(f"direct product spec needs at least two factors: {spec!r}")
        g = parse_group_spec(parts[0])
        for part in parts[1:]:
            g = direct_product(g, parse_group_spec(part))
        return g
    if spec.startswith("SD:"):
        try:
            P, Q, k = (int(x) for x in spec[3:].split(","))
        except ValueError as exc:
            raise GroupError(f"bad semidirect spec {spec!r}") from exc
        return semidirect_cyclic(P, Q, k)
    head, tail = spec[0], spec[1:]
    if not tail.isdigit():
        raise GroupError(f"unrecognized group spec {spec!r}")
    n = int(tail)
    if head == "C":
        return cyclic(n)
    if head == "D":
        return dihedral(n)
    if head == "Q":
        if n not in (8, 16, 32):
            raise GroupError("quaternion specs are Q8, Q16, Q32")
        return generalized_quaternion(n)
    if head == "S":
        if n not in (3, 4):
            raise GroupError("symmetric specs are S3, S4")
        return symmetric(n)
    if head == "A":
        if n not in (4, 5):
            raise GroupError("alternating specs are A4, A5")
        return alternating(n)
    raise GroupError(f"unrecognized group spec {spec!r}")


# ---------------------------------------------------------------------------
# report types


@dataclass(frozen=True)
class ObstructionWitness:
    kind: str
    witness: tuple[int, ...]

    def verify(self, g: FiniteGroup) -> bool:
        """Recompute the witness property directly from the Cayley table."""
        if self.kind == NON_CYCLIC_ABELIAN:
            a, b = self.witness
            oa, ob = g.element_order(a), g.element_order(b)
            if oa != ob or not numtheory.is_prime(oa):
                return False
            if g.mul(a, b) != g.mul(b, a):
                return False
            return b not in set(g.cyclic_subgroup(a).tolist())
        if self.kind == COMPOSITE_ORDER_ELEMENT:
            (a,) = self.witness
            return len(numtheory.factorize(g.element_order(a))) >= 2
        if self.kind == ORDER_FOUR_ELEMENT:
            (a,) = self.witness
            return g.element_order(a) == 4
        return False

    def as_dict(self):
        return {"kind": self.kind, "witness": [int(x) for x in self.witness]}


@dataclass(frozen=True)
class SylowShape:
    kind: str
    order: int

    def as_dict(self):
        return {"kind": self.kind, "order": self.order}


@dataclass(frozen=True)
class FrobeniusDecomposition:
    P: int
    Q: int
    kernel: tuple[int, ...]
    complement: tuple[int, ...]


@dataclass
class ClassificationReport:
    group_label: str
    is_trivial: bool
    hg_real: bool
    hg_sqrt_minus1: bool
    pd1_candidate: bool
    frobenius_decomposition: tuple[int, int] | None
    sylow_shapes: dict[int, SylowShape]
    obstructions: list[ObstructionWitness]

    def as_dict(self):
        return {
            "group_label": self.group_label,
            "is_trivial": self.is_trivial,
            "hg_real": self.hg_real,
            "hg_sqrt_minus1": self.hg_sqrt_minus1,
            "pd1_candidate": self.pd1_candidate,
            "frobenius_decomposition": (
                list(self.frobenius_decomposition) if self.frobenius_decomposition else None
            ),
            "sylow_shapes": {str(p): s.as_dict() for p, s in sorted(self.sylow_shapes.items())},
            "obstructions": [w.as_dict() for w in self.obstructions],
        }


# ---------------------------------------------------------------------------
# operations


def element_order(g: FiniteGroup, x: int) -> int:
    """Smallest n >= 1 with x^n = identity."""
    return g.element_order(x)


def detect_obstructions(g: FiniteGroup) -> list[ObstructionWitness]:
    """Witnesses that rule the group out of the real-base eligibility class.

    Reports at most one witness per kind: a commuting pair of equal prime
    order generating a non-cyclic abelian subgroup, an element whose order
    has two distinct prime divisors, and an element of order exactly 4.
    """
    out = []
    pow_table, orders = g._power_data()

    witness = None
    for q in sorted(numtheory.factorize(g.order)) if g.order > 1 else []:
        elems = np.flatnonzero(orders == q)
        if elems.size <= q - 1:
            continue  # a single C_q at most
        member = np.zeros((elems.size, g.order), dtype=bool)
        member[np.arange(elems.size)[:, None], pow_table[:q, elems].T] = True
        prods = g.table[np.ix_(elems, elems)]
        viol = (prods == prods.T) & ~member[:, elems]
        if viol.any():
            i, j = np.argwhere(viol)[0]
            witness = (int(elems[i]), int(elems[j]))
            break
    if witness is not None:
        out.append(ObstructionWitness(NON_CYCLIC_ABELIAN, witness))

    composite_orders = [
        o for o in np.unique(orders).tolist() if numtheory.prime_divisor_count(o) >= 2
    ]
    if composite_orders:
        x = int(np.flatnonzero(orders == composite_orders[0])[0])
        out.append(ObstructionWitness(COMPOSITE_ORDER_ELEMENT, (x,)))

    fours = np.flatnonzero(orders == 4)
    if fours.size:
        out.append(ObstructionWitness(ORDER_FOUR_ELEMENT, (int(fours[0]),)))
    return out


def _sylow_subgroup(g: FiniteGroup, p: int) -> np.ndarray:
    n = g.order
    a = numtheory.valuation(n, p)
    target = p**a
    orders = g.orders
    if target == n:
        return np.arange(n, dtype=np.int64)
    # p-elements, largest order first so cyclic Sylows resolve in one step
    pelems = [x for x in range(1, n) if _is_ppower_of(int(orders[x]), p)]
    pelems.sort(key=lambda x: -orders[x])
    cur = np.array([0], dtype=np.int64)
    while cur.size < target:
        cur_set = set(cur.tolist())
        for x in pelems:
            if x in cur_set:
                continue
            cand = g.subgroup_closure(np.concatenate([cur, [x]]))
            if target % cand.size == 0:
                cur = cand
                break
        else:  # pragma: no cover - impossible by Sylow theory
            raise GroupError("Sylow closure search stalled")
    return cur


def _is_ppower_of(m: int, p: int) -> bool:
    if m < 2:
        return False
    while m % p == 0:
        m //= p
    return m == 1


def sylow_shape(g: FiniteGroup, p: int) -> SylowShape:
    """Build one Sylow p-subgroup by closure search and classify its shape.

    GeneralizedQuaternion requires order >= 8, a unique involution, and a
    cyclic index-2 subgroup inverted by an order-4 element outside it.
    """
    if not numtheory.is_prime(p):
        raise GroupError(f"{p} is not prime")
    if g.order % p:
        raise GroupError(f"{p} does not divide the group order {g.order}")
    target = p ** numtheory.valuation(g.order, p)
    if (g.orders == target).any():
        # an element of full p-part order generates a Sylow subgroup
        return SylowShape(SYLOW_CYCLIC, target)
    elems = _sylow_subgroup(g, p)
    size = int(elems.size)
    sub_orders = g.orders[elems]
    if int(sub_orders.max()) == size:
        return SylowShape(SYLOW_CYCLIC, size)  # pragma: no cover - caught above
    if p == 2 and size >= 8:
        involutions = elems[sub_orders == 2]
        if involutions.size == 1:
            half_gens = elems[sub_orders == size // 2]
            fours = elems[sub_orders == 4]
            for c in half_gens.tolist():
                c_sub = set(g.cyclic_subgroup(c).tolist())
                c_inv = g.inverse(c)
                for y in fours.tolist():
                    if y in c_sub:
                        continue
                    if g.mul(g.inverse(y), g.mul(c, y)) == c_inv:
                        return SylowShape(SYLOW_GENERALIZED_QUATERNION, size)
    return SylowShape(SYLOW_OTHER, size)


def frobenius_cyclic_decomposition(g: FiniteGroup) -> FrobeniusDecomposition | None:
    """Search for G = K x| H with K cyclic normal of order P, H cyclic of
    order Q = |G|/P, gcd(P, Q) = 1, and no nontrivial element of H commuting
    with any nontrivial element of K.  Exhaustive over cyclic subgroups.
    """
    n = g.order
    if n <= 1:
        return None
    # a Frobenius group has trivial center (any central element of the kernel
    # would commute with the complement), so most groups bail out here
    if g.center().size > 1:
        return None
    by_order: dict[int, list] = {}
    for o, gen, elems in g.cyclic_subgroups():
        by_order.setdefault(o, []).append((gen, elems))
    for P in numtheory.divisors(n):
        if P == 1 or P == n:
            continue
        Q = n // P
        if math.gcd(P, Q) != 1:
            continue
        complements = by_order.get(Q, [])
        if not complements or P not in by_order:
            continue
        for _, k_elems in by_order[P]:
            if not g.is_normal(k_elems):
                continue
            k_nontriv = k_elems[k_elems != 0]
            for _, h_elems in complements:
                h_nontriv = h_elems[h_elems != 0]
                kh = g.table[np.ix_(k_nontriv, h_nontriv)]
                hk = g.table[np.ix_(h_nontriv, k_nontriv)]
                if not (kh == hk.T).any():
                    return FrobeniusDecomposition(
                        P=int(P),
                        Q=int(Q),
                        kernel=tuple(int(x) for x in k_elems),
                        complement=tuple(int(x) for x in h_elems),
                    )
    return None


def _order_2_or_odd_prime_power(m: int) -> bool:
    return m == 2 or (m % 2 == 1 and numtheory.is_prime_power(m))


def is_generalized_quaternion_group(g: FiniteGroup) -> bool:
    n = g.order
    if n < 8 or n & (n - 1):
        return False
    return sylow_shape(g, 2).kind == SYLOW_GENERALIZED_QUATERNION


def classify(g: FiniteGroup) -> ClassificationReport:
    """Full eligibility report; the trivial group gets all flags false."""
    if g.order == 1:
        return ClassificationReport(
            group_label=g.label,
            is_trivial=True,
            hg_real=False,
            hg_sqrt_minus1=False,
            pd1_candidate=False,
            frobenius_decomposition=None,
            sylow_shapes={},
            obstructions=[],
        )
    obstructions = detect_obstructions(g)
    frob = frobenius_cyclic_decomposition(g)
    cyc = g.is_cyclic
    n = g.order

    hg_real = (cyc and _order_2_or_odd_prime_power(n)) or (
        frob is not None
        and _order_2_or_odd_prime_power(frob.P)
        and _order_2_or_odd_prime_power(frob.Q)
    )
    hg_sqrt = (
        (cyc and numtheory.is_prime_power(n))
        or (
            frob is not None
            and numtheory.is_prime_power(frob.P)
            and numtheory.is_prime_power(frob.Q)
        )
        or is_generalized_quaternion_group(g)
    )
    pd1 = (cyc and numtheory.is_prime(n)) or (
        frob is not None
        and numtheory.is_prime(frob.P)
        and (frob.Q == 2 or (frob.Q == 3 and frob.P % 3 == 1))
    )
    shapes = {p: sylow_shape(g, p) for p in numtheory.factorize(n)}
    return ClassificationReport(
        group_label=g.label,
        is_trivial=False,
        hg_real=hg_real,
        hg_sqrt_minus1=hg_sqrt,
        pd1_candidate=pd1,
        frobenius_decomposition=(frob.P, frob.Q) if frob else None,
        sylow_shapes=shapes,
        obstructions=obstructions,
    )


# ---------------------------------------------------------------------------
# isomorphism testing (brute-force generator images; meant for small orders)


def _fingerprint(g: FiniteGroup):
    return (
        g.order,
        tuple(sorted(g.orders.tolist())),
        g.is_abelian,
        int(g.center().size),
    )


def _greedy_generators(g: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = np.array([0], dtype=np.int64)
    # prefer high-order elements so very few generators are needed
    for x in sorted(range(g.order), key=lambda i: -int(g.orders[i])):
        if span.size == g.order:
            break
        if x not in set(span.tolist()):
            gens.append(x)
            span = g.subgroup_closure(span.tolist() + [x])
    return gens


def _extend_hom(phi: dict[int, int], new_g: int, new_h: int, g: FiniteGroup, h: FiniteGroup):
    phi = dict(phi)
    if new_g in phi:
        return phi if phi[new_g] == new_h else None
    phi[new_g] = new_h
    frontier = [new_g]
    while frontier:
        x = frontier.pop()
        for y in list(phi):
            for a, b in ((x, y), (y, x)):
                pg = g.mul(a, b)
                ph = h.mul(phi[a], phi[b])
                if pg in phi:
                    if phi[pg] != ph:
                        return None
                else:
                    phi[pg] = ph
                    frontier.append(pg)
    return phi


def is_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    """Exact isomorphism test by generator-image search.

    Practical for small orders (tests use it up to ~64); invariant
    fingerprints prune most mismatches immediately.
    """
    if _fingerprint(g) != _fingerprint(h):
        return False
    gens = _greedy_generators(g)
    h_orders = h.orders

    def backtrack(i, phi):
        if i == len(gens):
            if len(phi) != g.order:
                return False
            return sorted(phi.values()) == list(range(h.order))
        x = gens[i]
        target_order = g.orders[x]
        for y in np.flatnonzero(h_orders == target_order).tolist():
            nxt = _extend_hom(phi, x, y, g, h)
            if nxt is not None and backtrack(i + 1, nxt):
                return True
        return False

    return backtrack(0, {0: 0})
