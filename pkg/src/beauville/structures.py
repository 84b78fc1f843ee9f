"""The Beauville predicates: hyperbolic triples, the powers-not-conjugate
condition, seeded searches and structure constants.

A GroupHandle bundles a realized group: its abstract elements (permutations
or matrices), a faithful-or-quotient permutation action used for all BSGS
certificates, the expected order, and an element-order function.  Matrix
handles compute orders at the matrix level whenever the realization targets
a cover (the projective action loses the center); permutation handles use
cycle structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .numtheory import Factorization, factorize
from .matgrp import (
    GroupSpec,
    SquareMatrix,
    classical_order,
    order_of_matrix,
    standard_generators,
    suzuki_generators,
    omega_minus_char2_generators,
)
from .permgrp import (
    CAP_EXCEEDED,
    BSGS,
    Permutation,
    PointAction,
    ProductReplacer,
    RandomSource,
    class_orbit,
    matrix_to_perm,
    schreier_sims,
)

DEFAULT_BUDGET = 10 ** 5
DEFAULT_CAP = 200000


class GroupHandle:
    """A realized group with certified order and uniform element operations."""

    def __init__(self, name: str, gens: Sequence, expected_order: int,
                 perm_gens: Sequence[Permutation]):
        self.name = name
        self.gens = list(gens)
        self.expected_order = expected_order
        self.perm_gens = list(perm_gens)
        self.matrix_gens: Optional[List[SquareMatrix]] = None
        self.action = None
        self._bsgs: Optional[BSGS] = None
        self._order_multiple: Optional[Factorization] = None

    # -- realization constructors

    @classmethod
    def from_permutations(cls, name: str, gens: Sequence[Permutation],
                          expected_order: Optional[int] = None) -> "GroupHandle":
        order = schreier_sims(gens).order()
        if expected_order is not None and order != expected_order:
            raise ValueError(f"{name}: BSGS order {order} != declared {expected_order}")
        return cls(name, gens, order, gens)

    @classmethod
    def from_matrix_spec(cls, spec: GroupSpec, cap: int = 10 ** 7,
                         quotient: bool = False) -> "GroupHandle":
        """Realize a matrix group through a permutation action.

        By default the action is faithful: nonzero vectors when the center
        is nontrivial (so covers keep their central elements), projective
        points otherwise.  With quotient=True the projective action is used
        regardless, realizing the central quotient (PSL and friends).
        Element arithmetic runs on the permutation side; the matrix
        generators stay attached for the explicit constructions, whose
        matrix-level orders are checked against the permutation image.
        """
        gens = list(spec.generators or standard_generators(spec))
        if spec.declared_order is not None:
            expected = spec.declared_order
        else:
            expected = classical_order(spec).value
        ctx = gens[0].ctx
        center = _scalar_subgroup_order(spec, ctx, gens[0].d)
        name = spec.label()
        if quotient:
            action = "projective"
            expected //= center
            name = "P" + name
        else:
            action = "vectors" if center > 1 else "projective"
        perms, _, act = matrix_to_perm(gens, action, cap)
        order = schreier_sims(perms).order()
        if order != expected:
            raise ValueError(
                f"{name}: BSGS order {order} != formula/declared {expected}")
        handle = cls(name, perms, expected, perms)
        handle.matrix_gens = gens
        handle.action = act
        if not quotient:
            handle._order_multiple = _group_exponent_multiple(spec)
        return handle

    def inject_matrix(self, M: SquareMatrix) -> Permutation:
        """Image of a matrix in the handle's faithful action, with the
        matrix-level order cross-checked against the cycle structure."""
        perm = self.action.permutation(M)
        if self._order_multiple is not None:
            assert order_of_matrix(M, self._order_multiple) == perm.order()
        return perm

    # -- element operations

    def identity(self):
        return Permutation.identity(self.gens[0].degree)

    def multiply(self, a, b):
        return a * b

    def inverse(self, a):
        return a.inverse()

    def conjugate(self, a, g):
        return self.inverse(g) * a * g

    def element_order(self, a) -> int:
        return a.order()

    def to_perm(self, a) -> Permutation:
        return a

    def bsgs(self) -> BSGS:
        if self._bsgs is None:
            self._bsgs = schreier_sims(self.perm_gens)
            assert self._bsgs.order() == self.expected_order
        return self._bsgs

    def subgroup_order(self, elements: Sequence) -> int:
        return schreier_sims([self.to_perm(a) for a in elements]).order()

    def replacer(self, rs: RandomSource) -> ProductReplacer:
        return ProductReplacer(self.gens, rs, identity=self.identity())

    def __repr__(self) -> str:
        return f"GroupHandle({self.name}, order={self.expected_order})"


def _scalar_subgroup_order(spec: GroupSpec, ctx, d: int) -> int:
    if spec.family == "SL":
        return math.gcd(d, spec.q - 1)
    if spec.family == "SU":
        return math.gcd(d, spec.q + 1)
    if spec.family == "Sp":
        return math.gcd(2, spec.q - 1)
    if spec.family in ("SuzukiB2",):
        return 1
    if spec.family in ("OmegaMinus", "OmegaPlus", "OmegaOdd") and spec.q == 2:
        return 1
    # conservative: check whether -1 is in the group via the generators' field
    return 2 if ctx.p != 2 else 1


def _group_exponent_multiple(spec: GroupSpec) -> Factorization:
    """A factored multiple of every element order (|GL_d| over the matrix
    field), used by the factored-order descent."""
    ctx_q = spec.q * spec.q if spec.family in ("GU", "SU") else spec.q
    d = spec.d
    out = factorize(ctx_q).pow(d - 1)
    for i in range(1, d + 1):
        out = out * factorize(ctx_q ** i - 1)
    return out


# ---------------------------------------------------------------------------
# triples


@dataclass(frozen=True)
class HyperbolicTriple:
    """A verified generating triple with 1/l + 1/m + 1/n < 1."""

    group: str
    x: object
    y: object
    z: object
    orders: Tuple[int, int, int]
    certified_order: int

    @property
    def order_product(self) -> int:
        l, m, n = self.orders
        return l * m * n


@dataclass(frozen=True)
class NotGenerating:
    subgroup_order: int


@dataclass(frozen=True)
class NotHyperbolic:
    reciprocal_sum: Fraction


def verify_triple(G: GroupHandle, x, y) -> Union[HyperbolicTriple, NotGenerating, NotHyperbolic]:
    """Check x, y for a hyperbolic generating triple (x, y, (xy)^-1)."""
    sub = G.subgroup_order([x, y])
    if sub != G.expected_order:
        return NotGenerating(sub)
    z = G.inverse(G.multiply(x, y))
    orders = (G.element_order(x), G.element_order(y), G.element_order(z))
    total = sum(Fraction(1, o) for o in orders)
    if total >= 1:
        return NotHyperbolic(total)
    return HyperbolicTriple(G.name, x, y, z, orders, sub)


# ---------------------------------------------------------------------------
# condition (iii)


@dataclass(frozen=True)
class CoprimeOrders:
    products: Tuple[int, int]


@dataclass(frozen=True)
class ClassChecked:
    checks: Tuple[Tuple[int, int, int], ...]  # (prime, order_u, order_v) verified


@dataclass(frozen=True)
class Violation:
    prime: int
    u_slot: int
    v_slot: int
    power: int


@dataclass(frozen=True)
class Undecided:
    reason: str


ConditionCertificate = Union[CoprimeOrders, ClassChecked, Violation, Undecided]


def condition_iii(G: GroupHandle, t1: HyperbolicTriple, t2: HyperbolicTriple,
                  cap: int = DEFAULT_CAP) -> ConditionCertificate:
    """No nontrivial power of t1's elements conjugate to a power of t2's.

    Coprime order products certify immediately.  Otherwise reduce to prime
    order: any conjugacy between nontrivial powers forces one between
    powers of prime order, so for each shared prime r it is enough to check
    the order-r powers u^(o(u)/r) against v^(o(v)/r) and all its powers.
    """
    if math.gcd(t1.order_product, t2.order_product) == 1:
        return CoprimeOrders((t1.order_product, t2.order_product))
    shared = set(factorize(t1.order_product).primes) & set(factorize(t2.order_product).primes)
    checks = []
    for r in sorted(shared):
        us = [(slot, u) for slot, u in enumerate((t1.x, t1.y, t1.z))
              if G.element_order(u) % r == 0]
        vs = [(slot, v) for slot, v in enumerate((t2.x, t2.y, t2.z))
              if G.element_order(v) % r == 0]
        for u_slot, u in us:
            u_r = _power_to_order(G, u, r)
            orbit = class_orbit(G.to_perm(u_r), G.perm_gens, cap)
            if orbit is CAP_EXCEEDED:
                return Undecided(f"class orbit of an order-{r} power exceeds cap {cap}")
            for v_slot, v in vs:
                v_r = G.to_perm(_power_to_order(G, v, r))
                for k in range(1, r):
                    if v_r ** k in orbit:
                        return Violation(r, u_slot, v_slot, k)
            checks.append((r, u_slot, len(vs)))
    return ClassChecked(tuple(checks))


def _power_to_order(G: GroupHandle, u, r: int):
    o = G.element_order(u)
    assert o % r == 0
    return u ** (o // r)


@dataclass(frozen=True)
class BeauvilleStructure:
    """Two hyperbolic triples with a verified disjointness certificate."""

    triple1: HyperbolicTriple
    triple2: HyperbolicTriple
    certificate: ConditionCertificate

    def __post_init__(self):
        assert isinstance(self.certificate, (CoprimeOrders, ClassChecked))

    @property
    def types(self) -> Tuple[Tuple[int, int, int], Tuple[int, int, int]]:
        return (self.triple1.orders, self.triple2.orders)


# ---------------------------------------------------------------------------
# searches


@dataclass(frozen=True)
class Exhausted:
    attempts: int
    detail: str = ""


@dataclass(frozen=True)
class GowResult:
    x: object
    y: object
    witness: object  # the conjugator g with y = x^g
    attempts: int


def gow_search(G: GroupHandle, x0, target_order: Optional[int] = None,
               target_class=None, budget: int = DEFAULT_BUDGET,
               seed: int = 0, cap: int = DEFAULT_CAP,
               require_generation: bool = False) -> Union[GowResult, Exhausted]:
    """Random conjugates y = x0^g until o(x0 y) matches the target.

    target_class, when given, additionally requires x0*y to be conjugate to
    it (checked through the class orbit with the given cap).  With
    require_generation the pair must also pass verify_triple.
    """
    if G.element_order(x0) == 1:
        raise ValueError("x0 must be nontrivial")
    rs = RandomSource(seed)
    rep = G.replacer(rs)
    target_orbit = None
    if target_class is not None:
        target_orbit = class_orbit(G.to_perm(target_class), G.perm_gens, cap)
        if target_orbit is CAP_EXCEEDED:
            return Exhausted(0, "target class orbit exceeds cap")
    for attempt in range(1, budget + 1):
        g = rep.random_element()
        y = G.conjugate(x0, g)
        prod = G.multiply(x0, y)
        if target_order is not None and G.element_order(prod) != target_order:
            continue
        if target_orbit is not None and G.to_perm(prod) not in target_orbit:
            continue
        if require_generation and not isinstance(verify_triple(G, x0, y), HyperbolicTriple):
            continue
        return GowResult(x0, y, g, attempt)
    return Exhausted(budget)


def _element_of_order(G: GroupHandle, rep: ProductReplacer, order: int,
                      budget: int) -> Tuple[Optional[object], int]:
    for attempt in range(1, budget + 1):
        g = rep.random_element()
        o = G.element_order(g)
        if o % order == 0:
            return g ** (o // order), attempt
    return None, budget


def element_of_order(G: GroupHandle, order: int, seed: int = 0,
                     budget: int = DEFAULT_BUDGET):
    """A pseudo-random element of the exact order, or None."""
    el, _ = _element_of_order(G, G.replacer(RandomSource(seed)), order, budget)
    return el


REPIN_INTERVAL = 300


def search_by_type(G: GroupHandle, type_lmn: Tuple[int, int, int],
                   budget: int = DEFAULT_BUDGET, seed: int = 0
                   ) -> Union[HyperbolicTriple, Exhausted]:
    """Seeded search for a hyperbolic triple of the given type.

    Elements of orders l and m are pinned by powering random elements, then
    the relative position is randomized until the product has order n and
    the pair generates.  The pinned pair is redrawn every few hundred
    attempts so an unlucky pair of conjugacy classes cannot wedge the
    search.  Deterministic for a fixed seed and budget.
    """
    l, m, n = type_lmn
    if min(type_lmn) < 2:
        raise ValueError("orders must be at least 2")
    rs = RandomSource(seed)
    rep = G.replacer(rs)
    a, used1 = _element_of_order(G, rep, l, budget)
    if a is None:
        return Exhausted(budget, f"no element of order {l}")
    b, used2 = _element_of_order(G, rep, m, budget - used1)
    if b is None:
        return Exhausted(budget, f"no element of order {m}")
    attempts = used1 + used2
    since_repin = 0
    while attempts < budget:
        attempts += 1
        since_repin += 1
        if since_repin > REPIN_INTERVAL:
            since_repin = 0
            a2, _ = _element_of_order(G, rep, l, REPIN_INTERVAL)
            b2, _ = _element_of_order(G, rep, m, REPIN_INTERVAL)
            a, b = a2 or a, b2 or b
        g = rep.random_element()
        bg = G.conjugate(b, g)
        prod = G.multiply(a, bg)
        if G.element_order(prod) != n:
            continue
        result = verify_triple(G, a, bg)
        if isinstance(result, HyperbolicTriple):
            return result
    return Exhausted(budget)


# ---------------------------------------------------------------------------
# structure constants


class CapExceededError(RuntimeError):
    pass


def structure_constant(G: GroupHandle, c1, c2, z, cap: int = DEFAULT_CAP) -> int:
    """|{(a, b) in c1^G x c2^G : a b = z}| by iterating over c1's class."""
    orbit1 = class_orbit(G.to_perm(c1), G.perm_gens, cap)
    if orbit1 is CAP_EXCEEDED:
        raise CapExceededError(f"class of c1 exceeds cap {cap}")
    orbit2 = class_orbit(G.to_perm(c2), G.perm_gens, cap)
    if orbit2 is CAP_EXCEEDED:
        raise CapExceededError(f"class of c2 exceeds cap {cap}")
    zp = G.to_perm(z)
    count = 0
    for a in orbit1:
        if a.inverse() * zp in orbit2:
            count += 1
    return count
