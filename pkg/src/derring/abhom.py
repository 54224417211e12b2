"""Homomorphisms from finite groups into the additive groups of rings.

Any homomorphism H -> (A,+) kills the commutator subgroup, so it factors
through the abelianization H/[H,H].  That quotient is decomposed into
primary cyclic components Z_{q^j}; pairing those against the primary
components Z_{p^i} of (A,+) gives the full homomorphism group, since
Hom(Z_{q^j}, Z_{p^i}) vanishes for q != p and is cyclic of order
p^min(i,j) otherwise, generated by 1 -> p^(i-min(i,j)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .errors import SpecError
from .groups import (
    FiniteGroup,
    Subgroup,
    element_order,
    full_subgroup,
    quotient_group,
    subgroup,
    subgroup_closure,
)
from .rings import FiniteRing, IntegersRing, additive_decomposition, factor_int


def commutator_subgroup(H: Subgroup) -> Subgroup:
    """Subgroup generated by all commutators a b a^-1 b^-1 of H."""
    G = H.group
    comms = set()
    for a in H.elements:
        for b in H.elements:
            ab = G.mul_table[a][b]
            comms.add(G.mul_table[ab][G.mul_table[G.inverse[a]][G.inverse[b]]])
    return subgroup_closure(G, comms)


@dataclass(frozen=True)
class QuotientComponent:
    """One Z_{p^e} summand of an abelian quotient."""

    prime: int
    exponent: int
    generator: int  # element of the quotient group
    lift: int  # least source element projecting onto the generator

    @property
    def order(self) -> int:
        return self.prime**self.exponent


@dataclass(frozen=True)
class AbelianQuotient:
    """H/[H,H] with its projection and a primary cyclic decomposition."""

    source: Subgroup
    quotient: FiniteGroup
    projection: tuple[int, ...]  # aligned with source.elements
    components: tuple[QuotientComponent, ...]

    def __post_init__(self):
        pos = {g: i for i, g in enumerate(self.source.elements)}
        object.__setattr__(self, "_pos", pos)
        Q = self.quotient
        coords: dict[int, tuple[int, ...]] = {}
        ranges = [range(c.order) for c in self.components]
        for combo in itertools.product(*ranges):
            x = Q.identity
            for c, comp in zip(combo, self.components):
                x = Q.mul(x, Q.power(comp.generator, c))
            if x in coords:
                raise RuntimeError("quotient components are not independent")
            coords[x] = combo
        if len(coords) != Q.order:
            raise RuntimeError("quotient components do not span the quotient")
        object.__setattr__(self, "_coords", coords)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(c.order for c in self.components)

    def project(self, g: int) -> int:
        idx = self._pos.get(g)
        if idx is None:
            raise SpecError(
                f"element {g} is outside the domain subgroup of order {self.source.order}"
            )
        return self.projection[idx]

    def coords(self, g: int) -> tuple[int, ...]:
        """Exponent coordinates of a source element along the components."""
        return self._coords[self.project(g)]


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _exponent_of(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _p_cyclic_generators(G: FiniteGroup) -> list[int]:
    """Generators splitting an abelian p-group into cyclics, largest first.

    Greedy: take an element x of maximal order, split off <x>, and lift
    generators of G/<x> back, correcting each lift y so that its order
    matches its image (y^d lands in <x> as x^c with d | c; replace y by
    y * x^(-c/d)).
    """
    if G.order == 1:
        return []
    best, best_ord = 0, 1
    for g in range(G.order):
        o = element_order(G, g)
        if o > best_ord:
            best, best_ord = g, o
    x_sub = subgroup_closure(G, [best])
    x_pow = {G.power(best, t): t for t in range(best_ord)}
    Q, proj = quotient_group(G, x_sub)
    gens = [best]
    for gq in _p_cyclic_generators(Q):
        d = element_order(Q, gq)
        y = min(g for g in range(G.order) if proj[g] == gq)
        c = x_pow[G.power(y, d)]
        assert c % d == 0
        y = G.mul(y, G.power(best, -(c // d)))
        assert element_order(G, y) == d
        gens.append(y)
    return gens


def _primary_components(Q: FiniteGroup) -> list[tuple[int, int, int]]:
    """(prime, exponent, generator) triples for an abelian group Q."""
    out: list[tuple[int, int, int]] = []
    if Q.order == 1:
        return out
    for p in sorted(factor_int(Q.order)):
        part = [x for x in range(Q.order) if _is_power_of(element_order(Q, x), p)]
        Pg, pelems = subgroup(Q, part).as_group()
        for gen in _p_cyclic_generators(Pg):
            g = pelems[gen]
            out.append((p, _exponent_of(element_order(Q, g), p), g))
    return out


@lru_cache(maxsize=None)
def abelianization(H: Subgroup) -> AbelianQuotient:
    Hg, elems = H.as_group()
    K = commutator_subgroup(full_subgroup(Hg))
    Q, proj = quotient_group(Hg, K)
    components = []
    for p, e, gq in _primary_components(Q):
        lift = min(elems[i] for i in range(Hg.order) if proj[i] == gq)
        components.append(QuotientComponent(p, e, gq, lift))
    return AbelianQuotient(H, Q, tuple(proj), tuple(components))


@dataclass(frozen=True)
class HomAb:
    """An additive-group homomorphism H -> (A,+), stored by generator images."""

    quotient: AbelianQuotient
    ring: FiniteRing
    images: tuple  # ring elements, aligned with quotient.components

    @property
    def domain(self) -> Subgroup:
        return self.quotient.source

    def evaluate(self, g: int):
        A = self.ring
        acc = A.zero
        for c, img in zip(self.quotient.coords(g), self.images):
            acc = A.add(acc, A.scalar(c, img))
        return acc

    def __call__(self, g: int):
        return self.evaluate(g)

    def value_table(self) -> tuple:
        """Values on all domain elements; a basis-independent signature."""
        return tuple(self.evaluate(g) for g in self.domain.elements)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(img) for img in self.images)

    def additive_order(self) -> int:
        return lcm(1, *(self.ring.additive_order(img) for img in self.images))

    def add(self, other: "HomAb") -> "HomAb":
        if other.quotient != self.quotient:
            raise ValueError("homomorphisms have different domains")
        A = self.ring
        return HomAb(
            self.quotient,
            A,
            tuple(A.add(a, b) for a, b in zip(self.images, other.images)),
        )

    def neg(self) -> "HomAb":
        A = self.ring
        return HomAb(self.quotient, A, tuple(A.neg(a) for a in self.images))

    def scale(self, k: int) -> "HomAb":
        A = self.ring
        return HomAb(self.quotient, A, tuple(A.scalar(k, a) for a in self.images))


def zero_hom(quotient: AbelianQuotient, A: FiniteRing) -> HomAb:
    return HomAb(quotient, A, tuple(A.zero for _ in quotient.components))


def hom_from_values(quotient: AbelianQuotient, A: FiniteRing, values) -> HomAb:
    """Reconstruct a HomAb from a full value map, verifying additivity.

    ``values`` maps every domain element to a ring element.  Raises
    ValueError when the map is not an additive homomorphism.
    """
    phi = HomAb(quotient, A, tuple(values[c.lift] for c in quotient.components))
    for g in quotient.source.elements:
        if phi.evaluate(g) != values[g]:
            raise ValueError("value map is not an additive homomorphism")
    return phi


@dataclass(frozen=True)
class HomGroup:
    """The abelian group Hom(H, (A,+)) with generators and structure."""

    domain: Subgroup
    ring: FiniteRing
    quotient: AbelianQuotient
    generators: tuple[HomAb, ...]
    structure: tuple[tuple[int, int], ...]  # (prime, exponent) per generator

    @property
    def order(self) -> int:
        n = 1
        for p, e in self.structure:
            n *= p**e
        return n

    def is_trivial(self) -> bool:
        return not self.generators

    def member(self, coeffs) -> HomAb:
        phi = zero_hom(self.quotient, self.ring)
        for c, gen in zip(coeffs, self.generators):
            phi = phi.add(gen.scale(c))
        return phi

    def enumerate_members(self):
        ranges = [range(p**e) for p, e in self.structure]
        for combo in itertools.product(*ranges):
            yield combo, self.member(combo)

    def coordinates_of(self, phi: HomAb):
        """Coefficients expressing phi in the generators, or None."""
        target = phi.value_table()
        for combo, member in self.enumerate_members():
            if member.value_table() == target:
                return combo
        return None


@lru_cache(maxsize=None)
def hom_group(H: Subgroup, A: FiniteRing) -> HomGroup:
    if isinstance(A, IntegersRing):
        raise TypeError("hom groups into the symbolic integer ring are always trivial")
    quo = abelianization(H)
    ring_comps = additive_decomposition(A).components
    gens: list[HomAb] = []
    structure: list[tuple[int, int]] = []
    for j, qc in enumerate(quo.components):
        for rc in ring_comps:
            if rc.prime != qc.prime:
                continue
            e = min(rc.exponent, qc.exponent)
            img = A.scalar(rc.prime ** (rc.exponent - e), rc.generator)
            images = tuple(
                img if t == j else A.zero for t in range(len(quo.components))
            )
            gens.append(HomAb(quo, A, images))
            structure.append((rc.prime, e))
    return HomGroup(H, A, quo, tuple(gens), tuple(structure))


def evaluate_hom(phi: HomAb, g: int):
    """Value of phi at g; raises if g lies outside the domain subgroup."""
    return phi.evaluate(g)
