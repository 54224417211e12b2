"""The adjoint-action groupoid of a group and its character calculus.

Objects are the group elements.  A morphism is any pair (u, v): it runs
from source v^-1 u to target u v^-1, so source and target are always
conjugate.  Composition is diagrammatic: for phi = (u1, v1): a -> b
followed by psi = (u2, v2): b -> c the composite is (u2 v1, v2 v1).

A character is an additive map from morphisms into the additive group
of a ring; under chi_d((h, g)) = coefficient of h in d(g) characters
correspond exactly to derivations of the group ring.  Characters that
vanish on all loops are the ones induced by inner derivations; the loop
group Hom(a, a) = {(v a, v) : v in Z(a)} is isomorphic to the
centralizer Z(a).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotLoopTrivialError
from .groups import FiniteGroup, centralizer, conjugacy_classes
from .rings import FiniteRing

from .abhom import HomAb, abelianization, hom_from_values


@dataclass(frozen=True)
class Morphism:
    group: FiniteGroup
    u: int
    v: int

    @property
    def source(self) -> int:
        G = self.group
        return G.mul(G.inv(self.v), self.u)

    @property
    def target(self) -> int:
        G = self.group
        return G.mul(self.u, G.inv(self.v))

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)

    def is_loop(self) -> bool:
        return self.source == self.target

    def inverse(self) -> "Morphism":
        G = self.group
        vi = G.inv(self.v)
        return Morphism(G, G.mul(G.mul(vi, self.u), vi), vi)

    def __repr__(self) -> str:  # pragma: no cover
        G = self.group
        return f"({G.names[self.u]},{G.names[self.v]})"


def identity_morphism(G: FiniteGroup, a: int) -> Morphism:
    return Morphism(G, a, G.identity)


def then_compose(phi: Morphism, psi: Morphism) -> Morphism:
    """phi followed by psi; errors when the pair is not composable."""
    if phi.group != psi.group:
        raise ValueError("morphisms live in different groupoids")
    if phi.target != psi.source:
        raise ValueError(
            f"morphisms are not composable: target {phi.target} != source {psi.source}"
        )
    G = phi.group
    return Morphism(G, G.mul(psi.u, phi.v), G.mul(psi.v, phi.v))


def loops_at(G: FiniteGroup, a: int) -> list[tuple[int, Morphism]]:
    """Pairs (v, loop (v*a, v)) for v in the centralizer Z(a)."""
    return [(v, Morphism(G, G.mul(v, a), v)) for v in centralizer(G, a).elements]


class Character:
    """Finitely supported map from morphisms (u, v) to ring elements."""

    __slots__ = ("group", "ring", "values")

    def __init__(self, group: FiniteGroup, ring: FiniteRing, values: dict):
        self.group = group
        self.ring = ring
        self.values = {m: x for m, x in values.items() if not ring.is_zero(x)}

    def value(self, m) -> object:
        """Value at a Morphism or a bare (u, v) pair."""
        if isinstance(m, Morphism):
            m = m.pair
        return self.values.get(m, self.ring.zero)

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.values)

    def is_zero(self) -> bool:
        return not self.values

    def add(self, other: "Character") -> "Character":
        A = self.ring
        vals = dict(self.values)
        for m, x in other.values.items():
            vals[m] = A.add(vals.get(m, A.zero), x)
        return Character(self.group, A, vals)

    def neg(self) -> "Character":
        A = self.ring
        return Character(self.group, A, {m: A.neg(x) for m, x in self.values.items()})

    def sub(self, other: "Character") -> "Character":
        return self.add(other.neg())

    def scale(self, k: int) -> "Character":
        A = self.ring
        return Character(self.group, A, {m: A.scalar(k, x) for m, x in self.values.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.group == other.group
            and self.ring == other.ring
            and self.values == other.values
        )

    def __repr__(self) -> str:  # pragma: no cover
        return f"Character({self.group.label}, {self.ring.label}, {len(self.values)} entries)"


def zero_character(G: FiniteGroup, A: FiniteRing) -> Character:
    return Character(G, A, {})


def ad_character(G: FiniteGroup, A: FiniteRing, a: int) -> Character:
    """Character of the inner derivation x -> ax - xa.

    On a morphism (h, g): +1 when hg^-1 = a but g^-1h != a, -1 when
    g^-1h = a but hg^-1 != a, and 0 when both or neither equal a.
    """
    vals: dict[tuple[int, int], object] = {}
    one = A.one
    for g in range(G.order):
        ag = G.mul(a, g)
        ga = G.mul(g, a)
        if ag != ga:
            vals[(ag, g)] = one
            vals[(ga, g)] = A.neg(one)
    return Character(G, A, vals)


def is_trivial_on_loops(chi: Character) -> bool:
    G = chi.group
    for (u, v) in chi.values:
        if G.mul(G.inv(v), u) == G.mul(u, G.inv(v)):
            return False
    return True


def restrict_to_loops(chi: Character, u_rep: int) -> HomAb:
    """The additive map v -> chi((v*u_rep, v)) on the centralizer Z(u_rep).

    Raises ValueError when the loop values fail to be additive (possible
    only for value maps that are not genuine characters).
    """
    G = chi.group
    Z = centralizer(G, u_rep)
    values = {v: chi.value((G.mul(v, u_rep), v)) for v in Z.elements}
    return hom_from_values(abelianization(Z), chi.ring, values)


def _min_conjugator(G: FiniteGroup, src: int, dst: int) -> int:
    """Least g with g * src * g^-1 = dst."""
    for g in range(G.order):
        if G.conj(g, src) == dst:
            return g
    raise ValueError(f"elements {src} and {dst} are not conjugate")


def section(u_rep: int, phi: HomAb) -> Character:
    """Character on the component of u_rep extending phi from the loops.

    Fix for each object a the least conjugator g_a with g_a a g_a^-1 =
    u_rep.  A morphism (v*a, v): a -> b then pulls back to the loop with
    coordinate g_b v g_a^-1 in Z(u_rep), and the character value is phi
    of that coordinate.  Additivity is inherited from phi, so this is
    the character of an actual derivation; on a loop at a it reduces to
    phi(g_a v g_a^-1), restoring phi itself at a = u_rep.  Filling only
    the loops would not do: any loop factors through non-loop morphisms
    once the class has more than one element.
    """
    Z = phi.domain
    G = Z.group
    A = phi.ring
    if Z != centralizer(G, u_rep):
        raise ValueError("hom domain must be the centralizer of the representative")
    cls = conjugacy_classes(G).class_containing(u_rep)
    conjugator = {a: _min_conjugator(G, a, u_rep) for a in cls}
    vals: dict[tuple[int, int], object] = {}
    for a in cls:
        ga_inv = G.inv(conjugator[a])
        for v in range(G.order):
            b = G.conj(v, a)
            z = G.mul(conjugator[b], G.mul(v, ga_inv))
            vals[(G.mul(v, a), v)] = phi.evaluate(z)
    return Character(G, A, vals)


def potential(chi: Character, cls) -> dict[int, object]:
    """Vertex potential p on a conjugacy class with chi = p(target) - p(source).

    The base point is the least element of the class and gets value 0;
    p(u) is chi on the morphism (g u0, g) where g is the least element
    conjugating the base onto u.  Raises NotLoopTrivialError when chi
    has a nonzero loop value, and ValueError when the values on the
    component are path-dependent (not a character).
    """
    G = chi.group
    A = chi.ring
    if not is_trivial_on_loops(chi):
        raise NotLoopTrivialError("character takes a nonzero value on a loop")
    cls = tuple(sorted(cls))
    u0 = cls[0]
    p: dict[int, object] = {u0: A.zero}
    for u in cls[1:]:
        g = _min_conjugator(G, u0, u)
        p[u] = chi.value((G.mul(g, u0), g))
    # path-independence: check the gradient identity on the whole component
    for w in cls:
        for v in range(G.order):
            t = G.conj(v, w)
            if chi.value((G.mul(v, w), v)) != A.sub(p[t], p[w]):
                raise ValueError("character is path-dependent on the component")
    return p


def character_bracket(chi1: Character, chi2: Character) -> Character:
    """Character of the commutator [d1, d2] in the matrix view."""
    if chi1.group != chi2.group or chi1.ring != chi2.ring:
        raise ValueError("characters live over different (G, A)")
    A = chi1.ring
    acc: dict[tuple[int, int], object] = {}

    def accumulate(left: Character, right: Character, sign: int):
        by_first: dict[int, list] = {}
        for (h, g), y in right.values.items():
            by_first.setdefault(h, []).append((g, y))
        for (a, h), x in left.values.items():
            for g, y in by_first.get(h, ()):
                term = A.mul(x, y)
                if sign < 0:
                    term = A.neg(term)
                key = (a, g)
                acc[key] = A.add(acc.get(key, A.zero), term)

    accumulate(chi1, chi2, +1)
    accumulate(chi2, chi1, -1)
    return Character(chi1.group, A, acc)


def groupoid_dot(G: FiniteGroup, include_loops: bool = False) -> str:
    """DOT rendering: one subgraph per conjugacy class, edges labelled (u,v)."""
    classes = conjugacy_classes(G)
    lines = ["digraph groupoid {"]
    for ci, cls in enumerate(classes.classes):
        rep = classes.representatives[ci]
        lines.append(f"  subgraph cluster_{ci} {{")
        lines.append(f'    label="[{G.names[rep]}]";')
        for w in cls:
            lines.append(f'    n{w} [label="{G.names[w]}"];')
        for w in cls:
            for v in range(G.order):
                u = G.mul(v, w)
                t = G.conj(v, w)
                if w == t and not include_loops:
                    continue
                lines.append(
                    f'    n{w} -> n{t} [label="({G.names[u]},{G.names[v]})"];'
                )
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
