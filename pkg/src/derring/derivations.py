"""Group-ring arithmetic and the derivation module of A[G].

A derivation d is stored as the |G| x |G| coefficient table with
``matrix[h][g]`` = coefficient of h in d(g), matching the character view
chi_d((h, g)) = matrix[h][g].  The module decomposes as

    Der(A[G]) = Inn(A[G]) (+) sum over classes [u] of Hom_Ab(Z(u), A)

with Inn free over A on {ad(g) : g not a class representative}.  The
outer generators come from the explicit section formula; decomposing an
arbitrary derivation runs the other way (restrict the character to
loops per class, subtract the sections, take a vertex potential of the
loop-trivial remainder).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abhom import HomAb, abelianization, hom_group
from .errors import NotADerivationError
from .groupoid import (
    Character,
    _min_conjugator,
    potential,
    restrict_to_loops,
    section,
)
from .groups import (
    FiniteGroup,
    centralizer,
    conjugacy_classes,
    element_order,
    full_subgroup,
    is_central,
)
from .rings import FiniteRing, IntegersRing, ZmRing, additive_decomposition


@dataclass(frozen=True)
class GroupRingElement:
    group: FiniteGroup
    ring: FiniteRing
    coeffs: tuple

    @classmethod
    def zero(cls, G: FiniteGroup, A: FiniteRing) -> "GroupRingElement":
        return cls(G, A, (A.zero,) * G.order)

    @classmethod
    def basis(cls, G: FiniteGroup, A: FiniteRing, g: int, coeff=None) -> "GroupRingElement":
        c = list((A.zero,) * G.order)
        c[g] = A.one if coeff is None else coeff
        return cls(G, A, tuple(c))

    @classmethod
    def from_dict(cls, G: FiniteGroup, A: FiniteRing, d: dict) -> "GroupRingElement":
        c = [A.zero] * G.order
        for g, x in d.items():
            c[g] = A.add(c[g], x)
        return cls(G, A, tuple(c))

    def coeff(self, g: int):
        return self.coeffs[g]

    def support(self) -> list[int]:
        return [g for g, x in enumerate(self.coeffs) if not self.ring.is_zero(x)]

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(x) for x in self.coeffs)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        A = self.ring
        return GroupRingElement(
            self.group, A, tuple(A.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "GroupRingElement":
        A = self.ring
        return GroupRingElement(self.group, A, tuple(A.neg(a) for a in self.coeffs))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def scale(self, a) -> "GroupRingElement":
        """Multiply every coefficient by the ring element a."""
        A = self.ring
        return GroupRingElement(self.group, A, tuple(A.mul(a, c) for c in self.coeffs))

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        G, A = self.group, self.ring
        out = [A.zero] * G.order
        for g, x in enumerate(self.coeffs):
            if A.is_zero(x):
                continue
            row = G.mul_table[g]
            for h, y in enumerate(other.coeffs):
                if A.is_zero(y):
                    continue
                k = row[h]
                out[k] = A.add(out[k], A.mul(x, y))
        return GroupRingElement(G, A, tuple(out))

    def _check(self, other: "GroupRingElement"):
        if self.group != other.group or self.ring != other.ring:
            raise ValueError("elements live in different group rings")

    def format(self) -> str:
        A = self.ring
        terms = []
        for g, x in enumerate(self.coeffs):
            if A.is_zero(x):
                continue
            c = A.format(x)
            name = self.group.names[g]
            terms.append(name if c == "1" else f"{c}*{name}")
        return " + ".join(terms) or "0"


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Convolution product in A[G]."""
    return x * y


def class_sum(G: FiniteGroup, A: FiniteRing, cls) -> GroupRingElement:
    return GroupRingElement.from_dict(G, A, {g: A.one for g in cls})


@dataclass(frozen=True)
class Derivation:
    group: FiniteGroup
    ring: FiniteRing
    matrix: tuple  # matrix[h][g] = coefficient of h in d(g)

    @classmethod
    def zero(cls, G: FiniteGroup, A: FiniteRing) -> "Derivation":
        row = (A.zero,) * G.order
        return cls(G, A, (row,) * G.order)

    @classmethod
    def from_rows(cls, G: FiniteGroup, A: FiniteRing, rows) -> "Derivation":
        mat = tuple(tuple(r) for r in rows)
        if len(mat) != G.order or any(len(r) != G.order for r in mat):
            raise ValueError(f"matrix must be {G.order}x{G.order}")
        return cls(G, A, mat)

    def entry(self, h: int, g: int):
        return self.matrix[h][g]

    def column(self, g: int) -> GroupRingElement:
        """The image d(g) as a group-ring element."""
        return GroupRingElement(
            self.group, self.ring, tuple(row[g] for row in self.matrix)
        )

    def apply(self, x: GroupRingElement) -> GroupRingElement:
        G, A = self.group, self.ring
        out = [A.zero] * G.order
        for g, lam in enumerate(x.coeffs):
            if A.is_zero(lam):
                continue
            for h in range(G.order):
                out[h] = A.add(out[h], A.mul(lam, self.matrix[h][g]))
        return GroupRingElement(G, A, tuple(out))

    def is_zero(self) -> bool:
        A = self.ring
        return all(A.is_zero(x) for row in self.matrix for x in row)

    def __add__(self, other: "Derivation") -> "Derivation":
        self._check(other)
        A = self.ring
        return Derivation(
            self.group,
            A,
            tuple(
                tuple(A.add(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.matrix, other.matrix)
            ),
        )

    def __neg__(self) -> "Derivation":
        A = self.ring
        return Derivation(
            self.group, A, tuple(tuple(A.neg(a) for a in row) for row in self.matrix)
        )

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + (-other)

    def scale(self, a) -> "Derivation":
        """Module action of the ring element a."""
        A = self.ring
        return Derivation(
            self.group, A, tuple(tuple(A.mul(a, x) for x in row) for row in self.matrix)
        )

    def scale_int(self, k: int) -> "Derivation":
        A = self.ring
        return Derivation(
            self.group,
            A,
            tuple(tuple(A.scalar(k, x) for x in row) for row in self.matrix),
        )

    def compose(self, other: "Derivation") -> "Derivation":
        """Matrix product: (self o other)(x) = self(other(x))."""
        self._check(other)
        G, A = self.group, self.ring
        n = G.order
        rows = []
        for h in range(n):
            row = []
            for g in range(n):
                acc = A.zero
                for k in range(n):
                    acc = A.add(acc, A.mul(self.matrix[h][k], other.matrix[k][g]))
                row.append(acc)
            rows.append(tuple(row))
        return Derivation(G, A, tuple(rows))

    def additive_order(self) -> int:
        """Least k >= 1 with k*d = 0."""
        A = self.ring
        out = 1
        for row in self.matrix:
            for x in row:
                o = A.additive_order(x)
                out = out * o // gcd(out, o)
        return out

    def _check(self, other: "Derivation"):
        if self.group != other.group or self.ring != other.ring:
            raise ValueError("derivations live over different group rings")

    def to_json_rows(self) -> list:
        A = self.ring
        return [[A.to_json_value(x) for x in row] for row in self.matrix]


def character_of(d: Derivation) -> Character:
    vals = {}
    A = d.ring
    for h, row in enumerate(d.matrix):
        for g, x in enumerate(row):
            if not A.is_zero(x):
                vals[(h, g)] = x
    return Character(d.group, A, vals)


def derivation_of(chi: Character) -> Derivation:
    G, A = chi.group, chi.ring
    rows = [[A.zero] * G.order for _ in range(G.order)]
    for (h, g), x in chi.values.items():
        rows[h][g] = x
    return Derivation.from_rows(G, A, rows)


def ad(G: FiniteGroup, A: FiniteRing, a: int) -> Derivation:
    """The inner derivation x -> ax - xa for a group element a."""
    rows = [[A.zero] * G.order for _ in range(G.order)]
    one = A.one
    for g in range(G.order):
        ag = G.mul(a, g)
        ga = G.mul(g, a)
        if ag != ga:
            rows[ag][g] = A.add(rows[ag][g], one)
            rows[ga][g] = A.add(rows[ga][g], A.neg(one))
    return Derivation.from_rows(G, A, rows)


def ad_element(x: GroupRingElement) -> Derivation:
    """ad of a full group-ring element, y -> xy - yx."""
    G, A = x.group, x.ring
    d = Derivation.zero(G, A)
    for g, lam in enumerate(x.coeffs):
        if not A.is_zero(lam):
            d = d + ad(G, A, g).scale(lam)
    return d


def apply(d: Derivation, x: GroupRingElement) -> GroupRingElement:
    return d.apply(x)


def first_leibniz_violation(d: Derivation):
    """First (g1, g2, h) with d(g1 g2) != d(g1) g2 + g1 d(g2), or None."""
    G, A = d.group, d.ring
    n = G.order
    M = d.matrix
    for g1 in range(n):
        ig1 = G.inverse[g1]
        for g2 in range(n):
            ig2 = G.inverse[g2]
            g12 = G.mul_table[g1][g2]
            for h in range(n):
                rhs = A.add(M[G.mul_table[h][ig2]][g1], M[G.mul_table[ig1][h]][g2])
                if M[h][g12] != rhs:
                    return (g1, g2, h)
    return None


def leibniz_check(d: Derivation) -> bool:
    return first_leibniz_violation(d) is None


def inner_basis(G: FiniteGroup, A: FiniteRing, reps) -> list[tuple[int, Derivation]]:
    """(g, ad(g)) for every g outside the representative set; a free A-basis of Inn."""
    skip = set(reps)
    return [(g, ad(G, A, g)) for g in range(G.order) if g not in skip]


def is_inner(d: Derivation) -> bool:
    """True iff the character of d vanishes on every loop.

    For finite groups this is exactly membership in Inn.  Raises
    NotADerivationError if d fails the Leibniz identity.
    """
    bad = first_leibniz_violation(d)
    if bad is not None:
        raise NotADerivationError(
            f"Leibniz fails at (g1, g2, h) = {bad}: input is not a derivation"
        )
    G, A = d.group, d.ring
    for v in range(G.order):
        iv = G.inverse[v]
        for u in range(G.order):
            if G.mul_table[iv][u] == G.mul_table[u][iv]:
                if not A.is_zero(d.matrix[u][v]):
                    return False
    return True


def outer_generator(G: FiniteGroup, A: FiniteRing, u_rep: int, phi: HomAb) -> Derivation:
    """The derivation D(phi) supported on the component of [u_rep].

    Entry at (v*a, v) for a conjugate to u_rep is phi(g_b v g_a^-1),
    where g_x is the least conjugator with g_x x g_x^-1 = u_rep and
    b = v a v^-1.  On loops (v central for a) this matches the value
    phi(g_a v g_a^-1) of the loop transported to the representative;
    the non-loop entries are what make the Leibniz rule hold on
    classes with more than one element.
    """
    if phi.domain != centralizer(G, u_rep):
        raise ValueError("hom domain must be the centralizer of the representative")
    cls = conjugacy_classes(G).class_containing(u_rep)
    conjugator = {a: _min_conjugator(G, a, u_rep) for a in cls}
    rows = [[A.zero] * G.order for _ in range(G.order)]
    for a in cls:
        ga_inv = G.inv(conjugator[a])
        for v in range(G.order):
            b = G.conj(v, a)
            z = G.mul(conjugator[b], G.mul(v, ga_inv))
            rows[G.mul(v, a)][v] = phi.evaluate(z)
    return Derivation.from_rows(G, A, rows)


def central_derivation(G: FiniteGroup, A: FiniteRing, z: int, tau: HomAb) -> Derivation:
    """d(g) = tau(g) * (g z) for a central element z and tau in Hom_Ab(G, A)."""
    if not is_central(G, z):
        raise ValueError(f"element {z} is not central")
    if tau.domain.order != G.order:
        raise ValueError("tau must be defined on the whole group")
    rows = [[A.zero] * G.order for _ in range(G.order)]
    for g in range(G.order):
        rows[G.mul(g, z)][g] = tau.evaluate(g)
    return Derivation.from_rows(G, A, rows)


@dataclass(frozen=True)
class DerivationDecomposition:
    group: FiniteGroup
    ring: FiniteRing
    reps: tuple[int, ...]
    outer_parts: tuple[HomAb, ...]  # aligned with reps
    potentials: tuple  # per class: dict element -> ring value

    def reconstruct(self) -> Derivation:
        G, A = self.group, self.ring
        d = Derivation.zero(G, A)
        for rep, phi in zip(self.reps, self.outer_parts):
            if not phi.is_zero():
                d = d + outer_generator(G, A, rep, phi)
        for pot in self.potentials:
            for g in sorted(pot):
                val = pot[g]
                if not A.is_zero(val):
                    d = d + ad(G, A, g).scale(val)
        return d

    def outer_is_zero(self) -> bool:
        return all(phi.is_zero() for phi in self.outer_parts)


def decompose(d: Derivation, reps=None) -> DerivationDecomposition:
    """Split d into per-class outer homs and inner vertex potentials.

    The reconstruction  d = sum_i D(phi_i) + sum_g p(g) ad(g)  is
    verified before returning.
    """
    bad = first_leibniz_violation(d)
    if bad is not None:
        raise NotADerivationError(
            f"Leibniz fails at (g1, g2, h) = {bad}: input is not a derivation"
        )
    G, A = d.group, d.ring
    classes = conjugacy_classes(G)
    if reps is None:
        reps = classes.representatives
    reps = tuple(reps)
    chi = character_of(d)
    outer_parts = []
    residual = chi
    for rep in reps:
        f = restrict_to_loops(chi, rep)
        outer_parts.append(f)
        if not f.is_zero():
            residual = residual.sub(section(rep, f))
    potentials = tuple(
        potential(residual, classes.class_containing(rep)) for rep in reps
    )
    dec = DerivationDecomposition(G, A, reps, tuple(outer_parts), potentials)
    if dec.reconstruct() != d:
        raise RuntimeError("decomposition failed to reconstruct the derivation")
    return dec


def derivation_commutator(d1: Derivation, d2: Derivation) -> Derivation:
    """[d1, d2] = d1 o d2 - d2 o d1."""
    return d1.compose(d2) - d2.compose(d1)


@dataclass(frozen=True)
class OuterGenerator:
    class_rep: int
    hom: HomAb
    derivation: Derivation
    order: int  # additive order of the hom in its HomGroup
    invariant: tuple[int, int]  # (prime, exponent), order = prime**exponent


@dataclass(frozen=True)
class OuterClassBlock:
    class_rep: int
    centralizer_order: int
    structure: tuple[tuple[int, int], ...]
    generators: tuple[OuterGenerator, ...]


@dataclass(frozen=True)
class ModuleStructure:
    """Der(A[G]) as A^free_rank (+) sum of Z_{p^e} torsion factors."""

    ring: FiniteRing
    free_rank: int
    torsion: tuple[tuple[int, int], ...]

    def cardinality(self) -> int:
        n = self.ring.size**self.free_rank
        for p, e in self.torsion:
            n *= p**e
        return n

    def primary_invariants(self) -> tuple[tuple[int, int], ...]:
        """Invariants of the underlying abelian group, sorted."""
        out = list(self.torsion)
        ring_inv = additive_decomposition(self.ring).invariants()
        out.extend(ring_inv * self.free_rank)
        return tuple(sorted(out))


@dataclass(frozen=True)
class CriteriaRecord:
    paper_prime_criterion: bool  # primes disjoint: the iff-criterion predicts Der = Inn
    gcd_sufficient: bool | None  # all gcd(ord(g), m) = 1; None unless A = Zm
    exact_outer_trivial: bool  # every Hom_Ab(Z(u), A) vanishes (ground truth)
    ring_primes: tuple[int, ...]
    abelianization_primes: tuple[int, ...]

    @property
    def conflict(self) -> bool:
        return self.paper_prime_criterion != self.exact_outer_trivial

    def to_json_dict(self) -> dict:
        return {
            "paper_prime_criterion": self.paper_prime_criterion,
            "gcd_sufficient": self.gcd_sufficient,
            "exact_outer_trivial": self.exact_outer_trivial,
            "conflict": self.conflict,
            "ring_primes": list(self.ring_primes),
            "abelianization_primes": list(self.abelianization_primes),
        }


def outer_vanishing_check(G: FiniteGroup, A: FiniteRing) -> CriteriaRecord:
    """Evaluate the outer-vanishing criteria for A[G].

    ``paper_prime_criterion`` is the published iff-test (primes of (A,+)
    against primes of G/[G,G]); ``exact_outer_trivial`` is the ground
    truth from the full decomposition (homs out of every centralizer).
    The two disagree on instances like Z3[S3]; the mismatch is surfaced
    through the ``conflict`` property rather than patched over.
    """
    from .rings import factor_int

    gab = abelianization(full_subgroup(G))
    ab_primes = tuple(sorted(factor_int(gab.quotient.order))) if gab.quotient.order > 1 else ()
    if isinstance(A, IntegersRing):
        ring_primes: tuple[int, ...] = ()
        exact = True  # Hom from a finite group into a torsion-free group is zero
        gcd_ok = None
    else:
        ring_primes = additive_decomposition(A).primes
        reps = conjugacy_classes(G).representatives
        exact = all(
            hom_group(centralizer(G, u), A).is_trivial() for u in reps
        )
        gcd_ok = None
        if isinstance(A, ZmRing):
            gcd_ok = all(
                gcd(element_order(G, g), A.m) == 1 for g in range(G.order)
            )
    disjoint = not (set(ring_primes) & set(ab_primes))
    return CriteriaRecord(disjoint, gcd_ok, exact, ring_primes, ab_primes)


@dataclass(frozen=True)
class DerivationReport:
    group: FiniteGroup
    ring: FiniteRing
    representatives: tuple[int, ...]
    inner: tuple[tuple[int, Derivation], ...]  # (generating element, ad(g))
    inner_rank: int
    outer: tuple[OuterClassBlock, ...]
    module_structure: ModuleStructure
    criteria: CriteriaRecord

    def all_outer_generators(self) -> list[OuterGenerator]:
        return [gen for block in self.outer for gen in block.generators]

    def all_generator_derivations(self) -> list[Derivation]:
        return [d for _, d in self.inner] + [
            g.derivation for g in self.all_outer_generators()
        ]

    def to_json_dict(
        self,
        include_inner_matrices: bool = False,
        group_spec: dict | None = None,
        ring_spec: dict | None = None,
    ) -> dict:
        G, A = self.group, self.ring
        classes = conjugacy_classes(G)
        group_block = {
            "label": G.label,
            "order": G.order,
            "names": list(G.names),
        }
        if group_spec is not None:
            group_block["spec"] = group_spec
        ring_block = {
            "label": A.label,
            "size": A.size,
            "spec": ring_spec if ring_spec is not None else A.spec_dict(),
        }
        class_rows = []
        for rep, cls in zip(classes.representatives, classes.classes):
            class_rows.append(
                {
                    "representative": G.names[rep],
                    "elements": [G.names[g] for g in cls],
                    "size": len(cls),
                    "centralizer_order": centralizer(G, rep).order,
                }
            )
        inner_rows = []
        for g, d in self.inner:
            row: dict = {"element": G.names[g]}
            if include_inner_matrices:
                row["matrix"] = d.to_json_rows()
            inner_rows.append(row)
        outer_rows = []
        for block in self.outer:
            gens = []
            for gen in block.generators:
                images = [
                    {
                        "on": G.names[comp.lift],
                        "value": A.to_json_value(img),
                    }
                    for comp, img in zip(
                        gen.hom.quotient.components, gen.hom.images
                    )
                ]
                gens.append(
                    {
                        "order": gen.order,
                        "invariant": list(gen.invariant),
                        "images": images,
                        "relation": f"{gen.order}*generator = 0",
                        "matrix": gen.derivation.to_json_rows(),
                    }
                )
            outer_rows.append(
                {
                    "class": G.names[block.class_rep],
                    "centralizer_order": block.centralizer_order,
                    "hom_structure": [list(t) for t in block.structure],
                    "generators": gens,
                }
            )
        return {
            "schema_version": 1,
            "kind": "derivation-report",
            "group": group_block,
            "ring": ring_block,
            "classes": class_rows,
            "representatives": [G.names[r] for r in self.representatives],
            "inner": {"rank": self.inner_rank, "generators": inner_rows},
            "outer": outer_rows,
            "module": {
                "free_rank": self.module_structure.free_rank,
                "ring": A.label,
                "torsion": [list(t) for t in self.module_structure.torsion],
                "cardinality": self.module_structure.cardinality(),
                "primary_invariants": [
                    list(t) for t in self.module_structure.primary_invariants()
                ],
            },
            "criteria": self.criteria.to_json_dict(),
        }


def derivation_module_report(G: FiniteGroup, A: FiniteRing) -> DerivationReport:
    """Full description of Der(A[G]): inner basis, outer generators, structure."""
    classes = conjugacy_classes(G)
    reps = classes.representatives
    inner = tuple(inner_basis(G, A, reps))
    blocks = []
    torsion: list[tuple[int, int]] = []
    for rep in reps:
        Z = centralizer(G, rep)
        hg = hom_group(Z, A)
        gens = []
        for hom, (p, e) in zip(hg.generators, hg.structure):
            der = outer_generator(G, A, rep, hom)
            gens.append(OuterGenerator(rep, hom, der, p**e, (p, e)))
            torsion.append((p, e))
        blocks.append(OuterClassBlock(rep, Z.order, hg.structure, tuple(gens)))
    structure = ModuleStructure(A, len(inner), tuple(torsion))
    criteria = outer_vanishing_check(G, A)
    return DerivationReport(
        G, A, reps, inner, len(inner), tuple(blocks), structure, criteria
    )
