"""Finite groups as explicit multiplication tables.

Elements are the integers 0..order-1 and 0 is always the identity.  The
table layout is ``mul_table[a][b] = a*b``.  Built-in constructions:

* ``symmetric(n)``: permutations of {1..n} ordered lexicographically by
  one-line notation, composed as functions, (s*t)(x) = s(t(x)).
* ``cyclic(m)``: Z_m written multiplicatively.
* ``dihedral(n)``: the group <r, s | r^(2n) = s^2 = (rs)^2 = 1> of order
  4n, elements listed 1, r, ..., r^(2n-1), s, rs, ..., r^(2n-1)s.
* ``table``: an explicit table, validated for associativity and inverses.
* ``product``: direct product of previously specified factors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeLimitError, SpecError

DEFAULT_MAX_ORDER = 64


@dataclass(frozen=True)
class FiniteGroup:
    mul_table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    names: tuple[str, ...]
    label: str

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul_table[self.mul_table[g][x]][self.inverse[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse[a], -k)
        acc = 0
        while k:
            if k & 1:
                acc = self.mul_table[acc][a]
            a = self.mul_table[a][a]
            k >>= 1
        return acc

    def name(self, a: int) -> str:
        return self.names[a]

    def __repr__(self) -> str:  # pragma: no cover
        return f"FiniteGroup({self.label}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element list inside a parent group."""

    group: FiniteGroup
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in set(self.elements)

    def as_group(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Standalone group on the subgroup elements plus the index->parent map."""
        return _subgroup_as_group(self)


@dataclass(frozen=True)
class ConjugacyClassSet:
    """Partition of a group into conjugacy classes.

    Classes are ordered by their least element, which is also the
    canonical representative.
    """

    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    class_of: tuple[int, ...]

    def class_index(self, g: int) -> int:
        return self.class_of[g]

    def class_containing(self, g: int) -> tuple[int, ...]:
        return self.classes[self.class_of[g]]

    def __len__(self) -> int:
        return len(self.classes)


def subgroup(G: FiniteGroup, elements) -> Subgroup:
    """Build a Subgroup after checking closure, identity and inverses."""
    elems = tuple(sorted(set(elements)))
    if not elems or elems[0] != G.identity:
        raise SpecError("subgroup must contain the identity")
    inside = set(elems)
    for a in elems:
        if G.inverse[a] not in inside:
            raise SpecError("subgroup not closed under inverses")
        for b in elems:
            if G.mul_table[a][b] not in inside:
                raise SpecError("subgroup not closed under multiplication")
    return Subgroup(G, elems)


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def subgroup_closure(G: FiniteGroup, generators) -> Subgroup:
    """Smallest subgroup containing the generators (breadth-first closure)."""
    seen = {G.identity}
    frontier = [G.identity]
    gens = sorted(set(generators))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul_table[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    # generator inverses are reached automatically: each g has finite order
    return Subgroup(G, tuple(sorted(seen)))


def element_order(G: FiniteGroup, g: int) -> int:
    k = 1
    x = g
    while x != G.identity:
        x = G.mul_table[x][g]
        k += 1
    return k


def is_central(G: FiniteGroup, z: int) -> bool:
    row = G.mul_table[z]
    return all(row[g] == G.mul_table[g][z] for g in range(G.order))


@lru_cache(maxsize=None)
def conjugacy_classes(G: FiniteGroup) -> ConjugacyClassSet:
    n = G.order
    class_of = [-1] * n
    classes = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        orbit = sorted({G.conj(g, x) for g in range(n)})
        idx = len(classes)
        for y in orbit:
            class_of[y] = idx
        classes.append(tuple(orbit))
    reps = tuple(c[0] for c in classes)
    return ConjugacyClassSet(tuple(classes), reps, tuple(class_of))


@lru_cache(maxsize=None)
def centralizer(G: FiniteGroup, u: int) -> Subgroup:
    elems = tuple(g for g in range(G.order) if G.mul_table[g][u] == G.mul_table[u][g])
    return Subgroup(G, elems)


@lru_cache(maxsize=None)
def _subgroup_as_group(H: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    G = H.group
    elems = H.elements
    pos = {g: i for i, g in enumerate(elems)}
    table = tuple(tuple(pos[G.mul_table[a][b]] for b in elems) for a in elems)
    inverse = tuple(pos[G.inverse[a]] for a in elems)
    names = tuple(G.names[a] for a in elems)
    sub = FiniteGroup(table, inverse, names, f"{G.label}|sub{len(elems)}")
    return sub, elems


def quotient_group(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Quotient by a normal subgroup; returns (quotient, projection table).

    Cosets are ordered by their least element, so the coset of the
    identity comes first and the quotient identity is index 0.
    """
    if N.group is not G and N.group != G:
        raise SpecError("subgroup belongs to a different group")
    nset = set(N.elements)
    for g in range(G.order):
        for k in N.elements:
            if G.conj(g, k) not in nset:
                raise SpecError("subgroup is not normal")
    proj = [-1] * G.order
    cosets = []
    for x in range(G.order):
        if proj[x] >= 0:
            continue
        coset = sorted(G.mul_table[x][k] for k in N.elements)
        idx = len(cosets)
        for y in coset:
            proj[y] = idx
        cosets.append(coset)
    reps = [c[0] for c in cosets]
    q = len(cosets)
    table = tuple(
        tuple(proj[G.mul_table[reps[a]][reps[b]]] for b in range(q)) for a in range(q)
    )
    inverse = tuple(proj[G.inverse[reps[a]]] for a in range(q))
    names = tuple(f"[{G.names[r]}]" for r in reps)
    return FiniteGroup(table, inverse, names, f"{G.label}/N{N.order}"), tuple(proj)


def _validate_table(table: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Check group axioms on an explicit table; returns the inverse table."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise SpecError("multiplication table must be square with entries in range")
    if any(table[0][b] != b for b in range(n)) or any(table[a][0] != a for a in range(n)):
        raise SpecError("element 0 must be the identity")
    inverse = [-1] * n
    for a in range(n):
        for b in range(n):
            if table[a][b] == 0:
                if inverse[a] >= 0 and inverse[a] != b:
                    raise SpecError("element has two inverses")
                inverse[a] = b
    if any(i < 0 for i in inverse):
        raise SpecError("element has no inverse")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise SpecError(
                        f"table is not associative at ({a},{b},{c})"
                    )
    return tuple(inverse)


def _perm_mul(s, t):
    """(s*t)(x) = s(t(x))."""
    return tuple(s[t[x]] for x in range(len(s)))


def _cycle_name(perm) -> str:
    n = len(perm)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i]:
            continue
        seen[i] = True
        if perm[i] == i:
            continue
        cyc = [i]
        j = perm[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        parts.append("(" + "".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) or "e"


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise SpecError("symmetric group supported for 1 <= n <= 5")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[_perm_mul(s, t)] for t in perms) for s in perms)
    inverse = []
    for p in perms:
        q = [0] * n
        for x in range(n):
            q[p[x]] = x
        inverse.append(index[tuple(q)])
    names = tuple(_cycle_name(p) for p in perms)
    return FiniteGroup(table, tuple(inverse), names, f"S{n}")


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise SpecError("cyclic group order must be at least 1")
    table = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
    inverse = tuple((-a) % m for a in range(m))
    names = tuple("e" if a == 0 else ("g" if a == 1 else f"g^{a}") for a in range(m))
    return FiniteGroup(table, inverse, names, f"C{m}")


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 4n: rotation r of order 2n and reflection s."""
    if n < 1:
        raise SpecError("dihedral parameter must be at least 1")
    R = 2 * n
    order = 2 * R

    def code(k: int, f: int) -> int:
        return (k % R) + R * f

    table = []
    for a in range(order):
        ka, fa = a % R, a // R
        row = []
        for b in range(order):
            kb, fb = b % R, b // R
            # r^ka s^fa * r^kb s^fb; s r^k = r^-k s
            k = (ka - kb) % R if fa else (ka + kb) % R
            row.append(code(k, fa ^ fb))
        table.append(tuple(row))
    inverse = []
    for a in range(order):
        k, f = a % R, a // R
        inverse.append(code(k if f else -k, f))

    def nm(a: int) -> str:
        k, f = a % R, a // R
        rot = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        ref = "s" if f else ""
        return (rot + ref) or "e"

    names = tuple(nm(a) for a in range(order))
    return FiniteGroup(tuple(table), tuple(inverse), names, f"D{n}")


def table_group(table, names=None, label: str = "table") -> FiniteGroup:
    tbl = tuple(tuple(int(x) for x in row) for row in table)
    inverse = _validate_table(tbl)
    n = len(tbl)
    if names is None:
        names = tuple("e" if i == 0 else f"g{i}" for i in range(n))
    else:
        names = tuple(str(s) for s in names)
        if len(names) != n or len(set(names)) != n:
            raise SpecError("names must be distinct and match the table size")
    return FiniteGroup(tbl, inverse, names, label)


def product_group(factors) -> FiniteGroup:
    factors = list(factors)
    if not factors:
        raise SpecError("product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    tuples = list(itertools.product(*(range(F.order) for F in factors)))
    index = {t: i for i, t in enumerate(tuples)}
    table = tuple(
        tuple(
            index[tuple(F.mul_table[a[i]][b[i]] for i, F in enumerate(factors))]
            for b in tuples
        )
        for a in tuples
    )
    inverse = tuple(
        index[tuple(F.inverse[a[i]] for i, F in enumerate(factors))] for a in tuples
    )
    names = tuple(
        "(" + ",".join(F.names[t[i]] for i, F in enumerate(factors)) + ")"
        for t in tuples
    )
    label = "x".join(F.label for F in factors)
    return FiniteGroup(table, inverse, names, label)


def construct_group(spec: dict, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build a group from a specification dict (see module docstring)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("group spec must be a dict with a 'kind' field")
    kind = spec["kind"]
    if kind == "symmetric":
        G = symmetric_group(_int_field(spec, "n"))
    elif kind == "cyclic":
        G = cyclic_group(_int_field(spec, "m"))
    elif kind == "dihedral":
        G = dihedral_group(_int_field(spec, "n"))
    elif kind == "table":
        if "table" not in spec:
            raise SpecError("table spec needs a 'table' field")
        G = table_group(spec["table"], spec.get("names"), spec.get("label", "table"))
    elif kind == "product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or not factors:
            raise SpecError("product spec needs a nonempty 'factors' list")
        G = product_group(construct_group(f, max_order) for f in factors)
    else:
        raise SpecError(f"unknown group kind {kind!r}")
    if G.order > max_order:
        raise SizeLimitError(f"group order {G.order} exceeds limit {max_order}")
    return G


def _int_field(spec: dict, key: str) -> int:
    if key not in spec:
        raise SpecError(f"group spec needs field {key!r}")
    value = spec[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecError(f"group spec field {key!r} must be an integer")
    return value
