"""Finite commutative rings with exact arithmetic.

Three concrete representations:

* ``ZmRing``: integers modulo m (m >= 2), elements are Python ints.
* ``GFRing``: the field GF(p^k) in the polynomial basis, elements are
  coefficient tuples of length k, lowest degree first.  The modulus is a
  monic irreducible polynomial over Z_p; when omitted, the first monic
  irreducible in lexicographic coefficient order is chosen.
* ``ProductRing``: a direct product with componentwise operations,
  elements are tuples of component elements.

``IntegersRing`` is a symbolic tag standing for the ring of integers.
It supports no element arithmetic and exists only so that torsion-free
criteria can be evaluated.

Every concrete ring exposes its additive group as a direct sum of
primary cyclic components via ``additive_decomposition``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeLimitError, SpecError

DEFAULT_MAX_SIZE = 256


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for the small sizes here."""
    if n < 1:
        raise ValueError("factor_int needs a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factor_int(n) == {n: 1}


@dataclass(frozen=True)
class PrimaryComponent:
    """One Z_{p^e} summand of an additive group, with a generating element."""

    prime: int
    exponent: int
    generator: object

    @property
    def order(self) -> int:
        return self.prime**self.exponent


@dataclass(frozen=True)
class AdditivePrimaryDecomposition:
    ring: "FiniteRing"
    components: tuple[PrimaryComponent, ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({c.prime for c in self.components}))

    def invariants(self) -> tuple[tuple[int, int], ...]:
        return tuple((c.prime, c.exponent) for c in self.components)


class FiniteRing:
    """Common interface; subclasses fill in the element representation."""

    label: str
    size: int

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scalar(self, k: int, a):
        """k-fold additive multiple of a, any integer k."""
        if k < 0:
            return self.neg(self.scalar(-k, a))
        acc = self.zero
        base = a
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def elements(self) -> list:
        return [self.element(i) for i in range(self.size)]

    def element(self, i: int):
        raise NotImplementedError

    def index(self, a) -> int:
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def additive_order(self, a) -> int:
        k = 1
        x = a
        while not self.is_zero(x):
            x = self.add(x, a)
            k += 1
        return k

    def format(self, a) -> str:
        raise NotImplementedError

    def to_json_value(self, a):
        raise NotImplementedError

    def from_json_value(self, v):
        raise NotImplementedError

    def spec_dict(self) -> dict:
        raise NotImplementedError

    def __repr__(self) -> str:  # pragma: no cover
        return f"{type(self).__name__}({self.label})"


class ZmRing(FiniteRing):
    def __init__(self, m: int):
        if m < 2:
            raise SpecError("Zm needs m >= 2")
        self.m = m
        self.size = m
        self.label = f"Z{m}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def scalar(self, k: int, a):
        return (k * a) % self.m

    def element(self, i: int):
        if not 0 <= i < self.m:
            raise ValueError("index out of range")
        return i

    def index(self, a) -> int:
        return a % self.m

    def additive_order(self, a) -> int:
        from math import gcd

        return self.m // gcd(self.m, a % self.m)

    def format(self, a) -> str:
        return str(a % self.m)

    def to_json_value(self, a):
        return a % self.m

    def from_json_value(self, v):
        if not isinstance(v, int) or isinstance(v, bool):
            raise SpecError("Zm element must be an integer")
        return v % self.m

    def spec_dict(self) -> dict:
        return {"kind": "Zm", "m": self.m}

    def __eq__(self, other):
        return isinstance(other, ZmRing) and other.m == self.m

    def __hash__(self):
        return hash(("Zm", self.m))


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_divmod(num: tuple[int, ...], den: tuple[int, ...], p: int):
    num = list(num)
    dn = len(den) - 1
    lead_inv = pow(den[-1], -1, p)
    quo = [0] * max(0, len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = (num[i] * lead_inv) % p
        if c:
            quo[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] = (num[i - dn + j] - c * d) % p
    return tuple(quo), _poly_trim(tuple(num))


def _poly_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    k = len(modulus) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            den = low + (1,)
            _, rem = _poly_divmod(modulus, den, p)
            if not rem:
                return False
    return True


def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=k):
        cand = low + (1,)
        if _poly_irreducible(cand, p):
            return cand
    raise SpecError(f"no irreducible polynomial of degree {k} over Z_{p}")


class GFRing(FiniteRing):
    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise SpecError(f"{p} is not prime")
        if k < 1:
            raise SpecError("GF needs k >= 1")
        self.p = p
        self.k = k
        self.size = p**k
        if modulus is None:
            modulus = _default_modulus(p, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1:
                raise SpecError("modulus must have degree k (k+1 coefficients)")
            if modulus[-1] != 1:
                raise SpecError("modulus must be monic")
            if not _poly_irreducible(modulus, p):
                raise SpecError("modulus is reducible")
        self.modulus = modulus
        self.label = f"GF({p}^{k})" if k > 1 else f"GF({p})"
        self._tables = None

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the defining polynomial
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * self.modulus[j]) % p
        return tuple(prod[:k])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("zero has no inverse")
        # the multiplicative group has order p^k - 1
        return self.pow(a, self.size - 2)

    def pow(self, a, n: int):
        acc = self.one
        base = a
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc

    def element(self, i: int):
        if not 0 <= i < self.size:
            raise ValueError("index out of range")
        out = []
        for _ in range(self.k):
            out.append(i % self.p)
            i //= self.p
        return tuple(out)

    def index(self, a) -> int:
        acc = 0
        for c in reversed(a):
            acc = acc * self.p + c
        return acc

    def additive_order(self, a) -> int:
        return 1 if a == self.zero else self.p

    def format(self, a) -> str:
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms) or "0"

    def to_json_value(self, a):
        return list(a)

    def from_json_value(self, v):
        if not isinstance(v, list) or len(v) != self.k:
            raise SpecError(f"GF element must be a list of {self.k} coefficients")
        return tuple(int(c) % self.p for c in v)

    def tables(self):
        """Dense int64 add/mul/neg/inv tables over element indices (for solvers)."""
        if self._tables is None:
            import numpy as np

            q = self.size
            elems = self.elements()
            add = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            neg = np.zeros(q, dtype=np.int64)
            inv = np.zeros(q, dtype=np.int64)
            for i, a in enumerate(elems):
                neg[i] = self.index(self.neg(a))
                if i:
                    inv[i] = self.index(self.inv(a))
                for j, b in enumerate(elems):
                    add[i, j] = self.index(self.add(a, b))
                    mul[i, j] = self.index(self.mul(a, b))
            self._tables = (add, mul, neg, inv)
        return self._tables

    def spec_dict(self) -> dict:
        return {"kind": "GF", "p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (
            isinstance(other, GFRing)
            and (other.p, other.k, other.modulus) == (self.p, self.k, self.modulus)
        )

    def __hash__(self):
        return hash(("GF", self.p, self.k, self.modulus))


class ProductRing(FiniteRing):
    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise SpecError("product needs at least one factor")
        if any(isinstance(f, IntegersRing) for f in factors):
            raise SpecError("the symbolic integer ring cannot be a product factor")
        self.factors = factors
        self.size = 1
        for f in factors:
            self.size *= f.size
        self.label = "x".join(f.label for f in factors)

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @property
    def one(self):
        return tuple(f.one for f in self.factors)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def element(self, i: int):
        out = []
        for f in self.factors:
            out.append(f.element(i % f.size))
            i //= f.size
        return tuple(out)

    def index(self, a) -> int:
        acc = 0
        for f, x in zip(reversed(self.factors), reversed(a)):
            acc = acc * f.size + f.index(x)
        return acc

    def additive_order(self, a) -> int:
        from math import lcm

        return lcm(*(f.additive_order(x) for f, x in zip(self.factors, a)))

    def embed(self, pos: int, x):
        """Element with x in component pos and zero elsewhere."""
        return tuple(
            x if i == pos else f.zero for i, f in enumerate(self.factors)
        )

    def format(self, a) -> str:
        return "(" + ",".join(f.format(x) for f, x in zip(self.factors, a)) + ")"

    def to_json_value(self, a):
        return [f.to_json_value(x) for f, x in zip(self.factors, a)]

    def from_json_value(self, v):
        if not isinstance(v, list) or len(v) != len(self.factors):
            raise SpecError("product element must be a list, one entry per factor")
        return tuple(f.from_json_value(x) for f, x in zip(self.factors, v))

    def spec_dict(self) -> dict:
        return {"kind": "product", "factors": [f.spec_dict() for f in self.factors]}

    def __eq__(self, other):
        return isinstance(other, ProductRing) and other.factors == self.factors

    def __hash__(self):
        return hash(("product", self.factors))


class IntegersRing(FiniteRing):
    """Symbolic stand-in for the integers; no element arithmetic."""

    label = "Z"
    size = None

    def _no(self, *a, **k):
        raise TypeError("the symbolic integer ring has no element arithmetic")

    add = neg = mul = scalar = element = index = format = _no
    to_json_value = from_json_value = _no

    @property
    def zero(self):
        raise TypeError("the symbolic integer ring has no element arithmetic")

    @property
    def one(self):
        raise TypeError("the symbolic integer ring has no element arithmetic")

    def spec_dict(self) -> dict:
        return {"kind": "Integers"}

    def __eq__(self, other):
        return isinstance(other, IntegersRing)

    def __hash__(self):
        return hash("Integers")


INTEGERS = IntegersRing()


@lru_cache(maxsize=None)
def additive_decomposition(A: FiniteRing) -> AdditivePrimaryDecomposition:
    """The additive group of A as a direct sum of primary cyclic components."""
    comps: list[PrimaryComponent] = []
    if isinstance(A, ZmRing):
        for p, e in sorted(factor_int(A.m).items()):
            comps.append(PrimaryComponent(p, e, A.m // p**e))
    elif isinstance(A, GFRing):
        for i in range(A.k):
            gen = tuple(1 if j == i else 0 for j in range(A.k))
            comps.append(PrimaryComponent(A.p, 1, gen))
    elif isinstance(A, ProductRing):
        for pos, f in enumerate(A.factors):
            for c in additive_decomposition(f).components:
                comps.append(
                    PrimaryComponent(c.prime, c.exponent, A.embed(pos, c.generator))
                )
    else:
        raise TypeError(f"no additive decomposition for {A!r}")
    return AdditivePrimaryDecomposition(A, tuple(comps))


def additive_order(A: FiniteRing, a) -> int:
    return A.additive_order(a)


def construct_ring(spec: dict, max_size: int = DEFAULT_MAX_SIZE) -> FiniteRing:
    """Build a ring from a specification dict (see module docstring)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("ring spec must be a dict with a 'kind' field")
    kind = spec["kind"]
    if kind == "Zm":
        m = spec.get("m")
        if not isinstance(m, int) or isinstance(m, bool):
            raise SpecError("Zm spec needs an integer field 'm'")
        if m > max_size:
            raise SizeLimitError(f"ring size {m} exceeds limit {max_size}")
        return ZmRing(m)
    if kind == "GF":
        p, k = spec.get("p"), spec.get("k")
        if not isinstance(p, int) or not isinstance(k, int):
            raise SpecError("GF spec needs integer fields 'p' and 'k'")
        if is_prime(p) and p**k > max_size:
            raise SizeLimitError(f"ring size {p**k} exceeds limit {max_size}")
        return GFRing(p, k, spec.get("modulus"))
    if kind == "product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or not factors:
            raise SpecError("product spec needs a nonempty 'factors' list")
        ring = ProductRing(construct_ring(f, max_size) for f in factors)
        if ring.size > max_size:
            raise SizeLimitError(f"ring size {ring.size} exceeds limit {max_size}")
        return ring
    if kind == "Integers":
        return INTEGERS
    raise SpecError(f"unknown ring kind {kind!r}")
