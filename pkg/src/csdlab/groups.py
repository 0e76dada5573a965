"""Finite groups as immutable Cayley tables over dense element indices.

Elements of a group of order n are the integers 0..n-1 with identity 0;
``table[a][b]`` is the index of the product a*b. Constructors cover the
classical families (cyclic, elementary abelian, dihedral, generalized
quaternion, quasi-dihedral, modular, elementary-abelian-by-cyclic,
metacyclic, Heisenberg) plus permutation-generator closure, direct
products and quotients. All groups are built by explicit element
construction; nothing is solved from a presentation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import GuardrailExceeded
from .intmath import factorize, is_prime, multiplicative_order

DEFAULT_MAX_ORDER = 512


def _cap(max_order: int | None) -> int:
    return DEFAULT_MAX_ORDER if max_order is None else max_order


class FiniteGroup:
    """Immutable multiplication table with precomputed element metadata.

    Attributes:
        order: number of elements.
        table: order x order tuple-of-tuples, ``table[a][b] = a*b``.
        identity: always 0.
        inverse: inverse[a] is the index of a^-1.
        elem_order: elem_order[a] is the least k >= 1 with a^k = identity.
        label: descriptive name, e.g. "D(8)" or "Z(4)xQ(8)".

    Instances are never mutated after construction and are safe to share
    across workers.
    """

    __slots__ = ("order", "table", "identity", "inverse", "elem_order", "label", "_abelian")

    def __init__(self, table: list[list[int]], label: str):
        n = len(table)
        if n == 0:
            raise ValueError("group must have at least one element")
        self.order = n
        self.table = tuple(tuple(row) for row in table)
        self.identity = 0
        row0 = self.table[0]
        for a in range(n):
            if row0[a] != a or self.table[a][0] != a:
                raise ValueError(f"element 0 is not an identity in table for {label!r}")
        inverse = [-1] * n
        elem_order = [0] * n
        for a in range(n):
            inverse[a] = self.table[a].index(0)
            x = a
            k = 1
            while x != 0:
                x = self.table[x][a]
                k += 1
            elem_order[a] = k
        self.inverse = tuple(inverse)
        self.elem_order = tuple(elem_order)
        self.label = label
        self._abelian: bool | None = None

    def mul(self, a: int, b: int) -> int:
        """Product of elements a and b (table lookup)."""
        if not (0 <= a < self.order and 0 <= b < self.order):
            raise IndexError(f"element index out of range for group of order {self.order}")
        return self.table[a][b]

    def inv(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise IndexError(f"element index out of range for group of order {self.order}")
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        """a^k for any integer k (negative powers via the inverse)."""
        if k < 0:
            a, k = self.inverse[a], -k
        acc = 0
        while k:
            acc = self.table[acc][a]
            k -= 1
        return acc

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            t = self.table
            self._abelian = all(
                t[a][b] == t[b][a] for a in range(self.order) for b in range(a + 1, self.order)
            )
        return self._abelian

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"


def validate(group: FiniteGroup, check_associativity: bool = True) -> None:
    """Full Cayley-table validation; raises ValueError on the first defect.

    The associativity sweep is O(n^3) and meant for tests and debugging,
    not for routine construction paths.
    """
    n = group.order
    t = group.table
    if len(t) != n or any(len(row) != n for row in t):
        raise ValueError("table is not square")
    for row in t:
        for x in row:
            if not 0 <= x < n:
                raise ValueError(f"table entry {x} out of range")
    for a in range(n):
        if t[0][a] != a or t[a][0] != a:
            raise ValueError("identity law fails")
        if t[a][group.inverse[a]] != 0 or t[group.inverse[a]][a] != 0:
            raise ValueError(f"inverse law fails at element {a}")
        x, k = a, 1
        while x != 0:
            x = t[x][a]
            k += 1
        if group.elem_order[a] != k:
            raise ValueError(f"cached element order wrong at {a}")
        if n % k != 0:
            raise ValueError(f"element order {k} does not divide group order {n}")
    if check_associativity:
        rng = range(n)
        for a in rng:
            ra = t[a]
            for b in rng:
                rab = t[ra[b]]
                rb = t[b]
                for c in rng:
                    if rab[c] != ra[rb[c]]:
                        raise ValueError(f"associativity fails at ({a},{b},{c})")


# ---------------------------------------------------------------------------
# Permutations (input format for generator-defined groups)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0..d-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        d = len(self.images)
        if sorted(self.images) != list(range(d)):
            raise ValueError(f"not a permutation of 0..{d - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: Permutation) -> Permutation:
        """self after other: (self * other)(i) = self(other(i))."""
        if other.degree != self.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(tuple(self.images[j] for j in other.images))

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Permutation:
        """Parse disjoint cycle notation, e.g. "(0 1)(2 3)"; fixed points omitted.

        "()" denotes the identity. Repeated indices across cycles are
        rejected (cycles must be disjoint).
        """
        images = list(range(degree))
        seen: set[int] = set()
        s = text.strip()
        if not s:
            raise ValueError("empty cycle string")
        pos = 0
        while pos < len(s):
            if s[pos].isspace():
                pos += 1
                continue
            if s[pos] != "(":
                raise ValueError(f"expected '(' at position {pos} in cycle string {text!r}")
            end = s.find(")", pos)
            if end < 0:
                raise ValueError(f"unclosed cycle in {text!r}")
            body = s[pos + 1 : end].split()
            pos = end + 1
            if not body:
                continue  # "()" = identity cycle
            cycle = [int(tok) for tok in body]
            for i in cycle:
                if not 0 <= i < degree:
                    raise ValueError(f"cycle entry {i} out of range for degree {degree}")
                if i in seen:
                    raise ValueError(f"cycles are not disjoint: {i} repeats in {text!r}")
                seen.add(i)
            for k, i in enumerate(cycle):
                images[i] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images))

    def to_cycles(self) -> str:
        """Canonical disjoint-cycle string: cycles by minimal element, fixed points omitted."""
        out = []
        seen: set[int] = set()
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                seen.add(start)
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append("(" + " ".join(map(str, cycle)) + ")")
        return "".join(out) if out else "()"


# ---------------------------------------------------------------------------
# Subgroups as bitsets


class Subgroup:
    """Subgroup of a FiniteGroup, stored as a bitmask over element indices.

    Bit i of ``members`` is set iff element i belongs to the subgroup.
    Construction from a mask is trusted (enumeration code only produces
    closed sets); use :meth:`from_elements` or :meth:`check` when the
    input is not known to be closed.
    """

    __slots__ = ("group", "members", "size", "elems")

    def __init__(self, group: FiniteGroup, members: int):
        self.group = group
        self.members = members
        self.size = members.bit_count()
        elems = []
        m = members
        while m:
            lsb = m & -m
            elems.append(lsb.bit_length() - 1)
            m ^= lsb
        self.elems = tuple(elems)

    @classmethod
    def from_elements(cls, group: FiniteGroup, elements) -> Subgroup:
        sub = cls(group, _mask_of(elements))
        sub.check()
        return sub

    def check(self) -> None:
        """Raise ValueError unless this set really is a subgroup."""
        if not self.members & 1:
            raise ValueError("subgroup does not contain the identity")
        t = self.group.table
        m = self.members
        for a in self.elems:
            row = t[a]
            for b in self.elems:
                if not (m >> row[b]) & 1:
                    raise ValueError(f"set is not closed: {a}*{b} escapes")
        if self.group.order % self.size != 0:
            raise ValueError("size does not divide group order")

    def contains(self, element: int) -> bool:
        return bool((self.members >> element) & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.members | other.members == other.members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.group is other.group
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(size={self.size}, members={list(self.elems)})"


def _mask_of(elements) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def generated_mask(group: FiniteGroup, generators) -> int:
    """Bitmask of the subgroup generated by the given element indices."""
    gens = [g for g in generators]
    t = group.table
    mask = 1
    queue = [0]
    for u in queue:
        row = t[u]
        for g in gens:
            w = row[g]
            if not (mask >> w) & 1:
                mask |= 1 << w
                queue.append(w)
    return mask


def generated_subgroup(group: FiniteGroup, generators) -> Subgroup:
    """Subgroup generated by the given element indices."""
    return Subgroup(group, generated_mask(group, generators))


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, 1)


def full_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, (1 << group.order) - 1)


# ---------------------------------------------------------------------------
# Structure operations


def center(group: FiniteGroup) -> Subgroup:
    """Elements commuting with everything."""
    t = group.table
    n = group.order
    mask = 0
    for a in range(n):
        ra = t[a]
        if all(ra[b] == t[b][a] for b in range(n)):
            mask |= 1 << a
    return Subgroup(group, mask)


def derived_subgroup(group: FiniteGroup) -> Subgroup:
    """Closure of all commutators a^-1 b^-1 a b."""
    t = group.table
    inv = group.inverse
    n = group.order
    comms = set()
    for a in range(n):
        ia = inv[a]
        for b in range(n):
            comms.add(t[t[t[ia][inv[b]]][a]][b])
    return generated_subgroup(group, comms)


def is_abelian(group: FiniteGroup) -> bool:
    return group.is_abelian


def is_nilpotent(group: FiniteGroup) -> bool:
    """True iff for every prime p | order, the p-power-order elements are product-closed.

    Closure of each p-element set is equivalent to that Sylow p-subgroup
    being normal (and unique), hence to nilpotency. O(n^2), lattice-free.
    """
    t = group.table
    for p in factorize(group.order):
        elems = []
        mask = 0
        for a in range(group.order):
            o = group.elem_order[a]
            while o % p == 0:
                o //= p
            if o == 1:
                elems.append(a)
                mask |= 1 << a
        for a in elems:
            row = t[a]
            for b in elems:
                if not (mask >> row[b]) & 1:
                    return False
    return True


def relabel(group: FiniteGroup, perm: Permutation) -> FiniteGroup:
    """Isomorphic copy with element i renamed perm(i); perm must fix 0.

    Useful for testing isomorphism invariance of computed quantities.
    """
    if perm.degree != group.order:
        raise ValueError("permutation degree must equal group order")
    if perm.images[0] != 0:
        raise ValueError("relabeling must keep the identity at index 0")
    n = group.order
    p = perm.images
    t = group.table
    new = [[0] * n for _ in range(n)]
    for a in range(n):
        row = t[a]
        na = p[a]
        dst = new[na]
        for b in range(n):
            dst[p[b]] = p[row[b]]
    return FiniteGroup(new, f"{group.label}~relabeled")


# ---------------------------------------------------------------------------
# Family constructors


def cyclic(n: int, max_order: int | None = None) -> FiniteGroup:
    """Cyclic group of order n under addition mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    if n > _cap(max_order):
        raise GuardrailExceeded(f"order {n} exceeds max order {_cap(max_order)}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, f"Z({n})")


def elementary_abelian(p: int, k: int, max_order: int | None = None) -> FiniteGroup:
    """Direct product of k copies of the cyclic group of prime order p."""
    if not is_prime(p):
        raise ValueError(f"elementary abelian base {p} is not prime")
    if k < 1:
        raise ValueError(f"elementary abelian rank must be >= 1, got {k}")
    n = p**k
    if n > _cap(max_order):
        raise GuardrailExceeded(f"order {n} exceeds max order {_cap(max_order)}")
    elems = list(itertools.product(range(p), repeat=k))
    index = {v: i for i, v in enumerate(elems)}
    table = [
        [index[tuple((x + y) % p for x, y in zip(u, v))] for v in elems] for u in elems
    ]
    return FiniteGroup(table, f"Ea({p},{k})")


def dihedral(m: int, max_order: int | None = None) -> FiniteGroup:
    """Dihedral group of order 2m: rotations x^i (indices 0..m-1), reflections x^i y (m..2m-1)."""
    if m < 2:
        raise ValueError(f"dihedral parameter must be >= 2, got {m}")
    if 2 * m > _cap(max_order):
        raise GuardrailExceeded(f"order {2 * m} exceeds max order {_cap(max_order)}")
    size = 2 * m
    table = [[0] * size for _ in range(size)]
    for s in (0, 1):
        sign = 1 if s == 0 else -1
        for i in range(m):
            row = table[s * m + i]
            for t in (0, 1):
                off = ((s + t) % 2) * m
                for j in range(m):
                    row[t * m + j] = off + (i + sign * j) % m
    return FiniteGroup(table, f"D({size})")


def generalized_quaternion(n: int, max_order: int | None = None) -> FiniteGroup:
    """Generalized quaternion group of order 2^n (n >= 3).

    x has order 2^(n-1); y inverts x by conjugation and y^2 = x^(2^(n-2)),
    so y has order 4 and the group has a unique involution.
    """
    if n < 3:
        raise ValueError(f"generalized quaternion needs n >= 3, got {n}")
    size = 2**n
    if size > _cap(max_order):
        raise GuardrailExceeded(f"order {size} exceeds max order {_cap(max_order)}")
    m = size // 2
    h = size // 4  # y^2 = x^h
    table = [[0] * size for _ in range(size)]
    for s in (0, 1):
        sign = 1 if s == 0 else -1
        for i in range(m):
            row = table[s * m + i]
            for t in (0, 1):
                off = ((s + t) % 2) * m
                extra = h if s == 1 and t == 1 else 0
                for j in range(m):
                    row[t * m + j] = off + (i + sign * j + extra) % m
    return FiniteGroup(table, f"Q({size})")


def quasidihedral(n: int, max_order: int | None = None) -> FiniteGroup:
    """Quasi-dihedral (semi-dihedral) group of order 2^n (n >= 4): y^-1 x y = x^(2^(n-2) - 1)."""
    if n < 4:
        raise ValueError(f"quasidihedral needs n >= 4, got {n}")
    size = 2**n
    if size > _cap(max_order):
        raise GuardrailExceeded(f"order {size} exceeds max order {_cap(max_order)}")
    m = size // 2
    c = size // 4 - 1  # conjugation power; c^2 = 1 mod m
    table = [[0] * size for _ in range(size)]
    for s in (0, 1):
        ms = 1 if s == 0 else c
        for i in range(m):
            row = table[s * m + i]
            for t in (0, 1):
                off = ((s + t) % 2) * m
                for j in range(m):
                    row[t * m + j] = off + (i + j * ms) % m
    return FiniteGroup(table, f"SD({size})")


def modular_group_M(p: int, n: int, max_order: int | None = None) -> FiniteGroup:
    """Modular (Iwasawa) p-group of order p^n with y^-1 x y = x^(1 + p^(n-2)).

    Requires n >= 3, and n >= 4 when p = 2 (M(8) would be dihedral).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 3 or (p == 2 and n < 4):
        raise ValueError(f"modular group needs p^n >= p^3 (n >= 4 for p = 2), got p={p}, n={n}")
    size = p**n
    if size > _cap(max_order):
        raise GuardrailExceeded(f"order {size} exceeds max order {_cap(max_order)}")
    m = p ** (n - 1)
    c = 1 + p ** (n - 2)
    cinv = pow(c, -1, m)  # left-moving multiplier so that y^-1 x y = x^c holds
    mult = [pow(cinv, s, m) for s in range(p)]
    table = [[0] * size for _ in range(size)]
    for s in range(p):
        ms = mult[s]
        for i in range(m):
            row = table[s * m + i]
            for t in range(p):
                off = ((s + t) % p) * m
                for j in range(m):
                    row[t * m + j] = off + (i + j * ms) % m
    return FiniteGroup(table, f"M({size})")


def zm_group(m: int, n: int, r: int, max_order: int | None = None) -> FiniteGroup:
    """Metacyclic group ⟨a,b | a^m = b^n = 1, b a b^-1 = a^r⟩ of order m*n.

    Parameters must satisfy r^n = 1 (mod m) and gcd(m, n(r-1)) = 1; these
    are exactly the groups in which every Sylow subgroup is cyclic.
    Element a^i b^s has index s*m + i.
    """
    if m < 1 or n < 1:
        raise ValueError(f"parameters must be >= 1, got m={m}, n={n}")
    r %= max(m, 1)
    if m == 1:
        r = 0  # degenerate: the group is cyclic of order n
    else:
        if pow(r, n, m) != 1:
            raise ValueError(f"r^n must be 1 mod m: {r}^{n} != 1 (mod {m})")
        if math.gcd(m, n * (r - 1)) != 1:
            raise ValueError(f"gcd(m, n(r-1)) must be 1, got m={m}, n={n}, r={r}")
    size = m * n
    if size > _cap(max_order):
        raise GuardrailExceeded(f"order {size} exceeds max order {_cap(max_order)}")
    mult = [pow(r, s, m) if m > 1 else 0 for s in range(n)]
    table = [[0] * size for _ in range(size)]
    for s in range(n):
        ms = mult[s]
        for i in range(m):
            row = table[s * m + i]
            for t in range(n):
                off = ((s + t) % n) * m
                for j in range(m):
                    row[t * m + j] = off + (i + j * ms) % m
    return FiniteGroup(table, f"ZM({m},{n},{r})")


def p_group_P(
    n: int,
    p: int,
    q: int,
    max_order: int | None = None,
    action_power: int | None = None,
) -> FiniteGroup:
    """Non-abelian semidirect product of Z_p^(n-1) by Z_q of order p^(n-1) q.

    The order-q generator x acts on the elementary abelian part by the
    power automorphism y -> y^r with x^-1 y x = y^r, where r is the
    smallest integer > 1 of multiplicative order q mod p (q must be a
    prime divisor of p-1, p odd). ``action_power`` overrides r; the
    isomorphism class does not depend on the choice.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"base prime must be odd, got {p}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not is_prime(q) or (p - 1) % q != 0:
        raise ValueError(f"q must be a prime divisor of p-1, got p={p}, q={q}")
    size = p ** (n - 1) * q
    if size > _cap(max_order):
        raise GuardrailExceeded(f"order {size} exceeds max order {_cap(max_order)}")
    if action_power is None:
        r = next(
            a for a in range(2, p) if multiplicative_order(a, p) == q
        )
    else:
        r = action_power % p
        if r in (0, 1) or multiplicative_order(r, p) != q:
            raise ValueError(f"action power {action_power} does not have order {q} mod {p}")
    # x^s v x^-s scales v by r^-s componentwise (so that x^-1 v x = v^r holds)
    rinv = pow(r, -1, p)
    scale = [pow(rinv, s, p) for s in range(q)]
    k = n - 1
    vecs = list(itertools.product(range(p), repeat=k))
    index = {v: i for i, v in enumerate(vecs)}
    pk = len(vecs)
    table = [[0] * size for _ in range(size)]
    for s in range(q):
        sc = scale[s]
        scaled = [tuple(x * sc % p for x in w) for w in vecs]
        for vi, v in enumerate(vecs):
            row = table[s * pk + vi]
            for t in range(q):
                off = ((s + t) % q) * pk
                for wi in range(pk):
                    w = scaled[wi]
                    row[t * pk + wi] = off + index[tuple((a + b) % p for a, b in zip(v, w))]
    return FiniteGroup(table, f"P({n},{p},{q})")


def heisenberg_E(p: int, max_order: int | None = None) -> FiniteGroup:
    """Non-abelian group of order p^3 and exponent p (p odd): unitriangular 3x3 over F_p."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime, got {p}")
    size = p**3
    if size > _cap(max_order):
        raise GuardrailExceeded(f"order {size} exceeds max order {_cap(max_order)}")
    elems = list(itertools.product(range(p), repeat=3))
    index = {v: i for i, v in enumerate(elems)}
    table = [
        [
            index[((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)]
            for (a2, b2, c2) in elems
        ]
        for (a, b, c) in elems
    ]
    return FiniteGroup(table, f"E({size})")


def from_generators(
    degree: int, gens: list[Permutation], max_order: int | None = None, label: str | None = None
) -> FiniteGroup:
    """Closure of permutation generators; elements indexed in BFS discovery order.

    The identity (index 0) is discovered first; each known element is
    right-multiplied by each generator in the given order.
    """
    cap = _cap(max_order)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} does not match {degree}")
    ident = tuple(range(degree))
    gen_images = [g.images for g in gens]
    elems = [ident]
    index = {ident: 0}
    for u in elems:
        for gi in gen_images:
            w = tuple(u[j] for j in gi)
            if w not in index:
                if len(elems) >= cap:
                    raise GuardrailExceeded(
                        f"generator closure exceeds max order {cap}"
                    )
                index[w] = len(elems)
                elems.append(w)
    table = [
        [index[tuple(u[j] for j in v)] for v in elems]
        for u in elems
    ]
    if label is None:
        label = f"Perm({degree}; " + ", ".join(g.to_cycles() for g in gens) + ")"
    return FiniteGroup(table, label)


def direct_product(
    g: FiniteGroup, h: FiniteGroup, max_order: int | None = None
) -> FiniteGroup:
    """Componentwise product; element (a, b) has index a*|h| + b."""
    size = g.order * h.order
    if size > _cap(max_order):
        raise GuardrailExceeded(f"order {size} exceeds max order {_cap(max_order)}")
    ho = h.order
    table = []
    for grow in g.table:
        for hrow in h.table:
            table.append([gx * ho + hy for gx in grow for hy in hrow])
    return FiniteGroup(table, f"{g.label}x{h.label}")


def subgroup_as_group(sub: Subgroup, label: str | None = None) -> FiniteGroup:
    """Standalone FiniteGroup on the elements of a subgroup, reindexed 0..size-1.

    Elements keep their relative order, so the identity (index 0 in the
    parent) stays at index 0.
    """
    t = sub.group.table
    pos = {e: i for i, e in enumerate(sub.elems)}
    table = [[pos[t[a][b]] for b in sub.elems] for a in sub.elems]
    if label is None:
        label = f"{sub.group.label}>sub({sub.size})"
    return FiniteGroup(table, label)


def quotient(group: FiniteGroup, normal: Subgroup) -> FiniteGroup:
    """Quotient by a normal subgroup; cosets indexed by minimal member, ascending."""
    if normal.group is not group:
        raise ValueError("subgroup belongs to a different group")
    t = group.table
    inv = group.inverse
    nmask = normal.members
    for a in range(group.order):
        row = t[a]
        ia = inv[a]
        conj = 0
        for x in normal.elems:
            conj |= 1 << t[row[x]][ia]
        if conj != nmask:
            raise ValueError("subgroup is not normal")
    coset_of = [-1] * group.order
    reps = []
    for a in range(group.order):
        if coset_of[a] >= 0:
            continue
        idx = len(reps)
        reps.append(a)
        row = t[a]
        for x in normal.elems:
            coset_of[row[x]] = idx
    k = len(reps)
    table = [[coset_of[t[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    return FiniteGroup(table, f"{group.label}/({normal.size})")
