"""Exact probabilistic degrees of a finite group, by enumeration.

Every degree is a fractions.Fraction in lowest terms, never a float:

  csd  probability that two random cyclic subgroups permute
  sd   same probability over the full subgroup lattice
  ndeg proportion of subgroups that are normal
  cdeg proportion of subgroups that are cyclic
  d    probability that two random elements commute
  csd* minimum of csd over all sections H/N

All pair sums are over ordered pairs, computed once per unordered pair
by symmetry, so sequential and partitioned summation agree exactly.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .groups import FiniteGroup, Subgroup
from .lattice import (
    _permutes_raw,
    count_permuting_pairs,
    cyclic_subgroups,
    is_normal,
    sections,
    subgroup_lattice,
)

Degree = Fraction


def _count_rows(group: FiniteGroup, data, rows) -> int:
    """Ordered permuting pairs contributed by the given first-index rows.

    Row i contributes 1 for the diagonal pair plus 2 per permuting
    partner j > i, so summing over any partition of rows counts every
    ordered pair exactly once.
    """
    t = group.table
    inv = group.inverse
    n = group.order
    total = 0
    for i in rows:
        mh, eh, sh = data[i]
        count = 1
        for j in range(i + 1, len(data)):
            mk, ek, sk = data[j]
            if _permutes_raw(t, inv, n, mh, eh, sh, mk, ek, sk):
                count += 2
        total += count
    return total


def _csd_chunk(group: FiniteGroup, data, rows) -> int:
    return _count_rows(group, data, rows)


def csd(group: FiniteGroup, jobs: int | None = None, max_order: int | None = None) -> Degree:
    """Cyclic subgroup commutativity degree: permuting pairs over |L1|^2.

    With jobs > 1 the row sum is partitioned across a process pool;
    partial counts are integers, so the merged result is identical to
    the sequential one.
    """
    poset = cyclic_subgroups(group, max_order=max_order)
    data = [(s.members, s.elems, s.size) for s in poset.subgroups]
    m = len(data)
    if jobs is not None and jobs > 1 and m > 1:
        chunks = [range(k, m, jobs) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_csd_chunk, group, data, rows) for rows in chunks]
            pairs = sum(f.result() for f in futures)
    else:
        pairs = _count_rows(group, data, range(m))
    return Fraction(pairs, m * m)


def sd(group: FiniteGroup, max_order: int | None = None) -> Degree:
    """Subgroup commutativity degree over the full lattice."""
    lat = subgroup_lattice(group, max_order=max_order)
    m = len(lat.subgroups)
    return Fraction(count_permuting_pairs(lat.subgroups), m * m)


def ndeg(group: FiniteGroup, max_order: int | None = None) -> Degree:
    """Proportion of subgroups that are normal."""
    lat = subgroup_lattice(group, max_order=max_order)
    normal = sum(1 for sub in lat.subgroups if is_normal(sub))
    return Fraction(normal, len(lat.subgroups))


def cdeg(group: FiniteGroup, max_order: int | None = None) -> Degree:
    """Proportion of subgroups that are cyclic."""
    lat = subgroup_lattice(group, max_order=max_order)
    poset = cyclic_subgroups(group, max_order=group.order)
    return Fraction(len(poset.subgroups), len(lat.subgroups))


def d(group: FiniteGroup) -> Degree:
    """Probability that two uniformly random elements commute."""
    t = group.table
    n = group.order
    count = n
    for a in range(n):
        row = t[a]
        count += 2 * sum(1 for b in range(a + 1, n) if row[b] == t[b][a])
    return Fraction(count, n * n)


def is_iwasawa(group: FiniteGroup, max_order: int | None = None) -> bool:
    """True iff every pair of subgroups permutes (sd = 1).

    Both sd and csd are computed; they must be 1 together, or the
    lattice enumeration is internally inconsistent.
    """
    sd_one = sd(group, max_order=max_order) == 1
    csd_one = csd(group, max_order=group.order) == 1
    if sd_one != csd_one:
        raise RuntimeError(
            f"internal inconsistency on {group.label}: sd=1 is {sd_one} "
            f"but csd=1 is {csd_one}"
        )
    return sd_one


def csd_star(group: FiniteGroup, max_order: int | None = None) -> Degree:
    """Minimum of csd over all sections H/N (the group itself included)."""
    best: Fraction | None = None
    for section in sections(group, max_order=max_order):
        value = csd(section, max_order=section.order)
        if best is None or value < best:
            best = value
    assert best is not None  # the trivial section always exists
    return best


def csd_coprime_product(degrees: list[Degree]) -> Degree:
    """Product of csd values; valid for groups of pairwise coprime orders."""
    out = Fraction(1)
    for deg in degrees:
        out *= deg
    return out


@dataclass(frozen=True)
class LowerBounds:
    """The three elementary lower bounds on csd(G).

    normal_cyclic: |N(G) ∩ L1(G)| / |L1(G)| — normal cyclic subgroups
        permute with everything.
    pair_floor: (2|L1(G)| − 1) / |L1(G)|^2 — every subgroup permutes
        with itself, the trivial subgroup and G.
    abelian_subgroup: max over abelian subgroups M of
        (|L1(M)| / |L1(G)|)^2 — permuting pairs inside M stay permuting.
    """

    normal_cyclic: Degree
    pair_floor: Degree
    abelian_subgroup: Degree

    def all(self) -> tuple[Degree, Degree, Degree]:
        return (self.normal_cyclic, self.pair_floor, self.abelian_subgroup)


def lower_bounds(group: FiniteGroup, max_order: int | None = None) -> LowerBounds:
    """Evaluate the three lower bounds; needs the full lattice for the abelian one."""
    poset = cyclic_subgroups(group, max_order=group.order)
    m = len(poset.subgroups)
    normal_cyclic = Fraction(
        sum(1 for sub in poset.subgroups if is_normal(sub)), m
    )
    pair_floor = Fraction(2 * m - 1, m * m)
    lat = subgroup_lattice(group, max_order=max_order)
    cyc_masks = [sub.members for sub in poset.subgroups]
    best = Fraction(0)
    for sub in lat.subgroups:
        if not _is_abelian_subgroup(group, sub):
            continue
        l1m = sum(1 for cm in cyc_masks if cm | sub.members == sub.members)
        bound = Fraction(l1m, m) ** 2
        if bound > best:
            best = bound
    return LowerBounds(normal_cyclic, pair_floor, best)


def _is_abelian_subgroup(group: FiniteGroup, sub: Subgroup) -> bool:
    t = group.table
    elems = sub.elems
    for idx, a in enumerate(elems):
        row = t[a]
        for b in elems[idx + 1 :]:
            if row[b] != t[b][a]:
                return False
    return True
