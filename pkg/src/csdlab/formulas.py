"""Closed-form cyclic-subgroup commutativity degrees for named families.

Each formula is an exact rational built from integer arithmetic (geometric
series are expanded, never floated). They serve as independent cross-checks
of the enumeration engine: `csdlab verify` recomputes each family by brute
force and compares. All values here are degrees in (0, 1].
"""

from __future__ import annotations

from fractions import Fraction

from .intmath import divisor_count, is_prime

Degree = Fraction


def tau(m: int) -> int:
    """Number of positive divisors of m."""
    return divisor_count(m)


def _geom(p: int, lo: int, hi: int) -> int:
    """p^lo + p^(lo+1) + ... + p^hi; zero when the range is empty."""
    return sum(p**i for i in range(lo, hi + 1))


def csd_P_group(n: int, p: int) -> Degree:
    """Degree of the order-p^(n-1)q semidirect product of Z_p^(n-1) by Z_q.

    The value does not depend on q. Census behind the formula: the
    elementary abelian part contributes 2 + p + ... + p^(n-2) cyclic
    subgroups that permute with everything, and the p^(n-1) complements
    of order q permute only with the normal chain and themselves.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime, got {p}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    a = 2 + _geom(p, 1, n - 2)
    b = 2 + _geom(p, 1, n - 1)
    return Fraction(a * b + p ** (n - 1) * (a + 1), b * b)


def csd_dihedral(m: int) -> Degree:
    """Degree of the dihedral group of order 2m, dispatched on the parity of m.

    tau(m) + m cyclic subgroups in all; each reflection subgroup permutes
    with the rotation chain, itself, and (for even m) its antipodal
    partner at offset m/2.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    t = tau(m)
    extra = 1 if m % 2 else 2
    return Fraction(t * (t + m) + m * (t + extra), (t + m) ** 2)


def csd_dihedral_2n(n: int) -> Degree:
    """Degree of the dihedral group of order 2^n; closed form of csd_dihedral(2^(n-1))."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return Fraction(n * n + (n + 1) * 2**n, (n + 2 ** (n - 1)) ** 2)


def csd_quaternion(n: int) -> Degree:
    """Degree of the generalized quaternion group of order 2^n."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return Fraction(n * n + (n + 1) * 2 ** (n - 1), (n + 2 ** (n - 2)) ** 2)


def csd_semidihedral(n: int) -> Degree:
    """Candidate closed form for the quasi-dihedral group of order 2^n.

    Built from the census n·|L1| + (n+2)·2^(n-2) + (n+1)·2^(n-3), which
    counts each order-4 reflection subgroup as permuting only with the
    cyclic chain and itself. Exhaustive enumeration disagrees: those
    subgroups pair up inside the quaternion subgroup ⟨x², xy⟩, where any
    two subgroups permute, so each has one more permuting partner. See
    csd_semidihedral_observed for the form that matches enumeration;
    `verify semidihedral` exposes the mismatch.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    return Fraction(
        n * n + 3 * n * 2 ** (n - 2) + 5 * 2 ** (n - 3),
        (n + 3 * 2 ** (n - 3)) ** 2,
    )


def csd_semidihedral_observed(n: int) -> Degree:
    """Degree of the quasi-dihedral group of order 2^n, matching enumeration.

    Census: the n subgroups of ⟨x⟩ permute with all n + 3·2^(n-3) cyclic
    subgroups; each of the 2^(n-2) order-2 reflection subgroups and each
    of the 2^(n-3) order-4 reflection subgroups permutes with exactly
    n + 2 (the ⟨x⟩ chain, itself, and one partner). The numerator exceeds
    csd_semidihedral's by exactly 2^(n-3).
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    return Fraction(
        n * n + 3 * (n + 1) * 2 ** (n - 2),
        (n + 3 * 2 ** (n - 3)) ** 2,
    )


def csd_E_p3(p: int) -> Degree:
    """Degree of the non-abelian group of order p^3 and exponent p (p odd).

    Always below 41/49, the degree of the order-8 dihedral group.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime, got {p}")
    value = Fraction(p**3 + 5 * p**2 + 4 * p + 4, (p**2 + p + 2) ** 2)
    assert value < Fraction(41, 49)
    return value


def csd_schmidt_section(p: int, r: int) -> Degree:
    """Degree of the central-quotient section of a Schmidt group.

    Case r = 1 covers the order-pq shape; r >= 2 the Z_p^r-by-cyclic
    shape. Every value is at most 19/25 (checked on each call); that
    ceiling is what makes the 19/25 nilpotency threshold work.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if p == 2 and r == 1:
        # no prime q has 2 of multiplicative order 1 mod q, so this shape
        # does not occur; the r = 1 expression would also break the 19/25
        # ceiling here
        raise ValueError("p = 2 requires r >= 2")
    if r == 1:
        value = Fraction(5 * p + 4, (p + 2) ** 2)
    else:
        num = (
            p ** (2 * r)
            + 3 * p ** (r + 2)
            - 4 * p ** (r + 1)
            - p**r
            + p**2
            - 4 * p
            + 4
        )
        value = Fraction(num, (p ** (r + 1) + p - 2) ** 2)
    assert value <= Fraction(19, 25), f"schmidt section value {value} exceeds 19/25"
    return value


def csd_lower_bound_Zn_Q8(n: int) -> Degree:
    """Lower bound 1 - 24(n+2)/(8n+2)^2 for csd of Z_(2^n) x Q8; tends to 1."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return 1 - Fraction(24 * (n + 2), (8 * n + 2) ** 2)


def l1_count_Zn_Q8(n: int) -> int:
    """Number of cyclic subgroups of Z_(2^n) x Q8: always 8n + 2."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return 8 * n + 2
