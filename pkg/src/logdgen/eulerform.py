"""Euler characteristics of degenerate fibres and the correction calculus.

The pieces assembled here: orbifold Euler numbers, the cyclic-quotient
Riemann-Roch correction terms and their telescoping sum, the structure-sheaf
Euler characteristic of a normal-crossing divisor (with and without the
correction terms for non-Gorenstein points), the top Euler number via
Noether's equality, and two small numerology helpers for boundary surfaces
fibred in conics.

Everything works on per-component numerical aggregates; no threefold model
is constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Rational
from math import gcd


@dataclass(frozen=True)
class FibreComponentData:
    """Numerical data of one fibre component: multiplicity, orbifold Euler
    number of the open part, and the local excesses at its special points."""

    m: int
    e_orb: Rational
    deltas: tuple[Rational, ...] = ()

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"multiplicity must be positive, got {self.m}")
        object.__setattr__(self, "e_orb", Rational(self.e_orb))
        deltas = tuple(Rational(d) for d in self.deltas)
        if any(d < 0 for d in deltas):
            raise ValueError("local excesses must be non-negative")
        object.__setattr__(self, "deltas", deltas)


@dataclass(frozen=True)
class ChiInput:
    """Aggregated intersection data of a divisor D = sum m_i D_i.

    ``components`` holds per-component tuples (m_i, chi_i, D_i^3, D_i^2.K);
    the two totals are D^3 and D^2.K of the full divisor.  ``corrections``
    pairs each multiplicity with the list of local correction values c_p
    summed over the points of that component.
    """

    components: tuple[tuple[int, Rational, Rational, Rational], ...]
    total_D_cubed: Rational = Rational(0)
    total_D_sq_K: Rational = Rational(0)
    corrections: tuple[tuple[int, tuple[Rational, ...]], ...] = ()

    def __post_init__(self) -> None:
        comps = tuple(
            (int(m), Rational(chi), Rational(d3), Rational(d2k))
            for (m, chi, d3, d2k) in self.components
        )
        if not comps:
            raise ValueError("a divisor needs at least one component")
        if any(m < 1 for (m, _, _, _) in comps):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "total_D_cubed", Rational(self.total_D_cubed))
        object.__setattr__(self, "total_D_sq_K", Rational(self.total_D_sq_K))
        corr = tuple(
            (int(m), tuple(Rational(c) for c in cs)) for (m, cs) in self.corrections
        )
        object.__setattr__(self, "corrections", corr)


def orbifold_euler(e_top: int, orders) -> Rational:
    """e_top minus the quotient-point defects sum(1 - 1/o).

    >>> orbifold_euler(3, [2])
    Fraction(5, 2)
    >>> orbifold_euler(3, [3, 3, 3])
    Fraction(1, 1)
    """
    orders = list(orders)
    if any(o < 1 for o in orders):
        raise ValueError("local group orders must be positive")
    return Rational(e_top) - sum(
        (1 - Rational(1, o) for o in orders), Rational(0)
    )


def rr_correction_cyclic(r: int, a: int, l: int) -> Rational:
    """Correction term -a_l(r - a_l)/2r of the l-th twist at a cyclic
    quotient point of type (r; a), with a_l the residue of a*l mod r.

    >>> rr_correction_cyclic(5, 2, 1)
    Fraction(-3, 5)
    >>> rr_correction_cyclic(3, 1, 3)
    Fraction(0, 1)
    """
    if r < 1:
        raise ValueError(f"index must be positive, got {r}")
    if gcd(a, r) != 1:
        raise ValueError(f"twist {a} is not coprime to the index {r}")
    residue = (a * l) % r
    return Rational(-residue * (r - residue), 2 * r)


def rr_correction_sum(r: int, a: int, m: int) -> Rational:
    """Brute-force sum of the cyclic corrections over l = 1..m-1.

    Kept as a literal sum on purpose; the closed form -m(r^2-1)/(12r)
    is asserted against it in tests, never substituted here.

    >>> rr_correction_sum(5, 2, 5)
    Fraction(-2, 1)
    """
    if m < 1:
        raise ValueError(f"multiplicity must be positive, got {m}")
    if m % r != 0:
        raise ValueError(f"index {r} must divide the multiplicity {m}")
    return sum(
        (rr_correction_cyclic(r, a, l) for l in range(1, m)), Rational(0)
    )


def chi_structure_sheaf(data: ChiInput, generalized: bool = False) -> Rational:
    """Structure-sheaf Euler characteristic of a normal-crossing divisor.

    chi(O_D) = sum m_i chi_i + (D^3 - sum m_i D_i^3)/6
             + (D^2.K - sum m_i D_i^2.K)/4,
    and, in the generalized form, an extra -(1/12) sum_i m_i sum_p c_p for
    the correction terms at non-Gorenstein points.
    """
    total = sum((m * chi for (m, chi, _, _) in data.components), Rational(0))
    cubed = sum((m * d3 for (m, _, d3, _) in data.components), Rational(0))
    sq_k = sum((m * d2k for (m, _, _, d2k) in data.components), Rational(0))
    total += (data.total_D_cubed - cubed) / 6
    total += (data.total_D_sq_K - sq_k) / 4
    if generalized:
        total -= (
            sum((m * sum(cs, Rational(0)) for (m, cs) in data.corrections), Rational(0))
            / 12
        )
    return total


def euler_degenerate_fibre(components) -> Rational:
    """Top Euler number of a degenerate fibre: sum m_i (e_orb_i + sum deltas).

    >>> euler_degenerate_fibre([FibreComponentData(2, 3, [Rational(1, 2)])])
    Fraction(7, 1)
    """
    return sum(
        (c.m * (c.e_orb + sum(c.deltas, Rational(0))) for c in components),
        Rational(0),
    )


def noether_e_top(chi, k_sq, e_p_list) -> Rational:
    """Top Euler number from Noether's equality: 12 chi - K^2 - sum(e_p - 1).

    >>> noether_e_top(1, 8, [2])
    Fraction(3, 1)
    """
    return (
        12 * Rational(chi)
        - Rational(k_sq)
        - sum((Rational(e - 1) for e in e_p_list), Rational(0))
    )


# The four Gorenstein singularity patterns occurring on the rank-one surfaces
# of the conic-bundle boundary analysis, with the constant that Noether's
# equality produces for each.
TYPE3_OFFSETS = {
    "4A_1": 8,
    "3A_2": 6,
    "A_1+2A_3": 5,
    "A_1+A_2+A_5": 4,
}


def type3_numerology(sing: str, rho: int, s: int) -> int:
    """Degree d = -2 rho - s + offset for the four singularity patterns.

    >>> type3_numerology("3A_2", 1, 1)
    3
    """
    if sing not in TYPE3_OFFSETS:
        raise ValueError(f"unknown singularity pattern {sing!r}")
    if rho < 1:
        raise ValueError(f"Picard rank must be positive, got {rho}")
    if s not in (0, 1, 2):
        raise ValueError(f"section count s must be 0, 1 or 2, got {s}")
    return -2 * rho - s + TYPE3_OFFSETS[sing]


def rank_one_square(d: int, gamma_dot_d) -> Rational:
    """Self-intersection pinned by a rank-one Picard group: (2/d)(G.D)^2.

    >>> rank_one_square(2, 2)
    Fraction(4, 1)
    """
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    return Rational(2, d) * Rational(gamma_dot_d) ** 2
