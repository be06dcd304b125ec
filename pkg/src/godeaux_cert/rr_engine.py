"""Numerical cohomology arithmetic on surfaces.

Riemann-Roch and adjunction at the Euler-characteristic level, the
Noether identity, invariants of free quotients, and the Hilbert-polynomial
conditions that single out rank-one spectral sheaves.  Everything is exact
integer (or Fraction) arithmetic; no individual h^i is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SurfaceInvariants:
    """chi(O), K^2, topological Euler characteristic, q, p_g, b_2."""

    chi: int
    K2: int
    e: int
    q: int = 0
    pg: int = 0
    b2: int = 0

    def __post_init__(self) -> None:
        if 12 * self.chi != self.K2 + self.e:
            raise ValueError(
                f"Noether identity fails: 12*{self.chi} != {self.K2} + {self.e}"
            )
        if self.chi != 1 - self.q + self.pg:
            raise ValueError(f"chi = {self.chi} != 1 - q + pg = {1 - self.q + self.pg}")
        expected_b2 = self.e - 2 + 4 * self.q
        if self.b2 == 0:
            object.__setattr__(self, "b2", expected_b2)
        elif self.b2 != expected_b2:
            raise ValueError(f"b2 = {self.b2} != e - 2 + 4q = {expected_b2}")


# Invariants of the quotient surfaces under study and of their quintic cover.
GODEAUX = SurfaceInvariants(chi=1, K2=1, e=11, q=0, pg=0)
QUINTIC = SurfaceInvariants(chi=5, K2=5, e=55, q=0, pg=4)


@dataclass(frozen=True)
class NumericalDivisor:
    """Numerical class of a divisor: self-intersection and product with K."""

    self_int: int
    dot_K: int

    def __post_init__(self) -> None:
        if (self.dot_K - self.self_int) % 2 != 0:
            raise ValueError(
                f"parity violation: D.K = {self.dot_K} and D^2 = {self.self_int} "
                "must agree mod 2"
            )


def chi_divisor(s: SurfaceInvariants, D: NumericalDivisor) -> int:
    """chi(O(D)) = chi(O) + (D^2 - D.K)/2."""
    return s.chi + (D.self_int - D.dot_K) // 2


def adjunction_genus(D: NumericalDivisor) -> int:
    """Arithmetic genus 1 + (D^2 + D.K)/2 of a curve with these numerics."""
    if (D.self_int + D.dot_K) % 2 != 0:
        raise ValueError("D^2 + D.K must be even")
    return 1 + (D.self_int + D.dot_K) // 2


def noether_euler(chi: int, K2: int) -> int:
    """Topological Euler characteristic 12*chi - K^2."""
    return 12 * chi - K2


def quotient_invariants(
    cover: SurfaceInvariants, deg: int, q: int = 0, pg: int = 0
) -> SurfaceInvariants:
    """Invariants of the quotient by a free action of a group of order deg.

    chi, K^2 and e all divide by deg for a free action; non-divisibility is
    rejected as evidence the action was not free.
    """
    if deg < 1:
        raise ValueError("deg must be positive")
    for name, val in (("chi", cover.chi), ("K2", cover.K2), ("e", cover.e)):
        if val % deg != 0:
            raise ValueError(f"{name} = {val} not divisible by deg = {deg}")
    return SurfaceInvariants(cover.chi // deg, cover.K2 // deg, cover.e // deg, q=q, pg=pg)


def prespectral_hilbert_check(
    D: NumericalDivisor,
    C: NumericalDivisor,
    d_dot_c: int,
    n_max: int,
    surface: SurfaceInvariants = GODEAUX,
    d: int = 1,
) -> bool:
    """Hilbert condition chi(O(D + (nd+1)C)) = (nd+1)(nd+2)/2 for n = 0..n_max.

    The sheaf is modeled numerically as O(D + C) twisted by multiples of C;
    d is the Cartier multiplier, exercised at d = 1 on a smooth surface.
    """
    for n in range(n_max + 1):
        mult = n * d + 1
        sq = D.self_int + 2 * mult * d_dot_c + mult * mult * C.self_int
        dk = D.dot_K + mult * C.dot_K
        if (sq - dk) % 2 != 0:
            return False
        chi = surface.chi + (sq - dk) // 2
        if chi != (n * d + 1) * (n * d + 2) // 2:
            return False
    return True


def growth_check(
    C: NumericalDivisor, m_max: int, surface: SurfaceInvariants = GODEAUX
) -> bool:
    """The section-space dimensions grow like m^2/2.

    chi(O(mC)) is an exact quadratic in m; fit it through three points,
    confirm the fit reproduces every value up to m_max, and require the
    leading coefficient to be C^2/2 = 1/2.
    """
    if m_max < 3:
        raise ValueError("need m_max >= 3 to pin a quadratic")

    def chi_m(m: int) -> int:
        return chi_divisor(surface, NumericalDivisor(m * m * C.self_int, m * C.dot_K))

    y1, y2, y3 = (Fraction(chi_m(m)) for m in (1, 2, 3))
    # Newton's forward differences at m = 1, 2, 3.
    lead = (y3 - 2 * y2 + y1) / 2
    lin = (y2 - y1) - 3 * lead
    const = y1 - lead - lin
    for m in range(1, m_max + 1):
        if lead * m * m + lin * m + const != chi_m(m):
            return False
    return lead == Fraction(1, 2)


def chi_curve_sheaf(degree: int, genus: int) -> int:
    """chi of a degree-d line bundle on a genus-g curve: d - g + 1."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return degree - genus + 1
