"""The invariant quintic family in P^3 and its order-5 symmetry.

Enumerates the 12 admissible degree-5 monomials, builds members of the
family over prime fields containing fifth roots of unity, and brute-forces
invariance, freeness of the action, smoothness, and transversality to the
coordinate planes.  The family-dimension count 11 - 3 = 8 is prime-free
rational linear algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .exact_arith import (
    FieldElement,
    ProjectivePoint,
    SparsePolynomial,
    _require_prime,
    iter_projective_coords,
    primitive_fifth_root,
    rational_matrix_rank,
)

# The 12 exponent tuples (n1,n2,n3,n4) with sum 5 and 1*n1+2*n2+3*n3+4*n4
# divisible by 5, in the canonical order used for coefficient vectors.
_MONOMIAL_ORDER: Tuple[Tuple[int, int, int, int], ...] = (
    (5, 0, 0, 0),
    (3, 0, 1, 1),
    (2, 1, 2, 0),
    (2, 2, 0, 1),
    (1, 3, 1, 0),
    (1, 1, 0, 3),
    (1, 0, 2, 2),
    (0, 5, 0, 0),
    (0, 0, 5, 0),
    (0, 0, 0, 5),
    (0, 2, 1, 2),
    (0, 1, 3, 1),
)

# Coefficient positions (0-based) of the pure powers z1^5, z2^5, z3^5, z4^5.
PURE_POWER_INDICES = (0, 7, 8, 9)


def enumerate_monomials() -> Tuple[Tuple[int, int, int, int], ...]:
    """Exhaustively solve n1+n2+n3+n4 = 5, n1+2n2+3n3+4n4 = 0 (mod 5).

    Confirms the search reproduces exactly the canonical 12-tuple listing
    and returns that listing (order matters for coefficient vectors).
    """
    found = set()
    for n1 in range(6):
        for n2 in range(6 - n1):
            for n3 in range(6 - n1 - n2):
                n4 = 5 - n1 - n2 - n3
                if (n1 + 2 * n2 + 3 * n3 + 4 * n4) % 5 == 0:
                    found.add((n1, n2, n3, n4))
    if found != set(_MONOMIAL_ORDER):
        raise AssertionError("monomial search disagrees with the canonical listing")
    return _MONOMIAL_ORDER


@dataclass(frozen=True)
class GroupElement:
    """Diagonal symmetry z_j -> eps^{w_j} z_j with weights mod 5."""

    weights: Tuple[int, int, int, int]

    def __post_init__(self) -> None:
        w = tuple(x % 5 for x in self.weights)
        if len(w) != 4:
            raise ValueError("need 4 weights")
        object.__setattr__(self, "weights", w)

    @classmethod
    def generator(cls) -> "GroupElement":
        return cls((1, 2, 3, 4))

    def power(self, n: int) -> "GroupElement":
        return GroupElement(tuple(w * n for w in self.weights))

    @property
    def is_identity(self) -> bool:
        return all(w == 0 for w in self.weights)


def _reduce_coeffs(a: Sequence[int], q: int) -> Tuple[FieldElement, ...]:
    if len(a) != 12:
        raise ValueError(f"need 12 coefficients, got {len(a)}")
    coeffs = tuple(FieldElement(int(x), q) for x in a)
    if not any(coeffs):
        raise ValueError("all coefficients vanish mod the chosen prime")
    return coeffs


def build_quintic(a: Sequence[int], q: int) -> SparsePolynomial:
    """The member sum(a_i * z^{n_i}) of the family over F_q."""
    _require_prime(q)
    coeffs = _reduce_coeffs(a, q)
    return SparsePolynomial(
        {exps: c for exps, c in zip(_MONOMIAL_ORDER, coeffs) if c}, 4
    )


def invariance_check(a: Sequence[int], g: GroupElement, q: int) -> bool:
    """Is the member carried to a scalar multiple of itself by g?

    Each monomial picks up eps^{sum w_j n_j}; the polynomial is invariant
    up to scale iff that scalar is the same across all surviving terms.
    """
    f = build_quintic(a, q)
    if f.is_zero:
        raise ValueError("zero polynomial")
    eps = primitive_fifth_root(q)
    scalars = {
        eps ** (sum(w * n for w, n in zip(g.weights, exps)) % 5)
        for exps in f.terms
    }
    return len(scalars) == 1


def fixed_points(g: GroupElement, q: int) -> Tuple[ProjectivePoint, ...]:
    """Fixed points of g on P^3(F_q): the 4 coordinate points.

    Only elements with pairwise distinct weights are accepted; a repeated
    weight fixes a positive-dimensional locus and falls outside the free
    families handled here.
    """
    _require_prime(q)
    if g.is_identity:
        raise ValueError("identity fixes everything")
    if len(set(g.weights)) != 4:
        raise ValueError(f"weights {g.weights} are not pairwise distinct")
    pts = []
    for i in range(4):
        coords = tuple(
            FieldElement(1 if j == i else 0, q) for j in range(4)
        )
        pts.append(ProjectivePoint(coords))
    return tuple(pts)


def free_action_check(a: Sequence[int], q: int) -> bool:
    """No fixed point of the symmetry lies on the member.

    Two independent routes: evaluate at the four coordinate points, and
    test the pure-power coefficients a1*a8*a9*a10 != 0.  They must agree.
    """
    f = build_quintic(a, q)
    by_eval = all(
        bool(f.eval(p.coords)) for p in fixed_points(GroupElement.generator(), q)
    )
    coeffs = _reduce_coeffs(a, q)
    by_coeff = all(bool(coeffs[i]) for i in PURE_POWER_INDICES)
    if by_eval != by_coeff:
        raise AssertionError("evaluation route and coefficient criterion disagree")
    return by_eval


def _int_terms(a: Sequence[int], q: int) -> List[Tuple[int, Tuple[int, int, int, int]]]:
    coeffs = _reduce_coeffs(a, q)
    return [(c.value, exps) for exps, c in zip(_MONOMIAL_ORDER, coeffs) if c]


def _singular_point_exists(
    terms: List[Tuple[int, Tuple[int, ...]]], q: int, nvars: int
) -> bool:
    """Brute force: does some projective point kill f and all partials?

    Plain-int arithmetic with per-point power tables; reductions mod q are
    deferred to one point per term for speed.
    """
    partials = []
    for v in range(nvars):
        pv = []
        for c, exps in terms:
            e = exps[v]
            if e:
                pv.append((c * e, exps[:v] + (e - 1,) + exps[v + 1 :]))
        partials.append(pv)
    for pt in iter_projective_coords(q, nvars - 1):
        pw = [[1] * 6 for _ in range(nvars)]
        for v, x in enumerate(pt):
            acc = 1
            for e in range(1, 6):
                acc = acc * x % q
                pw[v][e] = acc
        val = 0
        for c, exps in terms:
            t = c
            for v, e in enumerate(exps):
                if e:
                    t *= pw[v][e]
            val += t
        if val % q != 0:
            continue
        if all(
            sum(
                c * _mono(pw, exps)
                for c, exps in pv
            )
            % q
            == 0
            for pv in partials
        ):
            return True
    return False


def _mono(pw, exps) -> int:
    t = 1
    for v, e in enumerate(exps):
        if e:
            t *= pw[v][e]
    return t


def smoothness_check(a: Sequence[int], q: int) -> bool:
    """No point of P^3(F_q) is a common zero of the member and its partials."""
    _require_prime(q)
    return not _singular_point_exists(_int_terms(a, q), q, 4)


def transversality_check(a: Sequence[int], plane_index: int, q: int) -> bool:
    """The restriction to the coordinate plane z_{plane_index} = 0 is smooth.

    plane_index is 1-based.  Terms involving the dropped variable vanish;
    the survivors form a plane quintic checked over P^2(F_q).
    """
    if not 1 <= plane_index <= 4:
        raise ValueError(f"plane_index {plane_index} out of range 1..4")
    _require_prime(q)
    drop = plane_index - 1
    restricted = []
    for c, exps in _int_terms(a, q):
        if exps[drop] == 0:
            restricted.append((c, exps[:drop] + exps[drop + 1 :]))
    if not restricted:
        return False
    return not _singular_point_exists(restricted, q, 3)


def weight_difference_rank() -> int:
    """Rank over Q of the 11 x 4 matrix with rows n_i - n_1."""
    base = _MONOMIAL_ORDER[0]
    rows = [
        [n - b for n, b in zip(exps, base)] for exps in _MONOMIAL_ORDER[1:]
    ]
    return rational_matrix_rank(rows)


def family_dimension() -> int:
    """Moduli count: 11 coefficient parameters minus the effective torus.

    The diagonal torus acts on coefficients through the exponent
    differences n_i - n_1; its effective dimension is the rank of that
    difference matrix (3), leaving 11 - 3 = 8.
    """
    return 11 - weight_difference_rank()


def invariant_hyperplanes(
    weights: Tuple[int, int, int, int] = (1, 2, 3, 4)
) -> Tuple[Tuple[int, int, int, int], ...]:
    """The hyperplanes fixed by the dual action: the 4 coordinate planes.

    Represented as unit exponent tuples for the defining linear forms.
    Requires pairwise distinct weights; otherwise the fixed hyperplanes
    form continuous families and the count 4 is wrong.
    """
    w = tuple(x % 5 for x in weights)
    if len(set(w)) != 4:
        raise ValueError(f"weights {w} are not pairwise distinct")
    return tuple(
        tuple(1 if j == i else 0 for j in range(4)) for i in range(4)
    )


def brute_force_invariant_hyperplanes(g: GroupElement, q: int) -> int:
    """Count hyperplanes of P^3(F_q) carried to themselves by g.

    Independent oracle for invariant_hyperplanes: a hyperplane with
    coefficient vector c is invariant iff the weighted vector
    (eps^{w_j} c_j) is proportional to c.
    """
    eps = primitive_fifth_root(q)
    count = 0
    for raw in iter_projective_coords(q, 3):
        c = tuple(FieldElement(v, q) for v in raw)
        moved = ProjectivePoint(tuple(eps ** w * x for w, x in zip(g.weights, c)))
        if moved == ProjectivePoint(c):
            count += 1
    return count


def brute_force_fixed_points(g: GroupElement, q: int) -> Tuple[ProjectivePoint, ...]:
    """Oracle for fixed_points: scan every point of P^3(F_q)."""
    eps = primitive_fifth_root(q)
    out = []
    for raw in iter_projective_coords(q, 3):
        c = tuple(FieldElement(v, q) for v in raw)
        p = ProjectivePoint(c)
        moved = ProjectivePoint(tuple(eps ** w * x for w, x in zip(g.weights, c)))
        if moved == p:
            out.append(p)
    return tuple(out)
