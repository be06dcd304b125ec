"""Exact arithmetic substrate.

Prime fields containing fifth roots of unity, sparse multivariate
polynomials over a pluggable coefficient domain, and enumeration of
projective space over a prime field.  All values are immutable and all
operations are pure functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence, Tuple

# Primes q = 1 (mod 5), so F_q* contains an element of order 5.
DEFAULT_PRIMES = (11, 31, 41, 61, 71, 101)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _require_prime(q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"modulus {q} is not prime")


@dataclass(frozen=True)
class FieldElement:
    """Element of the prime field F_q, stored reduced to [0, q)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        _require_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, int):
            return FieldElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(pow(self.value, self.modulus - 2, self.modulus), self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(pow(self.value, n, self.modulus), self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.value == other % self.modulus
        if isinstance(other, FieldElement):
            return self.modulus == other.modulus and self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def field_zero(q: int) -> FieldElement:
    return FieldElement(0, q)


def field_one(q: int) -> FieldElement:
    return FieldElement(1, q)


def primitive_fifth_root(q: int) -> FieldElement:
    """Smallest g in F_q* with g^5 = 1 and g != 1.

    Requires q = 1 (mod 5); otherwise no such element exists.
    """
    _require_prime(q)
    if q % 5 != 1:
        raise ValueError(f"q = {q} has q mod 5 = {q % 5}; need q = 1 (mod 5)")
    for g in range(2, q):
        if pow(g, 5, q) == 1:
            return FieldElement(g, q)
    raise AssertionError("unreachable: a fifth root exists when q = 1 (mod 5)")


class SparsePolynomial:
    """Map from exponent tuples to nonzero coefficients.

    The coefficient domain is pluggable: ints, Fractions, or FieldElements,
    anything supporting +, *, unary truth test, and equality.  Terms are
    kept with no zero coefficients; iteration order for serialization is
    lexicographic on the exponent tuples.
    """

    __slots__ = ("terms", "num_vars")

    def __init__(self, terms: Mapping[Tuple[int, ...], object], num_vars: int):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise ValueError(f"exponent tuple {exps} has wrong arity")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                clean[exps] = coeff
        self.terms = clean
        self.num_vars = num_vars

    @classmethod
    def zero(cls, num_vars: int) -> "SparsePolynomial":
        return cls({}, num_vars)

    @classmethod
    def from_terms(cls, pairs, num_vars: int) -> "SparsePolynomial":
        acc: dict = {}
        for exps, coeff in pairs:
            exps = tuple(exps)
            if exps in acc:
                acc[exps] = acc[exps] + coeff
            else:
                acc[exps] = coeff
        return cls(acc, num_vars)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if self.num_vars != other.num_vars:
            raise ValueError("arity mismatch")
        acc = dict(self.terms)
        for exps, coeff in other.terms.items():
            if exps in acc:
                acc[exps] = acc[exps] + coeff
            else:
                acc[exps] = coeff
        return SparsePolynomial(acc, self.num_vars)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({e: -c for e, c in self.terms.items()}, self.num_vars)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if self.num_vars != other.num_vars:
            raise ValueError("arity mismatch")
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if key in acc:
                    acc[key] = acc[key] + prod
                else:
                    acc[key] = prod
        return SparsePolynomial(acc, self.num_vars)

    def scale(self, coeff) -> "SparsePolynomial":
        return SparsePolynomial({e: coeff * c for e, c in self.terms.items()}, self.num_vars)

    def eval(self, point: Sequence) -> object:
        if len(point) != self.num_vars:
            raise ValueError(f"point arity {len(point)} != {self.num_vars}")
        acc = None
        for exps, coeff in self.terms.items():
            val = coeff
            for x, e in zip(point, exps):
                if e:
                    val = val * x ** e
            acc = val if acc is None else acc + val
        if acc is None:
            # zero polynomial: produce the domain zero from the point
            return point[0] * 0
        return acc

    def partial(self, var_index: int) -> "SparsePolynomial":
        if not 0 <= var_index < self.num_vars:
            raise ValueError(f"variable index {var_index} out of range")
        acc = {}
        for exps, coeff in self.terms.items():
            e = exps[var_index]
            if e == 0:
                continue
            key = exps[:var_index] + (e - 1,) + exps[var_index + 1 :]
            acc[key] = coeff * e
        return SparsePolynomial(acc, self.num_vars)

    def __repr__(self) -> str:
        if self.is_zero:
            return "SparsePolynomial(0)"
        bits = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(f"z{i+1}^{e}" for i, e in enumerate(exps) if e)
            bits.append(f"{coeff!r}*{mono}" if mono else f"{coeff!r}")
        return "SparsePolynomial(" + " + ".join(bits) + ")"


def poly_eval(p: SparsePolynomial, point: Sequence) -> object:
    return p.eval(point)


def poly_partial(p: SparsePolynomial, var_index: int) -> SparsePolynomial:
    return p.partial(var_index)


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of P^n(F_q), normalized so the first nonzero coordinate is 1."""

    coords: Tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("all coordinates are zero")
        inv = lead.inverse()
        object.__setattr__(self, "coords", tuple(inv * c for c in coords))

    def __repr__(self) -> str:
        return "(" + ":".join(str(c.value) for c in self.coords) + ")"


def iter_projective_coords(q: int, dim: int) -> Iterator[Tuple[int, ...]]:
    """Normalized coordinate tuples of P^dim(F_q) as plain ints.

    Exactly (q^(dim+1) - 1)/(q - 1) tuples, one per equivalence class:
    leading zeros, then a 1, then a free tail.
    """
    for lead in range(dim + 1):
        head = (0,) * lead + (1,)
        for tail in itertools.product(range(q), repeat=dim - lead):
            yield head + tail


def projective_points(q: int, dim: int) -> Iterator[ProjectivePoint]:
    _require_prime(q)
    if dim < 1:
        raise ValueError("dim must be >= 1")
    for raw in iter_projective_coords(q, dim):
        yield ProjectivePoint(tuple(FieldElement(v, q) for v in raw))


def projective_count(q: int, dim: int) -> int:
    return (q ** (dim + 1) - 1) // (q - 1)


def rational_matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
