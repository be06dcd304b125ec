"""Truncated model of the completed ring of partial differential operators.

Operators are finite rational combinations of x1^i1 x2^i2 d1^k1 d2^k2 with
two explicit budgets: x_precision T (coefficients are only trusted below
total x-degree T) and d_bound (the maximal stored derivative degree).
Multiplication is the exact Leibniz product followed by a conservative
precision debit, so every emitted term is reliable.  On top of the ring
live four order functions, the symbol calculus, the growth condition
A1(m), quasi-ellipticity and normalization predicates, linear changes of
variables, and the residue-module action.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from random import Random
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .report import CheckEntry, check

Key = Tuple[int, int, int, int]

NEG_INF = float("-inf")


class PrecisionError(ArithmeticError):
    """The requested operation would exhaust the x-precision budget."""


class UndecidableOrderError(ArithmeticError):
    """Terms beyond the truncation frontier could change the answer."""


class TruncatedOperator:
    """Immutable operator with coefficient map, x-precision and d-bound."""

    __slots__ = ("coeffs", "x_precision", "d_bound")

    def __init__(
        self,
        coeffs: Mapping[Key, object],
        x_precision: int,
        d_bound: Optional[int] = None,
    ):
        if x_precision < 1:
            raise ValueError("x_precision must be at least 1")
        clean: Dict[Key, Fraction] = {}
        for key, val in coeffs.items():
            i1, i2, k1, k2 = key
            if min(i1, i2, k1, k2) < 0:
                raise ValueError(f"negative exponent in {key}")
            val = Fraction(val)
            if val == 0:
                continue
            if i1 + i2 >= x_precision:
                continue  # beyond the trusted x-degree window
            clean[(i1, i2, k1, k2)] = val
        max_d = max((k1 + k2 for (_, _, k1, k2) in clean), default=0)
        if d_bound is None:
            d_bound = max_d
        elif max_d > d_bound:
            raise ValueError(f"derivative degree {max_d} exceeds d_bound {d_bound}")
        self.coeffs = clean
        self.x_precision = x_precision
        self.d_bound = d_bound

    @classmethod
    def zero(cls, x_precision: int, d_bound: int = 0) -> "TruncatedOperator":
        return cls({}, x_precision, d_bound)

    @classmethod
    def one(cls, x_precision: int) -> "TruncatedOperator":
        return cls({(0, 0, 0, 0): Fraction(1)}, x_precision)

    @classmethod
    def monomial(
        cls, key: Key, x_precision: int, coeff=1, d_bound: Optional[int] = None
    ) -> "TruncatedOperator":
        return cls({key: Fraction(coeff)}, x_precision, d_bound)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, x_precision: int) -> "TruncatedOperator":
        """Forget everything at or above the given x-degree."""
        return TruncatedOperator(
            {k: v for k, v in self.coeffs.items() if k[0] + k[1] < x_precision},
            min(self.x_precision, x_precision),
            self.d_bound,
        )

    def scale(self, c) -> "TruncatedOperator":
        c = Fraction(c)
        return TruncatedOperator(
            {k: c * v for k, v in self.coeffs.items()}, self.x_precision, self.d_bound
        )

    def __add__(self, other: "TruncatedOperator") -> "TruncatedOperator":
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return TruncatedOperator(
            acc,
            min(self.x_precision, other.x_precision),
            max(self.d_bound, other.d_bound),
        )

    def __sub__(self, other: "TruncatedOperator") -> "TruncatedOperator":
        return self + other.scale(-1)

    def __mul__(self, other: "TruncatedOperator") -> "TruncatedOperator":
        return op_mul(self, other)

    def __eq__(self, other) -> bool:
        # budgets are bookkeeping, not values: equality compares terms only
        if not isinstance(other, TruncatedOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return (
            f"TruncatedOperator({to_string(self)!r}, "
            f"T={self.x_precision}, d_bound={self.d_bound})"
        )


def op_mul(P: TruncatedOperator, Q: TruncatedOperator) -> TruncatedOperator:
    """Leibniz product with a conservative precision debit.

    Each derivative of the left factor may consume one reliable x-degree of
    the right factor's coefficients, so the result is trusted only below
    min(T_P, T_Q) - d_P.  The declared derivative bound adds.
    """
    t_res = min(P.x_precision, Q.x_precision) - P.d_bound
    if t_res < 1:
        raise PrecisionError(
            f"budget exhausted: min precision {min(P.x_precision, Q.x_precision)} "
            f"minus left derivative bound {P.d_bound} leaves {t_res}"
        )
    acc: Dict[Key, Fraction] = {}
    for (i1, i2, k1, k2), a in P.coeffs.items():
        for (j1, j2, l1, l2), b in Q.coeffs.items():
            for m1 in range(min(k1, j1) + 1):
                c1 = math.comb(k1, m1) * math.perm(j1, m1)
                for m2 in range(min(k2, j2) + 1):
                    c = c1 * math.comb(k2, m2) * math.perm(j2, m2)
                    key = (
                        i1 + j1 - m1,
                        i2 + j2 - m2,
                        k1 - m1 + l1,
                        k2 - m2 + l2,
                    )
                    acc[key] = acc.get(key, Fraction(0)) + a * b * c
    return TruncatedOperator(acc, t_res, P.d_bound + Q.d_bound)


def ord_m(P: TruncatedOperator, d_part: Optional[Tuple[int, int]] = None):
    """Minimal total x-degree of a (coefficient of a) nonzero term.

    With d_part = (k1, k2), restricts to the coefficient of that derivative
    monomial.  Returns math.inf when nothing is stored (zero to precision).
    """
    degs = [
        i1 + i2
        for (i1, i2, k1, k2) in P.coeffs
        if d_part is None or (k1, k2) == d_part
    ]
    return min(degs) if degs else math.inf


def ord_m_profile(P: TruncatedOperator) -> Dict[Tuple[int, int], int]:
    out: Dict[Tuple[int, int], int] = {}
    for (i1, i2, k1, k2) in P.coeffs:
        key = (k1, k2)
        d = i1 + i2
        if key not in out or d < out[key]:
            out[key] = d
    return out


def bold_ord(P: TruncatedOperator):
    """sup over terms of (derivative degree - x-degree); -inf for zero.

    An unseen term hides at x-degree >= T with derivative degree <= d_bound,
    so it can contribute at most d_bound - T.  If every stored term sits
    strictly below that frontier the supremum is undecidable at this budget.
    """
    if not P.coeffs:
        return NEG_INF
    sup = max(k1 + k2 - i1 - i2 for (i1, i2, k1, k2) in P.coeffs)
    if sup < P.d_bound - P.x_precision:
        raise UndecidableOrderError(
            f"stored supremum {sup} is below the truncation frontier "
            f"{P.d_bound - P.x_precision}"
        )
    return sup


def homogeneous_component(P: TruncatedOperator, m: int) -> TruncatedOperator:
    """Terms with (x-degree) - (derivative degree) equal to m."""
    return TruncatedOperator(
        {
            k: v
            for k, v in P.coeffs.items()
            if (k[0] + k[1]) - (k[2] + k[3]) == m
        },
        P.x_precision,
        P.d_bound,
    )


def symbol(P: TruncatedOperator) -> TruncatedOperator:
    """The homogeneous component of P at grade -ord(P)."""
    d = bold_ord(P)
    if d == NEG_INF:
        return TruncatedOperator.zero(P.x_precision, P.d_bound)
    return homogeneous_component(P, -d)


def is_homogeneous(P: TruncatedOperator) -> bool:
    return symbol(P) == P


def ord_gamma(P: TruncatedOperator) -> Tuple[int, int]:
    """(k, l): l the top d2-degree, k the d1-order of its coefficient."""
    if P.is_zero:
        raise ValueError("zero operator has no graded order")
    l = max(k2 for (_, _, _, k2) in P.coeffs)
    k = max(k1 for (_, _, k1, k2) in P.coeffs if k2 == l)
    return (k, l)


def ord_2(P: TruncatedOperator) -> int:
    return ord_gamma(P)[1]


def ht_2(P: TruncatedOperator) -> TruncatedOperator:
    """The coefficient of the top d2-power, with that power stripped off."""
    _, l = ord_gamma(P)
    return TruncatedOperator(
        {
            (i1, i2, k1, 0): v
            for (i1, i2, k1, k2), v in P.coeffs.items()
            if k2 == l
        },
        P.x_precision,
        P.d_bound,
    )


def is_monic(P: TruncatedOperator) -> bool:
    """Top coefficient is exactly 1 (constant, no x-dependence)."""
    if P.is_zero:
        return False
    k, l = ord_gamma(P)
    top = {
        key: v for key, v in P.coeffs.items() if key[3] == l and key[2] == k
    }
    return top == {(0, 0, k, l): Fraction(1)}


def a1_check(P: TruncatedOperator, m: int) -> bool:
    """Growth condition: every stored term has x-degree >= d-degree - m."""
    return all(
        i1 + i2 >= k1 + k2 - m for (i1, i2, k1, k2) in P.coeffs
    )


def minimal_a1_level(P: TruncatedOperator) -> int:
    """Least m >= 0 with a1_check(P, m); 0 for the zero operator."""
    worst = max(
        (k1 + k2 - i1 - i2 for (i1, i2, k1, k2) in P.coeffs), default=0
    )
    return max(worst, 0)


def is_quasi_elliptic_pair(P: TruncatedOperator, Q: TruncatedOperator) -> bool:
    """Both monic, graded orders (0, k) with k >= 1 and (1, l)."""
    if P.is_zero or Q.is_zero:
        return False
    kp, lp = ord_gamma(P)
    kq, lq = ord_gamma(Q)
    return (
        kp == 0 and lp >= 1 and kq == 1 and is_monic(P) and is_monic(Q)
    )


def is_one_quasi_elliptic_pair(P: TruncatedOperator, Q: TruncatedOperator) -> bool:
    """Quasi-elliptic with matching plain orders and growth level k + l."""
    if not is_quasi_elliptic_pair(P, Q):
        return False
    k = ord_gamma(P)[1]
    l = ord_gamma(Q)[1]
    if not (a1_check(P, k + l) and a1_check(Q, k + l)):
        return False
    return bold_ord(P) == k and bold_ord(Q) == 1 + l


def is_normalized_pair(P: TruncatedOperator, Q: TruncatedOperator) -> bool:
    """P = d2^k + (terms of d2-degree <= k-2), Q = d1 d2^l + lower d2-terms."""
    if P.is_zero or Q.is_zero:
        return False
    k = max(k2 for (_, _, _, k2) in P.coeffs)
    if k < 1:
        return False
    p_top = {key: v for key, v in P.coeffs.items() if key[3] == k}
    if p_top != {(0, 0, 0, k): Fraction(1)}:
        return False
    if any(key[3] == k - 1 for key in P.coeffs):
        return False
    l = max(k2 for (_, _, _, k2) in Q.coeffs)
    q_top = {key: v for key, v in Q.coeffs.items() if key[3] == l}
    return q_top == {(0, 0, 1, l): Fraction(1)}


def _expand_linear_power(coeff_pairs, n: int) -> Dict[Tuple[int, ...], Fraction]:
    """n-th power of a commuting linear combination of basis symbols.

    coeff_pairs maps basis index -> Fraction; result maps exponent tuples
    (one slot per basis index) to coefficients, by repeated multiplication.
    """
    slots = len(coeff_pairs)
    acc: Dict[Tuple[int, ...], Fraction] = {(0,) * slots: Fraction(1)}
    for _ in range(n):
        nxt: Dict[Tuple[int, ...], Fraction] = {}
        for exps, v in acc.items():
            for idx, c in enumerate(coeff_pairs):
                if c == 0:
                    continue
                key = exps[:idx] + (exps[idx] + 1,) + exps[idx + 1 :]
                nxt[key] = nxt.get(key, Fraction(0)) + v * c
        acc = nxt
    return acc


def change_variables(
    P: TruncatedOperator, a, b, c, d, e
) -> TruncatedOperator:
    """Linear substitution d2 -> a d2 + c d1 + b, d1 -> e d1 + d.

    The x-generators follow the dual images x1 -> e^-1 x1 - c/(ae) x2,
    x2 -> a^-1 x2 so that all canonical commutators are preserved.  The
    substitution is exact: x-images are linear in x, derivative images are
    constant-coefficient, so no precision is spent.
    """
    a, b, c, d, e = (Fraction(v) for v in (a, b, c, d, e))
    if a == 0 or e == 0:
        raise ValueError("diagonal parameters a and e must be nonzero")
    x1_img = (1 / e, -c / (a * e))  # coefficients on (x1, x2)
    x2_img = (Fraction(0), 1 / a)
    d1_img = (e, Fraction(0), d)  # coefficients on (d1, d2, 1)
    d2_img = (c, a, b)
    acc: Dict[Key, Fraction] = {}
    for (i1, i2, k1, k2), coeff in P.coeffs.items():
        x_part = _expand_linear_power(x1_img, i1)
        x_part2 = _expand_linear_power(x2_img, i2)
        xs: Dict[Tuple[int, int], Fraction] = {}
        for (a1, a2), v1 in x_part.items():
            for (b1, b2), v2 in x_part2.items():
                key = (a1 + b1, a2 + b2)
                xs[key] = xs.get(key, Fraction(0)) + v1 * v2
        d_part = _expand_linear_power(d1_img, k1)
        d_part2 = _expand_linear_power(d2_img, k2)
        ds: Dict[Tuple[int, int], Fraction] = {}
        for (a1, a2, _), v1 in d_part.items():
            for (b1, b2, _), v2 in d_part2.items():
                key = (a1 + b1, a2 + b2)
                ds[key] = ds.get(key, Fraction(0)) + v1 * v2
        for (xi1, xi2), xv in xs.items():
            for (dk1, dk2), dv in ds.items():
                key = (xi1, xi2, dk1, dk2)
                acc[key] = acc.get(key, Fraction(0)) + coeff * xv * dv
    return TruncatedOperator(acc, P.x_precision, P.d_bound)


def special_change(P: TruncatedOperator, b, c, d) -> TruncatedOperator:
    """The unipotent case a = e = 1 of change_variables."""
    return change_variables(P, 1, b, c, d, 1)


def spectral_module_action(
    P: TruncatedOperator, monomial: Tuple[int, int]
) -> Dict[Tuple[int, int], Fraction]:
    """Right action of P on a residue class modulo x1 and x2.

    The class is the derivative monomial d1^p1 d2^p2; multiply on the right
    by P, then kill every term with positive x-degree.
    """
    p1, p2 = monomial
    if p1 < 0 or p2 < 0:
        raise ValueError("monomial exponents must be non-negative")
    cls = TruncatedOperator.monomial((0, 0, p1, p2), P.x_precision)
    prod = op_mul(cls, P)
    return {
        (k1, k2): v
        for (i1, i2, k1, k2), v in prod.coeffs.items()
        if i1 == 0 and i2 == 0
    }


def rank_gcd(orders: Iterable[int]) -> int:
    """GCD of a finite list of generator orders; 0 for an empty list."""
    return math.gcd(*list(orders))


_FACTOR_RE = re.compile(r"(x1|x2|d1|d2)(?:\^(\d+))?")
_COEF_RE = re.compile(r"^(\d+(?:/\d+)?)")
_SLOT = {"x1": 0, "x2": 1, "d1": 2, "d2": 3}


def to_string(P: TruncatedOperator) -> str:
    """Canonical text form: terms in lexicographic key order."""
    if P.is_zero:
        return "0"
    bits: List[str] = []
    for key, v in sorted(P.coeffs.items()):
        factors = []
        for name, slot in (("x1", 0), ("x2", 1), ("d1", 2), ("d2", 3)):
            e = key[slot]
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(v)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        term = " ".join(factors)
        if not bits:
            bits.append(term if v > 0 else f"-{term}")
        else:
            bits.append(("+ " if v > 0 else "- ") + term)
    return " ".join(bits)


def parse_operator(
    text: str, x_precision: int, d_bound: Optional[int] = None
) -> TruncatedOperator:
    """Parse the term grammar `coef x1^i1 x2^i2 d1^k1 d2^k2` joined by +/-."""
    compact = "".join(text.split())
    if compact in ("", "0"):
        return TruncatedOperator.zero(x_precision, d_bound or 0)
    acc: Dict[Key, Fraction] = {}
    for raw in compact.replace("-", "+-").split("+"):
        if not raw:
            continue
        sign = Fraction(1)
        if raw.startswith("-"):
            sign = Fraction(-1)
            raw = raw[1:]
        if not raw:
            raise ValueError(f"dangling sign in {text!r}")
        m = _COEF_RE.match(raw)
        coef = sign
        rest = raw
        if m:
            coef *= Fraction(m.group(1))
            rest = raw[m.end() :]
        exps = [0, 0, 0, 0]
        pos = 0
        while pos < len(rest):
            fm = _FACTOR_RE.match(rest, pos)
            if not fm:
                raise ValueError(f"cannot parse {rest[pos:]!r} in {text!r}")
            exps[_SLOT[fm.group(1)]] += int(fm.group(2) or 1)
            pos = fm.end()
        key = tuple(exps)
        acc[key] = acc.get(key, Fraction(0)) + coef
    return TruncatedOperator(acc, x_precision, d_bound)


def random_operator(
    rng: Random,
    x_precision: int,
    max_terms: int = 4,
    max_x: int = 2,
    max_d: int = 2,
) -> TruncatedOperator:
    """Random nonzero operator with small term-wise degree caps."""
    coeffs: Dict[Key, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        i1 = rng.randint(0, max_x)
        i2 = rng.randint(0, max_x - i1)
        k1 = rng.randint(0, max_d)
        k2 = rng.randint(0, max_d - k1)
        num = rng.choice([n for n in range(-3, 4) if n])
        coeffs[(i1, i2, k1, k2)] = Fraction(num, rng.randint(1, 3))
    op = TruncatedOperator(coeffs, x_precision, max_d)
    if op.is_zero:
        return TruncatedOperator.one(x_precision)
    return op


def _random_a1_operator(rng: Random, x_precision: int, m: int) -> TruncatedOperator:
    """Random operator satisfying the growth condition at level m."""
    coeffs: Dict[Key, Fraction] = {}
    for _ in range(rng.randint(1, 4)):
        k1 = rng.randint(0, 2)
        k2 = rng.randint(0, 2 - k1)
        lo = max(k1 + k2 - m, 0)
        i1 = rng.randint(lo, lo + 2)
        i2 = rng.randint(0, 2)
        num = rng.choice([n for n in range(-3, 4) if n])
        coeffs[(i1, i2, k1, k2)] = Fraction(num, rng.randint(1, 3))
    op = TruncatedOperator(coeffs, x_precision, 2)
    return op if not op.is_zero else TruncatedOperator.one(x_precision)


def _random_graded_monic(rng: Random, x_precision: int) -> TruncatedOperator:
    """Monic operator with a constant top d2-coefficient and random tail."""
    k = rng.randint(0, 2)
    l = rng.randint(1, 2)
    coeffs: Dict[Key, Fraction] = {(0, 0, k, l): Fraction(1)}
    for _ in range(rng.randint(0, 3)):
        k2 = rng.randint(0, l - 1)
        k1 = rng.randint(0, 2)
        i1 = rng.randint(0, 2)
        i2 = rng.randint(0, 2 - i1)
        num = rng.choice([n for n in range(-3, 4) if n])
        coeffs[(i1, i2, k1, k2)] = Fraction(num, rng.randint(1, 3))
    return TruncatedOperator(coeffs, x_precision, max(k + l, 4))


def _random_normalized_pair(rng: Random, x_precision: int):
    """Pair matching the normalized shape with random admissible tails."""
    k = rng.randint(2, 3)
    l = rng.randint(1, 2)
    p_coeffs: Dict[Key, Fraction] = {(0, 0, 0, k): Fraction(1)}
    for _ in range(rng.randint(0, 3)):
        s = rng.randint(0, k - 2)
        key = (rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 1), s)
        p_coeffs[key] = Fraction(rng.choice([n for n in range(-2, 3) if n]))
    q_coeffs: Dict[Key, Fraction] = {(0, 0, 1, l): Fraction(1)}
    for _ in range(rng.randint(0, 3)):
        s = rng.randint(0, l - 1)
        key = (rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 1), s)
        q_coeffs[key] = Fraction(rng.choice([n for n in range(-2, 3) if n]))
    P = TruncatedOperator(p_coeffs, x_precision, k + 2)
    Q = TruncatedOperator(q_coeffs, x_precision, l + 2)
    return P, Q


def normalized_shape_preserved_under_special_change(
    trials: int = 50, seed: int = 42, x_precision: int = 12
) -> bool:
    """Does a normalized pair stay normalized under every shear change?

    Checked by direct substitution on randomized normalized pairs with
    random nonzero shear parameters.  Returns True only if the shape
    survives in every trial.
    """
    rng = Random(seed)
    for _ in range(trials):
        P, Q = _random_normalized_pair(rng, x_precision)
        b = Fraction(rng.randint(-2, 2))
        c = Fraction(rng.choice([-2, -1, 1, 2]))
        d = Fraction(rng.randint(-2, 2))
        if not is_normalized_pair(special_change(P, b, c, d), special_change(Q, b, c, d)):
            return False
    return True


def run_property_suite(
    trials: int = 500, seed: int = 42, x_precision: int = 12, d_bound: int = 6
) -> List[CheckEntry]:
    """Randomized and constructed checks of the ring and order calculus."""
    rng = Random(seed)
    T = x_precision
    entries: List[CheckEntry] = []

    d1 = TruncatedOperator.monomial((0, 0, 1, 0), T)
    x1 = TruncatedOperator.monomial((1, 0, 0, 0), T)
    commutator = op_mul(d1, x1) - op_mul(x1, d1)
    entries.append(
        check(
            "pdo.defining_relation",
            "[d1, x1] = 1",
            TruncatedOperator.one(T - 1),
            commutator,
            "trivial",
        )
    )

    euler = parse_operator("x1 d1", T)
    entries.append(
        check(
            "pdo.euler_square",
            "(x1 d1)^2 = x1^2 d1^2 + x1 d1",
            parse_operator("x1^2 d1^2 + x1 d1", T - 1),
            op_mul(euler, euler),
            "derived",
        )
    )

    assoc_fail = 0
    for _ in range(trials):
        P = random_operator(rng, T)
        Q = random_operator(rng, T)
        R = random_operator(rng, T)
        left = op_mul(op_mul(P, Q), R)
        right = op_mul(P, op_mul(Q, R))
        t = min(left.x_precision, right.x_precision)
        if left.truncate(t) != right.truncate(t):
            assoc_fail += 1
    entries.append(
        check(
            "pdo.associativity",
            "(PQ)R = P(QR) at common precision",
            0,
            assoc_fail,
            "derived",
        )
    )

    sub_fail = eq_fail = sym_fail = eq_seen = 0
    for _ in range(trials):
        P = random_operator(rng, T)
        Q = random_operator(rng, T)
        prod = op_mul(P, Q)
        bo = bold_ord(prod)
        total = bold_ord(P) + bold_ord(Q)
        if bo > total:
            sub_fail += 1
        sp, sq = symbol(P), symbol(Q)
        ss = op_mul(sp, sq)
        if not ss.is_zero:
            eq_seen += 1
            if bo != total:
                eq_fail += 1
            t = min(prod.x_precision, ss.x_precision)
            if symbol(prod).truncate(t) != ss.truncate(t):
                sym_fail += 1
    entries.append(
        check(
            "pdo.order_subadditive",
            "ord(PQ) <= ord(P) + ord(Q)",
            0,
            sub_fail,
            "derived",
        )
    )
    entries.append(
        check(
            "pdo.order_additive_nonzero_symbols",
            f"equality branch hit {eq_seen} times",
            0,
            eq_fail,
            "derived",
        )
    )
    entries.append(
        check(
            "pdo.symbol_multiplicative",
            "sigma(PQ) = sigma(P) sigma(Q) when nonzero",
            0,
            sym_fail,
            "derived",
        )
    )

    # strict drop at the truncation frontier: both symbols are pure
    # x-monomials whose product falls outside every trusted window
    hp = TruncatedOperator.monomial((T - 1, 0, 0, 0), T)
    hq = TruncatedOperator.monomial((0, T - 1, 0, 0), T)
    strict = bold_ord(op_mul(hp, hq)) < bold_ord(hp) + bold_ord(hq)
    entries.append(
        check(
            "pdo.order_strict_drop",
            "constructed vanishing-symbol product drops strictly",
            True,
            strict,
            "derived",
        )
    )

    gamma_fail = ht_fail = 0
    for _ in range(trials):
        P = _random_graded_monic(rng, T)
        Q = _random_graded_monic(rng, T)
        prod = op_mul(P, Q)
        kp, lp = ord_gamma(P)
        kq, lq = ord_gamma(Q)
        if ord_gamma(prod) != (kp + kq, lp + lq):
            gamma_fail += 1
        ht = op_mul(ht_2(P), ht_2(Q))
        t = min(prod.x_precision, ht.x_precision)
        if ht_2(prod).truncate(t) != ht.truncate(t):
            ht_fail += 1
    entries.append(
        check(
            "pdo.gamma_order_additive",
            "graded order adds on monic-leading pairs",
            0,
            gamma_fail,
            "derived",
        )
    )
    entries.append(
        check(
            "pdo.highest_term_multiplicative",
            "top d2-coefficients multiply",
            0,
            ht_fail,
            "derived",
        )
    )

    a1_fail = 0
    for _ in range(trials):
        m1, m2 = rng.randint(0, 2), rng.randint(0, 2)
        P = _random_a1_operator(rng, T, m1)
        Q = _random_a1_operator(rng, T, m2)
        if not a1_check(op_mul(P, Q), m1 + m2):
            a1_fail += 1
    entries.append(
        check(
            "pdo.a1_closure",
            "growth levels add under multiplication",
            0,
            a1_fail,
            "derived",
        )
    )

    hom_fail = comm_fail = 0
    gens = [
        TruncatedOperator.monomial(key, T)
        for key in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    ]
    for _ in range(max(trials // 5, 20)):
        params = [
            Fraction(rng.choice([-2, -1, 1, 2])),
            Fraction(rng.randint(-2, 2)),
            Fraction(rng.randint(-2, 2)),
            Fraction(rng.randint(-2, 2)),
            Fraction(rng.choice([-2, -1, 1, 2])),
        ]
        P = random_operator(rng, T)
        Q = random_operator(rng, T)
        lhs = change_variables(op_mul(P, Q), *params)
        rhs = op_mul(change_variables(P, *params), change_variables(Q, *params))
        t = min(lhs.x_precision, rhs.x_precision)
        if lhs.truncate(t) != rhs.truncate(t):
            hom_fail += 1
        imgs = [change_variables(g, *params) for g in gens]
        for di in (2, 3):
            for xj in (0, 1):
                com = op_mul(imgs[di], imgs[xj]) - op_mul(imgs[xj], imgs[di])
                want = (
                    TruncatedOperator.one(com.x_precision)
                    if di - 2 == xj
                    else TruncatedOperator.zero(com.x_precision)
                )
                if com != want:
                    comm_fail += 1
    entries.append(
        check(
            "pdo.change_is_ring_map",
            "substitution commutes with multiplication",
            0,
            hom_fail,
            "derived",
        )
    )
    entries.append(
        check(
            "pdo.change_commutators",
            "canonical commutators preserved by substitution",
            0,
            comm_fail,
            "derived",
        )
    )

    qe_fail = 0
    for _ in range(max(trials // 5, 20)):
        P, Q = _random_normalized_pair(rng, T)
        b = Fraction(rng.randint(-2, 2))
        c = Fraction(rng.randint(-2, 2))
        d = Fraction(rng.randint(-2, 2))
        if not is_quasi_elliptic_pair(special_change(P, b, c, d), special_change(Q, b, c, d)):
            qe_fail += 1
    entries.append(
        check(
            "pdo.quasi_elliptic_preserved",
            "shear changes keep pairs quasi-elliptic",
            0,
            qe_fail,
            "derived",
        )
    )

    prec_fail = 0
    for _ in range(trials):
        P = random_operator(rng, T)
        Q = random_operator(rng, T)
        low = op_mul(P, Q)
        hi_p = TruncatedOperator(P.coeffs, T + 6, P.d_bound)
        hi_q = TruncatedOperator(Q.coeffs, T + 6, Q.d_bound)
        high = op_mul(hi_p, hi_q)
        if high.truncate(low.x_precision) != low:
            prec_fail += 1
    entries.append(
        check(
            "pdo.precision_soundness",
            "higher budgets refine, never contradict",
            0,
            prec_fail,
            "derived",
        )
    )

    reasm_fail = 0
    for _ in range(trials):
        P = random_operator(rng, T)
        grades = {(k[0] + k[1]) - (k[2] + k[3]) for k in P.coeffs}
        total = TruncatedOperator.zero(T)
        for m in grades:
            total = total + homogeneous_component(P, m)
        if total != P:
            reasm_fail += 1
    entries.append(
        check(
            "pdo.component_reassembly",
            "graded components sum back to the operator",
            0,
            reasm_fail,
            "derived",
        )
    )

    act = spectral_module_action(parse_operator("x1 d1", T), (1, 0))
    entries.append(
        check(
            "pdo.module_action_reduction",
            "class d1 acted by x1 d1 reduces to d1",
            {(1, 0): Fraction(1)},
            act,
            "derived",
        )
    )
    torsion_fail = 0
    for _ in range(trials):
        p1, p2 = rng.randint(0, 2), rng.randint(0, 2)
        k = rng.randint(1, 3)
        res = spectral_module_action(
            TruncatedOperator.monomial((0, 0, 0, k), T), (p1, p2)
        )
        if not any(res.values()):
            torsion_fail += 1
    entries.append(
        check(
            "pdo.module_torsion_free",
            "no nonzero class dies against a monic pure d2-power",
            0,
            torsion_fail,
            "derived",
        )
    )

    P0 = parse_operator("d2^2", T)
    Q0 = parse_operator("d1 d2", T)
    entries.append(
        check(
            "pdo.normalized_example",
            "pure pair (d2^2, d1 d2) is quasi-elliptic, 1-quasi-elliptic and normalized",
            (True, True, True),
            (
                is_quasi_elliptic_pair(P0, Q0),
                is_one_quasi_elliptic_pair(P0, Q0),
                is_normalized_pair(P0, Q0),
            ),
            "trivial",
        )
    )
    entries.append(
        check(
            "pdo.normalized_rejects_subtop",
            "a d2^(k-1) term breaks the normalized shape",
            False,
            is_normalized_pair(parse_operator("d2^2 + d2", T), parse_operator("d1 d2", T)),
            "trivial",
        )
    )
    return entries
