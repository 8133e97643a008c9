"""Skein polynomials of terms, their collision statistics, and exact
generating-series arithmetic for the Catalan generalizations.

The skein polynomial tracks, per variable, how often it sits in first
or second argument position along its path to the root: the variable
contributes the monomial a^s b^t.  Building V(J, J') multiplies J's
polynomial by a and J''s by b and adds, starting from 1 at the leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import BadArity, IllFoundedRecursion, NonIntegralTerm
from .tableaux import Universe
from .terms import Term, ballot_row, catalan


class SkeinPoly:
    """Sparse two-variable integer polynomial keyed by exponent pair (s, t)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> tuple[tuple[int, int, int], ...]:
        """Canonical hashable form, exponents descending."""
        return tuple((s, t, c) for (s, t), c in sorted(self.coeffs.items(), reverse=True))

    def __add__(self, other: SkeinPoly) -> SkeinPoly:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SkeinPoly(out)

    def __sub__(self, other: SkeinPoly) -> SkeinPoly:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return SkeinPoly(out)

    def shift(self, ds: int, dt: int) -> SkeinPoly:
        """Multiply by a^ds b^dt."""
        return SkeinPoly({(s + ds, t + dt): c for (s, t), c in self.coeffs.items()})

    def times_a(self) -> SkeinPoly:
        return self.shift(1, 0)

    def times_b(self) -> SkeinPoly:
        return self.shift(0, 1)

    def evaluate(self, a, b):
        return sum(c * a**s * b**t for (s, t), c in self.coeffs.items())

    def substitute_b_complement(self) -> tuple[int, ...]:
        """Coefficients in a of the polynomial after setting b := 1 - a."""
        degree = max((s + t for s, t in self.coeffs), default=0)
        out = [0] * (degree + 1)
        for (s, t), c in self.coeffs.items():
            # c * a^s * (1-a)^t
            for i in range(t + 1):
                out[s + i] += c * comb(t, i) * (-1) ** i
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (s, t), c in sorted(self.coeffs.items(), reverse=True):
            factors = []
            if abs(c) != 1 or (s == 0 and t == 0):
                factors.append(str(abs(c)))
            if s:
                factors.append("a" if s == 1 else f"a^{s}")
            if t:
                factors.append("b" if t == 1 else f"b^{t}")
            text = "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + text if parts else ("-" if c < 0 else "") + text)
        return " ".join(parts)

    __repr__ = __str__


_ONE = SkeinPoly({(0, 0): 1})
_ZERO = SkeinPoly()


@lru_cache(maxsize=None)
def skein(t: Term) -> SkeinPoly:
    """P(t): 1 at the leaf, a*P(left) + b*P(right) at a node."""
    if t.is_leaf:
        return _ONE
    return skein(t.left).times_a() + skein(t.right).times_b()


@lru_cache(maxsize=None)
def skein_q(t: Term) -> SkeinPoly:
    """Q(t): 0 at the leaf, a*Q(left) + b*Q(right) + 1 at a node.

    Satisfies (a + b - 1) Q + 1 = P identically.
    """
    if t.is_leaf:
        return _ZERO
    return skein_q(t.left).times_a() + skein_q(t.right).times_b() + _ONE


def collision_groups(universe: Universe, n: int) -> dict[SkeinPoly, tuple[int, ...]]:
    """Partition the order-n labels by skein polynomial.

    The group size of P is the collision count N_P; most groups are
    singletons, the first collision appearing at order 4.
    """
    groups: dict[SkeinPoly, list[int]] = {}
    cat = universe.catalog(n)
    for label in range(1, len(cat) + 1):
        groups.setdefault(skein(cat.term(label)), []).append(label)
    return {p: tuple(labels) for p, labels in groups.items()}


def np_recursion_check(universe: Universe, n: int) -> bool:
    """Verify N_P = sum over splits a*P_kappa + b*P_lambda = P of
    N_kappa * N_lambda, convolving the groups of all lower orders."""
    if n < 1:
        raise ValueError("order must be >= 1")
    actual = {p: len(labels) for p, labels in collision_groups(universe, n).items()}
    predicted: dict[SkeinPoly, int] = {}
    for p in range(n):
        q = n - 1 - p
        left_groups = collision_groups(universe, p)
        right_groups = collision_groups(universe, q)
        for lp, llabels in left_groups.items():
            shifted = lp.times_a()
            for rp, rlabels in right_groups.items():
                combined = shifted + rp.times_b()
                predicted[combined] = predicted.get(combined, 0) + len(llabels) * len(rlabels)
    return predicted == actual


# -- truncated power series -------------------------------------------------


@dataclass(frozen=True)
class PowerSeries:
    """Integer power series truncated at a fixed degree; arithmetic exact."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def constant(value: int, degree: int) -> PowerSeries:
        return PowerSeries((value,) + (0,) * degree)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        d = self.degree
        out = [0] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(d + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(tuple(out))

    def shift(self, k: int = 1) -> PowerSeries:
        """Multiply by t^k."""
        d = self.degree
        return PowerSeries((0,) * k + self.coeffs[: d + 1 - k])

    def power(self, e: int) -> PowerSeries:
        result = PowerSeries.constant(1, self.degree)
        for _ in range(e):
            result = result * self
        return result

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


def series_mixed(arities, degree: int) -> PowerSeries:
    """Counting series for trees whose nodes draw arities from a multiset.

    Solves phi = 1 + t * sum(phi^a for a in arities) by fixpoint
    iteration, which settles one further coefficient per round.
    """
    arity_list = sorted(arities)
    if not arity_list:
        raise BadArity("need at least one arity")
    for a in arity_list:
        if not isinstance(a, int) or a < 2:
            raise BadArity(f"arity {a!r} is not an integer >= 2")
    phi = PowerSeries.constant(1, degree)
    for _ in range(degree + 1):
        total = PowerSeries.constant(0, degree)
        for a in arity_list:
            total = total + phi.power(a)
        phi = PowerSeries.constant(1, degree) + total.shift(1)
    return phi


def catalan_general(a: int, n: int) -> int:
    """Closed-form tree count for a single arity a:
    comb(a*n, n) / ((a-1)*n + 1)."""
    if not isinstance(a, int) or a < 2:
        raise BadArity(f"arity {a!r} is not an integer >= 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(a * n, n) // ((a - 1) * n + 1)


@lru_cache(maxsize=None)
def count_trees_mixed(arities: tuple[int, ...], n: int) -> int:
    """Brute-force count of arity-multiset trees with n internal nodes."""
    if n == 0:
        return 1
    total = 0
    for a in arities:
        total += _count_forests(arities, a, n - 1)
    return total


@lru_cache(maxsize=None)
def _count_forests(arities: tuple[int, ...], slots: int, budget: int) -> int:
    if slots == 0:
        return 1 if budget == 0 else 0
    total = 0
    for first in range(budget + 1):
        total += count_trees_mixed(arities, first) * _count_forests(arities, slots - 1, budget - first)
    return total


def enumerate_trees_mixed(arities: tuple[int, ...], n: int) -> list:
    """Explicitly build every arity-multiset tree with n internal nodes.

    Trees are nested tuples (op_index, children...); leaves are "x".
    Independent of the series computation, usable as a counting oracle.
    """
    if n == 0:
        return ["x"]
    out = []
    for op_index, a in enumerate(arities):
        for forest in _enumerate_forests(arities, a, n - 1):
            out.append((op_index, *forest))
    return out


def _enumerate_forests(arities: tuple[int, ...], slots: int, budget: int) -> list:
    if slots == 0:
        return [()] if budget == 0 else []
    out = []
    for first in range(budget + 1):
        heads = enumerate_trees_mixed(arities, first)
        for tail in _enumerate_forests(arities, slots - 1, budget - first):
            for head in heads:
                out.append((head, *tail))
    return out


# -- counting sequences relative to a homomorphism law -----------------------


def catalan_relative(law, base: dict[int, int], degree: int) -> list[int]:
    """Sequence from the recursion S_n = sum over law(s, t) = n of S_s * S_t.

    `law` is an integer-valued function of two nonnegative integers; `base`
    pins the seeded values.  Lattice solutions are scanned out to twice the
    requested degree so that a contributing point with s >= n or t >= n is
    caught and rejected as ill-founded instead of silently dropped.
    """
    scan = 2 * degree + 2
    values: list[int] = []
    for n in range(degree + 1):
        if n in base:
            values.append(base[n])
            continue
        total = 0
        for s in range(scan + 1):
            for t in range(scan + 1):
                if law(s, t) != n:
                    continue
                if s >= n or t >= n:
                    raise IllFoundedRecursion(
                        f"law({s}, {t}) = {n} depends on order {max(s, t)} >= {n}"
                    )
                total += values[s] * values[t]
        values.append(total)
    return values


@dataclass(frozen=True)
class RecurrenceTerm:
    n: int
    value: Fraction
    integral: bool


def weighted_recurrence(
    k: int, l: int, initial, degree: int, strict: bool = True
) -> list[RecurrenceTerm]:
    """Sequence with (n + l) S_n = sum_{s+t=n-k} S_s S_t for n >= k.

    With strict=True a non-integer term raises NonIntegralTerm; otherwise
    the sequence continues with exact fractions and flags each term.
    """
    if k < 1 or l < 1:
        raise ValueError("need k >= 1 and l >= 1")
    if len(initial) != k:
        raise ValueError(f"need exactly {k} initial values")
    if degree < k:
        raise ValueError("degree must be >= k")
    values: list[Fraction] = [Fraction(v) for v in initial]
    terms = [RecurrenceTerm(n, values[n], True) for n in range(k)]
    for n in range(k, degree + 1):
        conv = sum((values[s] * values[n - k - s] for s in range(n - k + 1)), Fraction(0))
        value = conv / (n + l)
        integral = value.denominator == 1
        if strict and not integral:
            raise NonIntegralTerm(n, conv, n + l)
        values.append(value)
        terms.append(RecurrenceTerm(n, value, integral))
    return terms


# -- convolution relations ---------------------------------------------------


def catalan_convolution(lam: int, n: int) -> int:
    """C(lam, n) = sum over i_1+...+i_{lam+1} = n-lam of S_{i_1}...S_{i_{lam+1}},
    computed as a coefficient of the (lam+1)-th power of the Catalan series."""
    if lam < 1:
        raise ValueError("lam must be >= 1")
    if n < lam:
        return 0
    degree = n - lam
    phi = PowerSeries(tuple(catalan(i) for i in range(degree + 1)))
    return phi.power(lam + 1)[degree]


def _solve_integer_system(rows: list[list[int]], rhs: list[int]) -> list[Fraction] | None:
    """Solve a small square linear system exactly; None if singular."""
    size = len(rhs)
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        m[col] = [v / inv for v in m[col]]
        for r in range(size):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [v - factor * w for v, w in zip(m[r], m[col])]
    return [m[r][size] for r in range(size)]


@dataclass(frozen=True)
class Relation1Fit:
    lam: int
    coefficients: tuple[int, ...]  # d_j with C(lam, n) = sum_j (-1)^j d_j S_{n-j}
    verified_to: int
    matches_binomial_pattern: bool  # d_j == comb(lam - j, j)


def relation1_fit(lam: int, n_max: int) -> Relation1Fit:
    """Fit C(lam, n) = sum_{j=0..[lam/2]} (-1)^j d_j S_{n-j} empirically.

    The solved coefficients are reported rather than asserted from any
    printed pattern; the fit is then checked on every n up to n_max.
    """
    width = lam // 2 + 1
    rows = []
    rhs = []
    for n in range(lam, lam + width):
        rows.append([(-1) ** j * catalan(n - j) for j in range(width)])
        rhs.append(catalan_convolution(lam, n))
    solution = _solve_integer_system(rows, rhs)
    if solution is None or any(v.denominator != 1 for v in solution):
        raise ValueError(f"no integer alternating fit of width {width} for lam={lam}")
    coeffs = tuple(int(v) for v in solution)
    for n in range(lam, n_max + 1):
        value = sum((-1) ** j * coeffs[j] * catalan(n - j) for j in range(width))
        if value != catalan_convolution(lam, n):
            raise ValueError(f"fitted coefficients fail at n={n}")
    matches = all(coeffs[j] == comb(lam - j, j) for j in range(width))
    return Relation1Fit(lam, coeffs, n_max, matches)


def relation2_check(lam: int, n_max: int) -> bool:
    """S_n = sum_{j=1..lam} c_{lam,j} * [t^(n-lam)] phi^(j+1) for lam <= n <= n_max."""
    row = ballot_row(lam)
    degree = n_max - lam
    phi = PowerSeries(tuple(catalan(i) for i in range(degree + 1)))
    powers = [phi.power(j + 1) for j in range(1, lam + 1)]
    for n in range(lam, n_max + 1):
        total = sum(row[j - 1] * powers[j - 1][n - lam] for j in range(1, lam + 1))
        if total != catalan(n):
            return False
    return True


def relation3_estimate(lam: int, n: int) -> tuple[Fraction, Fraction]:
    """(C(lam, n)/S_n, (lam+1)/2^lam): the convolution ratio and its limit."""
    ratio = Fraction(catalan_convolution(lam, n), catalan(n))
    return ratio, Fraction(lam + 1, 2**lam)


@dataclass(frozen=True)
class ConvolutionReport:
    lam: int
    n: int
    convolution: int
    relation1: Relation1Fit
    relation2_ok: bool
    relation3_ratio: Fraction
    relation3_limit: Fraction

    @property
    def relation3_relative_error(self) -> float:
        return abs(float(self.relation3_ratio / self.relation3_limit) - 1.0)


def convolution_relation_check(lam: int, n: int) -> ConvolutionReport:
    """Bundle the three convolution relations at (lam, n)."""
    if not 1 <= lam <= n:
        raise ValueError("need 1 <= lam <= n")
    fit = relation1_fit(lam, max(n, lam + lam // 2 + 2))
    ratio, limit = relation3_estimate(lam, n)
    return ConvolutionReport(
        lam, n, catalan_convolution(lam, n), fit, relation2_check(lam, n), ratio, limit
    )
