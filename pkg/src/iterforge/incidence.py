"""Formal reducibility of identities between same-order terms.

An identity t = u is formally reducible when both sides carry the same
lower-order subterm at the same variable span; one substitution step sees
this as a shared cherry position, and the root extensions add the two
cases "both right arguments are x" / "both left arguments are x".  The
incidence matrix records the relation for all ordered label pairs of one
order, diagonal included.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import OrderMismatch
from .tableaux import Universe, t_nk
from .terms import Term, catalan, cherries

MODE_A = "A"
MODE_AB = "AB"


def _check_mode(mode: str) -> str:
    if mode not in (MODE_A, MODE_AB):
        raise ValueError(f"mode must be {MODE_A!r} or {MODE_AB!r}, got {mode!r}")
    return mode


@dataclass(frozen=True)
class IncidenceMatrix:
    """Symmetric 0/1 matrix over labels 1..S_n, rows packed as bit masks."""

    order: int
    mode: str
    rows: tuple[int, ...]  # rows[i-1] bit (j-1) set iff delta(i, j) = 1

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i - 1] >> (j - 1)) & 1

    def row_sum(self, i: int) -> int:
        return self.rows[i - 1].bit_count()

    def total(self) -> int:
        """Ordered reducible pairs, diagonal included."""
        return sum(r.bit_count() for r in self.rows)

    def total_unordered(self) -> int:
        """Unordered off-diagonal reducible pairs."""
        return (self.total() - self.size) // 2


def delta_oracle(t: Term, u: Term, mode: str = MODE_A) -> int:
    """Structural reducibility test, independent of any tableau.

    Mode A: 1 iff the two terms share a cherry position.  Mode AB adds
    1 when both right arguments or both left arguments are the bare leaf.
    """
    _check_mode(mode)
    if t.order != u.order:
        raise OrderMismatch(f"orders differ: {t.order} vs {u.order}")
    if not cherries(t).isdisjoint(cherries(u)):
        return 1
    if mode == MODE_AB:
        if t.right.is_leaf and u.right.is_leaf:
            return 1
        if t.left.is_leaf and u.left.is_leaf:
            return 1
    return 0


def incidence_matrix(universe: Universe, n: int, mode: str = MODE_A) -> IncidenceMatrix:
    """Matrix of all S_n^2 identities, read off the tableau lines."""
    _check_mode(mode)
    size = len(universe.catalog(n))
    rows = [0] * (size + 1)
    lines = universe.tableau_a(n).rows
    if mode == MODE_AB:
        lines = lines + universe.tableau_b(n).rows
    for line in lines:
        mask = 0
        for label in line:
            mask |= 1 << (label - 1)
        for label in set(line):
            rows[label] |= mask
    return IncidenceMatrix(n, mode, tuple(rows[1:]))


def count_reducible(universe: Universe, n: int, mode: str = MODE_A) -> int:
    """I_n (mode A) or its A+B variant: ordered reducible pairs at order n."""
    return incidence_matrix(universe, n, mode).total()


def i_n_formula(n: int) -> int:
    """Closed form I_n = sum_k (-1)^(k-1) C(n-k+1, k) S_{n-k}^2."""
    if n < 1:
        raise ValueError("order must be >= 1")
    total = 0
    for k in range(1, n + 1):
        c = comb(n - k + 1, k)
        if c == 0:
            break
        total += (-1) ** (k - 1) * c * catalan(n - k) ** 2
    return total


def row_sum_value(n: int, k: int) -> int:
    """Row sum of the mode-A matrix for any label of multiplicity k:
    sum_v (-1)^(v-1) C(k, v) S_{n-v}."""
    if not 1 <= k <= (n + 1) // 2:
        raise ValueError(f"multiplicity {k} impossible at order {n}")
    return sum((-1) ** (v - 1) * comb(k, v) * catalan(n - v) for v in range(1, k + 1))


def t_nk_aplusb(n: int, k: int) -> int:
    """Multiplicity count in the combined A_n + B_n grid:
    T_{n,k} + 2 (T_{n-1,k-1} - T_{n-1,k})."""
    return t_nk(n, k) + 2 * (t_nk(n - 1, k - 1) - t_nk(n - 1, k))


def aplusb_histogram(universe: Universe, n: int) -> dict[int, int]:
    """Direct multiplicity histogram over the (n+2)-row combined grid."""
    counts = [0] * (len(universe.catalog(n)) + 1)
    for row in universe.grid_aplusb(n):
        for label in row:
            counts[label] += 1
    hist: dict[int, int] = {}
    for label in range(1, len(counts)):
        hist[counts[label]] = hist.get(counts[label], 0) + 1
    return hist


@dataclass(frozen=True)
class FrequencyRow:
    n: int
    s_n: int
    i_n_matrix: int | None
    i_n_formula: int
    ratio: Fraction          # I_n / S_n^2
    one_minus_ratio: Fraction
    exp_comparison: float    # e^(-n/16)


def frequency_report(n_max: int, universe: Universe | None = None) -> list[FrequencyRow]:
    """Exact reducible-identity frequencies for n = 3..n_max.

    Ratios are exact rationals; the matrix column is filled whenever a
    universe can supply the order, the exponential column is display-only.
    """
    if n_max < 3:
        raise ValueError("need n_max >= 3")
    out = []
    for n in range(3, n_max + 1):
        s = catalan(n)
        formula = i_n_formula(n)
        matrix = None
        if universe is not None and n <= universe.max_order:
            matrix = count_reducible(universe, n, MODE_A)
        ratio = Fraction(formula, s * s)
        out.append(
            FrequencyRow(n, s, matrix, formula, ratio, 1 - ratio, math.exp(-n / 16))
        )
    return out


# -- exports ---------------------------------------------------------------


def matrix_csv(matrix: IncidenceMatrix) -> str:
    """CSV rows of 0/1 entries plus an I_n footer line."""
    lines = []
    for i in range(1, matrix.size + 1):
        lines.append(",".join(str(matrix.entry(i, j)) for j in range(1, matrix.size + 1)))
    lines.append(f"I_{matrix.order},{matrix.total()}")
    return "\n".join(lines)


def matrix_rows_from_csv(text: str, order: int, mode: str = MODE_A) -> IncidenceMatrix:
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("I_"):
            continue
        bits = [int(v) for v in line.split(",")]
        mask = 0
        for j, bit in enumerate(bits):
            if bit:
                mask |= 1 << j
        rows.append(mask)
    return IncidenceMatrix(order, mode, tuple(rows))


def frequency_csv(rows: list[FrequencyRow]) -> str:
    lines = ["n,S_n,I_n_matrix,I_n_formula,ratio,one_minus_ratio,exp_minus_n_over_16"]
    for r in rows:
        matrix = "" if r.i_n_matrix is None else str(r.i_n_matrix)
        lines.append(
            f"{r.n},{r.s_n},{matrix},{r.i_n_formula},{float(r.ratio):.9f},"
            f"{float(r.one_minus_ratio):.9f},{r.exp_comparison:.9f}"
        )
    return "\n".join(lines)
