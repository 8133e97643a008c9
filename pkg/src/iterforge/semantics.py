"""Semantic-equality closures generated by defining identities.

A defining identity merges two labels at its order.  Upward, every pair
already merged at order m forces the column entries of the order-(m+1)
tableaux to merge (substituting the same cherry, or extending by the same
root, on both sides).  Downward, under the cancellation laws
V(a,x)=V(a,y) => x=y and V(x,a)=V(y,a) => x=y, a merged pair whose
decompositions agree on one flank forces the other flanks to merge.  The
closure saturates both directions to a global fixpoint and keeps a replayable
derivation log.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    CompositionNotWellDefined,
    InvalidSpec,
    OrderOverflow,
)
from .incidence import MODE_AB, delta_oracle
from .tableaux import Universe
from .terms import Term, ballot, catalan

MODE_A = "A"
MODE_B = "B"
DEFAULT_CLOSURE_ORDER = 7

FORMALLY_REDUCIBLE = "formally-reducible"
SEMANTICALLY_REDUCIBLE = "semantically-reducible"
ESSENTIAL_UP_TO = "essential-up-to"


@dataclass(frozen=True)
class IdentitySpec:
    """A set of defining label pairs at one order."""

    order: int
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, order: int, *pairs: tuple[int, int]) -> IdentitySpec:
        normalized = sorted({(min(i, j), max(i, j)) for i, j in pairs})
        return cls(order, tuple(normalized))


@dataclass(frozen=True)
class ClosureConfig:
    max_order: int = DEFAULT_CLOSURE_ORDER
    mode: str = MODE_AB  # "A" | "B" | "AB"
    unicity: bool = False


@dataclass(frozen=True)
class Merge:
    """One effective union in the derivation log.

    rule is one of "identity", "tableau-A", "tableau-B", "cancel-left",
    "cancel-right"; source names the pair (and tableau line) it came from.
    """

    order: int
    a: int
    b: int
    rule: str
    source: tuple | None


class DisjointSet:
    """Union-find over labels 1..n with path halving and union by size."""

    __slots__ = ("parent", "size", "count")

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(1, len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda members: members[0])

    def singleton_count(self) -> int:
        return sum(
            1
            for x in range(1, len(self.parent))
            if self.parent[x] == x and self.size[x] == 1
        )


class ClosureState:
    """Per-order partitions of labels plus the merge log that produced them."""

    def __init__(self, spec: IdentitySpec, config: ClosureConfig, sizes: list[int]):
        self.spec = spec
        self.config = config
        self.partitions = [DisjointSet(s) for s in sizes]
        self.log: list[Merge] = []

    def find(self, order: int, label: int) -> int:
        return self.partitions[order].find(label)

    def same_class(self, order: int, a: int, b: int) -> bool:
        return self.partitions[order].same(a, b)

    def classes(self, order: int) -> list[list[int]]:
        return self.partitions[order].classes()

    def class_members(self, order: int, label: int) -> list[int]:
        root = self.find(order, label)
        return [x for x in range(1, len(self.partitions[order].parent)) if self.find(order, x) == root]

    def classnumber(self, order: int) -> int:
        return self.partitions[order].count

    def singleton_count(self, order: int) -> int:
        return self.partitions[order].singleton_count()

    def _union(self, order: int, a: int, b: int, rule: str, source: tuple | None) -> bool:
        if self.partitions[order].union(a, b):
            self.log.append(Merge(order, a, b, rule, source))
            return True
        return False


def _validate(spec: IdentitySpec, config: ClosureConfig, universe: Universe) -> None:
    if config.mode not in (MODE_A, MODE_B, MODE_AB):
        raise InvalidSpec(f"unknown tableau mode {config.mode!r}")
    if spec.order < 1:
        raise InvalidSpec("identities start at order 1")
    if spec.order > config.max_order:
        raise InvalidSpec(
            f"identity order {spec.order} exceeds closure bound {config.max_order}"
        )
    size = len(universe.catalog(spec.order))
    for i, j in spec.pairs:
        if i == j:
            raise InvalidSpec(f"reflexive pair ({i}, {j})")
        if not (1 <= i <= size and 1 <= j <= size):
            raise InvalidSpec(f"pair ({i}, {j}) outside labels 1..{size}")


def close(spec: IdentitySpec, config: ClosureConfig, universe: Universe) -> ClosureState:
    """Saturate the closure of a defining identity under the configured rules."""
    _validate(spec, config, universe)
    sizes = [len(universe.catalog(m)) for m in range(config.max_order + 1)]
    state = ClosureState(spec, config, sizes)
    for i, j in spec.pairs:
        state._union(spec.order, i, j, "identity", None)
    _saturate(state, universe)
    return state


def _saturate(state: ClosureState, universe: Universe) -> None:
    config = state.config
    while True:
        changed = False
        for m in range(1, config.max_order + 1):
            for members in state.classes(m):
                if len(members) < 2:
                    continue
                if m < config.max_order:
                    changed |= _apply_tableaux(state, universe, m, members)
                if config.unicity:
                    changed |= _apply_cancellation(state, universe, m, members)
        if not changed:
            return


def _apply_tableaux(state: ClosureState, universe: Universe, m: int, members: list[int]) -> bool:
    """Merge the order-(m+1) column entries over a class of order-m labels."""
    mode = state.config.mode
    changed = False
    rows_a = universe.tableau_a(m + 1).rows if mode in (MODE_A, MODE_AB) else ()
    rows_b = universe.tableau_b(m + 1).rows if mode in (MODE_B, MODE_AB) else ()
    for x, y in zip(members, members[1:]):
        for line, row in enumerate(rows_a, start=1):
            changed |= state._union(m + 1, row[x - 1], row[y - 1], "tableau-A", (m, x, y, line))
        for line, row in enumerate(rows_b, start=1):
            changed |= state._union(m + 1, row[x - 1], row[y - 1], "tableau-B", (m, x, y, line))
    return changed


def _apply_cancellation(state: ClosureState, universe: Universe, m: int, members: list[int]) -> bool:
    """Within one class, cancel flanks that already compare equal.

    Members are grouped by (flank order, flank class); all members of a
    group must then agree on the other flank, which merges those labels
    one order down.  Formal equality of flanks is the special case of a
    discrete class.
    """
    decomp = universe.decompositions(m)
    by_left: dict[tuple[int, int], list[int]] = {}
    by_right: dict[tuple[int, int], list[int]] = {}
    for x in members:
        lo, la, ro, rb = decomp[x - 1]
        by_left.setdefault((lo, state.find(lo, la)), []).append(x)
        by_right.setdefault((ro, state.find(ro, rb)), []).append(x)
    changed = False
    for (_, _), xs in sorted(by_left.items()):
        if len(xs) < 2:
            continue
        for x, y in zip(xs, xs[1:]):
            ro = decomp[x - 1][2]
            changed |= state._union(
                ro, decomp[x - 1][3], decomp[y - 1][3], "cancel-left", (m, x, y)
            )
    for (_, _), xs in sorted(by_right.items()):
        if len(xs) < 2:
            continue
        for x, y in zip(xs, xs[1:]):
            lo = decomp[x - 1][0]
            changed |= state._union(
                lo, decomp[x - 1][1], decomp[y - 1][1], "cancel-right", (m, x, y)
            )
    return changed


def classnumbers(state: ClosureState) -> list[int]:
    """Class counts from the defining order up to the closure bound."""
    return [state.classnumber(m) for m in range(state.spec.order, state.config.max_order + 1)]


def singletons(state: ClosureState, order: int) -> int:
    return state.singleton_count(order)


def h_formula_a(n: int, k: int) -> int:
    """Predicted classnumber at order n+k under A-tableaux only:
    S_{n+k} - c_{n+k+1, n+1}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return catalan(n + k) - ballot(n + k + 1, n + 1)


def h_formula_b(n: int, k: int) -> int:
    """Predicted classnumber at order n+k under B-tableaux only: S_{n+k} - 2^k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return catalan(n + k) - 2**k


# -- cancellation cascades ---------------------------------------------------


def formal_cascade(universe: Universe, order: int, i: int, j: int) -> tuple[tuple[int, int, int], ...]:
    """Chain of label pairs peeled off (i, j) by cancelling identical flanks.

    Each step strips a flank the two terms share verbatim, descending to
    the pair of remaining flanks; the chain ends when no flank is shared.
    All visited pairs are distinct by construction.
    """
    cat = universe.catalog(order)
    t, u = cat.term(i), cat.term(j)
    chain = [(order, i, j)]
    while not t.is_leaf and not u.is_leaf:
        if t.left == u.left:
            t, u = t.right, u.right
        elif t.right == u.right:
            t, u = t.left, u.left
        else:
            break
        sub = universe.catalog(t.order)
        chain.append((t.order, sub.label_of(t), sub.label_of(u)))
    return tuple(chain)


def implication_pairs(universe: Universe, n: int, k: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Unordered order-n pairs whose cancellation cascade visits order k.

    Equality of such a pair forces, under cancellation alone, the equality
    of two distinct k-iterates.
    """
    if not 2 <= k <= n - 1:
        raise ValueError(f"need 2 <= k <= n-1, got k={k}, n={n}")
    size = len(universe.catalog(n))
    hits = []
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            chain = formal_cascade(universe, n, i, j)
            if any(order == k for order, _, _ in chain[1:]):
                hits.append((i, j))
    return len(hits), tuple(hits)


# -- classification ----------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    kind: str  # FORMALLY_REDUCIBLE | SEMANTICALLY_REDUCIBLE | ESSENTIAL_UP_TO
    bound: int
    witness: tuple[tuple[int, int, int], ...] | None = None

    def __str__(self) -> str:
        if self.kind == ESSENTIAL_UP_TO:
            return f"{self.kind} {self.bound}"
        return self.kind


def classify_identity(
    universe: Universe, n: int, pair: tuple[int, int], bound: int = DEFAULT_CLOSURE_ORDER
) -> Verdict:
    """Sort one order-n identity into formally reducible, semantically
    reducible (with a cancellation witness), or essential up to the bound."""
    i, j = min(pair), max(pair)
    cat = universe.catalog(n)
    if delta_oracle(cat.term(i), cat.term(j), MODE_AB):
        return Verdict(FORMALLY_REDUCIBLE, bound)
    spec = IdentitySpec.of(n, (i, j))
    state = close(spec, ClosureConfig(bound, MODE_AB, unicity=True), universe)
    collapsed = any(
        state.classnumber(m) < len(universe.catalog(m)) for m in range(1, n)
    )
    if not collapsed:
        return Verdict(ESSENTIAL_UP_TO, bound)
    witness = find_witness_chain(universe, spec, bound)
    return Verdict(SEMANTICALLY_REDUCIBLE, bound, witness)


def find_witness_chain(
    universe: Universe, spec: IdentitySpec, bound: int
) -> tuple[tuple[int, int, int], ...] | None:
    """Explicit chain certifying that an identity derives a lower-order one.

    Alternates pure tableau closure with verbatim-flank cancellations; at
    each stage, scan orders upward and same-class pairs in label order for
    a cascade that descends below the defining order, and return that
    chain truncated at its first sub-order entry.
    """
    n = spec.order
    state = close(spec, ClosureConfig(bound, MODE_AB, unicity=False), universe)
    for _ in range(bound + 1):
        hit = _scan_cascades(universe, state, n, bound)
        if hit is not None:
            return hit
        if not _formal_cancellation_round(universe, state):
            return None
        _saturate(state, universe)
    return None


def _scan_cascades(universe, state, n, bound):
    for m in range(n, bound + 1):
        for members in state.classes(m):
            if len(members) < 2:
                continue
            for x, y in combinations(members, 2):
                chain = formal_cascade(universe, m, x, y)
                for idx, (order, _, _) in enumerate(chain):
                    if order < n:
                        return chain[: idx + 1]
    return None


def _formal_cancellation_round(universe, state) -> bool:
    """Apply one round of cancellations on verbatim-equal flanks only."""
    changed = False
    for m in range(2, state.config.max_order + 1):
        decomp = universe.decompositions(m)
        for members in state.classes(m):
            if len(members) < 2:
                continue
            by_left: dict[tuple[int, int], list[int]] = {}
            by_right: dict[tuple[int, int], list[int]] = {}
            for x in members:
                lo, la, ro, rb = decomp[x - 1]
                by_left.setdefault((lo, la), []).append(x)
                by_right.setdefault((ro, rb), []).append(x)
            for (_, _), xs in sorted(by_left.items()):
                for x, y in zip(xs, xs[1:]):
                    ro = decomp[x - 1][2]
                    changed |= state._union(
                        ro, decomp[x - 1][3], decomp[y - 1][3], "cancel-left", (m, x, y)
                    )
            for (_, _), xs in sorted(by_right.items()):
                for x, y in zip(xs, xs[1:]):
                    lo = decomp[x - 1][0]
                    changed |= state._union(
                        lo, decomp[x - 1][1], decomp[y - 1][1], "cancel-right", (m, x, y)
                    )
    return changed


# -- the algebra of classes --------------------------------------------------


def class_handle(state: ClosureState, order: int, label: int) -> tuple[int, int]:
    """Canonical (order, least member) handle of the class containing label."""
    return order, min(state.class_members(order, label))


def compose_classes(
    universe: Universe,
    state: ClosureState,
    cls_p: tuple[int, int],
    cls_q: tuple[int, int],
    verify: bool = True,
) -> tuple[int, int]:
    """Class of V(a, b) for representatives a, b of the two argument classes.

    With verify=True every representative pair is exhausted and must land
    in one class, otherwise CompositionNotWellDefined is raised.
    """
    (p, rep_p), (q, rep_q) = cls_p, cls_q
    out_order = p + q + 1
    if out_order > state.config.max_order:
        raise OrderOverflow(
            f"composition order {out_order} exceeds closure bound {state.config.max_order}"
        )
    cat_p, cat_q, cat_out = universe.catalog(p), universe.catalog(q), universe.catalog(out_order)
    members_p = state.class_members(p, rep_p) if verify else [rep_p]
    members_q = state.class_members(q, rep_q) if verify else [rep_q]
    roots = set()
    for a in members_p:
        for b in members_q:
            label = cat_out.label_of(Term(cat_p.term(a), cat_q.term(b)))
            roots.add(state.find(out_order, label))
    if len(roots) != 1:
        raise CompositionNotWellDefined(
            f"classes ({p},{rep_p}) x ({q},{rep_q}) scatter over {len(roots)} classes"
        )
    return class_handle(state, out_order, next(iter(roots)))


def evaluate_shape(
    universe: Universe,
    state: ClosureState,
    shape: Term,
    args: list[tuple[int, int]],
) -> tuple[int, int]:
    """Evaluate a term shape over the class algebra, feeding the argument
    classes to the leaves left to right."""
    feed = iter(args)

    def walk(t: Term) -> tuple[int, int]:
        if t.is_leaf:
            return next(feed)
        return compose_classes(universe, state, walk(t.left), walk(t.right), verify=False)

    result = walk(shape)
    leftover = next(feed, None)
    if leftover is not None:
        raise ValueError("more argument classes than leaves")
    return result


# -- bounds and surveys ------------------------------------------------------


@dataclass(frozen=True)
class BoundsReport:
    order: int
    classnumber: int
    lower_bound: int  # S_{n-1}
    min_class_size: int
    ok: bool


def unicity_bounds_check(universe: Universe, state: ClosureState) -> BoundsReport:
    """At the defining order: classnumber >= S_{n-1} and some class has <= 3
    members.  Meaningful for closures consistent with the cancellation laws."""
    n = state.spec.order
    h = state.classnumber(n)
    min_size = min(len(c) for c in state.classes(n))
    lower = catalan(n - 1)
    return BoundsReport(n, h, lower, min_size, h >= lower and min_size <= 3)


@dataclass(frozen=True)
class ColumnSurvey:
    order: int
    bound: int
    column_pairs: tuple[tuple[int, int], ...]
    column_verdicts: tuple[Verdict, ...]
    other_pairs: tuple[tuple[int, int], ...] | None
    other_verdicts: tuple[Verdict, ...] | None

    @property
    def essential_columns(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            pair
            for pair, verdict in zip(self.column_pairs, self.column_verdicts)
            if verdict.kind == ESSENTIAL_UP_TO
        )

    @property
    def essential_others(self) -> tuple[tuple[int, int], ...]:
        if self.other_pairs is None:
            return ()
        return tuple(
            pair
            for pair, verdict in zip(self.other_pairs, self.other_verdicts)
            if verdict.kind == ESSENTIAL_UP_TO
        )


def column_pair_survey(
    universe: Universe,
    n: int,
    bound: int = DEFAULT_CLOSURE_ORDER,
    include_others: bool = True,
) -> ColumnSurvey:
    """Classify the column pairs V(J,x) = V(x,J) of the order-n root-extension
    tableau, and optionally every other formally irreducible order-n identity."""
    if n < 3:
        raise ValueError("survey starts at order 3")
    tb = universe.tableau_b(n)
    columns = tuple(
        (min(a, b), max(a, b)) for a, b in zip(tb.rows[0], tb.rows[1])
    )
    column_verdicts = tuple(classify_identity(universe, n, pair, bound) for pair in columns)
    other_pairs = other_verdicts = None
    if include_others:
        cat = universe.catalog(n)
        column_set = set(columns)
        others = []
        for i in range(1, len(cat) + 1):
            for j in range(i + 1, len(cat) + 1):
                if (i, j) in column_set:
                    continue
                if delta_oracle(cat.term(i), cat.term(j), MODE_AB) == 0:
                    others.append((i, j))
        other_pairs = tuple(others)
        other_verdicts = tuple(classify_identity(universe, n, pair, bound) for pair in other_pairs)
    return ColumnSurvey(n, bound, columns, column_verdicts, other_pairs, other_verdicts)


def order4_sample_formula(n: int) -> int:
    """Candidate classnumber for certain order-4 identities:
    S_n - 2 (4^(n-3) - 1)/3 + (n-2)(n-3)/2."""
    return catalan(n) - 2 * (4 ** (n - 3) - 1) // 3 + (n - 2) * (n - 3) // 2


@dataclass(frozen=True)
class FormulaSurvey:
    bound: int
    expected: tuple[int, ...]  # formula values for orders 3..bound
    sequences: dict[tuple[int, int], tuple[int, ...]]

    def matching_through(self, order: int) -> tuple[tuple[int, int], ...]:
        width = order - 2
        return tuple(
            pair
            for pair, seq in sorted(self.sequences.items())
            if seq[:width] == self.expected[:width]
        )

    @property
    def full_matches(self) -> tuple[tuple[int, int], ...]:
        return self.matching_through(self.bound)


def order4_formula_survey(universe: Universe, bound: int = DEFAULT_CLOSURE_ORDER) -> FormulaSurvey:
    """Classnumber sequences h_3..h_bound of all 91 order-4 identities under
    the combined-tableau closure, compared against the sample formula."""
    expected = tuple(order4_sample_formula(m) for m in range(3, bound + 1))
    sequences = {}
    size = len(universe.catalog(4))
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            spec = IdentitySpec.of(4, (i, j))
            state = close(spec, ClosureConfig(bound, MODE_AB, unicity=False), universe)
            sequences[(i, j)] = tuple(state.classnumber(m) for m in range(3, bound + 1))
    return FormulaSurvey(bound, expected, sequences)


# -- log replay and reports --------------------------------------------------


def replay(universe: Universe, state: ClosureState) -> bool:
    """Re-derive the final partitions from the log, validating every entry
    as a rule application that was enabled at its position."""
    sizes = [len(universe.catalog(m)) for m in range(state.config.max_order + 1)]
    fresh = ClosureState(state.spec, state.config, sizes)
    for merge in state.log:
        if not _merge_enabled(universe, fresh, state.spec, merge):
            return False
        if not fresh.partitions[merge.order].union(merge.a, merge.b):
            return False  # entry merged nothing: log unsound
    for m in range(state.config.max_order + 1):
        if fresh.classes(m) != state.classes(m):
            return False
    return True


def _merge_enabled(universe, fresh, spec, merge: Merge) -> bool:
    if merge.rule == "identity":
        pair = (min(merge.a, merge.b), max(merge.a, merge.b))
        return merge.order == spec.order and pair in spec.pairs
    if merge.rule in ("tableau-A", "tableau-B"):
        m, x, y, line = merge.source
        if merge.order != m + 1 or not fresh.same_class(m, x, y):
            return False
        tab = universe.tableau_a(m + 1) if merge.rule == "tableau-A" else universe.tableau_b(m + 1)
        row = tab.rows[line - 1]
        return row[x - 1] == merge.a and row[y - 1] == merge.b
    if merge.rule in ("cancel-left", "cancel-right"):
        m, x, y = merge.source
        if not fresh.same_class(m, x, y):
            return False
        lo_x, la_x, ro_x, rb_x = universe.decompositions(m)[x - 1]
        lo_y, la_y, ro_y, rb_y = universe.decompositions(m)[y - 1]
        if merge.rule == "cancel-left":
            return (
                lo_x == lo_y
                and fresh.same_class(lo_x, la_x, la_y)
                and merge.order == ro_x
                and (merge.a, merge.b) == (rb_x, rb_y)
            )
        return (
            ro_x == ro_y
            and fresh.same_class(ro_x, rb_x, rb_y)
            and merge.order == lo_x
            and (merge.a, merge.b) == (la_x, la_y)
        )
    return False


def closure_record(state: ClosureState) -> dict:
    """Machine-readable closure report."""
    per_order = {}
    for m in range(1, state.config.max_order + 1):
        per_order[str(m)] = {
            "h": state.classnumber(m),
            "classes": state.classes(m),
            "singletons": state.singleton_count(m),
        }
    return {
        "spec": {"order": state.spec.order, "pairs": [list(p) for p in state.spec.pairs]},
        "config": {
            "max_order": state.config.max_order,
            "mode": state.config.mode,
            "unicity": state.config.unicity,
        },
        "per_order": per_order,
        "derivations": [
            {
                "order": merge.order,
                "merged": [merge.a, merge.b],
                "rule": merge.rule,
                "source": list(merge.source) if merge.source is not None else None,
            }
            for merge in state.log
        ],
    }


def closure_text(state: ClosureState) -> str:
    """Eyeball report: one line per order with its classes."""
    lines = [
        f"identity order {state.spec.order}, pairs "
        + " ".join(f"({i},{j})" for i, j in state.spec.pairs)
        + f", mode {state.config.mode}, unicity {'on' if state.config.unicity else 'off'}"
    ]
    for m in range(state.spec.order, state.config.max_order + 1):
        classes = " ".join("{" + " ".join(str(x) for x in c) + "}" for c in state.classes(m))
        lines.append(f"order {m}: h={state.classnumber(m)} singletons={state.singleton_count(m)} {classes}")
    return "\n".join(lines)
