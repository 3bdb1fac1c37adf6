"""Reed-Solomon codes over arbitrary evaluation sets, exact error distance
at desk scale, and the degree-(k+1) deep-hole test via subset sums.

A word u with interpolant of degree exactly k+1 sits at distance
<= |D|-k-1 from the code precisely when u's monic interpolant splits as
prod (x - x_i) over k+1 distinct x_i in D after subtracting a codeword,
and matching the x^k coefficient shows this happens exactly when

    x_1 + ... + x_{k+1} = b1

has a solution in distinct elements of D, where u_monic = x^(k+1)
- b1*x^k + ...  Lower-order coefficients are absorbed into the codeword,
so the whole test rides on b1 alone.

The brute-force distance oracle maximises agreement over k-subsets of
positions: the covering radius bound d(u, C) <= |D|-k means the nearest
codeword agrees with u on at least k positions, so interpolating u on
those positions rediscovers it.  Subset-sum counting is an exact dynamic
program over (elements scanned, chosen count, running sum), with big-int
counts; ordered solution counts multiply by (k+1)!.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from .dickson import EvaluationSet
from .gf import FiniteField
from .polyring import Polynomial, lagrange_interpolate

__all__ = [
    "DeepHoleResult",
    "DistanceReport",
    "RSCodeSpec",
    "ReceivedWord",
    "count_Nu",
    "deg_k1_deep_hole_test",
    "deg_k1_reduction",
    "encode",
    "error_distance_bf",
    "subset_sum_count",
    "subset_sum_find",
]

DEFAULT_SUBSET_BUDGET = 10**7
DEFAULT_DP_BUDGET = 10**7


@dataclass(frozen=True)
class RSCodeSpec:
    """Code determined by (field, evaluation points, message length k)."""

    field: FiniteField
    points: tuple[int, ...]
    k: int

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("evaluation points must be distinct")
        for x in self.points:
            self.field._check(x)
        if not 1 <= self.k < len(self.points):
            raise ValueError(f"need 1 <= k < |D|, got k={self.k}, |D|={len(self.points)}")

    @classmethod
    def from_evaluation_set(cls, evalset: EvaluationSet, k: int) -> "RSCodeSpec":
        return cls(evalset.field, evalset.elems, k)

    @property
    def length(self) -> int:
        return len(self.points)


class ReceivedWord:
    """A length-|D| word aligned with the code's point order."""

    def __init__(self, code: RSCodeSpec, values):
        values = tuple(values)
        if len(values) != code.length:
            raise ValueError(f"word length {len(values)} != |D| = {code.length}")
        for v in values:
            code.field._check(v)
        self.code = code
        self.values = values
        self._interp = None

    @property
    def interp(self) -> Polynomial:
        """Lagrange interpolant through (points[i], values[i]); cached."""
        if self._interp is None:
            self._interp = lagrange_interpolate(
                self.code.field, list(zip(self.code.points, self.values))
            )
        return self._interp

    @property
    def b1(self) -> int:
        return deg_k1_reduction(self)

    def __repr__(self):
        return f"ReceivedWord(k={self.code.k}, values={list(self.values)})"


@dataclass(frozen=True)
class DistanceReport:
    distance: int
    witness: Polynomial  # codeword polynomial achieving the distance
    is_deep_hole: bool


@dataclass(frozen=True)
class DeepHoleResult:
    is_deep_hole: bool
    subset: tuple[int, ...] | None = None  # the k+1 roots, when not a deep hole
    codeword: Polynomial | None = None  # v with u_monic - v = prod(x - x_i)


def encode(code: RSCodeSpec, msg: Polynomial) -> ReceivedWord:
    """Evaluate a message polynomial (degree <= k-1) over the points."""
    if msg.field != code.field:
        raise ValueError("message polynomial from a different field")
    if msg.degree > code.k - 1:
        raise ValueError(f"message degree {msg.degree} exceeds k-1 = {code.k - 1}")
    return ReceivedWord(code, (msg.evaluate(x) for x in code.points))


def error_distance_bf(word: ReceivedWord, budget: int = DEFAULT_SUBSET_BUDGET) -> DistanceReport:
    """Exact d(u, C) by maximum agreement over k-subsets of positions.

    Valid because some nearest codeword agrees with u on >= k positions
    (covering radius <= |D| - k), so it is the interpolant of u restricted
    to one of the scanned subsets.
    """
    code = word.code
    n, k = code.length, code.k
    if comb(n, k) > budget:
        raise ValueError(f"C({n},{k}) = {comb(n, k)} exceeds the subset budget {budget}")
    best_agree = -1
    best_poly = None
    for subset in combinations(range(n), k):
        cand = lagrange_interpolate(
            code.field, [(code.points[i], word.values[i]) for i in subset]
        )
        agree = sum(
            1 for i in range(n) if cand.evaluate(code.points[i]) == word.values[i]
        )
        if agree > best_agree:
            best_agree, best_poly = agree, cand
    dist = n - best_agree
    return DistanceReport(distance=dist, witness=best_poly, is_deep_hole=dist == n - k)


def deg_k1_reduction(word: ReceivedWord) -> int:
    """b1 for a word whose interpolant has degree exactly k+1.

    The interpolant is made monic first (unit scaling preserves distance
    classes); b1 is the negated x^k coefficient of the result.
    """
    code = word.code
    f = word.interp
    if f.degree != code.k + 1:
        raise ValueError(f"interpolant degree {f.degree} != k+1 = {code.k + 1}")
    monic, _ = f.monic()
    return code.field.neg(monic.coeff(code.k))


def _dp_guard(n_elems: int, r: int, q: int, budget: int):
    if r > n_elems:
        raise ValueError(f"r = {r} exceeds |D| = {n_elems}")
    if n_elems * max(r, 1) * q > budget:
        raise ValueError(
            f"DP size |D|*r*q = {n_elems * r * q} exceeds the budget {budget}"
        )


def subset_sum_count(
    field: FiniteField, elems, r: int, target: int, budget: int = DEFAULT_DP_BUDGET
) -> int:
    """Exact number of r-element subsets of elems summing to target."""
    elems = sorted(elems)
    field._check(target)
    _dp_guard(len(elems), r, field.q, budget)
    # dp[j][s] = #(j-subsets of the scanned prefix with sum s), exact ints;
    # j runs downward so each element is used at most once
    dp = [[0] * field.q for _ in range(r + 1)]
    dp[0][0] = 1
    for idx, e in enumerate(elems):
        for j in range(min(r - 1, idx), -1, -1):
            row, nxt = dp[j], dp[j + 1]
            for s in range(field.q):
                c = row[s]
                if c:
                    nxt[field.add(s, e)] += c
    return dp[r][target]


def subset_sum_find(
    field: FiniteField, elems, r: int, target: int, budget: int = DEFAULT_DP_BUDGET
) -> tuple[int, ...] | None:
    """One r-subset summing to target, or None.

    Scans elements in encoding order preferring inclusion, so the witness
    is the lexicographically smallest solution; it is re-summed before
    being returned.
    """
    elems = sorted(elems)
    field._check(target)
    n = len(elems)
    _dp_guard(n, r, field.q, budget)
    # suffix[i][j][s] = can j elements of elems[i:] sum to s
    suffix = [[[False] * field.q for _ in range(r + 1)] for _ in range(n + 1)]
    suffix[n][0][0] = True
    for i in range(n - 1, -1, -1):
        e = elems[i]
        for j in range(r + 1):
            row = suffix[i + 1][j]
            out = suffix[i][j]
            for s in range(field.q):
                if row[s]:
                    out[s] = True
            if j < r:
                row_take = suffix[i + 1][j]
                out_take = suffix[i][j + 1]
                for s in range(field.q):
                    if row_take[s]:
                        out_take[field.add(s, e)] = True
    if not suffix[0][r][target]:
        return None
    picked = []
    s, j = target, r
    for i in range(n):
        if j == 0:
            break
        e = elems[i]
        rest = field.sub(s, e)
        if suffix[i + 1][j - 1][rest]:
            picked.append(e)
            s, j = rest, j - 1
    acc = 0
    for e in picked:
        acc = field.add(acc, e)
    assert len(picked) == r and acc == target
    return tuple(picked)


def deg_k1_deep_hole_test(
    word: ReceivedWord, budget: int = DEFAULT_DP_BUDGET
) -> DeepHoleResult:
    """Deep-hole decision for a word of interpolant degree exactly k+1.

    Not a deep hole iff some (k+1)-subset of D sums to b1; the witness
    codeword v = u_monic - prod(x - x_i) is constructed and its degree
    bound deg v <= k-1 asserted before returning.
    """
    code = word.code
    F = code.field
    b1 = deg_k1_reduction(word)
    subset = subset_sum_find(F, code.points, code.k + 1, b1, budget)
    if subset is None:
        return DeepHoleResult(is_deep_hole=True)
    monic, _ = word.interp.monic()
    prod = Polynomial(F, (1,))
    for x in subset:
        prod = prod * Polynomial(F, (F.neg(x), 1))
    v = monic - prod
    assert v.degree <= code.k - 1
    return DeepHoleResult(is_deep_hole=False, subset=subset, codeword=v)


def count_Nu(
    code: RSCodeSpec, b1: int, budget: int = DEFAULT_DP_BUDGET
) -> int:
    """Ordered distinct-coordinate solutions of x_1+...+x_{k+1} = b1 in D:
    unordered subset count times (k+1)!."""
    return subset_sum_count(code.field, code.points, code.k + 1, b1, budget) * factorial(
        code.k + 1
    )
