"""Signed sets, alternation, and the two-case labeling of sign vectors.

A proper t-coloring of KG^2(n,k)_svec induces a label function
lambda: {-1,0,1}^n \\ {0} -> {+-1, ..., +-m} with m = t + sum(svec[:-1]):

  * Case 1 (|Alt(A)| <= alpha = sum(svec)): lambda(A) = sgn(A) * |Alt(A)|.
  * Case 2 (|Alt(A)| > alpha): build s_k pairwise disjoint stable k-sets
    from A's longest alternating subset, pick the one with the least color
    c0, and label sgn(F_j0) * (alpha + c0).

Case-1 labels have absolute value <= alpha and Case-2 labels >= alpha + 1,
so the two cases can never collide in absolute value.

The combinatorial lemma behind this construction states that any labeling
into {+-1, ..., +-m} satisfying antipodality (condition 1) and
extension-consistency (condition 2) forces m >= n, hence
t >= n - sum(svec[:-1]).  `verify_tucker_conditions` checks both conditions
exhaustively — a proper coloring must pass, and an improper one can be
caught via a condition-2 witness — and `tucker_lower_bound` turns a clean
report into the certified bound.

One subtlety: staying inside the range [1, m] needs the minimum color over
the s_k constructed sets to be <= t - s_k, while properness alone only
forces <= t - s_k + 1 (they are pairwise disjoint, hence mutually adjacent,
hence distinctly colored).  Labels past m are therefore counted as range
violations in the report rather than asserted away; a report is clean only
when all three violation classes are empty.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .colorings import Coloring
from .errors import CapacityError, InternalContractError, StateError
from .hypergraph import build_stable_kneser
from .kernels import get_kernels
from .subsets import KSubset, validate_svec

VERIFY_MAX_N = 10  # 3^n sets and ~4^n ordered pairs; ~10^6 checks at the cap
MAX_WITNESSES = 32


@dataclass(frozen=True)
class SignedSet:
    """A vector in {-1, 0, +1}^n; coordinate i of [n] is signs[i-1]."""

    signs: tuple

    def __post_init__(self):
        for x in self.signs:
            if x not in (-1, 0, 1):
                raise ValueError(f"signed set entries must be -1/0/+1, got {x!r}")

    @property
    def n(self) -> int:
        return len(self.signs)

    def support(self) -> tuple:
        return tuple(i + 1 for i, x in enumerate(self.signs) if x != 0)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.signs)

    def negated(self) -> "SignedSet":
        return SignedSet(signs=tuple(-x for x in self.signs))


@dataclass(frozen=True)
class AltResult:
    chosen: tuple  # ascending coordinate indices, consecutive signs opposite
    length: int
    sign: int  # sign of the first nonzero coordinate of the full vector


@dataclass(frozen=True)
class LabelFunction:
    domain_n: int
    range_m: int  # t + sum(svec[:-1])
    evaluator: Callable  # SignedSet -> signed label
    svec: tuple
    coloring: Coloring
    alpha: int  # sum(svec)
    palette: int


@dataclass(frozen=True)
class TuckerReport:
    n: int
    svec: tuple
    palette: int
    bound: int  # n - sum(svec[:-1])
    condition1_violations: tuple  # SignedSet entries
    condition2_violations: tuple  # (SignedSet, SignedSet) pairs
    range_violations: tuple  # SignedSet entries with |label| outside [1, m]
    sets_checked: int
    pairs_checked: int

    @property
    def ok(self) -> bool:
        return (
            not self.condition1_violations
            and not self.condition2_violations
            and not self.range_violations
        )


def alt_set(A: SignedSet) -> AltResult:
    """Longest alternating subset of supp(A), earliest indices first.

    Greedy scan: take the first nonzero coordinate, then every first
    coordinate whose sign differs from the last taken.  The alternating
    length equals the number of maximal constant-sign runs among the nonzero
    entries, which the greedy scan attains while picking the
    lexicographically smallest index set of that length.
    """
    chosen = []
    last = 0
    first_sign = 0
    for i, x in enumerate(A.signs):
        if x == 0:
            continue
        if first_sign == 0:
            first_sign = x
        if x != last:
            chosen.append(i + 1)
            last = x
    if not chosen:
        raise ValueError("alternation is undefined for the zero vector")
    return AltResult(chosen=tuple(chosen), length=len(chosen), sign=first_sign)


def f_sets(A: SignedSet, svec: Sequence) -> list:
    """The s_k pairwise disjoint stable k-sets read off A's alternation.

    With chosen alternating indices i_1 < i_2 < ... < i_l (l > alpha), set
    F_j = {i_j, i_{j+s_1}, i_{j+s_1+s_2}, ...} for j = 1..s_k.  Consecutive
    elements are >= s_i apart because the indices are strictly increasing,
    and l >= alpha + 1 forces the wraparound bound; with each s_i (i < k)
    even, the elements of one F_j sit an even number of alternations apart,
    so each F_j is entirely inside A+ or A-.
    """
    svec = validate_svec(svec)
    k = len(svec)
    if any(s % 2 for s in svec[:-1]):
        raise ValueError(
            f"construction needs even gap bounds before the last, got {svec}"
        )
    if k >= 2 and svec[-1] > min(svec[:-1]):
        raise ValueError(
            f"construction needs the last gap bound to be a minimum, got {svec}"
        )
    alpha = sum(svec)
    r = alt_set(A)  # ValueError on the zero vector
    if r.length <= alpha:
        raise ValueError(
            f"needs alternating length > {alpha}, got {r.length}"
        )
    offsets = [0]
    for s in svec[:-1]:
        offsets.append(offsets[-1] + s)
    n = A.n
    out = []
    for j in range(1, svec[-1] + 1):
        elements = tuple(r.chosen[j - 1 + off] for off in offsets)
        sign = A.signs[elements[0] - 1]
        for e in elements[1:]:
            if A.signs[e - 1] != sign:
                raise InternalContractError(
                    f"F_{j} = {elements} mixes signs despite even gap bounds"
                )
        out.append(KSubset.from_elements(elements, n))
    return out


def build_lambda(n: int, svec: Sequence, c: Coloring) -> LabelFunction:
    """Label function induced by a coloring of KG^2(n,k)_svec.

    The coloring is required to be structurally compatible (one color >= 1
    per vertex); properness is deliberately NOT enforced here — it is
    exactly what `verify_tucker_conditions` detects, so improper colorings
    must be constructible as negative controls.
    """
    svec = validate_svec(svec)
    if any(s % 2 for s in svec[:-1]):
        raise ValueError(
            f"labeling needs even gap bounds before the last, got {svec}"
        )
    if len(svec) >= 2 and svec[-1] > min(svec[:-1]):
        raise ValueError(
            f"labeling needs the last gap bound to be a minimum, got {svec}"
        )
    H = build_stable_kneser(n, len(svec), 2, svec)
    if len(c.assignment) != H.vertex_count:
        raise ValueError(
            f"coloring covers {len(c.assignment)} vertices, graph has "
            f"{H.vertex_count}"
        )
    vertex_id = {A.elements: i for i, A in enumerate(H.vertices)}
    alpha = sum(svec)
    t = c.palette_size
    if t < svec[-1]:
        raise ValueError(
            f"palette {t} is smaller than the last gap bound {svec[-1]}; "
            f"Case-1 labels would overflow the declared range"
        )
    m = t + alpha - svec[-1]

    def evaluate(A: SignedSet) -> int:
        if A.n != n:
            raise ValueError(f"signed set has {A.n} coordinates, expected {n}")
        r = alt_set(A)  # ValueError on the zero vector
        if r.length <= alpha:
            return r.sign * r.length
        best_color = None
        best_sign = 0
        for F in f_sets(A, svec):
            vid = vertex_id.get(F.elements)
            if vid is None:
                raise InternalContractError(
                    f"constructed set {F.elements} is not a stable vertex"
                )
            col = c.assignment[vid]
            if best_color is None or col < best_color:
                best_color = col
                best_sign = A.signs[F.elements[0] - 1]
        return best_sign * (alpha + best_color)

    return LabelFunction(
        domain_n=n,
        range_m=m,
        evaluator=evaluate,
        svec=svec,
        coloring=c,
        alpha=alpha,
        palette=t,
    )


# ---------------------------------------------------------------------------
# exhaustive verification


def _ternary_tables(n: int):
    """pow3, per-code ternary digits, and code -> code-of-negation."""
    size = 3**n
    pow3 = np.array([3**i for i in range(n)], np.int64)
    codes = np.arange(size, dtype=np.int64)
    digits = np.empty((size, n), np.int64)
    rem = codes.copy()
    for i in range(n):
        digits[:, i] = rem % 3
        rem //= 3
    # negation swaps digit values 1 and 2
    neg_digit = np.array([0, 2, 1], np.int64)
    neg_code = neg_digit[digits] @ pow3
    return pow3, digits, neg_code


_DIGIT_SIGN = (0, 1, -1)


def _signed_set_of_digits(row) -> SignedSet:
    return SignedSet(signs=tuple(_DIGIT_SIGN[int(d)] for d in row))


def verify_tucker_conditions(lam: LabelFunction) -> TuckerReport:
    """Exhaustively check antipodality and extension-consistency.

    Condition 1: label(-A) == -label(A) for all 3^n - 1 nonzero A.
    Condition 2: if A1 agrees with A2 on supp(A1) and the labels share an
    absolute value, the labels are equal — checked over every ordered pair
    with supp(A1) a proper nonempty subset of supp(A2) (pairs with equal
    support satisfy it identically).
    Range: |label| must lie in [1, range_m]; offenders are reported, since
    the lower bound reads the range off a clean report.
    """
    n = lam.domain_n
    if n > VERIFY_MAX_N:
        raise CapacityError(
            f"exhaustive verification is capped at n <= {VERIFY_MAX_N}, "
            f"got n = {n}"
        )
    pow3, digits, neg_code = _ternary_tables(n)
    size = 3**n
    labels = np.zeros(size, np.int64)
    for code in range(1, size):
        labels[code] = lam.evaluator(_signed_set_of_digits(digits[code]))
    kern = get_kernels()
    n1, n2, wit1, wit2 = kern.tucker_condition_scan(
        labels, neg_code, pow3, digits, MAX_WITNESSES
    )
    viol1 = tuple(_signed_set_of_digits(digits[c]) for c in wit1)
    viol2 = tuple(
        (_signed_set_of_digits(digits[c1]), _signed_set_of_digits(digits[c2]))
        for c1, c2 in wit2
    )
    if (n1 and not len(wit1)) or (n2 and not len(wit2)):
        raise InternalContractError("violations counted but no witness kept")
    out_of_range = np.nonzero(np.abs(labels[1:]) > lam.range_m)[0] + 1
    viol_range = tuple(
        _signed_set_of_digits(digits[c]) for c in out_of_range[:MAX_WITNESSES]
    )
    return TuckerReport(
        n=n,
        svec=lam.svec,
        palette=lam.palette,
        bound=n - (lam.alpha - lam.svec[-1]),
        condition1_violations=viol1,
        condition2_violations=viol2,
        range_violations=viol_range,
        sets_checked=size - 1,
        pairs_checked=4**n - 2 * 3**n + 1,
    )


def tucker_lower_bound(report: TuckerReport, c: Coloring) -> int:
    """Certified palette lower bound n - sum(svec[:-1]) from a clean report.

    The combinatorial lemma guarantees range_m >= n once both conditions
    hold, so a verified coloring with palette below the bound would falsify
    the implementation.
    """
    if not report.ok:
        raise StateError(
            "lower bound requires a verification report with no violations"
        )
    if c.palette_size != report.palette:
        raise ValueError(
            f"coloring palette {c.palette_size} differs from the verified "
            f"palette {report.palette}"
        )
    bound = report.bound
    if c.palette_size < bound:
        raise InternalContractError(
            f"verified coloring uses {c.palette_size} < {bound} colors; "
            f"this contradicts the labeling lemma"
        )
    return bound


def tucker_report_to_json(report: TuckerReport) -> str:
    return json.dumps(
        {
            "n": report.n,
            "svec": list(report.svec),
            "palette": report.palette,
            "condition1_violations": [
                list(A.signs) for A in report.condition1_violations
            ],
            "condition2_violations": [
                [list(A1.signs), list(A2.signs)]
                for A1, A2 in report.condition2_violations
            ],
            "range_violations": [
                list(A.signs) for A in report.range_violations
            ],
            "bound": report.bound,
        }
    )
