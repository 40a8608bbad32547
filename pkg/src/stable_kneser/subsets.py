"""k-subsets of [n] as one-word bitmasks, and the two stability predicates.

Everything downstream (hypergraphs, colorings, solvers) works on the vertex
type defined here: a k-subset of {1, ..., n} stored both as a sorted element
tuple and as an n-bit mask (bit i-1 set iff i is a member).  The ground set
is capped at 64 elements so that a subset is always a single machine word
and disjointness is one AND.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError

MAX_N = 64

#: A stability vector is a plain tuple of positive integers, one per element
#: of the subsets it constrains.
StabilityVector = tuple


def validate_svec(svec: Sequence[int]) -> tuple:
    """Normalize a stability vector to a tuple and check its invariants."""
    s = tuple(int(x) for x in svec)
    if len(s) < 1:
        raise ValueError("stability vector must have at least one entry")
    if any(x < 1 for x in s):
        raise ValueError(f"stability vector entries must be >= 1, got {s}")
    return s


@dataclass(frozen=True)
class KSubset:
    """A k-element subset of [n], 1-based, with its bitmask encoding."""

    elements: tuple
    mask: int
    ambient_n: int

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> "KSubset":
        elems = tuple(sorted(set(int(e) for e in elements)))
        if n > MAX_N:
            raise CapacityError(f"ground set size {n} exceeds {MAX_N}")
        if n < 0:
            raise ValueError(f"ground set size must be >= 0, got {n}")
        if elems and (elems[0] < 1 or elems[-1] > n):
            raise ValueError(f"elements {elems} not within [1, {n}]")
        mask = 0
        for e in elems:
            mask |= 1 << (e - 1)
        return cls(elements=elems, mask=mask, ambient_n=n)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "KSubset":
        if n > MAX_N:
            raise CapacityError(f"ground set size {n} exceeds {MAX_N}")
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} not within [1, {n}]")
        elems = tuple(i + 1 for i in range(n) if mask >> i & 1)
        return cls(elements=elems, mask=mask, ambient_n=n)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, e: int) -> bool:
        return 1 <= e <= self.ambient_n and self.mask >> (e - 1) & 1 == 1

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"KSubset({set(self.elements) or '{}'} in [{self.ambient_n}])"


def enumerate_k_subsets(n: int, k: int) -> Iterator[KSubset]:
    """Yield all C(n, k) subsets in lexicographic order of element lists."""
    if k < 0:
        raise ValueError(f"subset size must be >= 0, got {k}")
    if n > MAX_N:
        raise CapacityError(f"ground set size {n} exceeds {MAX_N}")
    if n < 0:
        raise ValueError(f"ground set size must be >= 0, got {n}")
    for combo in itertools.combinations(range(1, n + 1), k):
        mask = 0
        for e in combo:
            mask |= 1 << (e - 1)
        yield KSubset(elements=combo, mask=mask, ambient_n=n)


def is_s_stable(A: KSubset, n: int, s: int) -> bool:
    """True iff every distinct pair i, j in A satisfies s <= |i-j| <= n-s.

    Singletons and the empty set are stable for every s: there is no pair to
    violate the condition.
    """
    if A.ambient_n != n:
        raise ValueError(f"subset lives in [{A.ambient_n}], not [{n}]")
    if s < 1:
        raise ValueError(f"stability parameter must be >= 1, got {s}")
    elems = A.elements
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            d = elems[j] - elems[i]  # positive: elements are sorted
            if d < s or d > n - s:
                return False
    return True


def is_vec_stable(A: KSubset, n: int, svec: Sequence[int]) -> bool:
    """True iff A(j+1) - A(j) >= s_j for j < k and A(k) - A(1) <= n - s_k.

    For k = 1 the gap conditions are vacuous and only the wraparound
    condition 0 <= n - s_1 remains.
    """
    s = validate_svec(svec)
    if A.ambient_n != n:
        raise ValueError(f"subset lives in [{A.ambient_n}], not [{n}]")
    if len(A) != len(s):
        raise ValueError(f"subset size {len(A)} != stability vector length {len(s)}")
    elems = A.elements
    k = len(s)
    for j in range(k - 1):
        if elems[j + 1] - elems[j] < s[j]:
            return False
    return elems[-1] - elems[0] <= n - s[-1]


def are_pairwise_disjoint(sets: Sequence[KSubset]) -> bool:
    """True iff the masks are pairwise disjoint (vacuously true for <= 1)."""
    union = 0
    total = 0
    for A in sets:
        union |= A.mask
        total += len(A)
    return total == union.bit_count()
