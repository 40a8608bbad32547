"""Explicit proper colorings of stable Kneser hypergraphs.

Three constructions, each a checkable witness for an upper bound on the
chromatic number:

* stable-block scheme: tile [1..] with blocks of r-1 consecutive integers
  and color a vertex by the first block it meets.  Every svec-stable set has
  its minimum within the first ceil((n - sum(svec[:-1])) / (r-1)) blocks, so
  that many colors suffice.
* min-element-block scheme: the classic coloring of the full Kneser
  hypergraph KG^r(n,k) by c(A) = ceil(min(A)/(r-1)), with all colors above
  chi_hat = ceil((n - r(k-1))/(r-1)) clamped to chi_hat.  Proper on the full
  hypergraph, hence on every vertex-induced sub-hypergraph.
* interval scheme (r = 2 only): color a vertex by its least element inside
  a fixed window of the ground set.  Disjoint sets cannot share an element,
  so properness is immediate; the content is that every stable vertex meets
  the window.  When the smallest of the first k-1 gap bounds sits at
  position j > 1, the vertex is first pushed through reindex_homomorphism
  to drop the leading j-1 elements.

`block_coloring` computes the first two schemes and returns whichever uses
the smaller palette; the winning branch is recorded in `Coloring.scheme`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalContractError
from .hypergraph import Hypergraph, build_stable_kneser, class_has_r_disjoint
from .subsets import KSubset, is_vec_stable, validate_svec


@dataclass(frozen=True)
class Coloring:
    """A total color assignment, indexed by vertex id; colors are >= 1."""

    assignment: tuple  # assignment[v] = color of vertex v
    palette_size: int  # == number of distinct colors in assignment
    scheme: str = ""  # which construction produced it (informational)


@dataclass(frozen=True)
class ColoringValidation:
    proper: bool
    violating_edge: Optional[tuple]  # r pairwise-disjoint same-color ids
    colors_used: int


def _make_coloring(colors: Sequence[int], scheme: str) -> Coloring:
    assignment = tuple(int(c) for c in colors)
    return Coloring(
        assignment=assignment,
        palette_size=len(set(assignment)),
        scheme=scheme,
    )


# ---------------------------------------------------------------------------
# constructions


def _stable_block_color(mn: int, r: int) -> int:
    """Index of the block of r-1 consecutive integers containing mn."""
    return (mn + r - 2) // (r - 1)


def _stable_block_scheme(H: Hypergraph) -> Coloring:
    limit = H.n - sum(H.svec[:-1])
    colors = []
    for A in H.vertices:
        mn = A.elements[0]
        if mn > limit:
            raise InternalContractError(
                f"vertex {A} has minimum {mn} > {limit}; its gaps cannot fit"
            )
        colors.append(_stable_block_color(mn, H.r))
    return _make_coloring(colors, "stable-block")


def _min_element_color(mn: int, r: int, chi_hat: int) -> int:
    c = (mn + r - 2) // (r - 1)
    return c if c < chi_hat else chi_hat


def _min_element_scheme(H: Hypergraph) -> Coloring:
    """min-element-block scheme restricted to H's vertex set.

    Proper for every n: each unclamped class fixes the minimum inside a
    block of r-1 consecutive integers, too few for r distinct minima; the
    clamped tail class either leaves fewer than r*k elements above it or
    (when chi_hat clamps to 1) the whole ground set is below r*k, so no
    hyperedge fits either way.
    """
    chi_hat = max(1, -(-(H.n - H.r * (H.k - 1)) // (H.r - 1)))
    colors = [
        _min_element_color(A.elements[0], H.r, chi_hat) for A in H.vertices
    ]
    return _make_coloring(colors, "min-element-block")


def block_coloring(H: Hypergraph) -> Coloring:
    """Best of the stable-block and min-element-block schemes on H.

    Palette is at most ceil((n - max(r(k-1), sum(svec[:-1]))) / (r-1)).
    An empty vertex set yields the empty coloring with palette 0.
    """
    if H.vertex_count == 0:
        return Coloring(assignment=(), palette_size=0, scheme="stable-block")
    best = _stable_block_scheme(H)
    alt = _min_element_scheme(H)
    if alt.palette_size < best.palette_size:
        best = alt
    return best


def afl_min_block_coloring(n: int, k: int, r: int) -> Coloring:
    """min-element-block coloring of the full Kneser hypergraph KG^r(n,k).

    c(A) = ceil(min(A)/(r-1)), clamped to chi_hat = ceil((n-r(k-1))/(r-1)).
    Vertex ids follow the lexicographic enumeration of all k-subsets of [n],
    which is the vertex order of build_stable_kneser(n, k, r, (1,...,1)).
    """
    if k < 1:
        raise ValueError(f"subset size k must be >= 1, got {k}")
    if r < 2:
        raise ValueError(f"uniformity r must be >= 2, got {r}")
    if n < r * k:
        raise ValueError(
            f"need n >= r*k for a hyperedge-rich ground set, got n={n} < {r * k}"
        )
    H = build_stable_kneser(n, k, r, (1,) * k)
    return _min_element_scheme(H)


def reindex_homomorphism(B: KSubset, j: int, svec: Sequence[int], n: int) -> KSubset:
    """Drop the j-1 smallest elements of B and shift down by sum(svec[:j-1]).

    Maps an svec-stable k-subset of [n] to an (s_j..s_k)-stable
    (k-j+1)-subset of [n - sum(svec[:j-1])].  Disjoint stable sets map to
    disjoint images (every image element is an element of B, shifted by the
    same offset), so this is a graph homomorphism between the r = 2 stable
    Kneser graphs.
    """
    s = validate_svec(svec)
    k = len(s)
    if len(B) != k:
        raise ValueError(f"subset size {len(B)} != stability vector length {k}")
    if not 1 <= j <= k:
        raise ValueError(f"drop index j must be in [1, {k}], got {j}")
    if not is_vec_stable(B, n, s):
        raise ValueError(f"{B} is not {s}-stable in [{n}]")
    shift = sum(s[: j - 1])
    image = KSubset.from_elements(
        (b - shift for b in B.elements[j - 1 :]), n - shift
    )
    if not is_vec_stable(image, n - shift, s[j - 1 :]):
        raise InternalContractError(
            f"image {image} of {B} lost {s[j - 1:]}-stability"
        )
    return image


def interval_coloring(n: int, svec: Sequence[int]) -> Coloring:
    """Least-element-in-window coloring of the r = 2 stable Kneser graph.

    Requires k >= 2, every s_i >= 1, s_k <= 2*min(s_1..s_{k-1}) and
    n >= sum(svec).  Uses exactly n - sum(svec[:-1]) - max(0, s_k - m)
    colors, where m = min(svec[:-1]).  When s_k <= m the window degenerates
    and the stable-block scheme already achieves the palette, so it is
    returned instead.
    """
    s = validate_svec(svec)
    k = len(s)
    if k < 2:
        raise ValueError(f"need k >= 2 gap bounds, got {k}")
    if n < sum(s):
        raise ValueError(f"need n >= sum(svec) = {sum(s)}, got n={n}")
    m = min(s[:-1])
    if s[-1] > 2 * m:
        raise ValueError(
            f"last gap bound {s[-1]} exceeds twice the smallest leading "
            f"bound {m}; the window argument needs s_k <= {2 * m}"
        )
    H = build_stable_kneser(n, k, 2, s)
    if H.vertex_count == 0:
        return Coloring(assignment=(), palette_size=0, scheme="interval")
    if s[-1] <= m:
        return _stable_block_scheme(H)

    # Reduce to the case where the smallest leading gap bound comes first.
    j = 1 + s[:-1].index(m)  # 1-based position of the first minimum
    shift = sum(s[: j - 1])
    n_red = n - shift
    s_red = s[j - 1 :]
    # Window of ground elements [m+1, upper] in the reduced instance.
    upper = n_red - (sum(s_red[1:]) - m)
    colors = []
    for B in H.vertices:
        image = reindex_homomorphism(B, j, s, n)
        window_hits = [x for x in image.elements if m + 1 <= x <= upper]
        if not window_hits:
            raise InternalContractError(
                f"vertex {B} avoids the window [{m + 1}, {upper}] after "
                f"reindexing; the wraparound bound should forbid this"
            )
        colors.append(window_hits[0] - m)  # normalize palette to 1..t
    return _make_coloring(colors, "interval")


# ---------------------------------------------------------------------------
# validation


def validate_coloring(H: Hypergraph, c: Coloring) -> ColoringValidation:
    """Check c is proper on H: no color class contains r pairwise-disjoint
    vertices.  Classes are scanned in ascending color order and the packing
    search is deterministic, so the first report is stable across runs."""
    if len(c.assignment) != H.vertex_count:
        raise ValueError(
            f"coloring covers {len(c.assignment)} vertices, hypergraph has "
            f"{H.vertex_count}; partial colorings cannot be validated"
        )
    by_color: dict = {}
    for v, col in enumerate(c.assignment):
        if not isinstance(col, int) or col < 1:
            raise ValueError(f"vertex {v} has invalid color {col!r}")
        by_color.setdefault(col, []).append(v)
    colors_used = len(by_color)
    for col in sorted(by_color):
        witness = class_has_r_disjoint(H, by_color[col])
        if witness is not None:
            return ColoringValidation(
                proper=False, violating_edge=witness, colors_used=colors_used
            )
    return ColoringValidation(proper=True, violating_edge=None, colors_used=colors_used)


# ---------------------------------------------------------------------------
# serialization


def coloring_to_json(c: Coloring) -> str:
    return json.dumps(
        {"palette_size": c.palette_size, "assignment": list(c.assignment)}
    )


def coloring_from_json(text: str) -> Coloring:
    obj = json.loads(text)
    assignment = tuple(int(x) for x in obj["assignment"])
    palette = int(obj["palette_size"])
    if palette != len(set(assignment)):
        raise ValueError(
            f"palette_size {palette} != {len(set(assignment))} distinct colors"
        )
    return Coloring(assignment=assignment, palette_size=palette)
