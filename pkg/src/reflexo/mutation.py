"""Combinatorial mutations of reflexive polygons.

A mutation datum is an edge normal v together with a primitive segment
H = conv(0, w), w in v-perp.  The mutated polygon is
P† = conv(R_{-1} ∪ P_0 ∪ (P_1 + H)) where P_d is the height-d slice of P
with respect to v and P_{-1} = R_{-1} + H as a Minkowski sum of segments.
The 16 reflexive classes fall into 8 mutation-equivalence classes.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .polygon import Point, Polygon, canonical_form, convex_hull


class MutationData:
    """Edge normal v and primitive w with <v, w> = 0; H = conv(0, w)."""

    __slots__ = ("v", "w")

    def __init__(self, v: Point, w: Point):
        v, w = tuple(v), tuple(w)
        for name, u in (("v", v), ("w", w)):
            if u == (0, 0) or int_gcd(abs(u[0]), abs(u[1])) != 1:
                raise ValueError(f"{name} must be primitive")
        if v[0] * w[0] + v[1] * w[1] != 0:
            raise ValueError("w must lie in the orthogonal of v")
        self.v = v
        self.w = w

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MutationData)
            and self.v == other.v
            and self.w == other.w
        )

    def __hash__(self):
        return hash((self.v, self.w))

    def __repr__(self):
        return f"MutationData(v={self.v}, w={self.w})"


def _height(v: Point, p) -> Fraction:
    return v[0] * p[0] + v[1] * p[1]


def _slice_points(P: Polygon, v: Point, d: int) -> list[Point]:
    """Lattice points of P at height d w.r.t. v (a segment or point or empty)."""
    return sorted(p for p in P.lattice_points() if _height(v, p) == d)


def mutate(P: Polygon, data: MutationData) -> Polygon:
    """The combinatorial mutation conv(R_{-1} ∪ P_0 ∪ (P_1 + H))."""
    if not P.is_reflexive():
        raise ValueError("mutation is defined for reflexive polygons")
    v, w = data.v, data.w
    heights = [_height(v, p) for p in P.vertices]
    if max(heights) > 1:
        raise ValueError("slice above height 1 is nonempty")
    if min(heights) != -1:
        raise ValueError("v is not an inner edge normal of P")

    # P_{-1} is the edge at height -1; peel one Minkowski factor H off it.
    bottom = _slice_points(P, v, -1)
    # R_{-1} = P_{-1} - H: shrink the segment by w at the end it covers
    r_minus = _shrink_segment(bottom, w)

    mid = _slice_points(P, v, 0)
    top = _slice_points(P, v, 1)
    shifted_top = [(p[0] + w[0], p[1] + w[1]) for p in top]

    pts = r_minus + mid + top + shifted_top
    hull = convex_hull(pts)
    if len(hull) < 3:
        raise ValueError("not mutable with this H")
    Q = Polygon(hull, from_hull=True)
    if not Q.is_reflexive():  # pragma: no cover - Definition guarantees this
        raise ValueError("mutation produced a non-reflexive polygon")
    return Q


def _shrink_segment(pts: list[Point], w: Point) -> list[Point]:
    """Minkowski difference of the lattice segment conv(pts) by conv(0, w).

    pts are the lattice points of the segment (sorted).  The segment must have
    direction ±w and lattice length >= 1; the result may be a single point.
    """
    if len(pts) < 2:
        raise ValueError("not mutable with this H")
    a, b = pts[0], pts[-1]
    d = (b[0] - a[0], b[1] - a[1])
    g = int_gcd(abs(d[0]), abs(d[1]))
    step = (d[0] // g, d[1] // g)
    if step == tuple(w):
        # drop the far endpoint: R = [a, b - w]
        return [(p[0], p[1]) for p in pts[:-1]]
    if step == (-w[0], -w[1]):
        return [(p[0], p[1]) for p in pts[1:]]
    raise ValueError("not mutable with this H")


def all_mutations(P: Polygon) -> list[tuple[MutationData, Polygon]]:
    """Every admissible mutation of P: each edge normal v crossed with the two
    primitive generators of v-perp; results are canonicalized."""
    out = []
    seen = set()
    for e in P.edges():
        v = e.inner_normal
        for w in ((-v[1], v[0]), (v[1], -v[0])):
            data = MutationData(v, w)
            if data in seen:
                continue
            seen.add(data)
            try:
                Q = mutate(P, data)
            except ValueError:
                continue
            out.append((data, canonical_form(Q)))
    return out


def mutation_classes(catalog: list[Polygon]) -> list[list[int]]:
    """Connected components of the mutation graph on the catalog.

    Returns a partition of catalog indices, each class sorted, classes sorted
    by first element.
    """
    keys = [tuple(canonical_form(P).vertices) for P in catalog]
    index = {k: i for i, k in enumerate(keys)}
    parent = list(range(len(catalog)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for i, P in enumerate(catalog):
        for _, Q in all_mutations(P):
            k = tuple(Q.vertices)
            if k not in index:
                raise ValueError("mutation left the catalog")
            union(i, index[k])

    groups: dict[int, list[int]] = {}
    for i in range(len(catalog)):
        groups.setdefault(find(i), []).append(i)
    return [sorted(g) for _, g in sorted(groups.items())]


def trop_map(m: Point, data: MutationData) -> Point:
    """Piecewise-linear map m -> m - min{0, <m, w>} v on the dual lattice;
    the identity on the half-space <., w> >= 0."""
    pairing = m[0] * data.w[0] + m[1] * data.w[1]
    t = min(0, pairing)
    return (m[0] - t * data.v[0], m[1] - t * data.v[1])
