"""Lattice polygon geometry.

Polygons are stored as CCW-ordered integer vertex lists.  Reflexive means the
origin is the only interior lattice point; equivalently every edge lies at
lattice distance 1 from the origin (primitive inner normal evaluating to -1),
equivalently the polar dual is again a lattice polygon.

GL2(Z) canonical forms work by mapping unimodular ordered pairs of boundary
lattice points onto the standard frame; for a reflexive polygon consecutive
boundary lattice points always form such a pair, so the candidate set is
finite, GL2(Z)-equivariant, and exhaustive.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

Point = tuple[int, int]


def _cross(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _primitive(v: Point) -> Point:
    g = int_gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def convex_hull(points) -> list[Point]:
    """Andrew monotone chain; returns CCW vertices, collinear points dropped.
    Accepts rational coordinates; used with Fractions by the mutation code."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(_sub(out[-1], out[-2]), _sub(p, out[-2])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


class Edge:
    """Directed edge of a lattice polygon with its primitive inner normal."""

    __slots__ = ("tail", "head", "inner_normal", "lattice_length")

    def __init__(self, tail: Point, head: Point):
        self.tail = tail
        self.head = head
        d = _sub(head, tail)
        self.lattice_length = int_gcd(abs(d[0]), abs(d[1]))
        # CCW orientation: interior on the left, inner normal = rotate d by +90
        self.inner_normal = _primitive((-d[1], d[0]))

    def normal_value(self) -> Fraction:
        """<inner_normal, tail> -- equals -(lattice distance from origin)."""
        n = self.inner_normal
        return Fraction(n[0] * self.tail[0] + n[1] * self.tail[1])

    def lattice_points(self) -> list[Point]:
        """All lattice points on the edge, tail to head inclusive."""
        d = _sub(self.head, self.tail)
        step = (d[0] // self.lattice_length, d[1] // self.lattice_length)
        return [
            (self.tail[0] + i * step[0], self.tail[1] + i * step[1])
            for i in range(self.lattice_length + 1)
        ]

    def __repr__(self):
        return f"Edge({self.tail}->{self.head}, n={self.inner_normal})"


class Polygon:
    """Convex lattice polygon, CCW vertex list."""

    __slots__ = ("vertices",)

    def __init__(self, vertices, from_hull: bool = False):
        vs = [tuple(int(c) for c in v) for v in vertices]
        if not from_hull:
            vs = convex_hull(vs)
        if len(vs) < 3:
            raise ValueError("polygon is degenerate")
        self.vertices = vs

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    def __repr__(self):
        return f"Polygon({self.vertices})"

    def edges(self) -> list[Edge]:
        n = len(self.vertices)
        return [Edge(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def volume(self) -> int:
        """Normalized volume: 2 x Euclidean area (shoelace), an integer."""
        v = self.vertices
        n = len(v)
        s = sum(_cross(v[i], v[(i + 1) % n]) for i in range(n))
        if s <= 0:
            raise ValueError("degenerate or mis-oriented polygon")
        return s

    def contains_origin_strictly(self) -> bool:
        return all(e.normal_value() < 0 for e in self.edges())

    def is_reflexive(self) -> bool:
        return all(e.normal_value() == -1 for e in self.edges())

    def boundary_lattice_points(self) -> list[Point]:
        """Boundary lattice points in CCW cyclic order, starting at vertex 0."""
        out = []
        for e in self.edges():
            out.extend(e.lattice_points()[:-1])
        return out

    def lattice_points(self) -> list[Point]:
        """All lattice points of the polygon."""
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        es = self.edges()
        out = []
        for x in range(min(xs), max(xs) + 1):
            for y in range(min(ys), max(ys) + 1):
                if all(
                    e.inner_normal[0] * x + e.inner_normal[1] * y >= e.normal_value()
                    for e in es
                ):
                    out.append((x, y))
        return out

    def scale_count(self, m: int) -> int:
        """#(mP ∩ Z^2) for reflexive P (dilation via the support description)."""
        if m == 0:
            return 1
        if not self.is_reflexive():
            raise ValueError("scale_count expects a reflexive polygon")
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        es = [(e.inner_normal, -m) for e in self.edges()]
        count = 0
        for x in range(m * min(xs), m * max(xs) + 1):
            for y in range(m * min(ys), m * max(ys) + 1):
                if all(n[0] * x + n[1] * y >= b for n, b in es):
                    count += 1
        return count


def lattice_point_count(P: Polygon, m: int) -> int:
    """Ehrhart count #(mP ∩ N) for reflexive P."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return P.scale_count(m)


def polar_dual(P: Polygon) -> Polygon:
    """Polar dual P° = {u : <u, v> >= -1 for all v in P}.

    For reflexive P the vertices of P° are exactly the primitive inner edge
    normals of P (in CCW edge order).
    """
    if not P.is_reflexive():
        raise ValueError("polar is not a lattice polygon (P not reflexive)")
    return Polygon([e.inner_normal for e in P.edges()], from_hull=True)


# ---------------------------------------------------------------------------
# GL2(Z) canonical form
# ---------------------------------------------------------------------------


def apply_unimodular(U, P: Polygon) -> Polygon:
    """Image of P under the matrix U = ((a,b),(c,d)) acting by v -> U v."""
    (a, b), (c, d) = U
    det = a * d - b * c
    if abs(det) != 1:
        raise ValueError("matrix not unimodular")
    vs = [(a * x + b * y, c * x + d * y) for (x, y) in P.vertices]
    if det < 0:
        vs.reverse()
    return Polygon(vs, from_hull=True)


def _rotate_lex_min(vs: list[Point]) -> tuple[Point, ...]:
    n = len(vs)
    best = None
    for i in range(n):
        cand = tuple(vs[i:] + vs[:i])
        if best is None or cand < best:
            best = cand
    return best


def canonical_form(P: Polygon) -> Polygon:
    """Unique GL2(Z)-orbit representative.

    Candidate maps send each ordered unimodular pair (p, q) of boundary
    lattice points to the standard basis; this candidate set is equivariant
    (V maps boundary pairs to boundary pairs bijectively), so the
    lexicographically least candidate vertex tuple is a true normal form.
    """
    bpts = P.boundary_lattice_points()
    best = None
    for p in bpts:
        for q in bpts:
            det = _cross(p, q)
            if abs(det) != 1:
                continue
            # U with U p = e1, U q = e2:  U = inverse of [p q]
            a, b = p
            c, d = q
            U = ((det * d, -det * c), (-det * b, det * a))
            img = apply_unimodular(U, P)
            cand = _rotate_lex_min(img.vertices)
            if best is None or cand < best:
                best = cand
    if best is None:
        raise ValueError(
            "no unimodular boundary pair; canonical form undefined for this polygon"
        )
    return Polygon(list(best), from_hull=True)


# ---------------------------------------------------------------------------
# enumeration of reflexive polygons
# ---------------------------------------------------------------------------


def enumerate_reflexive(bound: int = 3) -> list[Polygon]:
    """All reflexive polygons with vertices in [-bound, bound]^2, one canonical
    representative per GL2(Z) class, sorted by (volume, vertex tuple).

    Strategy: vertices of a reflexive polygon are primitive points, and every
    edge must satisfy <primitive inner normal, tail> = -1; so build the
    directed graph of admissible edges between primitive points and walk
    CCW-convex cycles through it.
    """
    if bound < 3:
        raise ValueError("bound must be >= 3")
    pts = [
        (x, y)
        for x in range(-bound, bound + 1)
        for y in range(-bound, bound + 1)
        if (x, y) != (0, 0) and int_gcd(abs(x), abs(y)) == 1
    ]
    # admissible directed edges p -> q (CCW around origin, lattice distance 1)
    succ: dict[Point, list[Point]] = {p: [] for p in pts}
    for p in pts:
        for q in pts:
            if p == q:
                continue
            e = Edge(p, q)
            if e.normal_value() == -1:
                succ[p].append(q)

    found: dict[tuple, Polygon] = {}

    def dfs(chain: list[Point]):
        start = chain[0]
        last = chain[-1]
        for q in succ[last]:
            if len(chain) >= 3 and q == start:
                # closing edge chain[-1] -> start already admissible; check
                # convexity at the two closing corners
                if (
                    _cross(_sub(start, last), _sub(chain[1], start)) > 0
                    and _cross(_sub(last, chain[-2]), _sub(start, last)) > 0
                ):
                    poly = Polygon(chain)  # re-hull as a validity check
                    if set(poly.vertices) == set(chain) and poly.is_reflexive():
                        cf = canonical_form(poly)
                        found.setdefault(tuple(cf.vertices), cf)
                continue
            if q <= start:
                continue  # canonical start: lex-least vertex of the cycle
            if len(chain) >= 2 and _cross(_sub(last, chain[-2]), _sub(q, last)) <= 0:
                continue
            if len(chain) >= 6:
                continue  # a reflexive polygon has at most 6 vertices
            dfs(chain + [q])

    for p in pts:
        dfs([p])
    return sorted(found.values(), key=lambda P: (P.volume(), tuple(P.vertices)))
