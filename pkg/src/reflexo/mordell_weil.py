"""Mordell-Weil data of the elliptic surface: section positions on the fibre
at infinity, the Shioda-Tate rank, height pairings of sections, torsion via
the component-group sandwich, and Miranda's identities for torsion sections.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .algebra import bareiss_determinant
from .fibration import FibreConfiguration, KodairaType
from .polygon import Polygon, canonical_form, polar_dual


class SectionData:
    """A section of the fibration: its component index on the I_m fibre at
    infinity (components labeled cyclically, zero section on component 0)."""

    __slots__ = ("position", "is_zero_section")

    def __init__(self, position: int, is_zero_section: bool = False):
        self.position = position
        self.is_zero_section = is_zero_section

    def __repr__(self):
        tag = ", zero" if self.is_zero_section else ""
        return f"SectionData({self.position}{tag})"


def section_positions(P: Polygon) -> list[SectionData]:
    """Component indices on the infinity fibre met by the sections.

    There is one section per edge of P, i.e. per vertex of P-polar; the
    cyclic component order of the I_m fibre is the counterclockwise boundary
    walk of the canonicalized dual polygon.  The zero section is the vertex
    immediately after a shortest edge, i.e. the start whose cyclic gap
    sequence (lattice lengths of the edges, read from the start) ends with
    the minimal gap; ties are broken by the lexicographically greatest gap
    sequence.
    """
    Q = polar_dual(canonical_form(P))
    walk = Q.boundary_lattice_points()
    verts = set(Q.vertices)
    m = len(walk)
    vidx = [i for i, p in enumerate(walk) if p in verts]
    k = len(vidx)
    gaps = [(vidx[(j + 1) % k] - vidx[j]) % m for j in range(k)]
    best = None
    for j in range(k):
        seq = tuple(gaps[j:] + gaps[:j])
        if seq[-1] != min(gaps):
            continue
        if best is None or seq > best[0]:
            best = (seq, j)
    seq = best[0]
    positions = [0]
    for g in seq[:-1]:
        positions.append(positions[-1] + g)
    return [SectionData(p, is_zero_section=(p == 0)) for p in positions]


def contribution(n: int, i: int, j: int) -> Fraction:
    """contr_{I_n} of two sections on components i and j: i (n - j) / n for
    i <= j (arguments are swapped if needed)."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError("component indices must lie in [0, n)")
    if i > j:
        i, j = j, i
    return Fraction(i * (n - j), n)


def shioda_tate_rank(config: FibreConfiguration) -> int:
    """rank MW = 8 - sum of the root-lattice ranks of all fibres."""
    total = config.r_total()
    if total > 8:
        raise ValueError("fibre lattice ranks exceed 8")
    return 8 - total


def height_matrix(P: Polygon, config: FibreConfiguration) -> list[list[Fraction]]:
    """Height pairing matrix over the non-zero sections.

    With the constructed sections pairwise disjoint and disjoint from the
    zero section: <s, s> = 2 - contr(m, p, p) and <s, t> = 1 - contr(m, p, q)
    where contributions come from the I_m fibre at infinity alone; any other
    reducible fibre would contribute unknown incidences and is refused.
    """
    for loc, t, _ in config.entries:
        if loc != "infinity" and t.r > 0:
            raise ValueError("section/component incidence unknown")
    m = 12 - P.volume()
    positions = [s.position for s in section_positions(P) if not s.is_zero_section]
    mat = []
    for p in positions:
        row = []
        for q in positions:
            base = 2 if p == q else 1
            row.append(base - contribution(m, p, q))
        mat.append(row)
    return mat


# ---------------------------------------------------------------------------
# fibre lattice determinants
# ---------------------------------------------------------------------------


def _cartan_det(adjacency: list[tuple[int, int]], size: int) -> int:
    rows = [
        [Fraction(2 if i == j else 0) for j in range(size)] for i in range(size)
    ]
    for i, j in adjacency:
        rows[i][j] -= 1
        rows[j][i] -= 1
    d = bareiss_determinant(rows)
    if d.denominator != 1 or d <= 0:
        raise ArithmeticError("Cartan matrix determinant must be a positive integer")
    return int(d)


def _path_edges(k: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(k - 1)]


def fibre_lattice_determinant(t: KodairaType) -> int:
    """Determinant of the root lattice on non-identity components, from the
    explicit Dynkin diagram: A_{n-1} for I_n, D_{n+4} for I_n*, E6/E7/E8 for
    IV*/III*/II*; 1 for irreducible fibres."""
    if t.kind == "I":
        if t.n <= 1:
            return 1
        # A_{n-1} chain
        return _cartan_det(_path_edges(t.n - 1), t.n - 1)
    if t.kind == "I*":
        k = t.n + 4  # D_k
        edges = _path_edges(k - 1) + [(k - 3, k - 1)]
        return _cartan_det(edges, k)
    if t.kind == "II":
        return 1
    if t.kind == "III":
        return _cartan_det([], 1)  # A_1
    if t.kind == "IV":
        return _cartan_det(_path_edges(2), 2)  # A_2
    # E-types: path of k-1 nodes with the last node attached to node 2
    k = {"IV*": 6, "III*": 7, "II*": 8}[t.kind]
    edges = _path_edges(k - 1) + [(2, k - 1)]
    return _cartan_det(edges, k)


# ---------------------------------------------------------------------------
# the Mordell-Weil group
# ---------------------------------------------------------------------------


class MWReport:
    __slots__ = ("rank", "torsion_order", "group", "height", "det_trivial",
                 "positions")

    def __init__(self, rank, torsion_order, group, height, det_trivial,
                 positions):
        self.rank = rank
        self.torsion_order = torsion_order
        self.group = group
        self.height = height
        self.det_trivial = det_trivial
        self.positions = positions

    def __repr__(self):
        return (
            f"MWReport(rank={self.rank}, torsion={self.torsion_order}, "
            f"group={self.group}, detT={self.det_trivial}, "
            f"positions={self.positions})"
        )


def _group_name(rank: int, torsion: int) -> str:
    if rank == 0:
        return f"Z/{torsion}" if torsion > 1 else "0"
    free = "Z" if rank == 1 else f"Z^{rank}"
    return free + (f" x Z/{torsion}" if torsion > 1 else "")


def mw_group(P: Polygon, config: FibreConfiguration) -> MWReport:
    """Rank from Shioda-Tate; torsion from the sandwich between the image of
    the known sections in the component group of the infinity fibre (lower
    bound) and determinant divisibility of the trivial lattice (upper)."""
    rank = shioda_tate_rank(config)
    sections = section_positions(P)
    positions = [s.position for s in sections]
    m = 12 - P.volume()
    g = m
    for p in positions:
        g = int_gcd(g, p)
    lower = m // g
    det_t = m
    for loc, t, c in config.entries:
        if loc == "infinity":
            continue
        det_t *= fibre_lattice_determinant(t) ** c
    upper = max(n for n in range(1, det_t + 1) if det_t % (n * n) == 0)

    if rank == 0:
        if lower != upper:
            raise ValueError(
                f"torsion undetermined: bounds ({lower}, {upper})"
            )
        torsion = lower
        height = None
    else:
        # torsion among the known sections: those of height zero
        torsion_positions = [0]
        for p in positions:
            if p and 2 - contribution(m, p, p) == 0:
                torsion_positions.append(p)
        gg = m
        for p in torsion_positions:
            gg = int_gcd(gg, p)
        torsion = m // gg
        if torsion > upper:  # pragma: no cover - sandwich sanity
            raise ValueError("torsion bounds inconsistent")
        try:
            height = height_matrix(P, config)
        except ValueError:
            height = None
    return MWReport(rank, torsion, _group_name(rank, torsion), height, det_t,
                    positions)


# ---------------------------------------------------------------------------
# Miranda's identities
# ---------------------------------------------------------------------------


def _semistable_fibres(config: FibreConfiguration) -> list[int]:
    """The multiset of n-values of all I_n fibres; errors on additive types."""
    out = []
    for _, t, c in config.entries:
        if t.kind != "I":
            raise ValueError("semistable only")
        out.extend([t.n] * c)
    return out


def miranda_identities(config: FibreConfiguration, order: int,
                       components: list[int]) -> dict:
    """Check Miranda's identities for a torsion section of the given order.

    components[i] is the index of the fibre component met by the section, one
    entry per I_n fibre in the order of _semistable_fibres.  Identities (for
    chi(O_Y) = 1): sum m_j (m_v - m_j) / m_v = 2, and sum of the normalized
    m_j (taken <= m_v / 2) equals 3 for order >= 3 and 4 for order = 2.
    """
    ns = _semistable_fibres(config)
    if len(components) != len(ns):
        raise ValueError("one component index per I_n fibre required")
    s1 = Fraction(0)
    s2 = 0
    for n, j in zip(ns, components):
        if not 0 <= j < max(n, 1):
            raise ValueError("component index out of range")
        s1 += Fraction(j * (n - j), n) if n else 0
        s2 += min(j, n - j)
    expected = 4 if order == 2 else 3
    return {
        "contribution_sum": s1,
        "contribution_ok": s1 == 2,
        "component_sum": s2,
        "component_ok": s2 == expected,
        "ok": s1 == 2 and s2 == expected,
    }


def find_torsion_components(config: FibreConfiguration, order: int,
                            infinity_position: int) -> list[list[int]]:
    """All component assignments satisfying both identities, with the
    position on the infinity fibre fixed; finite I_n components are searched
    (up to the j <-> n - j symmetry)."""
    ns = _semistable_fibres(config)
    inf_index = next(
        i for i, (loc, _, _) in enumerate(
            (loc, t, c) for loc, t, c in config.entries for _ in range(c)
        ) if loc == "infinity"
    )
    choices: list[list[int]] = []
    for i, n in enumerate(ns):
        if i == inf_index:
            choices.append([infinity_position])
        else:
            choices.append(list(range(0, n // 2 + 1)) if n else [0])
    results = []

    def rec(i, acc):
        if i == len(choices):
            if miranda_identities(config, order, acc)["ok"]:
                results.append(list(acc))
            return
        for j in choices[i]:
            rec(i + 1, acc + [j])

    rec(0, [])
    return results
