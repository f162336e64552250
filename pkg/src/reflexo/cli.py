"""Command-line front end: catalog listing, the full per-polygon analysis
report (JSON, cached), the summary table with regression checking, period /
Picard-Fuchs printing, mutation exploration, and SVG diagrams.

Exit codes: 0 success, 1 check failure, 2 usage error.  The cache directory
is ~/.cache/reflexo unless REFLEXO_CACHE overrides it; cache writes are
atomic (write-temp-then-rename) and keyed by polygon, config and version.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .algebra import UniPoly, format_unipoly, squarefree_rational_roots
from .catalog import NAMES, dual_name, get, load_catalog
from .fibration import FibreConfiguration, classify_fibres, elimination_polynomial
from .laurent import build_fP
from .mordell_weil import mw_group, section_positions
from .mutation import all_mutations, mutation_classes
from .period import DiffOperator, find_picard_fuchs, period_coefficients
from .polygon import Polygon, canonical_form, polar_dual

VERSION = "0.1.0"

# Expected summary table: name -> (sorted fibre label multiset, MW group).
EXPECTED_TABLE2 = {
    "3": (("I1", "I1", "I1", "I9"), "Z/3"),
    "4a": (("I1", "I1", "I2", "I8"), "Z/4"),
    "4b": (("I1", "I1", "I1", "I1", "I8"), "Z"),
    "4c": (("I1", "I1", "I2", "I8"), "Z/4"),
    "5a": (("I1", "I1", "I1", "I2", "I7"), "Z"),
    "5b": (("I1", "I1", "I1", "I2", "I7"), "Z"),
    "6a": (("I1", "I2", "I3", "I6"), "Z/6"),
    "6b": (("I1", "I2", "I3", "I6"), "Z/6"),
    "6c": (("I1", "I2", "I3", "I6"), "Z/6"),
    "6d": (("I1", "I2", "I3", "I6"), "Z/6"),
    "7a": (("I1", "I1", "I5", "I5"), "Z/5"),
    "7b": (("I1", "I1", "I5", "I5"), "Z/5"),
    "8a": (("I1", "I1*", "I4"), "Z/4"),
    "8b": (("I1", "I1*", "I4"), "Z/4"),
    "8c": (("I1", "I1*", "I4"), "Z/4"),
    "9": (("I1", "I3", "IV*"), "Z/3"),
}


# ---------------------------------------------------------------------------
# formatting helpers
# ---------------------------------------------------------------------------


def _frac_str(x: Fraction) -> str:
    return str(x)


def _compact_poly(p: UniPoly) -> str:
    return format_unipoly(p).replace(" ", "")


def _fibre_display(config: FibreConfiguration) -> str:
    """Human form: the infinity fibre first, finite fibres by descending
    Euler number, equal labels grouped as "k x I_n"."""
    labels = []
    finite = []
    for loc, t, c in config.entries:
        if loc == "infinity":
            labels.extend([t.label()] * c)
        else:
            finite.extend([(t.chi, t.label())] * c)
    finite.sort(key=lambda p: (-p[0], p[1]))
    labels.extend(l for _, l in finite)
    parts = []
    i = 0
    while i < len(labels):
        j = i
        while j < len(labels) and labels[j] == labels[i]:
            j += 1
        parts.append(labels[i] if j - i == 1 else f"{j - i}x{labels[i]}")
        i = j
    return ", ".join(parts)


def _group_display(group: str) -> str:
    """Z/3 -> Z/3Z for the human table."""
    return group + "Z" if group.startswith("Z/") else group


def _fibres_json(config: FibreConfiguration) -> list[dict]:
    out = []
    for loc, t, c in config.entries:
        if isinstance(loc, str):
            entry = {"where": loc, "type": t.label()}
        elif isinstance(loc, Fraction):
            entry = {"where": _frac_str(loc), "type": t.label()}
        else:
            entry = {"where": {"factor": _compact_poly(loc)}, "type": t.label()}
        if c > 1:
            entry["count"] = c
        out.append(entry)
    return out


def _operator_forms(L: DiffOperator) -> dict:
    primary = []
    for k, p in enumerate(L.polys):
        if p.is_zero():
            continue
        dk = "" if k == 0 else ("*D" if k == 1 else f"*D^{k}")
        primary.append(f"({format_unipoly(p)}){dk}")
    dual = []
    for j, q in enumerate(L.dual_form()):
        if q.is_zero():
            continue
        tj = "" if j == 0 else ("t*" if j == 1 else f"t^{j}*")
        dual.append(f"{tj}({format_unipoly(q)})")
    return {"t_form": " + ".join(primary), "D_form": " + ".join(dual)}


# ---------------------------------------------------------------------------
# analysis report
# ---------------------------------------------------------------------------


def _class_names() -> list[list[str]]:
    cat = load_catalog()
    order = [cat[n] for n in NAMES]
    return [
        sorted(NAMES[i] for i in cls) for cls in mutation_classes(order)
    ]


def _name_of(Q: Polygon) -> str:
    key = tuple(canonical_form(Q).vertices)
    for n in NAMES:
        if tuple(canonical_form(get(n)).vertices) == key:
            return n
    raise KeyError("polygon not in catalog")


def build_report(name: str, period_n: int = 40, with_pf: bool = True) -> dict:
    P = get(name)
    config = classify_fibres(P)
    mw = mw_group(P, config)
    elim = elimination_polynomial(P)
    roots, residual = squarefree_rational_roots(elim)
    factors = [
        {"factor": _compact_poly(UniPoly([-r, 1], "l")), "multiplicity": m}
        for r, m in roots
    ] + [{"factor": _compact_poly(q), "multiplicity": m} for q, m in residual]
    series = period_coefficients(build_fP(P), period_n)
    report = {
        "polygon": name,
        "vertices": [list(v) for v in P.vertices],
        "volume": P.volume(),
        "dual": dual_name(name),
        "mutation_class": next(c for c in _class_names() if name in c),
        "fibres": _fibres_json(config),
        "mw": {
            "rank": mw.rank,
            "torsion": mw.torsion_order,
            "group": mw.group,
            "detT": mw.det_trivial,
            "positions": mw.positions,
        },
        "elimination_factors": factors,
        "period": [_frac_str(c) for c in series.coefficients],
    }
    if mw.height is not None:
        report["mw"]["height_matrix"] = [
            [_frac_str(x) for x in row] for row in mw.height
        ]
    if with_pf:
        L = find_picard_fuchs(series)
        report["picard_fuchs"] = _operator_forms(L)
    return report


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------


def _cache_dir() -> str:
    return os.environ.get(
        "REFLEXO_CACHE",
        os.path.join(os.path.expanduser("~"), ".cache", "reflexo"),
    )


def _cache_key(name: str, config: dict) -> str:
    blob = json.dumps({"name": name, "config": config, "version": VERSION},
                      sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


def _cached_report(name: str, period_n: int, with_pf: bool) -> str:
    config = {"period": period_n, "pf": with_pf}
    path = os.path.join(_cache_dir(), _cache_key(name, config) + ".json")
    if os.path.exists(path):
        with open(path) as fh:
            return fh.read()
    text = json.dumps(build_report(name, period_n, with_pf), indent=2)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return text


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_catalog(args) -> int:
    cat = load_catalog()
    for name in NAMES:
        P = cat[name]
        vs = " ".join(f"({v[0]},{v[1]})" for v in P.vertices)
        print(f"{name}\tvolume={P.volume()}\tdual={dual_name(name)}\t{vs}")
    return 0


def cmd_analyze(args) -> int:
    print(_cached_report(args.name, args.period, not args.no_pf))
    return 0


def _table_row(name: str) -> tuple[str, tuple, str]:
    P = get(name)
    config = classify_fibres(P)
    mw = mw_group(P, config)
    return _fibre_display(config), config.type_multiset(), mw.group


def cmd_table2(args) -> int:
    with ThreadPoolExecutor(max_workers=args.jobs) as ex:
        rows = dict(zip(NAMES, ex.map(_table_row, NAMES)))
    bad = []
    for name in NAMES:
        display, multiset, group = rows[name]
        expect_fibres, expect_group = EXPECTED_TABLE2[name]
        ok = multiset == expect_fibres and group == expect_group
        if not ok:
            bad.append(name)
        line = f"{name:3} | {display:22} | {_group_display(group)}"
        if args.check:
            line += "  [ok]" if ok else "  [MISMATCH]"
        print(line)
    if args.check and bad:
        print(f"mismatches: {', '.join(bad)}", file=sys.stderr)
        return 1
    return 0


def cmd_period(args) -> int:
    series = period_coefficients(build_fP(get(args.name)), args.n)
    for c in series.coefficients:
        print(_frac_str(c))
    return 0


def cmd_pf(args) -> int:
    series = period_coefficients(build_fP(get(args.name)), args.n)
    forms = _operator_forms(find_picard_fuchs(series))
    print(forms["t_form"])
    print(forms["D_form"])
    return 0


def cmd_mutations(args) -> int:
    P = get(args.name)
    for data, Q in all_mutations(P):
        print(
            f"v=({data.v[0]},{data.v[1]}) w=({data.w[0]},{data.w[1]})"
            f" -> {_name_of(Q)}"
        )
    return 0


def cmd_classes(args) -> int:
    for cls in _class_names():
        print(",".join(cls))
    return 0


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

_SCALE = 40
_PAD = 30


def _polygon_svg(P: Polygon) -> str:
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    w = (x1 - x0) * _SCALE + 2 * _PAD
    h = (y1 - y0) * _SCALE + 2 * _PAD

    def pt(x, y):
        return (_PAD + (x - x0) * _SCALE, _PAD + (y1 - y) * _SCALE)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">'
    ]
    hull = " ".join(f"{pt(*v)[0]},{pt(*v)[1]}" for v in P.vertices)
    parts.append(
        f'<polygon points="{hull}" fill="#dce9f7" stroke="#2c5f9e" '
        'stroke-width="2"/>'
    )
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            cx, cy = pt(x, y)
            on = (x, y) in set(P.lattice_points())
            fill = "#2c5f9e" if on else "#c0c0c0"
            parts.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="{fill}"/>')
    ox, oy = pt(0, 0)
    parts.append(
        f'<circle cx="{ox}" cy="{oy}" r="5" fill="none" stroke="#c0392b" '
        'stroke-width="2"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts)


def _fibres_svg(config: FibreConfiguration) -> str:
    labels = []
    for loc, t, c in config.entries:
        if isinstance(loc, str):
            where = loc
        elif isinstance(loc, Fraction):
            where = str(loc)
        else:
            where = _compact_poly(loc)
        for _ in range(c):
            labels.append((t.label(), where))
    w = 120 * len(labels) + 2 * _PAD
    h = 140
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">'
    ]
    for i, (label, where) in enumerate(labels):
        cx = _PAD + 60 + 120 * i
        parts.append(
            f'<circle cx="{cx}" cy="55" r="32" fill="#f7e8dc" '
            'stroke="#9e5f2c" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{cx}" y="60" text-anchor="middle" '
            f'font-family="monospace" font-size="16">{label}</text>'
        )
        parts.append(
            f'<text x="{cx}" y="115" text-anchor="middle" '
            f'font-family="monospace" font-size="11">@{where}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def cmd_svg(args) -> int:
    P = get(args.name)
    if args.what == "polygon":
        print(_polygon_svg(P))
    elif args.what == "dual":
        print(_polygon_svg(polar_dual(P)))
    else:
        print(_fibres_svg(classify_fibres(P)))
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _add_name(p: argparse.ArgumentParser):
    p.add_argument("name", choices=NAMES, metavar="name",
                   help=f"one of: {', '.join(NAMES)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reflexo",
        description="Exact toolkit for the 16 reflexive plane polygons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list the 16 polygons").set_defaults(
        func=cmd_catalog
    )

    p = sub.add_parser("analyze", help="full JSON report for one polygon")
    _add_name(p)
    p.add_argument("--period", type=int, default=40, metavar="N",
                   help="period truncation order (default 40)")
    p.add_argument("--no-pf", action="store_true",
                   help="skip Picard-Fuchs fitting")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table2", help="summary table of fibres and MW groups")
    p.add_argument("--check", action="store_true",
                   help="exit 1 unless every row matches the expected table")
    p.add_argument("--jobs", type=int, default=4, help="worker pool size")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("period", help="period coefficients, one per line")
    _add_name(p)
    p.add_argument("-n", type=int, default=20, help="truncation order")
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("pf", help="Picard-Fuchs operator in both forms")
    _add_name(p)
    p.add_argument("-n", type=int, default=40,
                   help="period truncation used for the fit")
    p.set_defaults(func=cmd_pf)

    p = sub.add_parser("mutations", help="admissible mutations of a polygon")
    _add_name(p)
    p.set_defaults(func=cmd_mutations)

    sub.add_parser("classes", help="mutation classes, one per line").set_defaults(
        func=cmd_classes
    )

    p = sub.add_parser("svg", help="SVG diagram on stdout")
    _add_name(p)
    p.add_argument("what", choices=["polygon", "dual", "fibres"])
    p.set_defaults(func=cmd_svg)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
