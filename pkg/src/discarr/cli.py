"""Command-line interface.

Subcommands: disc build, chi, matroid very-generic, lattice p|closure|sigma|
iso-check, cone facets|cells|report|svg, verify-paper. Arrangements are JSON
documents {"m": ..., "hyperplanes": [{"coeffs": [...], "constant": ...}]};
rationals are "p/q" strings. Exit status: 0 success, 1 failed check, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import charpoly, conegeom, lattice, matroid
from .arrangement import Arrangement, parse, to_dict
from .discriminantal import build_disc
from .exactmath import rat_str
from .fixtures import (
    EXAMPLE_5_1_NORMALS,
    FIXTURE_NAMES,
    Fixture,
    fixture_text,
    load_fixture,
)


def _load_arrangement(path: str) -> Arrangement:
    if path in FIXTURE_NAMES:
        return load_fixture(path).arrangement
    return parse(Path(path).read_text())


def _load_family(path: str) -> list:
    doc = json.loads(Path(path).read_text())
    if not isinstance(doc, list):
        raise ValueError("family file must be a JSON list of integer lists")
    return [tuple(sorted(member)) for member in doc]


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cmd_disc_build(args) -> int:
    arr = _load_arrangement(args.arrangement)
    disc = build_disc(arr.coeffs)
    _print_json(
        {
            "n": disc.n,
            "m": disc.m,
            "subsets": [list(s) for s in disc.subsets],
            "normals": [[rat_str(x) for x in row] for row in disc.normals],
        }
    )
    return 0


def _cmd_chi(args) -> int:
    arr = _load_arrangement(args.arrangement)
    if args.disc:
        normals = build_disc(arr.coeffs)
        n = arr.n
    else:
        normals = [list(arr.coeffs.row(i)) for i in range(arr.n)]
        n = arr.m
    chi = charpoly.whitney_char_poly(normals, ambient=n, impl=args.impl)
    cones = charpoly.count_cones(chi, n)
    agree = True
    if args.oracle:
        chi2 = charpoly.char_poly_via_flats(normals, ambient=n)
        agree = chi2 == chi
    if args.json:
        out = {"chi": str(chi), "coeffs": list(chi.coeffs), "cones": cones}
        if args.oracle:
            out["oracle_agrees"] = agree
        _print_json(out)
    else:
        print(str(chi))
        print(f"cones {cones}")
        if args.oracle:
            print(f"oracle {'agrees' if agree else 'DISAGREES'}")
    return 0 if agree else 1


def _cmd_matroid_vg(args) -> int:
    arr = _load_arrangement(args.arrangement)
    cert = matroid.is_very_generic(arr.coeffs)
    _print_json(
        {
            "verdict": cert.verdict,
            "witness": None if cert.witness is None else [list(s) for s in cert.witness],
        }
    )
    return 0


def _cmd_lattice_p(args) -> int:
    poset = lattice.enumerate_P(args.n, args.k)
    print(f"elements {len(poset)}")
    if args.chi:
        chi = lattice.p_char_poly(args.n, args.k)
        print(str(chi))
        print(f"cones {charpoly.count_cones(chi, args.n)}")
    return 0


def _infer_k(family) -> int:
    sizes = {len(s) for s in family}
    if len(sizes) != 1:
        raise ValueError("family members must all have the same size k+1")
    return sizes.pop() - 1


def _cmd_lattice_closure(args) -> int:
    fam = _load_family(args.family)
    k = args.k if args.k is not None else _infer_k(fam)
    closed = lattice.closure(fam, args.n, k)
    _print_json([list(s) for s in sorted(closed)])
    return 0


def _cmd_lattice_sigma(args) -> int:
    fam = _load_family(args.family)
    k = args.k if args.k is not None else _infer_k(fam)
    sets = lattice.concurrency_sets(fam, args.n, k)
    _print_json([list(s) for s in sets])
    return 0


def _cmd_lattice_iso(args) -> int:
    arr = _load_arrangement(args.arrangement)
    cert = matroid.is_very_generic(arr.coeffs)
    if not cert.verdict:
        print("very-generic false; isomorphism assertion skipped")
        return 0
    report = lattice.p_flats_isomorphism(arr.coeffs)
    print(f"very-generic true; isomorphism {'holds' if report.holds else 'FAILS'}: {report.detail}")
    return 0 if report.holds else 1


def _cmd_cone_facets(args) -> int:
    arr = _load_arrangement(args.arrangement)
    disc = build_disc(arr.coeffs)
    sigma = conegeom.sign_vector(disc, arr.constants)
    rows = conegeom.cone_facets(disc, sigma)
    if args.json:
        _print_json([{"subset": list(s), "facet": f} for s, f in rows])
    else:
        for s, f in rows:
            print(f"{{{','.join(map(str, s))}}} {'facet' if f else '-'}")
    return 0


def _cmd_cone_cells(args) -> int:
    arr = _load_arrangement(args.arrangement)
    cells = conegeom.simplex_cells(arr)
    if args.json:
        _print_json(
            [
                {
                    "hyperplanes": list(c.hyperplanes),
                    "vertices": [[rat_str(x) for x in v] for v in c.vertices],
                }
                for c in cells
            ]
        )
    else:
        for c in cells:
            verts = " ".join("(" + ",".join(rat_str(x) for x in v) + ")" for v in c.vertices)
            print(f"{{{','.join(map(str, c.hyperplanes))}}} {verts}")
    return 0


def _cmd_cone_report(args) -> int:
    arr = _load_arrangement(args.arrangement)
    records = conegeom.correspondence_report(arr)
    if args.json:
        _print_json(
            [
                {"subset": list(r.subset), "cell": r.cell_present, "facet": r.facet}
                for r in records
            ]
        )
    else:
        for r in records:
            tags = []
            if r.cell_present:
                tags.append("cell")
            if r.facet:
                tags.append("facet")
            print(f"{{{','.join(map(str, r.subset))}}} {' '.join(tags) if tags else '-'}")
        broken = [r for r in records if r.cell_present and not r.facet]
        reverse = [r for r in records if r.facet and not r.cell_present]
        print(f"cells-without-facet {len(broken)}")
        print(f"facets-without-cell {len(reverse)}")
    return 0


def _cmd_cone_svg(args) -> int:
    arr = _load_arrangement(args.arrangement)
    svg = conegeom.render_svg(arr)
    Path(args.output).write_text(svg)
    print(f"wrote {args.output}")
    return 0


def _fmt_bool(x: bool) -> str:
    return "true" if x else "false"


def _check_value(fixture: Fixture, check: str) -> str:
    arr = fixture.arrangement
    if check == "disc-normals-printed":
        disc = build_disc(arr.coeffs)
        expected = tuple(
            (s, tuple(int(x) for x in row)) for s, row in zip(disc.subsets, disc.normals)
        )
        return "exact" if expected == EXAMPLE_5_1_NORMALS else "mismatch"
    if check == "disc-cone-count":
        disc = build_disc(arr.coeffs)
        return str(charpoly.count_cones(charpoly.whitney_char_poly(disc), arr.n))
    if check == "disc-cone-count-flats":
        disc = build_disc(arr.coeffs)
        return str(charpoly.count_cones(charpoly.char_poly_via_flats(disc), arr.n))
    if check == "very-generic":
        return _fmt_bool(matroid.is_very_generic(arr.coeffs).verdict)
    if check == "reference-chi":
        return str(lattice.p_char_poly(6, 2))
    if check == "reference-cone-count":
        return str(charpoly.count_cones(lattice.p_char_poly(6, 2), 6))
    if check == "cell-1-2-5":
        cells = {c.hyperplanes for c in conegeom.simplex_cells(arr)}
        return _fmt_bool((1, 2, 5) in cells)
    if check == "facet-1-2-5":
        disc = build_disc(arr.coeffs)
        sigma = conegeom.sign_vector(disc, arr.constants)
        return _fmt_bool(conegeom.is_facet(disc, sigma, (1, 2, 5)))
    if check == "cell-without-facet":
        records = conegeom.correspondence_report(arr)
        return _fmt_bool(any(r.cell_present and not r.facet for r in records))
    if check == "facets-at-least-4":
        disc = build_disc(arr.coeffs)
        sigma = conegeom.sign_vector(disc, arr.constants)
        count = sum(1 for _, f in conegeom.cone_facets(disc, sigma) if f)
        return _fmt_bool(count >= arr.n - arr.m)
    if check == "concurrency-sets":
        from .arrangement import concurrency_report

        rep = concurrency_report(arr)
        return ",".join("{" + ",".join(map(str, s)) + "}" for s in rep.sets)
    if check == "concurrency-family-in-p":
        from .arrangement import concurrency_report

        rep = concurrency_report(arr)
        return _fmt_bool(lattice.in_P(rep.sets, arr.n, arr.m))
    raise KeyError(f"unknown check {check!r}")


def _cmd_verify(args) -> int:
    rows = []
    ok = True
    for name in FIXTURE_NAMES:
        fixture = load_fixture(name)
        for check, expected in fixture.expectations:
            actual = _check_value(fixture, check)
            passed = actual == expected
            ok = ok and passed
            rows.append(
                {
                    "fixture": name,
                    "check": check,
                    "expected": expected,
                    "actual": actual,
                    "pass": passed,
                }
            )
    if args.json:
        _print_json({"results": rows, "pass": ok})
    else:
        width = max(len(r["fixture"] + r["check"]) for r in rows) + 2
        for r in rows:
            label = f"{r['fixture']}:{r['check']}"
            status = "PASS" if r["pass"] else f"FAIL (expected {r['expected']}, got {r['actual']})"
            print(f"{label:<{width}} {status}")
        print("RESULT " + ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discarr",
        description="Exact discriminantal-arrangement toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_disc = sub.add_parser("disc", help="discriminantal construction")
    disc_sub = p_disc.add_subparsers(dest="disc_command", required=True)
    p_build = disc_sub.add_parser("build", help="emit all normals in dictionary order")
    p_build.add_argument("arrangement", help="arrangement JSON file or fixture name")
    p_build.set_defaults(func=_cmd_disc_build)

    p_chi = sub.add_parser("chi", help="characteristic polynomial and cone count")
    p_chi.add_argument("arrangement")
    p_chi.add_argument("--disc", action="store_true", help="use the discriminantal normals")
    p_chi.add_argument("--oracle", action="store_true", help="cross-check against the flats lattice")
    p_chi.add_argument("--impl", choices=("auto", "compiled", "pure"), default="auto")
    p_chi.add_argument("--json", action="store_true")
    p_chi.set_defaults(func=_cmd_chi)

    p_mat = sub.add_parser("matroid", help="Dilworth-matroid tests")
    mat_sub = p_mat.add_subparsers(dest="matroid_command", required=True)
    p_vg = mat_sub.add_parser("very-generic", help="exhaustive very-genericity decision")
    p_vg.add_argument("arrangement")
    p_vg.set_defaults(func=_cmd_matroid_vg)

    p_lat = sub.add_parser("lattice", help="concurrency lattices")
    lat_sub = p_lat.add_subparsers(dest="lattice_command", required=True)
    p_p = lat_sub.add_parser("p", help="enumerate P(n,k)")
    p_p.add_argument("--n", type=int, required=True)
    p_p.add_argument("--k", type=int, required=True)
    p_p.add_argument("--chi", action="store_true", help="print the Moebius polynomial")
    p_p.set_defaults(func=_cmd_lattice_p)
    p_cl = lat_sub.add_parser("closure", help="concurrency closure of a family")
    p_cl.add_argument("family", help="JSON list of integer lists")
    p_cl.add_argument("--n", type=int, required=True)
    p_cl.add_argument("--k", type=int, default=None)
    p_cl.set_defaults(func=_cmd_lattice_closure)
    p_sg = lat_sub.add_parser("sigma", help="concurrency sets of a closed collection")
    p_sg.add_argument("family")
    p_sg.add_argument("--n", type=int, required=True)
    p_sg.add_argument("--k", type=int, default=None)
    p_sg.set_defaults(func=_cmd_lattice_sigma)
    p_iso = lat_sub.add_parser("iso-check", help="P(n,k) vs flats-of-rows isomorphism")
    p_iso.add_argument("arrangement")
    p_iso.set_defaults(func=_cmd_lattice_iso)

    p_cone = sub.add_parser("cone", help="cone facets and simplex cells")
    cone_sub = p_cone.add_subparsers(dest="cone_command", required=True)
    for name, fn, hlp in (
        ("facets", _cmd_cone_facets, "facet status of every discriminantal hyperplane"),
        ("cells", _cmd_cone_cells, "simplex cells with vertices"),
        ("report", _cmd_cone_report, "cell/facet correspondence table"),
    ):
        pc = cone_sub.add_parser(name, help=hlp)
        pc.add_argument("arrangement")
        pc.add_argument("--json", action="store_true")
        pc.set_defaults(func=fn)
    p_svg = cone_sub.add_parser("svg", help="render the line arrangement (m=2)")
    p_svg.add_argument("arrangement")
    p_svg.add_argument("-o", "--output", required=True)
    p_svg.set_defaults(func=_cmd_cone_svg)

    p_ver = sub.add_parser("verify-paper", help="run every bundled expectation")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
