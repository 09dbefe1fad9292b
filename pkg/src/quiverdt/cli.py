"""Command-line front door.

Subcommands: catalog, quiver, relations, monad, count, series, character,
compare.  Exit codes: 0 success, 1 verification mismatch, 2 usage error.
JSON output is deterministic (sorted keys, fixed separators).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, characters, checks, framing, monad, ncalg, partitions
from .qseries import coefficients_in_single_var, format_terms


def _emit_json(data) -> None:
    print(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _load_framing(fq, path: str | None):
    if path is None:
        return framing.FramingStructure.zero(fq)
    with open(path) as handle:
        data = json.load(handle)
    matrices = {
        name: tuple(tuple(Fraction(x) for x in row) for row in rows)
        for name, rows in data.get("arrows", {}).items()
    }
    ranks = {v: int(r) for v, r in data.get("ranks", {}).items()}
    for v in fq.framing_vertices:
        ranks.setdefault(v, 1)
    for a in fq.quiver.arrows:
        if a.marked and a.name not in matrices:
            matrices[a.name] = tuple(
                (Fraction(0),) * ranks[a.src] for _ in range(ranks[a.tgt])
            )
    return framing.FramingStructure(ranks, matrices)


# -- subcommands -------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        for g in catalog.geometry_ids():
            print(f"geometry  {g}")
        for e in catalog.framed_example_ids():
            print(f"framed    {e}")
        for t in catalog.monad_template_ids():
            print(f"monad     {t}")
        return 0
    entry = catalog.get_entry(args.id)
    if args.json:
        _emit_json(
            {
                "geometry": entry.geometry,
                "quiver": entry.quiver.to_json(),
                "potential": entry.potential.to_json(),
                "simples": list(entry.simples),
                "curve_classes": list(entry.curve_classes),
            }
        )
    else:
        print(f"geometry {entry.geometry}")
        print(f"  quiver: vertices {', '.join(entry.quiver.vertices)}")
        for a in entry.quiver.arrows:
            print(f"    {a.name}: {a.src} -> {a.tgt}")
        print(f"  potential: {entry.potential.render()}")
    return 0


def cmd_quiver(args) -> int:
    if args.framed:
        q = catalog.get_framed_example(args.id).quiver
    else:
        q, _ = catalog.get_quiver_with_potential(args.id)
    if args.dot:
        print(q.to_dot())
    else:
        _emit_json(q.to_json())
    return 0


def cmd_relations(args) -> int:
    try:
        fq = catalog.get_framed_example(args.id)
        structure = _load_framing(fq, args.framing)
        rels = framing.framed_relations(framing.specialize(fq, structure))
        quiver, relation_list = rels.quiver, list(rels.relations)
    except catalog.NotInCatalog:
        quiver, w = catalog.get_quiver_with_potential(args.id)
        relation_list = list(ncalg.relations_from_potential(quiver, w))
    if args.json:
        _emit_json(
            [
                {
                    "arrow": r.arrow,
                    "src": r.src,
                    "tgt": r.tgt,
                    "terms": [
                        {"word": list(p.arrows), "coeff": str(c)}
                        for p, c in sorted(
                            r.poly.terms.items(), key=lambda pc: pc[0].sort_key(quiver)
                        )
                    ],
                }
                for r in relation_list
            ]
        )
    else:
        for r in relation_list:
            print(f"d/d{r.arrow}: {r.poly.render(quiver)} = 0    ({r.src} -> {r.tgt})")
    return 0


def cmd_monad(args) -> int:
    tpl = catalog.get_monad_template(args.id)
    if args.id in ("c3", "y20"):
        q, w = catalog.get_quiver_with_potential(args.id)
        rels = ncalg.relations_from_potential(q, w)
        syms = [a.name for a in q.arrows]
    else:
        fq = catalog.get_framed_example(args.id)
        rels = framing.framed_relations(
            framing.specialize(fq, framing.FramingStructure.zero(fq))
        )
        syms = [a.name for a in rels.quiver.arrows]
    c = monad.assemble(tpl, syms, marked_values={name: 0 for name in tpl.marked})
    report = monad.certify_d_squared(c, rels)
    payload = {
        "template": tpl.label,
        "certified": report.certified,
        "components": len(report.entries),
        "failures": [
            {"stage": f.stage, "row": f.row, "col": f.col, "exps": list(f.exps)}
            for f in report.failures
        ],
    }
    if args.numeric:
        with open(args.numeric) as handle:
            data = json.load(handle)
        points = [tuple(Fraction(str(x)) for x in p) for p in data["points"]]
        rep, cyclic = framing.numeric_solution_builder(points)
        dims = {"0": len(points), "inf": 1}
        rep_used = {k: v for k, v in rep.items() if tpl.quiver.has_arrow(k)}
        tables = []
        for p in points:
            res = monad.evaluate(
                c, rep_used, dims, (p[0], p[1], 0), resolution_certified=True
            )
            tables.append(
                {
                    "point": [str(x) for x in (p[0], p[1], 0)],
                    "fiber": res.fiber_cohomology,
                    "sheaf": res.sheaf_fibers,
                }
            )
        payload["numeric"] = {"cyclic": cyclic, "cohomology": tables}
    if args.json:
        _emit_json(payload)
    else:
        print(f"template {tpl.label}: {'certified' if report.certified else 'FAILED'}")
        for f in report.failures:
            print(f"  failure at stage {f.stage} entry ({f.row},{f.col})")
        for t in payload.get("numeric", {}).get("cohomology", []):
            print(f"  point {t['point']}: sheaf cohomology {t['sheaf']}")
    return 0 if report.certified else 1


def cmd_count(args) -> int:
    family = args.family
    if family == "partitions":
        series = partitions.partition_series(args.order)
    elif family == "tuples":
        series = partitions.tuple_series(args.rank, args.order)
    elif family == "nested":
        series = partitions.nested_series(args.rank, args.order)
    elif family == "plane":
        pit = tuple(int(v) for v in args.pit.split(",")) if args.pit else None
        series = partitions.plane_partition_series(args.order, colors=args.colors, pit=pit)
    elif family == "pyramid":
        series = partitions.pyramid_series(args.order)
    elif family == "blowup":
        series = partitions.blowup_series(args.order)
    else:
        print(f"unknown family {family!r}", file=sys.stderr)
        return 2
    if args.json:
        _emit_json(series.to_json())
    else:
        print(format_terms(series, half_vars=("qh",)))
    return 0


def cmd_series(args) -> int:
    from .qseries import euler_factor, macmahon

    if args.formula == "macmahon":
        series = macmahon(None, args.order, vars=("q",))
    elif args.formula == "eta-inverse":
        series = euler_factor(("q",), args.order, power=-1)
    elif args.formula == "eta":
        series = euler_factor(("q",), args.order, power=1)
    elif args.formula == "macmahon-power":
        series = characters.macmahon_power(args.order, args.power)
    else:
        print(f"unknown formula {args.formula!r}", file=sys.stderr)
        return 2
    if args.json:
        _emit_json(series.to_json())
    else:
        print(format_terms(series))
    return 0


def cmd_character(args) -> int:
    if args.divisor:
        mu, nu = _parse_divisor(args.divisor)
        shift = catalog.divisor_to_shift_matrix(args.m, args.n, mu, nu)
    else:
        sub = tuple(int(v) for v in args.shift.replace(";", ",").split(",") if v != "")
        shift = catalog.ShiftMatrix(args.m, args.n, sub)
    series = characters.character_from_shift(shift, args.t, args.order)
    if args.json:
        _emit_json(
            {
                "m": shift.m,
                "n": shift.n,
                "sub": list(shift.sub),
                "t": args.t,
                "series": series.to_json(),
            }
        )
    else:
        coeffs = coefficients_in_single_var(series)
        print(f"shift {shift.sub} (m={shift.m}, n={shift.n}), t={args.t}")
        print(",".join(str(c) for c in coeffs))
    return 0


def _parse_divisor(text: str):
    mu: list[int] = []
    nu: list[int] = []
    for piece in text.split():
        key, _, values = piece.partition("=")
        parts = [int(v) for v in values.split(",") if v != ""]
        if key == "mu":
            mu = parts
        elif key == "nu":
            nu = parts
        else:
            raise ValueError(f"bad divisor component {piece!r}")
    return mu, nu


def cmd_compare(args) -> int:
    if args.target == "all":
        names = list(checks.COMPARE_TARGETS)
    else:
        names = [args.target]
    worst = 0
    results = []
    for name in names:
        try:
            result = checks.run_check(name, args.order)
        except KeyError:
            print(f"unknown compare target {args.target!r}", file=sys.stderr)
            return 2
        results.append(result)
        if not result.equal:
            worst = 1
    if args.json:
        _emit_json(
            [
                {
                    "name": r.name,
                    "equal": r.equal,
                    "order": r.order,
                    "mismatch": None
                    if r.mismatch is None
                    else {"exp": list(r.mismatch[0]), "a": r.mismatch[1], "b": r.mismatch[2]},
                }
                for r in results
            ]
        )
    else:
        for r in results:
            print(r.describe())
    return worst


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverdt",
        description="Quivers with potential, fixed-point counts, and vacuum characters",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or show catalog entries")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("id", nargs="?", help="geometry id for 'show'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("quiver", help="emit a quiver as JSON or DOT")
    p.add_argument("id")
    p.add_argument("--framed", action="store_true", help="treat id as a framed example")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=cmd_quiver)

    p = sub.add_parser("relations", help="print the relation set of an entry")
    p.add_argument("id", help="geometry or framed example id")
    p.add_argument("--framing", help="framing-structure JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_relations)

    p = sub.add_parser("monad", help="verify a monad template")
    p.add_argument("action", choices=["verify"])
    p.add_argument("id")
    p.add_argument("--numeric", help="JSON file with plane points for rank checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_monad)

    p = sub.add_parser("count", help="fixed-point enumerators")
    p.add_argument("family", choices=["partitions", "tuples", "nested", "plane", "pyramid", "blowup"])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--colors", type=int)
    p.add_argument("--pit", help="M,N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("series", help="closed-form series expansions")
    p.add_argument("formula", choices=["macmahon", "macmahon-power", "eta", "eta-inverse"])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("character", help="vacuum character from a shift matrix")
    p.add_argument("--shift", default="0", help='subdiagonal entries, e.g. "0;1"')
    p.add_argument("--divisor", help='partitions, e.g. "mu=3,1 nu=2"')
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_character)

    p = sub.add_parser("compare", help="run a named enumerator-vs-formula check")
    p.add_argument("target", choices=sorted(checks.COMPARE_TARGETS) + ["all"])
    p.add_argument("--order", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_compare)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (catalog.NotInCatalog, KeyError) as exc:
        print(f"not in catalog: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
