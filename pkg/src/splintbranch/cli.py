"""Command-line interface.

Subcommands:

* roots         - describe a root system (simple/positive roots, rho, Cartan matrix)
* character     - weight multiplicities of an irreducible module
* fan           - the carrier of the complementary-root product for a subalgebra
* branch        - branching coefficients by one method or all of them
* compare       - run all applicable methods and report agreement (frontend of
                  `branch --method all`)
* splint-check  - validate a catalog splint: geometry, witnesses, chamber
                  condition, detection cross-check
* bench         - time the methods on a list of weights (TSV)

Formats: json (default), tsv, and a text diagram for rank-2 weight data.

Exit codes: 0 success, 1 methods disagree, 2 invalid configuration or domain
error, 3 splint exists but cannot carry branching.

If the environment variable SPLINTBRANCH_OUTDIR is set, a copy of every
successful command's output is written into that directory.
"""

import argparse
import json
import os
import sys
import time

from .branching import compare_methods, oracle_branching, splint_branching
from .errors import (
    ConfigurationError,
    DomainError,
    SplintbranchError,
    UnsupportedSplintError,
)
from .fan import compute_fan, fan_branching
from .formal import character_via_weyl, freudenthal_character
from .rootsys import build_system, weyl_dimension
from .splint import (
    detect_injective_splint,
    splint_catalog,
    stem_pairing_witnesses,
)


def _parse_weight(text):
    try:
        return tuple(int(x) for x in str(text).replace(" ", "").split(","))
    except ValueError:
        raise ConfigurationError("weights are comma-separated integers, got %r"
                                 % (text,))


def _coords(w):
    return [str(c) for c in w.coords]


def _resolve_pair(algebra, subalgebra):
    """Resolve a (parent, subalgebra) label pair through the splint catalog."""
    sd = splint_catalog(algebra, subalgebra)
    return sd.parent, sd.stem_a, sd


# --- diagram rendering -------------------------------------------------------

def _render_grid(points, xlabel, ylabel):
    """Render integer/fractional lattice data as a text grid.

    `points` maps (x, y) value pairs to integers.  Both axes are laid out
    proportionally to the values (missing lattice sites show as dots).
    """
    if not points:
        return "(empty)"

    def axis(values):
        vals = sorted(set(values))
        if len(vals) == 1:
            return {vals[0]: 0}, 1
        diffs = [b - a for a, b in zip(vals, vals[1:])]
        step = min(diffs)
        for v in vals:
            if (v - vals[0]) % step != 0:
                # fall back to ordinal placement off-lattice
                return {v: i for i, v in enumerate(vals)}, len(vals)
        n = int((vals[-1] - vals[0]) / step) + 1
        return {v: int((v - vals[0]) / step) for v in vals}, n

    xs, nx = axis([p[0] for p in points])
    ys, ny = axis([p[1] for p in points])
    width = max(len(str(c)) for c in points.values())
    width = max(width, 1)
    grid = [["." .rjust(width) for _ in range(nx)] for _ in range(ny)]
    for (x, y), c in points.items():
        grid[ys[y]][xs[x]] = str(c).rjust(width)
    ylabels = {}
    for v, row in ys.items():
        ylabels[row] = str(v)
    lw = max(len(s) for s in ylabels.values())
    lines = ["%s on rows (top = max), %s on columns (left = min)" % (ylabel, xlabel)]
    for row in range(ny - 1, -1, -1):
        lines.append("%s | %s" % (ylabels.get(row, "").rjust(lw),
                                  " ".join(grid[row])))
    return "\n".join(lines)


def _character_points(rs, ch):
    pts = {}
    for w, c in ch.terms.items():
        l = rs.int_labels(w)
        pts[(l[0], l[1])] = c
    return pts


def _branch_points(result):
    pts = {}
    for _, labels, charges, c in result.rows():
        vec = tuple(labels) + tuple(charges)
        if len(vec) != 2:
            raise ConfigurationError(
                "diagram output needs exactly two label/charge axes, got %d"
                % len(vec))
        pts[(vec[0], vec[1])] = c
    return pts


# --- subcommand implementations ---------------------------------------------

def _cmd_roots(args):
    rs = build_system(args.algebra)
    payload = {
        "algebra": rs.label,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "positive_count": len(rs.positive_roots),
        "simple_roots": [_coords(a) for a in rs.simple_roots],
        "positive_roots": [_coords(a) for a in rs.positive_roots],
        "fundamental_weights": [_coords(w) for w in rs.fundamental_weights],
        "rho": _coords(rs.rho),
        "cartan_matrix": [list(row) for row in rs.cartan_matrix],
    }
    if args.format == "tsv":
        lines = []
        for i, a in enumerate(rs.simple_roots):
            lines.append("simple\t%d\t%s" % (i, ",".join(_coords(a))))
        for a in rs.positive_roots:
            lines.append("positive\t%d\t%s" % (rs.height(a), ",".join(_coords(a))))
        for i, w in enumerate(rs.fundamental_weights):
            lines.append("fundamental\t%d\t%s" % (i, ",".join(_coords(w))))
        lines.append("rho\t\t%s" % ",".join(_coords(rs.rho)))
        return "\n".join(lines), 0
    if args.format == "diagram":
        raise ConfigurationError("diagram format supports character and branch")
    return json.dumps(payload, indent=2), 0


def _cmd_character(args):
    rs = build_system(args.algebra)
    mu = rs.weight_from_labels(_parse_weight(args.weight))
    if args.method == "division":
        ch = character_via_weyl(rs, mu)
    else:
        ch = freudenthal_character(rs, mu)
    dim = ch.evaluate_dimension()
    if dim != weyl_dimension(rs, mu):
        raise SplintbranchError("character dimension check failed")  # pragma: no cover
    if args.format == "tsv":
        lines = []
        for w, c in ch.items_sorted(rs):
            lines.append("%s\t%s\t%d" % (
                ",".join(str(x) for x in rs.int_labels(w)),
                ",".join(_coords(w)), c))
        return "\n".join(lines), 0
    if args.format == "diagram":
        if rs.rank != 2:
            raise ConfigurationError("diagram format needs a rank-2 algebra")
        return _render_grid(_character_points(rs, ch),
                            "first label", "second label"), 0
    payload = {
        "algebra": rs.label,
        "weight": list(rs.int_labels(mu)),
        "dimension": dim,
        "character": ch.to_json(rs),
    }
    return json.dumps(payload, indent=2), 0


def _cmd_fan(args):
    parent, sub, _ = _resolve_pair(args.algebra, args.subalgebra)
    fan = compute_fan(parent, sub)
    if args.format == "tsv":
        lines = ["%s\t%d" % (",".join(_coords(g)), s)
                 for g, s in fan.carrier_sorted()]
        return "\n".join(lines), 0
    if args.format == "diagram":
        raise ConfigurationError("diagram format supports character and branch")
    return json.dumps(fan.to_json(), indent=2), 0


def _run_single(method, mu, parent, sub, sd):
    if method == "splint":
        return splint_branching(mu, sd)
    if method == "fan":
        return fan_branching(parent, sub, mu)
    return oracle_branching(mu, parent, sub)


def _branch_all(args, parent, sub, sd, mu):
    report, results = compare_methods(mu, parent, sub, sd=sd)
    code = 0 if report["agree"] else 1
    if args.format == "tsv":
        lines = ["# case\t%s" % report["case"],
                 "# agree\t%s" % str(report["agree"]).lower()]
        for n, ok in sorted(report["dim_check"].items()):
            lines.append("# dim_check[%s]\t%s" % (n, str(ok).lower()))
        for n, msg in sorted(report["unsupported"].items()):
            lines.append("# unsupported[%s]\t%s" % (n, msg))
        names = report["methods"]
        keys = set()
        for n in names:
            keys.update(results[n].coeffs)
        header = "weight_dynkin\tu1_charges\t" + "\t".join(names)
        lines.append(header)
        for k in sorted(keys, key=parent.canonical_key):
            lines.append("%s\t%s\t%s" % (
                ",".join(str(x) for x in sub.int_labels(k)),
                ",".join(str(k.dot(q)) for q in sub.u1_charges),
                "\t".join(str(results[n].coeffs.get(k, 0)) for n in names)))
        return "\n".join(lines), code
    if args.format == "diagram":
        name = report["methods"][0]
        return _render_grid(_branch_points(results[name]),
                            "first axis", "second axis"), code
    return json.dumps(report, indent=2), code


def _cmd_branch(args):
    parent, sub, sd = _resolve_pair(args.algebra, args.subalgebra)
    mu = parent.weight_from_labels(_parse_weight(args.weight))
    if args.method == "all":
        return _branch_all(args, parent, sub, sd, mu)
    result = _run_single(args.method, mu, parent, sub, sd)
    if args.format == "tsv":
        lines = ["weight_dynkin\tu1_charges\tcoeff"]
        for _, labels, charges, c in result.rows():
            lines.append("%s\t%s\t%d" % (
                ",".join(str(x) for x in labels),
                ",".join(str(q) for q in charges), c))
        return "\n".join(lines), 0
    if args.format == "diagram":
        return _render_grid(_branch_points(result),
                            "first axis", "second axis"), 0
    return json.dumps(result.to_json(), indent=2), 0


def _cmd_compare(args):
    args.method = "all"
    return _cmd_branch(args)


def _cmd_splint_check(args):
    sd = splint_catalog(args.algebra, args.subalgebra)
    witnesses = stem_pairing_witnesses(sd)
    detected = detect_injective_splint(sd.parent, sd.stem_a)
    detection_matches = (
        detected is not None
        and detected.coimage_type() == sd.coimage_type()
        and set(detected.stem_s_positives) == set(sd.stem_s_positives))
    from .splint import chamber_condition
    supported = (sd.splint_type != "ii_star" and sd.label_perm is not None
                 and chamber_condition(sd))
    payload = {
        "descriptor": sd.to_json(),
        "witnesses": [
            {
                "image": _coords(beta),
                "sub_simple": _coords(pair[0]),
                "s_root": _coords(pair[1]),
            }
            for beta, pair in sorted(
                witnesses.items(), key=lambda kv: sd.parent.canonical_key(kv[0]))
        ],
        "detection_matches": detection_matches,
        "branching_supported": supported,
    }
    if args.format == "tsv":
        d = payload["descriptor"]
        lines = []
        for k in ("parent", "subalgebra", "stem_a", "coimage", "type",
                  "s_metric", "chamber_ok"):
            lines.append("%s\t%s" % (k, d[k]))
        lines.append("detection_matches\t%s" % detection_matches)
        lines.append("branching_supported\t%s" % supported)
        for row in payload["witnesses"]:
            lines.append("witness\t%s\t%s\t%s" % (
                ",".join(row["image"]), ",".join(row["sub_simple"]),
                ",".join(row["s_root"])))
        return "\n".join(lines), 0
    if args.format == "diagram":
        raise ConfigurationError("diagram format supports character and branch")
    return json.dumps(payload, indent=2), 0


def _cmd_bench(args):
    parent, sub, sd = _resolve_pair(args.algebra, args.subalgebra)
    weights = [w for w in args.weights.split(";") if w]
    methods = [m for m in args.methods.split(",") if m]
    rows = []
    for wtext in weights:
        mu = parent.weight_from_labels(_parse_weight(wtext))
        case = "%s -> %s [%s]" % (
            parent.label, sub.label,
            ",".join(str(c) for c in parent.int_labels(mu)))
        dim = weyl_dimension(parent, mu)
        for method in methods:
            t0 = time.perf_counter()
            try:
                result = _run_single(method, mu, parent, sub, sd)
            except UnsupportedSplintError:
                continue
            ms = (time.perf_counter() - t0) * 1000.0
            ok = result.total_dimension() == dim
            rows.append((case, method, ms, len(result.coeffs), ok))
    if args.format == "json":
        payload = [
            {"case": c, "method": m, "ms": round(ms, 3), "rows": n,
             "dim_check": ok}
            for c, m, ms, n, ok in rows
        ]
        return json.dumps(payload, indent=2), 0
    lines = ["case\tmethod\tms\trows\tdim_check"]
    for c, m, ms, n, ok in rows:
        lines.append("%s\t%s\t%.3f\t%d\t%s" % (c, m, ms, n, "ok" if ok else "FAIL"))
    return "\n".join(lines), 0


# --- parser / entry ----------------------------------------------------------

def _build_parser():
    p = argparse.ArgumentParser(
        prog="splintbranch",
        description="Exact branching coefficients for regular reductive "
                    "subalgebras, by splint transfer, carrier recurrence, "
                    "and character peeling.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_format(sp, choices=("json", "tsv", "diagram")):
        sp.add_argument("--format", choices=choices, default="json")

    sp = sub.add_parser("roots", help="describe a root system")
    sp.add_argument("--algebra", required=True)
    add_format(sp)
    sp.set_defaults(func=_cmd_roots)

    sp = sub.add_parser("character", help="weight multiplicities of a module")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--method", choices=("freudenthal", "division"),
                    default="freudenthal")
    add_format(sp)
    sp.set_defaults(func=_cmd_character)

    sp = sub.add_parser("fan", help="carrier of the complementary-root product")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--subalgebra", required=True)
    add_format(sp)
    sp.set_defaults(func=_cmd_fan)

    sp = sub.add_parser("branch", help="branching coefficients")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--subalgebra", required=True)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--method", choices=("splint", "fan", "oracle", "all"),
                    default="all")
    add_format(sp)
    sp.set_defaults(func=_cmd_branch)

    sp = sub.add_parser("compare", help="run all methods and compare")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--subalgebra", required=True)
    sp.add_argument("--weight", required=True)
    add_format(sp)
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("splint-check", help="validate a catalog splint")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--subalgebra", required=True)
    add_format(sp)
    sp.set_defaults(func=_cmd_splint_check)

    sp = sub.add_parser("bench", help="time the branching methods")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--subalgebra", required=True)
    sp.add_argument("--weights", required=True,
                    help="semicolon-separated weight lists, e.g. '10,10;3,2'")
    sp.add_argument("--methods", default="splint,fan,oracle")
    add_format(sp, choices=("json", "tsv"))
    sp.set_defaults(func=_cmd_bench)

    return p


def _slug(args):
    parts = [args.command]
    for attr in ("algebra", "subalgebra", "weight", "weights", "method"):
        v = getattr(args, attr, None)
        if v:
            parts.append(str(v))
    raw = "_".join(parts)
    return "".join(ch if (ch.isalnum() or ch in "+,_-") else "-" for ch in raw)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UnsupportedSplintError as exc:
        print("unsupported splint: %s" % exc, file=sys.stderr)
        return 3
    except (ConfigurationError, DomainError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print(text)
    outdir = os.environ.get("SPLINTBRANCH_OUTDIR")
    if outdir:
        ext = {"json": "json", "tsv": "tsv", "diagram": "txt"}.get(
            getattr(args, "format", "json"), "txt")
        os.makedirs(outdir, exist_ok=True)
        path = os.path.join(outdir, "%s.%s" % (_slug(args), ext))
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
