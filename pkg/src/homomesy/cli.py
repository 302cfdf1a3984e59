"""Command line interface.

    homomesy check SYSTEM [flags]      full-space homomesy verdict
    homomesy orbits SYSTEM [flags]     orbit listing, all orbits or one --seed
    homomesy subspace SYSTEM [flags]   homomesic subspace over indicators

Systems: grid-rowmotion-ideals, grid-rowmotion-antichains,
grid-promotion-ideals, grid-promotion-antichains (all need --a/--b),
ballot and cyclic-inversions (--a minus letters, --b plus letters),
reversal-inversions (--n), lyness (--seed "x,y", rationals), sandpile
(--graph FILE), suter (--n), ssyt (--a rows, --b columns, --k ceiling).

Statistic selection (--stat): ideal-size / antichain-size (grids), ballot,
inversions, firing-vector, weight or weight:i,j (suter), cells:all or
cells:r,c;r,c (ssyt). Exit codes: 0 success, 2 usage, 3 guard exceeded,
4 an --expect-c expectation failed.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .dynamics import (
    format_pm_word,
    parse_pm_word,
    promotion_antichain,
    promotion_ideal,
    rowmotion_antichain,
    rowmotion_ideal,
)
from .engine import (
    Statistic,
    check_homomesy,
    iterate_orbit,
    orbit_average,
    orbit_partition,
    rational_nullspace,
)
from .gallery.lyness import LynessState, abs_h, lyness_cycle, lyness_orbit_product
from .gallery.sandpile import (
    SandpileGraph,
    firing_statistic,
    sandpile_recurrents,
    sandpile_tau,
)
from .gallery.ssyt import SSYT, all_cells, cell_sum_statistic, rect_tableaux, ssyt_promotion
from .gallery.suter import (
    diagonal_weight_statistic,
    staircase_diagrams,
    suter_rho,
    weight_statistic,
)
from .gallery.words import ballot_indicator, left_shift, pm_inversions, pm_words
from .guards import GuardExceeded
from .posets import GridPoset
from .rationals import format_rational, parse_rational_vector

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_EXPECTATION = 0, 2, 3, 4

GRID_SYSTEMS = (
    "grid-rowmotion-ideals",
    "grid-rowmotion-antichains",
    "grid-promotion-ideals",
    "grid-promotion-antichains",
)
SYSTEMS = GRID_SYSTEMS + (
    "ballot",
    "cyclic-inversions",
    "reversal-inversions",
    "lyness",
    "sandpile",
    "suter",
    "ssyt",
)


class UsageError(Exception):
    pass


@dataclass
class Bundle:
    system: str
    map_name: str
    space_doc: dict
    space: list
    tau: Callable
    statistic: Statistic
    to_json: Callable
    to_text: Callable
    parse_seed: Optional[Callable]


def _require(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"system {args.system!r} requires --{name}")


def _pick_stat(args, options: dict, default: str) -> Statistic:
    """options maps a stat name (or a name prefix ending in ':') to a builder."""
    wanted = args.stat if args.stat is not None else default
    if wanted in options:
        return options[wanted]()
    for key, builder in options.items():
        if key.endswith(":") and wanted.startswith(key):
            return builder(wanted[len(key):])
    raise UsageError(
        f"unknown statistic {wanted!r} for {args.system}; "
        f"choose from {', '.join(sorted(options))}"
    )


# -- per-system bundles -------------------------------------------------------

def _grid_bundle(args) -> Bundle:
    _require(args, ["a", "b"])
    poset = GridPoset(args.a, args.b)
    on_ideals = args.system.endswith("-ideals")
    promo = "promotion" in args.system
    if on_ideals:
        space = poset.enumerate_order_ideals(args.guard)
        tau = (lambda s: promotion_ideal(poset, s)) if promo else (
            lambda s: rowmotion_ideal(poset, s))
        stat = _pick_stat(args, {"ideal-size": lambda: Statistic.scalar("ideal-size", len)},
                          "ideal-size")
        kind = "order-ideals"

        def parse_seed(text):
            pairs = _parse_cell_pairs(text)
            # any generating set works: the seed ideal is its down closure
            return poset.down_closure(pairs)
    else:
        space = poset.enumerate_antichains(args.guard)
        tau = (lambda s: promotion_antichain(poset, s)) if promo else (
            lambda s: rowmotion_antichain(poset, s))
        stat = _pick_stat(args, {"antichain-size": lambda: Statistic.scalar("antichain-size", len)},
                          "antichain-size")
        kind = "antichains"

        def parse_seed(text):
            return poset.antichain(_parse_cell_pairs(text))

    map_name = ("promotion" if promo else "rowmotion") + " on " + kind.replace("-", " ")
    return Bundle(
        system=args.system,
        map_name=map_name,
        space_doc={"kind": kind, "poset": {"a": poset.a, "b": poset.b},
                   "states": len(space)},
        space=space,
        tau=tau,
        statistic=stat,
        to_json=poset.state_pairs,
        to_text=lambda s: json.dumps(poset.state_pairs(s), separators=(",", ":")),
        parse_seed=parse_seed,
    )


def _parse_cell_pairs(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"seed must be a JSON list of [k,l] pairs: {exc}") from None
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)
        for p in data
    ):
        raise UsageError("seed must be a JSON list of [k,l] integer pairs")
    return [tuple(p) for p in data]


def _word_bundle(args) -> Bundle:
    _require(args, ["a", "b"])
    space = pm_words(args.a, args.b, args.guard)
    if args.system == "ballot":
        stat = _pick_stat(args, {"ballot": lambda: Statistic.scalar("ballot", ballot_indicator)},
                          "ballot")
    else:
        stat = _pick_stat(args, {"inversions": lambda: Statistic.scalar("inversions", pm_inversions)},
                          "inversions")

    def parse_seed(text):
        word = parse_pm_word(text)
        if len(word) != args.a + args.b or word.count(-1) != args.a:
            raise UsageError(
                f"seed word needs {args.a} minus letters and {args.b} plus letters")
        return word

    return Bundle(
        system=args.system,
        map_name="leftward rotation",
        space_doc={"kind": "pm-words", "minus": args.a, "plus": args.b,
                   "states": len(space)},
        space=space,
        tau=left_shift,
        statistic=stat,
        to_json=format_pm_word,
        to_text=format_pm_word,
        parse_seed=parse_seed,
    )


def _reversal_bundle(args) -> Bundle:
    from .gallery.words import reversal_inversions_system

    _require(args, ["n"])
    space, tau, stat = reversal_inversions_system(args.n, args.guard)
    stat = _pick_stat(args, {"inversions": lambda: stat}, "inversions")

    def parse_seed(text):
        try:
            perm = tuple(int(v) for v in text.split(","))
        except ValueError:
            raise UsageError("seed must be a comma-separated permutation, e.g. 2,3,1") from None
        if sorted(perm) != list(range(1, args.n + 1)):
            raise UsageError(f"seed must be a permutation of 1..{args.n}")
        return perm

    return Bundle(
        system=args.system,
        map_name="reversal",
        space_doc={"kind": "permutations", "n": args.n, "states": len(space)},
        space=space,
        tau=tau,
        statistic=stat,
        to_json=list,
        to_text=lambda s: ",".join(str(v) for v in s),
        parse_seed=parse_seed,
    )


def _sandpile_bundle(args) -> Bundle:
    if args.graph is None:
        raise UsageError("system 'sandpile' requires --graph FILE")
    try:
        graph = SandpileGraph.from_file(args.graph)
    except OSError as exc:
        raise UsageError(f"cannot read graph file: {exc}") from None
    space = sandpile_recurrents(graph, args.guard)
    stat = _pick_stat(args, {"firing-vector": lambda: firing_statistic(graph)},
                      "firing-vector")

    def parse_seed(text):
        try:
            config = tuple(int(v) for v in text.split(","))
        except ValueError:
            raise UsageError("seed must be comma-separated grain counts, e.g. 1,0,1") from None
        config = graph.validate_config(config)
        if config not in set(space):
            raise UsageError("seed is not a recurrent configuration of this graph")
        return config

    return Bundle(
        system=args.system,
        map_name="drop a grain on the source, then stabilize",
        space_doc={"kind": "recurrent-configurations",
                   "vertices": list(graph.nonsink), "sink": graph.sink,
                   "source": graph.source, "states": len(space)},
        space=space,
        tau=lambda s: sandpile_tau(graph, s, args.guard),
        statistic=stat,
        to_json=list,
        to_text=lambda s: ",".join(str(v) for v in s),
        parse_seed=parse_seed,
    )


def _suter_bundle(args) -> Bundle:
    _require(args, ["n"])
    n = args.n
    space = staircase_diagrams(n, args.guard)

    def refined(param: str) -> Statistic:
        try:
            i, j = (int(v) for v in param.split(","))
        except ValueError:
            raise UsageError("refined weight statistic is written weight:i,j") from None
        try:
            return diagonal_weight_statistic(n, i, j)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    stat = _pick_stat(args, {"weight": lambda: weight_statistic(n), "weight:": refined},
                      "weight")

    def parse_seed(text):
        text = text.strip()
        if text in ("", "[]"):
            diagram = ()
        else:
            try:
                diagram = tuple(int(v) for v in text.split(","))
            except ValueError:
                raise UsageError("seed must be comma-separated parts, e.g. 2,1") from None
        from .gallery.suter import is_staircase_member

        if not is_staircase_member(n, diagram):
            raise UsageError(f"{diagram} does not fit in the staircase for n = {n}")
        return diagram

    return Bundle(
        system=args.system,
        map_name=f"suter rotation on the staircase family Y_{n}",
        space_doc={"kind": "staircase-diagrams", "n": n, "states": len(space)},
        space=space,
        tau=lambda lam: suter_rho(n, lam),
        statistic=stat,
        to_json=list,
        to_text=lambda lam: ",".join(str(p) for p in lam) if lam else "[]",
        parse_seed=parse_seed,
    )


def _ssyt_bundle(args) -> Bundle:
    _require(args, ["a", "b", "k"])
    nrows, ncols, ceiling = args.a, args.b, args.k
    space = rect_tableaux(nrows, ncols, ceiling, args.guard)
    if not space:
        raise UsageError(
            f"no tableaux: ceiling {ceiling} is below the number of rows {nrows}")

    def cells_stat(param: str) -> Statistic:
        cells = []
        for chunk in param.split(";"):
            try:
                r, c = (int(v) for v in chunk.split(","))
            except ValueError:
                raise UsageError("cell sets are written cells:r,c;r,c") from None
            if not (1 <= r <= nrows and 1 <= c <= ncols):
                raise UsageError(f"cell ({r},{c}) outside the {nrows} x {ncols} rectangle")
            cells.append((r, c))
        return cell_sum_statistic(cells)

    stat = _pick_stat(
        args,
        {"cells:all": lambda: cell_sum_statistic(all_cells(nrows, ncols), name="cells:all"),
         "cells:": cells_stat},
        "cells:all",
    )

    def parse_seed(text):
        try:
            rows = tuple(
                tuple(int(v) for v in chunk.split(","))
                for chunk in text.split(";")
            )
            return SSYT(ceiling, rows)
        except ValueError as exc:
            raise UsageError(f"bad tableau seed: {exc}") from None

    return Bundle(
        system=args.system,
        map_name="tableau promotion (Bender-Knuth composite, BK_1 first)",
        space_doc={"kind": "rectangular-ssyt", "rows": nrows, "cols": ncols,
                   "ceiling": ceiling, "states": len(space)},
        space=space,
        tau=ssyt_promotion,
        statistic=stat,
        to_json=lambda t: [list(row) for row in t.rows],
        to_text=lambda t: ";".join(",".join(str(v) for v in row) for row in t.rows),
        parse_seed=parse_seed,
    )


def build_bundle(args) -> Bundle:
    if args.system in GRID_SYSTEMS:
        return _grid_bundle(args)
    if args.system in ("ballot", "cyclic-inversions"):
        return _word_bundle(args)
    if args.system == "reversal-inversions":
        return _reversal_bundle(args)
    if args.system == "sandpile":
        return _sandpile_bundle(args)
    if args.system == "suter":
        return _suter_bundle(args)
    if args.system == "ssyt":
        return _ssyt_bundle(args)
    raise UsageError(f"unknown system {args.system!r}")


# -- output -------------------------------------------------------------------

def _fmt_average(average) -> str:
    if len(average) == 1:
        return format_rational(average[0])
    return "(" + ", ".join(format_rational(v) for v in average) + ")"


def _csv_average(average) -> str:
    return ";".join(format_rational(v) for v in average)


def _print_orbit_table(header_lines, rows, footer_lines):
    for line in header_lines:
        print(line)
    if not rows:
        for line in footer_lines:
            print(line)
        return
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    titles = ("orbit", "period", "average", "representative")
    widths = [max(w, len(t)) for w, t in zip(widths, titles)]
    print("  ".join(t.ljust(w) for t, w in zip(titles, widths)))
    for row in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(row, widths)))
    for line in footer_lines:
        print(line)


def _emit_orbit_listing(args, doc, summaries, bundle, footer_lines):
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["representative", "period", "average"])
        for s in summaries:
            writer.writerow([bundle.to_text(s.representative), s.period,
                             _csv_average(s.average)])
    else:
        header = [
            f"system: {bundle.system}",
            f"map: {bundle.map_name}",
            f"space: {json.dumps(bundle.space_doc, separators=(',', ': '))}",
            f"statistic: {bundle.statistic.name}",
        ]
        rows = [
            (idx, s.period, _fmt_average(s.average), bundle.to_text(s.representative))
            for idx, s in enumerate(summaries, start=1)
        ]
        _print_orbit_table(header, rows, footer_lines)


def _check_expectation(args, homomesic: bool, c) -> int:
    if args.expect_c is None:
        return EXIT_OK
    try:
        expected = parse_rational_vector(args.expect_c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not homomesic:
        print(f"expectation failed: not homomesic (expected c = {args.expect_c})",
              file=sys.stderr)
        return EXIT_EXPECTATION
    if tuple(c) != expected:
        got = ", ".join(format_rational(v) for v in c)
        print(f"expectation failed: c = {got}, expected {args.expect_c}",
              file=sys.stderr)
        return EXIT_EXPECTATION
    return EXIT_OK


# -- commands -----------------------------------------------------------------

def run_check(args) -> int:
    if args.system == "lyness":
        return _run_lyness(args, verdict=True)
    if args.seed is not None:
        raise UsageError("'check' sweeps the whole space; --seed only applies to "
                         "'orbits' (and to lyness)")
    bundle = build_bundle(args)
    report = check_homomesy(bundle.tau, bundle.space, bundle.statistic, guard=args.guard)
    doc = report.document(map_name=bundle.map_name, space=bundle.space_doc,
                          serialize_state=bundle.to_json)
    footer = [
        f"homomesic: {'yes' if report.homomesic else 'no'}",
        f"c: {_fmt_average(report.c) if report.homomesic else '-'}",
        f"global average: {_fmt_average(report.global_average)}",
    ]
    _emit_orbit_listing(args, doc, report.orbit_summaries, bundle, footer)
    return _check_expectation(args, report.homomesic, report.c)


def run_orbits(args) -> int:
    if args.system == "lyness":
        return _run_lyness(args, verdict=False)
    bundle = build_bundle(args)
    if args.seed is not None:
        if bundle.parse_seed is None:
            raise UsageError(f"system {args.system!r} does not take a seed")
        orbits = [iterate_orbit(bundle.tau, bundle.parse_seed(args.seed), args.guard)]
    else:
        orbits = orbit_partition(bundle.tau, bundle.space, args.guard)
    from .engine import OrbitSummary

    summaries = [
        OrbitSummary(o.representative, o.period, orbit_average(bundle.statistic, o))
        for o in orbits
    ]
    doc = {
        "map": bundle.map_name,
        "space": bundle.space_doc,
        "statistic": bundle.statistic.name,
        "orbits": [
            {
                "representative": bundle.to_json(s.representative),
                "period": s.period,
                "average": format_rational(s.average[0]) if len(s.average) == 1
                else [format_rational(v) for v in s.average],
            }
            for s in summaries
        ],
    }
    _emit_orbit_listing(args, doc, summaries, bundle, [])
    return EXIT_OK


def _run_lyness(args, verdict: bool) -> int:
    seed_text = args.seed if args.seed is not None else "1,3"
    parts = seed_text.split(",")
    if len(parts) != 2:
        raise UsageError('lyness seed is two rationals, e.g. --seed "5/3,2/3"')
    try:
        values = parse_rational_vector(seed_text)
        state = LynessState(*values)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad lyness seed: {exc}") from None
    cycle = lyness_cycle(state)
    product = lyness_orbit_product(state)
    homomesic = product == 1
    doc = {
        "map": "lyness step (x, y) -> (y, (y+1)/x)",
        "space": {"kind": "rational-pairs",
                  "constraints": "x, y, x+1, y+1, x+y+1 all nonzero"},
        "statistic": "log|h(x)| with h(z) = 1/z + 1/z^2, certified by the exact "
                     "product of |h(x)| over the orbit",
        "orbits": [{
            "representative": [format_rational(state.x), format_rational(state.y)],
            "period": len(cycle),
            "states": [[format_rational(s.x), format_rational(s.y)] for s in cycle],
            "abs-h-values": [format_rational(abs_h(s.x)) for s in cycle],
            "abs-h-product": format_rational(product),
        }],
        "homomesic": homomesic,
        "c": "0" if homomesic else None,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["x", "y", "abs_h_of_x"])
        for s in cycle:
            writer.writerow([format_rational(s.x), format_rational(s.y),
                             format_rational(abs_h(s.x))])
    else:
        print("system: lyness")
        print(f"orbit of ({format_rational(state.x)}, {format_rational(state.y)}):"
              f" period {len(cycle)}")
        for s in cycle:
            print(f"  ({format_rational(s.x)}, {format_rational(s.y)})"
                  f"   |h(x)| = {format_rational(abs_h(s.x))}")
        print(f"product of |h(x)| over the orbit: {format_rational(product)}")
        if verdict:
            print(f"homomesic: {'yes (log|h| is 0-mesic)' if homomesic else 'no'}")
    if verdict:
        return _check_expectation(args, homomesic, (Fraction(0),))
    return EXIT_OK


def run_subspace(args) -> int:
    if args.system not in GRID_SYSTEMS:
        raise UsageError("'subspace' is available for the grid systems only")
    if args.expect_c is not None:
        raise UsageError("--expect-c does not apply to 'subspace'")
    _require(args, ["a", "b"])
    poset = GridPoset(args.a, args.b)
    on_ideals = args.system.endswith("-ideals")
    promo = "promotion" in args.system
    if on_ideals:
        space = poset.enumerate_order_ideals(args.guard)
        tau = (lambda s: promotion_ideal(poset, s)) if promo else (
            lambda s: rowmotion_ideal(poset, s))
    else:
        space = poset.enumerate_antichains(args.guard)
        tau = (lambda s: promotion_antichain(poset, s)) if promo else (
            lambda s: rowmotion_antichain(poset, s))

    elements = poset.elements
    basis = [
        Statistic.scalar(f"indicator[{k},{l}]",
                         (lambda i: lambda s: s.mask >> i & 1)(poset.index[(k, l)]))
        for (k, l) in elements
    ]
    orbits = orbit_partition(tau, space, args.guard)
    averages = [[orbit_average(b, o)[0] for b in basis] for o in orbits]
    reference = averages[0]
    rows = [[row[j] - reference[j] for j in range(len(basis))] for row in averages[1:]]
    vectors = rational_nullspace(rows, num_columns=len(basis))

    def present(coeffs) -> bool:
        dots = [
            sum((c * row[j] for j, c in enumerate(coeffs)), Fraction(0))
            for row in averages
        ]
        return all(d == dots[0] for d in dots)

    generators = []
    if on_ideals:
        for f in poset.files:
            coeffs = [1 if l - k == f else 0 for (k, l) in elements]
            generators.append((f"file-sum[{f}]", coeffs))
        for x in elements:
            y = poset.opposite(x)
            if x > y:
                continue
            coeffs = [0] * len(elements)
            coeffs[poset.index[x]] += 1
            coeffs[poset.index[y]] += 1
            generators.append((f"opposite-sum[{x}+{y}]", coeffs))
    else:
        for k in range(1, poset.a + 1):
            coeffs = [1 if kk == k else 0 for (kk, _) in elements]
            generators.append((f"fiber-sum[k={k}]", coeffs))
        for l in range(1, poset.b + 1):
            coeffs = [1 if ll == l else 0 for (_, ll) in elements]
            generators.append((f"fiber-sum[l={l}]", coeffs))
        for x in elements:
            y = poset.opposite(x)
            if x >= y:
                continue
            coeffs = [0] * len(elements)
            coeffs[poset.index[x]] = 1
            coeffs[poset.index[y]] = -1
            generators.append((f"opposite-difference[{x}-{y}]", coeffs))

    checked = [(name, present(coeffs)) for name, coeffs in generators]
    doc = {
        "system": args.system,
        "space": {"kind": "order-ideals" if on_ideals else "antichains",
                  "poset": {"a": poset.a, "b": poset.b}, "states": len(space)},
        "element_order": [[k, l] for (k, l) in elements],
        "dimension": len(vectors),
        "basis": [[format_rational(v) for v in vec] for vec in vectors],
        "generators": [{"name": name, "present": ok} for name, ok in checked],
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow([f"{k},{l}" for (k, l) in elements])
        for vec in vectors:
            writer.writerow([format_rational(v) for v in vec])
    else:
        print(f"system: {args.system}")
        print(f"space: {len(space)} states over [{poset.a}]x[{poset.b}]")
        print(f"element order: {', '.join(str(x) for x in elements)}")
        print(f"dimension: {len(vectors)}")
        print("basis vectors:")
        for vec in vectors:
            print("  [" + ", ".join(format_rational(v) for v in vec) + "]")
        print("named generators:")
        for name, ok in checked:
            print(f"  {'present' if ok else 'ABSENT '}  {name}")
    return EXIT_OK


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homomesy",
        description="Detect and verify homomesy with exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("check", "full-space homomesy verdict for a system and statistic"),
        ("orbits", "orbit listing: representative, period, statistic average"),
        ("subspace", "homomesic subspace over element-indicator statistics"),
    ):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument("system", choices=SYSTEMS)
        cmd.add_argument("--a", type=int)
        cmd.add_argument("--b", type=int)
        cmd.add_argument("--n", type=int)
        cmd.add_argument("--k", type=int)
        cmd.add_argument("--stat")
        cmd.add_argument("--seed")
        cmd.add_argument("--expect-c", dest="expect_c",
                         help="fail (exit 4) unless homomesic with this constant, "
                              "e.g. 3/2 or 1/2,1,1/2 for vector statistics")
        cmd.add_argument("--format", choices=("table", "json", "csv"), default="table")
        cmd.add_argument("--guard", type=int,
                         help="state/step budget replacing the defaults")
        cmd.add_argument("--graph", help="sandpile graph file")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return run_check(args)
        if args.command == "orbits":
            return run_orbits(args)
        return run_subspace(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
