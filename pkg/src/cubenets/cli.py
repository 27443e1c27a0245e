"""Command-line front end: build graphs, audit rules, emit metric and
reliability tables as CSV/plain text, and diff them against published
reference values.

Exit status: 0 on success (and, for diffing commands, all cells within
tolerance); 1 when a computation finishes but an invariant or diff fails;
2 for unusable arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from fractions import Fraction

from . import reference
from .comms import broadcast_schedule, route_greedy, route_oracle, schedule_violations
from .metrics import average_distance, cef, metrics_report, tcef
from .paths import classify_paths, max_disjoint_paths
from .reliability import (
    ReliabilityParams,
    derive_and_evaluate,
    terminal_reliability,
    terminal_reliability_curve,
)
from .topology import (
    DisconnectedGraphError,
    Family,
    MalformedLabelError,
    TopologySpec,
    UnsupportedFamilyError,
    audit_graph,
    build_graph,
    graph_to_json,
)

# All-pairs style work is refused above these dimensions.
HEAVY_DIM_CAP = {2: 12, 4: 5}


def _parse_label(text: str, spec: TopologySpec) -> tuple[int, ...]:
    try:
        digits = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise MalformedLabelError(
            f"label {text!r} is not comma-separated digits"
        ) from None
    return spec.check_label(digits)


def _spec_from_args(args: argparse.Namespace, heavy: bool) -> TopologySpec:
    spec = TopologySpec(Family.parse(args.family), args.dim)
    cap = HEAVY_DIM_CAP[spec.radix]
    if heavy and spec.dimension > cap:
        raise ValueError(
            f"dimension {spec.dimension} exceeds the cap of {cap} for "
            f"{spec.family.value} on this subcommand"
        )
    return spec


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        parent = os.path.dirname(os.path.abspath(out_path))
        os.makedirs(parent, exist_ok=True)
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_build(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args, heavy=False)
    _emit(graph_to_json(build_graph(spec)), args.out)
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args, heavy=True)
    report = audit_graph(spec)
    _emit(report.to_json() if args.format == "json" else report.to_text(), args.out)
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args, heavy=True)
    report = metrics_report(build_graph(spec))
    if args.format == "json":
        text = report.to_json()
    elif args.format == "csv":
        text = report.to_csv()
    else:
        text = report.to_text()
    _emit(text, args.out)
    return 0


def _avgdist_rows() -> tuple[list[list[str]], int]:
    rows = []
    failures = 0
    for family in ("hc", "bh", "bvh"):
        for n in reference.DIMENSION_GRID:
            ref = reference.AVG_DISTANCE_REFERENCE[family][n]
            graph = build_graph(TopologySpec(Family.parse(family), n))
            computed = float(average_distance(graph, "from_origin"))
            ok = abs(computed - ref) <= reference.AVG_DISTANCE_TOLERANCE
            failures += 0 if ok else 1
            rows.append(
                [family, str(n), f"{ref:.6f}", f"{computed:.6f}",
                 f"{abs(computed - ref):.6f}", "pass" if ok else "fail"]
            )
    return rows, failures


def _factor_rows(kind: str) -> tuple[list[list[str]], int]:
    table = reference.CEF_REFERENCE if kind == "cef" else reference.TCEF_REFERENCE
    tol = reference.CEF_TOLERANCE if kind == "cef" else reference.TCEF_TOLERANCE
    fn = cef if kind == "cef" else tcef
    rows = []
    failures = 0
    for n in reference.DIMENSION_GRID:
        for rho in reference.RHO_GRID:
            ref = table[(n, rho)]
            computed = fn(n, rho)
            ok = abs(computed - ref) <= tol
            failures += 0 if ok else 1
            rows.append(
                [str(n), f"{rho:.1f}", f"{ref:.6f}", f"{computed:.6f}",
                 f"{abs(computed - ref):.6f}", "pass" if ok else "fail"]
            )
    return rows, failures


def _cmd_tables(args: argparse.Namespace) -> int:
    wanted = ("avgdist", "cef", "tcef") if args.table == "all" else (args.table,)
    total_failures = 0
    total_cells = 0
    for kind in wanted:
        if kind == "avgdist":
            header = ["family", "dimension", "reference", "computed", "delta", "status"]
            rows, failures = _avgdist_rows()
        else:
            header = ["dimension", "rho", "reference", "computed", "delta", "status"]
            rows, failures = _factor_rows(kind)
        path = f"{args.out_dir}/{kind}.csv" if args.out_dir else None
        text = _csv_text(header, rows)
        if path:
            _emit(text, path)
        else:
            sys.stdout.write(text)
        for row in rows:
            if row[-1] == "fail":
                print(
                    f"FAIL {kind} {' '.join(row[:-4])} reference={row[-4]} "
                    f"computed={row[-3]} delta={row[-2]}",
                    file=sys.stderr,
                )
        total_failures += failures
        total_cells += len(rows)
    print(
        f"tables diff: {total_cells - total_failures}/{total_cells} cells within "
        f"tolerance",
        file=sys.stderr,
    )
    return 0 if total_failures == 0 else 1


def _cmd_route(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args, heavy=True)
    graph = build_graph(spec)
    source = _parse_label(args.source, spec)
    target = _parse_label(args.target, spec)
    if args.policy == "greedy":
        trace = route_greedy(graph, source, target)
    else:
        trace = route_oracle(graph, source, target)
    trace.validate(graph)
    _emit(trace.to_text(), args.out)
    return 0


def _cmd_broadcast(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args, heavy=True)
    graph = build_graph(spec)
    schedule = broadcast_schedule(graph, _parse_label(args.root, spec))
    problems = schedule_violations(graph, schedule)
    if problems:
        for problem in problems:
            print(f"invariant violation: {problem}", file=sys.stderr)
        return 1
    _emit(
        schedule.to_json() if args.format == "json" else schedule.to_text(), args.out
    )
    return 0


def _cmd_paths(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args, heavy=True)
    graph = build_graph(spec)
    source = _parse_label(args.source, spec)
    target = _parse_label(args.target, spec)
    path_set = max_disjoint_paths(graph, source, target)
    classes = classify_paths(path_set)
    if args.format == "json":
        _emit(path_set.to_json(), args.out)
    else:
        _emit(path_set.to_text() + "classes: " + classes.to_text() + "\n", args.out)
    return 0


def _cmd_reliability(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args, heavy=True)
    params = ReliabilityParams(
        r_link=args.rl,
        r_proc=args.rp,
        lambda_link=args.lambda_link,
        lambda_proc=args.lambda_proc,
    )
    use_reference = args.reference_classes
    use_derived = args.source is not None or args.target is not None
    if not use_reference and not use_derived:
        raise ValueError(
            "give --reference-classes and/or both --source and --target"
        )
    if use_derived and (args.source is None or args.target is None):
        raise ValueError("--source and --target must be given together")

    lines: list[str] = []
    curve_columns: list[tuple[str, tuple[tuple[int, int, int], ...]]] = []
    if use_derived:
        graph = build_graph(spec)
        source = _parse_label(args.source, spec)
        target = _parse_label(args.target, spec)
        value, classes = derive_and_evaluate(graph, source, target, params)
        lines.append(
            f"terminal reliability (computed classes: {classes.to_text()}): "
            f"{value:.6f}"
        )
        curve_columns.append(("computed", classes.as_triples()))
    if use_reference:
        key = (spec.family.value, spec.dimension)
        if key not in reference.RELIABILITY_CLASSES:
            raise ValueError(
                f"no reference classes for {spec.family.value} dimension "
                f"{spec.dimension}"
            )
        triples = reference.RELIABILITY_CLASSES[key]
        value = terminal_reliability(triples, params.r_link, params.r_proc)
        shown = "; ".join(f"{k} path(s) with {m} links / {p} processors" for k, m, p in triples)
        lines.append(f"terminal reliability (reference classes: {shown}): {value:.6f}")
        curve_columns.append(("reference", triples))

    if args.curve:
        times = [float(t) for t in range(0, args.t_max + 1, args.t_step)]
        header = ["t_hours"] + [f"reliability_{name}" for name, _ in curve_columns]
        series = [
            terminal_reliability_curve(
                triples, params.lambda_link, params.lambda_proc, times
            )
            for _, triples in curve_columns
        ]
        rows = [
            [f"{times[i]:.1f}"] + [f"{column[i][1]:.6f}" for column in series]
            for i in range(len(times))
        ]
        _emit(_csv_text(header, rows), args.out)
        return 0
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubenets",
        description="Build and analyze hypercube-family interconnection networks",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_family_dim(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, choices=[f.value for f in Family])
        p.add_argument("--dim", required=True, type=int)

    p = sub.add_parser("build", help="emit a canonical graph file")
    add_family_dim(p)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("audit", help="diff literal adjacency rules against the closed graph")
    add_family_dim(p)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_audit)

    p = sub.add_parser("metrics", help="measured and closed-form graph metrics")
    add_family_dim(p)
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_metrics)

    p = sub.add_parser("tables", help="emit metric tables and diff against references")
    p.add_argument("--table", choices=["avgdist", "cef", "tcef", "all"], default="all")
    p.add_argument("--out-dir", help="write <table>.csv files here instead of stdout")
    p.set_defaults(fn=_cmd_tables)

    p = sub.add_parser("route", help="route a message between two nodes")
    add_family_dim(p)
    p.add_argument("--source", required=True, help="comma-separated digits, e.g. 0,0")
    p.add_argument("--target", required=True)
    p.add_argument("--policy", choices=["oracle", "greedy"], default="oracle")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_route)

    p = sub.add_parser("broadcast", help="one-to-all broadcast schedule")
    add_family_dim(p)
    p.add_argument("--root", required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_broadcast)

    p = sub.add_parser("paths", help="maximum vertex-disjoint path set")
    add_family_dim(p)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_paths)

    p = sub.add_parser("reliability", help="terminal reliability from path classes")
    add_family_dim(p)
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument(
        "--reference-classes",
        action="store_true",
        help="use the embedded published path classes for this family/dimension",
    )
    p.add_argument("--rl", type=float, default=reference.DEFAULT_R_LINK)
    p.add_argument("--rp", type=float, default=reference.DEFAULT_R_PROC)
    p.add_argument("--curve", action="store_true", help="emit a (t, reliability) CSV")
    p.add_argument("--t-max", type=int, default=5000)
    p.add_argument("--t-step", type=int, default=100)
    p.add_argument("--lambda-link", type=float, default=reference.DEFAULT_LAMBDA_LINK)
    p.add_argument("--lambda-proc", type=float, default=reference.DEFAULT_LAMBDA_PROC)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_reliability)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (MalformedLabelError, UnsupportedFamilyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DisconnectedGraphError, RuntimeError, AssertionError) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
