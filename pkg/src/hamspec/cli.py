"""Command-line front door.

Subcommands: analyze, closure, oracle, generate, validate, remark.
Exit codes: 0 success, 1 validation run with violations, 2 input error.
Floating-point values are emitted with 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graph import Graph
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .families import FAMILY_PARAMS, construct, family_spec
from .closure import k_closure
from .hamilton import CapacityError, DEFAULT_ORACLE_CAP, hamilton_profile
from .spectral import bound_suite, spectral_summary
from .certify import CriterionId, apply_criterion, criterion_order_minimum
from .harness import ValidationMode, remark_scan, validate

ORACLE_CAP_ENV = "HAMSPEC_ORACLE_CAP"


def _round12(value):
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {k: _round12(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round12(v) for v in value]
    return value


def _render_text(value, key="", indent=0) -> list[str]:
    pad = "  " * indent
    label = f"{pad}{key}: " if key else pad
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"] if key else []
        for k, v in value.items():
            lines.extend(_render_text(v, k, indent + (1 if key else 0)))
        return lines
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return [label + "[" + ", ".join(_scalar_text(v) for v in value) + "]"]
        lines = [f"{pad}{key}:"] if key else []
        for v in value:
            lines.extend(_render_text(v, "-", indent + (1 if key else 0)))
        return lines
    return [label + _scalar_text(value)]


def _scalar_text(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit(payload, args) -> None:
    payload = _round12(payload)
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        text = "\n".join(_render_text(payload))
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", help="write the report here instead of stdout")


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", help="a single graph6 string")
    p.add_argument("--file", help="newline-delimited graph6 file")
    p.add_argument("--family", choices=sorted(FAMILY_PARAMS), help="family name")
    _add_family_params(p)


def _add_family_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--connections", help="comma-separated circulant offsets")


def _family_graph(args) -> Graph:
    params = {}
    for name in FAMILY_PARAMS[args.family]:
        if name == "connections":
            if args.connections is None:
                raise ValueError("family 'circulant' needs --connections")
            params[name] = [int(x) for x in args.connections.split(",") if x.strip()]
        else:
            value = getattr(args, name)
            if value is None:
                raise ValueError(f"family {args.family!r} needs --{name}")
            params[name] = value
    return construct(family_spec(args.family, **params))


def _input_graphs(args) -> list[Graph]:
    sources = [s for s in ("g6", "file", "family") if getattr(args, s) is not None]
    if len(sources) != 1:
        raise ValueError("exactly one of --g6, --file, --family is required")
    if args.g6 is not None:
        return [parse_graph6(args.g6)]
    if args.family is not None:
        return [_family_graph(args)]
    with open(args.file, encoding="ascii") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"no graph6 lines in {args.file}")
    return [parse_graph6(line) for line in lines]


def _oracle_cap(args) -> int:
    if args.oracle_cap is not None:
        return args.oracle_cap
    env = os.environ.get(ORACLE_CAP_ENV)
    return int(env) if env else DEFAULT_ORACLE_CAP


def _summary_dict(g: Graph) -> dict:
    s = spectral_summary(g)
    return {
        "mu": s.mu,
        "gamma": s.gamma,
        "edge_count": s.edge_count,
        "degrees": list(s.degrees),
        "avg_neighbor_degree": [float(x) for x in s.avg_neighbor],
        "degree_square_sum": s.degree_square_sum,
        "max_degree_plus_avg_neighbor": float(s.max_d_plus_m),
    }


def _analyze_one(g: Graph, cap: int) -> dict:
    payload = {
        "graph6": write_graph6(g),
        "order": g.n,
        "spectral": _summary_dict(g),
        "bounds": [b.to_json_dict() for b in bound_suite(g)],
        "criteria": [],
        "criteria_skipped": [],
    }
    for criterion in CriterionId:
        minimum = criterion_order_minimum(criterion)
        if g.n < minimum:
            payload["criteria_skipped"].append(
                {"criterion": criterion.value, "reason": f"requires order >= {minimum}"})
        else:
            payload["criteria"].append(apply_criterion(g, criterion).to_json_dict())
    if g.n <= cap:
        payload["oracle"] = hamilton_profile(g, cap).to_json_dict()
        payload["oracle_skipped"] = None
    else:
        payload["oracle"] = None
        payload["oracle_skipped"] = f"order {g.n} above oracle cap {cap}"
    return payload


def _cmd_analyze(args) -> int:
    graphs = _input_graphs(args)
    cap = _oracle_cap(args)
    reports = [_analyze_one(g, cap) for g in graphs]
    _emit(reports[0] if len(reports) == 1 else reports, args)
    return 0


def _cmd_closure(args) -> int:
    graphs = _input_graphs(args)
    reports = []
    for g in graphs:
        result = k_closure(g, args.k)
        reports.append({
            "graph6": write_graph6(g),
            "k": result.k,
            "closed_graph6": write_graph6(result.graph),
            "added_edges": [list(e) for e in result.added_edges],
            "edges_added": len(result.added_edges),
        })
    _emit(reports[0] if len(reports) == 1 else reports, args)
    return 0


def _cmd_oracle(args) -> int:
    graphs = _input_graphs(args)
    cap = _oracle_cap(args)
    reports = []
    for g in graphs:
        profile = hamilton_profile(g, cap)
        payload = profile.to_json_dict()
        payload["graph6"] = write_graph6(g)
        reports.append(payload)
    _emit(reports[0] if len(reports) == 1 else reports, args)
    return 0


def _cmd_generate(args) -> int:
    g = _family_graph(args)
    if args.format == "text":
        payload = write_graph6(g)
        if args.output:
            with open(args.output, "w", encoding="ascii") as fh:
                fh.write(payload + "\n")
        else:
            print(payload)
        return 0
    _emit({"family": args.family, "order": g.n, "edge_count": g.edge_count,
           "graph6": write_graph6(g)}, args)
    return 0


def _parse_criterion(name: str) -> CriterionId:
    for criterion in CriterionId:
        if name == criterion.value or name == criterion.value.split("_")[0]:
            return criterion
    raise ValueError(f"unknown criterion {name!r}; use one of "
                     + ", ".join(c.value.split("_")[0] for c in CriterionId))


def _cmd_validate(args) -> int:
    criterion = _parse_criterion(args.criterion)
    orders = [int(x) for x in args.orders.split(",") if x.strip()]
    mode = (ValidationMode.EXHAUSTIVE_LABELED if args.mode == "exhaustive"
            else ValidationMode.RANDOM_SAMPLE)
    report = validate(criterion, orders, mode, samples=args.samples, p=args.p,
                      seed=args.seed, threshold_shift=args.threshold_shift)
    _emit(report.to_json_dict(), args)
    return 0 if report.passed else 1


def _cmd_remark(args) -> int:
    rows = remark_scan(range(args.r_min, args.r_max + 1), oracle_cap=_oracle_cap(args))
    _emit({"rows": [row.to_json_dict() for row in rows]}, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamspec",
        description="Spectral certificates and exact oracles for Hamiltonian structure.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="spectral summary, bounds, criteria and oracle")
    _add_input_flags(p)
    p.add_argument("--oracle-cap", type=int)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("closure", help="degree-sum closure with the added-edge list")
    _add_input_flags(p)
    p.add_argument("--k", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("oracle", help="exact Hamiltonicity answers")
    _add_input_flags(p)
    p.add_argument("--oracle-cap", type=int)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("generate", help="emit a family member as graph6")
    p.add_argument("--family", choices=sorted(FAMILY_PARAMS), required=True)
    _add_family_params(p)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("validate", help="criterion soundness over a graph corpus")
    p.add_argument("--criterion", required=True,
                   help="T31, T32, T33, T34, T41 or T42 (long names accepted)")
    p.add_argument("--orders", required=True, help="comma-separated orders")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--threshold-shift", type=float, default=0.0,
                   help="fault-injection hook for self-tests; shifts the threshold")
    _add_io_flags(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("remark", help="scan the adjacency-vs-signless comparison family")
    p.add_argument("--r-min", type=int, default=2)
    p.add_argument("--r-max", type=int, default=3)
    p.add_argument("--oracle-cap", type=int)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_remark)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CapacityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
