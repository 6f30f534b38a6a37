"""Command-line front end: analysis, sparsity checks, operations,
generation and the conjecture scan.

Every subcommand emits a single JSON document on stdout (or --out).  Exit
codes: 0 = ran to completion (whatever the mathematical outcome), 2 =
malformed input or invalid configuration, 3 = ill-positioned explicit
placement.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .geometry import DEFAULT_Q_GAP, IllPositionedError, LqSpace, Placement, rigidity_matrix
from .graphs import Graph, SparsityParams, f_count, is_sparse
from .operations import (
    brace,
    cone,
    henneberg_generate,
    one_extension,
    one_reduce,
    random_degree_bounded_sparse,
    substitute,
    vertex_split,
    zero_extension,
)
from .rank import (
    DEFAULT_REL_TOL,
    DEFAULT_TRIALS,
    analysis_report,
    max_rank_sample,
    numerical_rank,
    verdict,
)
from . import oracles, surfaces

SCAN_SOURCES = ("henneberg", "sphere", "projective", "degree_bounded")


class InputError(ValueError):
    """Malformed file, flag or configuration (exit code 2)."""


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> Graph:
    try:
        return Graph.from_json_dict(_load_json(path))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_placement(path: str) -> Placement:
    try:
        return Placement.from_json_dict(_load_json(path))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _space(d: int, q: float) -> LqSpace:
    try:
        return LqSpace(d, q)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- analyze -----------------------------------------------------------------


def run_analyze(
    graph_file: str,
    d: int,
    q: float,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    placement_file: Optional[str] = None,
    rel_tol: float = DEFAULT_REL_TOL,
) -> dict:
    """Sampled-rank verdict for one graph, optionally comparing an explicit
    placement against the sampled maximum."""
    g = _load_graph(graph_file)
    space = _space(d, q)
    vd = verdict(g, space, trials=trials, seed=seed, rel_tol=rel_tol)
    report = analysis_report(g, space, vd, trials, seed)
    if placement_file is not None:
        p = _load_placement(placement_file)
        if p.d != d or p.n != g.n:
            raise InputError("placement shape does not match the graph and dimension")
        offending = p.offending_edge(g)
        if offending is not None:
            raise IllPositionedError(offending)
        placement_rank = numerical_rank(
            rigidity_matrix(g, p, space), rel_tol=rel_tol
        ).rank
        report["placement_rank"] = placement_rank
        report["regular"] = placement_rank == vd.rank
    return report


# -- scan --------------------------------------------------------------------


@dataclass(frozen=True)
class ScanConfig:
    """Configuration of the conjecture scan."""

    d: int
    q_list: tuple[float, ...]
    max_n: int
    count: int = 5
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    sources: tuple[str, ...] = ("henneberg",)
    rel_tol: float = DEFAULT_REL_TOL
    allow_near_euclidean: bool = False
    workers: int = 4

    def __post_init__(self) -> None:
        if self.count < 1:
            raise InputError("count must be >= 1")
        if self.d < 1:
            raise InputError("d must be >= 1")
        if not self.q_list:
            raise InputError("at least one exponent q is required")
        for q in self.q_list:
            if not 1.0 < q < float("inf"):
                raise InputError(f"q={q} outside (1, inf)")
            if abs(q - 2.0) < DEFAULT_Q_GAP and not self.allow_near_euclidean:
                raise InputError(
                    f"q={q} is within {DEFAULT_Q_GAP} of the Euclidean point; "
                    "rank verdicts there are ambiguous (override to force)"
                )
        for s in self.sources:
            if s not in SCAN_SOURCES:
                raise InputError(f"unknown source {s!r}")
        if ("sphere" in self.sources or "projective" in self.sources) and self.d != 3:
            raise InputError("surface sources require d = 3")


def _scan_instances(config: ScanConfig) -> list[dict]:
    """Generate the graphs to scan; each instance carries its replay data."""
    master = np.random.default_rng(config.seed)
    instances = []

    def child() -> int:
        return int(master.integers(2**63))

    for source in config.sources:
        if source == "henneberg":
            lo = 2 * config.d
        elif source == "sphere":
            lo = 4
        elif source == "projective":
            lo = 6
        else:
            lo = config.d + 2
        for n in range(lo, config.max_n + 1):
            for i in range(config.count):
                s = child()
                inst: dict = {"source": source, "n": n, "seed": s}
                if source == "henneberg":
                    g, log = henneberg_generate(config.d, n, s)
                elif source == "degree_bounded":
                    g = random_degree_bounded_sparse(config.d, n, s)
                    log = []
                else:
                    base = "K6"
                    if source == "projective" and n >= 7 and i % 2 == 1:
                        base = "K7_minus_K3"
                    if source == "sphere":
                        base = "K4"
                    tri, log = surfaces.generate_triangulation(
                        surfaces.SPHERE if source == "sphere" else surfaces.PROJECTIVE_PLANE,
                        n,
                        s,
                        base=base,
                    )
                    g = tri.graph
                    inst["base"] = base
                inst["graph"] = g
                inst["log"] = [r.to_json_dict() for r in log]
                instances.append(inst)
    return instances


def run_scan(config: ScanConfig) -> dict:
    """Run verdicts over every (graph, q) cell and tabulate the outcomes.

    Cells where the sampled rank is stable and equals |E| count as
    "predicted" (the conjecture's prediction for sparse inputs); stable
    rank-deficient cells are dumped as replayable candidate counterexamples;
    unstable cells are "marginal".  Candidates are reported, never
    auto-classified as disproofs.
    """
    instances = _scan_instances(config)
    cells = [
        (idx, q) for idx in range(len(instances)) for q in config.q_list
    ]

    def run_cell(cell: tuple[int, float]) -> tuple[int, float, object, dict]:
        idx, q = cell
        inst = instances[idx]
        g = inst["graph"]
        space = LqSpace(config.d, q)
        res = max_rank_sample(
            g, space, trials=config.trials, seed=inst["seed"], rel_tol=config.rel_tol
        )
        return idx, q, res, inst

    workers = max(1, config.workers)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_cell, cells))
    else:
        results = [run_cell(c) for c in cells]

    predicted = 0
    marginal = 0
    candidates = []
    for idx, q, res, inst in results:
        g = inst["graph"]
        if not res.stable:
            marginal += 1
        elif res.rank == g.m:
            predicted += 1
        else:
            candidates.append(
                {
                    "source": inst["source"],
                    "q": q,
                    "d": config.d,
                    "seed": inst["seed"],
                    "trials": config.trials,
                    "rank": res.rank,
                    "edge_count": g.m,
                    "graph": g.to_json_dict(),
                    "witness_placement": res.witness.to_json_dict() if res.witness else None,
                    "log": inst["log"],
                }
            )

    return {
        "d": config.d,
        "q_list": list(config.q_list),
        "sources": list(config.sources),
        "max_n": config.max_n,
        "count": config.count,
        "seed": config.seed,
        "trials": config.trials,
        "totals": {
            "cells": len(cells),
            "graphs": len(instances),
            "predicted": predicted,
            "candidates": len(candidates),
            "marginal": marginal,
        },
        "candidates": candidates,
    }


# -- other subcommands ----------------------------------------------------------


def _run_sparsity(args: argparse.Namespace) -> dict:
    g = _load_graph(args.graph)
    if args.k is not None:
        try:
            params = SparsityParams(args.k, args.l, args.multiplier)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    else:
        if args.d is None:
            raise InputError("need either -d or --k/--l")
        params = SparsityParams(args.d, args.d)
    sparse = is_sparse(g, params)
    count = params.k * g.n - params.edge_multiplier * g.m
    out = {
        "graph": g.to_json_dict(),
        "k": params.k,
        "l": params.l,
        "edge_multiplier": params.edge_multiplier,
        "sparse": sparse,
        "tight": bool(sparse and count == params.l),
    }
    if args.d is not None:
        out["f"] = f_count(g, args.d)
    return out


def _run_op(args: argparse.Namespace) -> dict:
    g = _load_graph(args.graph)
    try:
        params = json.loads(args.params) if args.params else {}
    except json.JSONDecodeError as exc:
        raise InputError(f"bad --params: {exc}") from exc
    kind = args.kind
    try:
        if kind == "cone":
            out, rec = cone(g)
        elif kind == "brace":
            out, rec = brace(g, params["s"], args.d)
        elif kind == "ext0":
            out, rec = zero_extension(g, params["s"], args.d)
        elif kind == "ext1":
            out, rec = one_extension(g, params["nbrs"], tuple(params["removed"]), args.d)
        elif kind in ("vsplit", "spider"):
            out, rec = vertex_split(
                g,
                params["v0"],
                params["shared"],
                params.get("moved", []),
                args.d,
                spider=kind == "spider",
            )
        elif kind == "subst":
            if not args.h_graph:
                raise InputError("subst needs --h-graph")
            h = _load_graph(args.h_graph)
            assign = None
            if "assign" in params:
                assign = {int(k): int(v) for k, v in params["assign"].items()}
            out, rec = substitute(g, params["v0"], h, assign)
        elif kind == "reduce1":
            res = one_reduce(g, params["v"], args.d)
            if res is None:
                return {"graph": None, "record": None, "reduction_found": False}
            out, rec = res
        else:
            raise InputError(f"unknown operation {kind!r}")
    except (KeyError, TypeError) as exc:
        raise InputError(f"missing or bad operation parameter: {exc}") from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return {"graph": out.to_json_dict(), "record": rec.to_json_dict(), "reduction_found": True}


def _run_gen(args: argparse.Namespace) -> dict:
    if args.surface:
        surface = (
            surfaces.SPHERE if args.surface == "sphere" else surfaces.PROJECTIVE_PLANE
        )
        try:
            tri, log = surfaces.generate_triangulation(
                surface, args.n, args.seed, base=args.base
            )
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return {
            "triangulation": tri.to_json_dict(),
            "graph": tri.graph.to_json_dict(),
            "log": [r.to_json_dict() for r in log],
        }
    if args.d is None:
        raise InputError("gen needs either --surface or -d")
    try:
        g, log = henneberg_generate(args.d, args.n, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return {"graph": g.to_json_dict(), "log": [r.to_json_dict() for r in log]}


def _run_oracle(args: argparse.Namespace) -> dict:
    name = args.name
    params: dict = {}
    try:
        if name == "wheel_det":
            _require(args.q is not None, "wheel_det needs -q")
            value = oracles.wheel_det(args.q[0])
            params = {"q": args.q[0]}
        elif name == "circulant_det":
            _require(args.q is not None and args.d is not None, "circulant_det needs -d and -q")
            value = oracles.circulant_det(args.d, args.q[0])
            params = {"d": args.d, "q": args.q[0]}
        elif name == "k4_gamma_det":
            _require(args.q is not None, "k4_gamma_det needs -q")
            gamma = args.gamma if args.gamma is not None else oracles.select_gamma(args.q[0])
            value = oracles.k4_gamma_det(gamma, args.q[0])
            params = {"gamma": gamma, "q": args.q[0]}
        elif name == "k7k3_detR":
            _require(args.q is not None, "k7k3_detR needs -q")
            gamma = args.gamma if args.gamma is not None else oracles.select_gamma(args.q[0])
            value = oracles.k7k3_detR(gamma, args.q[0])
            params = {"gamma": gamma, "q": args.q[0]}
        elif name == "gamma_select":
            _require(args.q is not None, "gamma_select needs -q")
            value = oracles.select_gamma(args.q[0])
            params = {"q": args.q[0]}
        elif name == "k7k3_f":
            _require(args.q is not None and args.gamma is not None, "k7k3_f needs -q and --gamma")
            value = oracles.k7k3_f(args.gamma, args.q[0])
            params = {"gamma": args.gamma, "q": args.q[0]}
        else:
            raise InputError(f"unknown oracle {name!r}")
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return {"name": name, "params": params, "value": float(value)}


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InputError(message)


# -- argument parsing ----------------------------------------------------------


def _q_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lqrig",
        description="independence and rigidity of graphs in d-dimensional l_q spaces",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graph: bool = True) -> None:
        if graph:
            p.add_argument("--graph", required=True, help="graph JSON file")
        p.add_argument("-d", type=int, default=None, help="dimension")
        p.add_argument("-q", type=_q_list, default=None, help="exponent(s), comma separated")
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--tol", type=float, default=DEFAULT_REL_TOL)

    p = sub.add_parser("analyze", help="rank/independence/rigidity verdict")
    common(p)
    p.add_argument("--placement", default=None, help="explicit placement JSON file")

    p = sub.add_parser("sparsity", help="(k,l)-sparsity and tightness check")
    common(p)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--multiplier", type=int, default=1)

    p = sub.add_parser("op", help="apply one graph operation")
    common(p)
    p.add_argument("--kind", required=True, help="cone|brace|ext0|ext1|vsplit|spider|subst|reduce1")
    p.add_argument("--params", default=None, help="operation parameters as JSON")
    p.add_argument("--h-graph", default=None, help="graph JSON for subst")

    p = sub.add_parser("gen", help="random tight graph or surface triangulation")
    common(p, graph=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--surface", choices=("sphere", "projective"), default=None)
    p.add_argument("--base", choices=("K4", "K6", "K7mK3"), default=None)

    p = sub.add_parser("scan", help="conjecture scan over generated graphs")
    common(p, graph=False)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--sources", default="henneberg", help="comma list of sources")
    p.add_argument("--allow-near-euclidean", action="store_true")
    p.add_argument("--workers", type=int, default=4)

    p = sub.add_parser("oracle", help="evaluate a closed-form oracle")
    common(p, graph=False)
    p.add_argument("--name", required=True)
    p.add_argument("--gamma", type=float, default=None)

    return ap


def _dispatch(args: argparse.Namespace) -> dict:
    if args.command == "analyze":
        if args.d is None or not args.q:
            raise InputError("analyze needs -d and -q")
        reports = [
            run_analyze(
                args.graph,
                args.d,
                q,
                trials=args.trials,
                seed=args.seed,
                placement_file=args.placement,
                rel_tol=args.tol,
            )
            for q in args.q
        ]
        return reports[0] if len(reports) == 1 else {"reports": reports}
    if args.command == "sparsity":
        return _run_sparsity(args)
    if args.command == "op":
        if args.d is None and args.kind != "cone" and args.kind != "subst":
            raise InputError("op needs -d")
        return _run_op(args)
    if args.command == "gen":
        return _run_gen(args)
    if args.command == "scan":
        if args.d is None or not args.q:
            raise InputError("scan needs -d and -q")
        config = ScanConfig(
            d=args.d,
            q_list=args.q,
            max_n=args.max_n,
            count=args.count,
            seed=args.seed,
            trials=args.trials,
            sources=tuple(s for s in args.sources.split(",") if s),
            rel_tol=args.tol,
            allow_near_euclidean=args.allow_near_euclidean,
            workers=args.workers,
        )
        return run_scan(config)
    if args.command == "oracle":
        return _run_oracle(args)
    raise InputError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        document = _dispatch(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IllPositionedError as exc:
        print(f"error: ill-positioned placement: {exc}", file=sys.stderr)
        return 3
    text = json.dumps(document, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
