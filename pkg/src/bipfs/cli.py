"""Command line front end.

One executable, twelve subcommands, three exit codes: 0 when the run
completed and confirmed what it checked, 1 when it completed but found
something (a counterexample, a rejected certificate, a criterion/oracle
split, a missing witness), 2 for usage and parse problems.  Randomized
subcommands embed the seed and package version in their output so any
run can be replayed.  Progress and notes go to stderr; stdout carries
only the result.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys
from importlib import resources
from typing import Optional

import numpy as np

from . import __version__
from .bigraph import (
    BgParseError,
    BiGraph,
    census,
    find_bridges,
    is_connected,
    is_cycle,
    load_bg,
    parse_bg,
    zhu_two_components,
)
from .certlab import (
    GadgetCase,
    GadgetParseError,
    builtin_corpus,
    load_gadget,
    sequence_product,
    shortest_exchange,
    verify_certificate,
)
from .engine import Bijection, count_isolated_states, exchangeable, fs_component_count
from .randomlab import SweepConfig, cross_validate, emit_csv, sweep
from .scan import corollary_check, theorem_scan, tightness_search


def _load_graph(path: str) -> BiGraph:
    p = pathlib.Path(path)
    if p.is_file():
        return load_bg(p)
    # bare names fall back to the shipped example graphs
    if "/" not in path and "\\" not in path:
        packaged = resources.files("bipfs.data").joinpath("graphs").joinpath(path)
        if packaged.is_file():
            return parse_bg(packaged.read_text(), source=path)
    raise FileNotFoundError(f"graph file not found: {path}")


def _load_case(name: str) -> GadgetCase:
    p = pathlib.Path(name)
    if p.is_file():
        return load_gadget(p)
    stem = name[:-7] if name.endswith(".gadget") else name
    for case in builtin_corpus():
        if case.name == stem:
            return case
    raise FileNotFoundError(f"no such case file or builtin case: {name}")


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"{what} must be a comma separated list of integers, got {text!r}")


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"{what} must be a comma separated list of numbers, got {text!r}")


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = int(np.random.SeedSequence().entropy) % 2**32
    print(f"note: no --seed given, generated {seed}", file=sys.stderr)
    return seed


def _emit(args, payload: dict, lines: list[str]) -> None:
    out = json.dumps(payload, indent=2) + "\n" if args.format == "json" else "\n".join(lines) + "\n"
    _write_out(args, out)


def _write_out(args, text: str) -> None:
    if getattr(args, "out", None):
        pathlib.Path(args.out).write_text(text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _require_text_or_json(args) -> None:
    if args.format == "csv":
        raise ValueError("--format csv only applies to the sweep subcommand")


# -- subcommand handlers ----------------------------------------------------


def _cmd_components(args) -> int:
    _require_text_or_json(args)
    x = _load_graph(args.x)
    y = _load_graph(args.y)
    rep = fs_component_count(x, y)
    payload = {"x": args.x, "y": args.y, **rep.to_dict()}
    _emit(args, payload, [
        f"component_count = {rep.component_count}",
        f"component_sizes = {dict(sorted(rep.component_sizes.items()))}",
        f"parity_split = {rep.parity_split}",
        f"states_explored = {rep.states_explored}",
    ])
    return 0


def _cmd_exchange(args) -> int:
    _require_text_or_json(args)
    x = _load_graph(args.x)
    y = _load_graph(args.y)
    state = Bijection.identity(x.n) if args.state is None else Bijection(_parse_ints(args.state, "--state"))
    budget = args.budget if args.budget is not None else 2_000_000
    res = exchangeable(x, y, state, args.u, args.v, budget=budget)
    payload = {"x": args.x, "y": args.y, "u": args.u, "v": args.v, **res.to_dict()}
    _emit(args, payload, [
        f"status = {res.status}",
        f"states_explored = {res.states_explored}",
        f"witness = {res.witness}",
    ])
    return 0 if res.status == "exchangeable" else 1


def _cmd_bridges(args) -> int:
    _require_text_or_json(args)
    g = _load_graph(args.x)
    rep = find_bridges(g)
    payload = {"x": args.x, "r": g.r, **rep.to_dict()}
    lines = [f"max_k = {rep.max_k}"]
    lines += [f"bridge on {len(b)} vertices: {b}" for b in rep.bridges]
    _emit(args, payload, lines)
    return 0


def _cmd_criterion(args) -> int:
    _require_text_or_json(args)
    g = _load_graph(args.x)
    verdict = zhu_two_components(g)
    if verdict:
        mode = "two_components"
    elif not is_connected(g):
        mode = "disconnected"
    elif is_cycle(g):
        mode = "cycle"
    else:
        mode = "bridge"
    payload = {"x": args.x, "r": g.r, "two_components": verdict, "failure_mode": None if verdict else mode}
    _emit(args, payload, [f"two_components = {verdict}" + ("" if verdict else f"  ({mode})")])
    return 0 if verdict else 1


def _cmd_census(args) -> int:
    _require_text_or_json(args)
    g = _load_graph(args.x)
    rep = census(g)
    payload = {
        "x": args.x,
        "r": g.r,
        "degrees": list(g.degrees()),
        "min_degree": g.min_degree(),
        "edge_count": g.edge_count(),
        "connected": is_connected(g),
        "cycle": is_cycle(g),
        "max_bridge_k": find_bridges(g).max_k,
        **rep.to_dict(),
    }
    _emit(args, payload, [f"{k} = {v}" for k, v in payload.items() if k != "x"])
    return 0


def _cmd_certify(args) -> int:
    _require_text_or_json(args)
    cases = builtin_corpus() if args.corpus == "builtin" else [_load_case(args.case)]
    results = []
    all_ok = True
    for case in cases:
        verdict = verify_certificate(case)
        all_ok = all_ok and verdict.accepted
        results.append({"case": case.name, **verdict.to_dict()})
    payload = {"cases": len(results), "all_accepted": all_ok, "results": results}
    lines = [
        f"{r['case']}: {'accepted' if r['accepted'] else 'REJECTED'} "
        f"({r['instantiations_checked']} instantiation(s))"
        for r in results
    ]
    lines.append(f"{len(results)} case(s), all accepted: {all_ok}")
    _emit(args, payload, lines)
    return 0 if all_ok else 1


def _cmd_shortest(args) -> int:
    _require_text_or_json(args)
    case = _load_case(args.case)
    picks = None if args.picks is None else _parse_ints(args.picks, "--picks")
    res = shortest_exchange(case, picks=picks)
    payload = {
        "case": case.name,
        "picks": picks,
        "published_length": len(case.sequence),
        **res.to_dict(),
    }
    _emit(args, payload, [
        f"reachable = {res.reachable}",
        f"length = {res.length}  (published sequence: {len(case.sequence)})",
        f"sequence = {res.sequence}",
        f"states_explored = {res.states_explored}",
    ])
    return 0 if res.reachable else 1


def _cmd_scan(args) -> int:
    _require_text_or_json(args)
    mode = args.mode or ("exhaustive" if args.r <= 4 else "random")
    seed = _resolve_seed(args) if mode == "random" else args.seed
    bound = args.bound if args.bound is not None else (3 * args.r) // 2 + 1
    print(f"scanning r={args.r} bound={bound} mode={mode}", file=sys.stderr)
    rep = theorem_scan(args.r, bound, mode=mode, budget=args.budget, seed=seed)
    payload = {"version": __version__, **rep.to_dict()}
    _emit(args, payload, _scan_lines(rep))
    return 0 if rep.theorem_held else 1


def _cmd_tightness(args) -> int:
    _require_text_or_json(args)
    degree_sum = args.degree_sum if args.degree_sum is not None else (3 * args.r) // 2
    profiles = [tuple(_parse_ints(s, "--profile")) for s in args.profile] or None
    seed = _resolve_seed(args) if args.r >= 5 else args.seed
    print(f"searching r={args.r} degree_sum={degree_sum}", file=sys.stderr)
    rep = tightness_search(args.r, degree_sum, budget=args.budget, seed=seed, profiles=profiles)
    payload = {"version": __version__, **rep.to_dict()}
    _emit(args, payload, _scan_lines(rep))
    return 0 if rep.witnesses else 1


def _scan_lines(rep) -> list[str]:
    by_profile: dict[tuple[int, int], list[str]] = {}
    for c in rep.counterexamples:
        by_profile.setdefault((c.x.min_degree(), c.y.min_degree()), []).append(
            f"count={c.component_count}"
        )
    for w in rep.witnesses:
        by_profile.setdefault((w.x.min_degree(), w.y.min_degree()), []).append(w.kind)
    lines = []
    for prof, tested in sorted(rep.profile_counts.items()):
        hits = by_profile.get(prof, [])
        verdict = f"{len(hits)} hit(s)" if hits else "clean"
        lines.append(f"profile {prof}: {tested} pair(s), {verdict}")
    lines.append(
        f"{rep.mode} scan of {rep.pairs_tested} pair(s) under {rep.condition}: "
        f"{len(rep.counterexamples)} counterexample(s), {len(rep.witnesses)} witness(es)"
    )
    if rep.note:
        lines.append(f"note: {rep.note}")
    return lines


def _cmd_sweep(args) -> int:
    seed = _resolve_seed(args)
    grid = None if args.p_grid is None else tuple(_parse_floats(args.p_grid, "--p-grid"))
    offsets = None if args.offsets is None else tuple(_parse_floats(args.offsets, "--offsets"))
    cfg = SweepConfig(
        r=args.r,
        p_grid=grid,
        offsets=offsets,
        samples_per_point=args.samples,
        seed=seed,
        cross_validate=args.cross_validate,
    )
    print(f"sweeping {len(cfg.grid())} point(s) x {cfg.samples_per_point} samples at r={cfg.r}",
          file=sys.stderr)
    rows = sweep(cfg, workers=args.workers)
    if args.format == "csv":
        text = f"# bipfs {__version__} seed={seed} r={cfg.r}\n" + emit_csv(rows)
        _write_out(args, text)
    else:
        payload = {
            "version": __version__,
            "seed": seed,
            "r": cfg.r,
            "samples_per_point": cfg.samples_per_point,
            "rows": [row.to_dict() for row in rows],
        }
        lines = [
            f"p={row.p:.6g} two={row.frac_two_components:.4f} disc={row.frac_disconnected:.4f} "
            f"cycle={row.frac_cycle:.4f} bridge={row.frac_has_r_bridge:.4f} "
            f"X1={row.mean_isolated:.4f} (expect {row.expected_isolated:.4f})"
            for row in rows
        ]
        lines.append(f"seed = {seed}, version = {__version__}")
        _emit(args, payload, lines)
    return 0


def _cmd_crossval(args) -> int:
    _require_text_or_json(args)
    seed = _resolve_seed(args)
    p_list = _parse_floats(args.p_list, "--p-list")
    print(f"cross-validating {len(p_list)} point(s) x {args.n} samples at r=5", file=sys.stderr)
    rep = cross_validate(p_list, args.n, seed=seed)
    payload = {"version": __version__, **rep.to_dict()}
    lines = [f"agreements = {rep.agreements}/{rep.checked}"]
    for d in rep.disagreements:
        lines.append(f"DISAGREEMENT at p={d['p']} sample {d['sample_index']}: "
                     f"criterion={d['criterion']} count={d['component_count']}")
    lines.append(f"seed = {seed}, version = {__version__}")
    _emit(args, payload, lines)
    return 0 if rep.all_agree else 1


def _cmd_isolated(args) -> int:
    _require_text_or_json(args)
    x = _load_graph(args.x)
    y = _load_graph(args.y)
    budget = args.budget if args.budget is not None else 200_000
    randomized = x.n > 10
    seed = _resolve_seed(args) if randomized else args.seed
    res = count_isolated_states(x, y, budget=budget, seed=seed, count_all=args.count_all)
    payload = {"x": args.x, "y": args.y, "version": __version__, "seed": seed, **res.to_dict()}
    _emit(args, payload, [
        f"found = {res.found}",
        f"witness = {payload['witness']}",
        f"states_checked = {res.states_checked} (exhaustive: {res.exhaustive})",
        f"isolated_total = {res.isolated_total}",
    ])
    return 0 if res.found else 1


def _cmd_corollary(args) -> int:
    _require_text_or_json(args)
    rep = corollary_check(args.r, seed=args.seed if args.seed is not None else 0)
    payload = {"version": __version__, **rep.to_dict()}
    a_ok = rep.part_a.get("all_two_components", rep.part_a.get("criterion_all_true"))
    _emit(args, payload, [
        f"d_symmetric = {rep.d_symmetric}, d_star = {rep.d_star}",
        f"part_a: {rep.part_a}",
        f"part_b: witness delta={rep.part_b['delta']} count={rep.part_b['component_count']}",
    ])
    return 0 if a_ok and not rep.part_b["count_is_two"] else 1


# -- wiring -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output format (csv is sweep-only)")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized work")
    common.add_argument("--workers", type=int, default=1, help="worker processes where supported")
    common.add_argument("--budget", type=int, default=None, help="work cap for randomized searches")
    common.add_argument("--out", default=None, help="write the result to this path instead of stdout")

    ap = argparse.ArgumentParser(
        prog="bipfs",
        description="friends-and-strangers graphs over bipartite hosts: exact counts, "
                    "certificates, extremal scans and the random phase transition",
    )
    ap.add_argument("--version", action="version", version=f"bipfs {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("components", parents=[common], help="exact component census of FS(X, Y)")
    sp.add_argument("--x", required=True, help=".bg file for the position graph")
    sp.add_argument("--y", required=True, help=".bg file for the token graph")
    sp.set_defaults(fn=_cmd_components)

    sp = sub.add_parser("exchange", parents=[common], help="can tokens u and v be exchanged from a state")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--u", type=int, required=True)
    sp.add_argument("--v", type=int, required=True)
    sp.add_argument("--state", default=None, help="comma separated placement, identity if omitted")
    sp.set_defaults(fn=_cmd_exchange)

    sp = sub.add_parser("bridges", parents=[common], help="maximal bridge paths of a graph")
    sp.add_argument("--x", required=True)
    sp.set_defaults(fn=_cmd_bridges)

    sp = sub.add_parser("criterion", parents=[common],
                        help="structural two-component criterion for FS(X, K_{r,r}), r >= 5")
    sp.add_argument("--x", required=True)
    sp.set_defaults(fn=_cmd_criterion)

    sp = sub.add_parser("census", parents=[common], help="structure summary of a graph")
    sp.add_argument("--x", required=True)
    sp.set_defaults(fn=_cmd_census)

    sp = sub.add_parser("certify", parents=[common], help="replay exchange certificates")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--corpus", choices=("builtin",), help="verify the full builtin corpus")
    group.add_argument("--case", help=".gadget file or builtin case name")
    sp.set_defaults(fn=_cmd_certify)

    sp = sub.add_parser("shortest", parents=[common], help="BFS shortest exchange for a case")
    sp.add_argument("--case", required=True, help=".gadget file or builtin case name")
    sp.add_argument("--picks", default=None,
                    help="comma separated option index per choice group; omit for the "
                         "shortest sequence valid under the unconditional hypotheses")
    sp.set_defaults(fn=_cmd_shortest)

    sp = sub.add_parser("scan", parents=[common], help="degree-sum theorem scan")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--bound", type=int, default=None, help="degree-sum bound, floor(3r/2)+1 if omitted")
    sp.add_argument("--mode", choices=("exhaustive", "random"), default=None)
    sp.set_defaults(fn=_cmd_scan)

    sp = sub.add_parser("tightness", parents=[common], help="witness hunt one unit below the bound")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--degree-sum", type=int, default=None, help="defaults to floor(3r/2)")
    sp.add_argument("--profile", action="append", default=[],
                    help="restrict to an exact profile like 2,4 (repeatable)")
    sp.set_defaults(fn=_cmd_tightness)

    sp = sub.add_parser("corollary", parents=[common], help="extremal constant checks at one r")
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(fn=_cmd_corollary)

    sp = sub.add_parser("sweep", parents=[common], help="Monte Carlo sweep across the threshold")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--p-grid", default=None, help="comma separated probabilities")
    sp.add_argument("--offsets", default=None,
                    help="comma separated offsets c, grid p = (log r + c)/r")
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--cross-validate", action="store_true",
                    help="pre-check the classifier against dense counts (r = 5 only)")
    sp.set_defaults(fn=_cmd_sweep)

    sp = sub.add_parser("crossval", parents=[common],
                        help="criterion versus dense count agreement at r = 5")
    sp.add_argument("--p-list", required=True, help="comma separated probabilities")
    sp.add_argument("--n", type=int, default=50, help="samples per probability")
    sp.set_defaults(fn=_cmd_crossval)

    sp = sub.add_parser("isolated", parents=[common], help="hunt for a state with no legal swap")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--count-all", action="store_true", help="count all isolated states (2r <= 10)")
    sp.set_defaults(fn=_cmd_isolated)

    return ap


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (BgParseError, GadgetParseError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
