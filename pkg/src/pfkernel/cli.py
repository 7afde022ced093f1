"""``pfkernel`` command line: kernelize, solve, lift, gen-hard, check-props.

Exit codes: 0 success or answer yes, 1 answer no (or a failed property
suite), 2 usage or parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .gadgets import CnfParseError, cnf_to_ismfm, dump_gadget_sidecar, parse_dimacs_cnf
from .graph import GraphError, dump_dimacs_graph, load_dimacs_graph
from .instance import IS, VC, Instance, InvalidInstance, parse_sidecar, write_instance
from .kernel import BoundViolation, LiftError, kernelize, lift_solution, verify_all_bounds
from .modulator import find_modulator_exact, find_modulator_greedy, verify_modulator
from .oracle import OracleBudget, OracleBudgetExceeded, has_independent_set, max_independent_set
from .plugins import PluginRejected, get_plugin
from .properties import SUITES, run_suites
from .trace import ReductionTrace, TraceError

OK, NO, USAGE, INVARIANT = 0, 1, 2, 3

log = logging.getLogger("pfkernel")


class UsageError(Exception):
    pass


def _ids(vs) -> str:
    return " ".join(str(v + 1) for v in sorted(vs))


def _emit(args, human: list[str], data: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data, sort_keys=True))
    else:
        for line in human:
            print(line)


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _prefix_files(prefix: str) -> tuple[Path, Path]:
    p = Path(prefix)
    if p.suffix in (".dimacs", ".inst"):
        p = p.with_suffix("")
    return p.with_name(p.name + ".dimacs"), p.with_name(p.name + ".inst")


def _budget(args) -> OracleBudget:
    return OracleBudget(max_vertices=args.max_vertices, max_nodes=args.max_nodes)


# --- kernelize ---------------------------------------------------------------

def _load_for_kernel(args) -> tuple[Instance, str]:
    G = load_dimacs_graph(_read(args.graph))
    fields = parse_sidecar(_read(args.instance)) if args.instance else {}
    k = args.k if args.k is not None else fields.get("k")
    if k is None:
        raise UsageError("no target: give --k or an --instance sidecar")
    problem = args.problem.upper() if args.problem else fields.get("problem", IS)
    if args.find_modulator:
        res = (find_modulator_exact(G, args.max_modulator) if args.find_modulator == "exact"
               else find_modulator_greedy(G))
        if res is None:
            raise UsageError(f"no pseudoforest modulator with at most {args.max_modulator} vertices")
        X, how = res.modulator, res.method
    elif args.instance:
        X, how = fields["modulator"], "user-supplied"
    else:
        raise UsageError("give --instance or --find-modulator")
    return Instance(G, X, k, problem, fields.get("trivially_yes", False)), how


def cmd_kernelize(args) -> int:
    inst, how = _load_for_kernel(args)
    plugin = get_plugin(args.rule6_plugin) if args.rule6_plugin else None
    reduced, trace = kernelize(inst, plugin)
    compliant = bool(plugin and plugin.compliant)
    checks = verify_all_bounds(inst, trace, plugin_compliant=compliant, strict=False)
    if args.out:
        gpath, spath = write_instance(args.out, reduced, "pfkernel reduced instance")
        tpath = Path(args.out).with_name(Path(args.out).name + ".trace")
        tpath.write_text(trace.to_text(), encoding="utf-8")
        log.info("wrote %s %s %s", gpath, spath, tpath)
    counts = {}
    for rec in trace.records:
        tag = rec.to_line().split()[0]
        counts[tag] = counts.get(tag, 0) + 1
    data = {
        "problem": reduced.problem,
        "modulator_method": how,
        "original": {"n": len(inst.graph), "m": inst.graph.num_edges(),
                     "modulator": len(inst.modulator), "k": inst.k},
        "reduced": {"n": len(reduced.graph), "m": reduced.graph.num_edges(),
                    "modulator": len(reduced.modulator), "k": reduced.k,
                    "trivially_yes": reduced.trivially_yes},
        "rule_counts": counts,
    }
    human = [
        f"modulator ({how}): {_ids(inst.modulator)}",
        f"original: n={len(inst.graph)} m={inst.graph.num_edges()} |X|={len(inst.modulator)} k={inst.k}",
        f"reduced: n={len(reduced.graph)} m={reduced.graph.num_edges()} "
        f"|X|={len(reduced.modulator)} k={reduced.k}" + (" (trivially yes)" if reduced.trivially_yes else ""),
    ]
    if args.report:
        human.append("rules fired: " + (", ".join(f"{t}={c}" for t, c in sorted(counts.items())) or "none"))
        human += ["bound " + c.line() for c in checks]
        data["bounds"] = [c.__dict__ for c in checks]
    _emit(args, human, data)
    bad = [c for c in checks if c.status == "fail"]
    if bad:
        raise BoundViolation("; ".join(c.line() for c in bad))
    return OK


# --- solve -------------------------------------------------------------------

def cmd_solve(args) -> int:
    G = load_dimacs_graph(_read(args.graph))
    fields = parse_sidecar(_read(args.instance)) if args.instance else {}
    k = args.k if args.k is not None else fields.get("k")
    if k is None:
        raise UsageError("no target: give --k or an --instance sidecar")
    problem = args.problem.upper() if args.problem else fields.get("problem", IS)
    n = len(G)
    target = k if problem == IS else n - k
    budget = _budget(args)
    witness = None
    if target <= 0:
        yes = True
        witness = frozenset()
    elif args.witness:
        I = max_independent_set(G, budget)
        yes = len(I) >= target
        witness = frozenset(sorted(I)[:target])
    else:
        yes = has_independent_set(G, target, budget)
    if yes and witness is not None and problem == VC:
        witness = G.vertices - witness
    data = {"problem": problem, "k": k, "answer": "yes" if yes else "no"}
    human = [f"{problem} k={k}: {'yes' if yes else 'no'}"]
    if yes and args.witness:
        data["witness"] = [v + 1 for v in sorted(witness)]
        human.append(f"witness: {_ids(witness)}")
    _emit(args, human, data)
    return OK if yes else NO


# --- lift --------------------------------------------------------------------

def _parse_solution(text: str) -> frozenset[int]:
    ids = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#")[0].strip()
        if not line or line.startswith("c "):
            continue
        for tok in line.replace(",", " ").split():
            if not tok.isdigit() or int(tok) < 1:
                raise UsageError(f"solution line {lineno}: bad vertex id {tok!r}")
            ids.append(int(tok) - 1)
    return frozenset(ids)


def cmd_lift(args) -> int:
    gpath, spath = _prefix_files(args.original)
    G = load_dimacs_graph(_read(gpath))
    f = parse_sidecar(_read(spath))
    original = Instance(G, f["modulator"], f["k"], f["problem"], f["trivially_yes"])
    trace = ReductionTrace.from_text(_read(args.trace))
    if trace.problem != original.problem:
        raise UsageError(f"trace is for {trace.problem}, original is {original.problem}")
    sol = _parse_solution(_read(args.solution))
    lifted = lift_solution(original, trace, sol)
    if original.problem == IS:
        ok = G.is_independent(lifted) and len(lifted) >= original.k
    else:
        ok = G.is_independent(G.vertices - lifted) and len(lifted) <= original.k
    if not ok:
        raise LiftError("lifted set fails the final check")
    _emit(args, [_ids(lifted)], {"problem": original.problem, "solution": [v + 1 for v in sorted(lifted)]})
    return OK


# --- gen-hard ----------------------------------------------------------------

def cmd_gen_hard(args) -> int:
    F = parse_dimacs_cnf(_read(args.cnf))
    gi = cnf_to_ismfm(F)
    if not verify_modulator(gi.graph, gi.modulator, mock_forest=True):
        raise AssertionError("gadget construction left a non-mock-forest remainder")
    if args.out:
        gpath, spath = _prefix_files(args.out)
        gpath.write_text(dump_dimacs_graph(gi.graph, "pfkernel CNF gadget instance"), encoding="utf-8")
        spath.write_text(dump_gadget_sidecar(gi), encoding="utf-8")
    data = {"n": F.num_vars, "m": len(F.clauses), "modulator": len(gi.modulator), "k": gi.k,
            "vertices": len(gi.graph), "edges": gi.graph.num_edges()}
    human = [f"n={F.num_vars} m={len(F.clauses)} |X|={len(gi.modulator)} k={gi.k}",
             f"graph: {len(gi.graph)} vertices, {gi.graph.num_edges()} edges"]
    _emit(args, human, data)
    return OK


# --- check-props -------------------------------------------------------------

def cmd_check_props(args) -> int:
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    results = run_suites(args.suite, args.trials, args.seed)
    human, rows = [], []
    for r in results:
        human.append(r.line())
        if r.counterexample:
            human.append(f"  counterexample: {r.counterexample}")
        rows.append({"suite": r.name, "ok": r.ok, "checked": r.checked, "trials": r.trials,
                     "counterexample": r.counterexample})
    ok = all(r.ok for r in results)
    _emit(args, human, {"ok": ok, "seed": args.seed, "suites": rows})
    return OK if ok else NO


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pfkernel", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def budget_flags(q):
        q.add_argument("--max-vertices", type=int, default=80, help="oracle refuses larger graphs")
        q.add_argument("--max-nodes", type=int, default=5_000_000, help="oracle search-node limit")

    def common(q):
        q.add_argument("--json", action="store_true", help="print one JSON object instead of text")

    q = sub.add_parser("kernelize", help="reduce an instance and write the kernel plus its trace")
    q.add_argument("--graph", required=True, help="DIMACS edge file")
    q.add_argument("--instance", help="sidecar with modulator, k and problem")
    q.add_argument("--find-modulator", choices=("exact", "greedy"))
    q.add_argument("--max-modulator", type=int, default=8, help="size limit for --find-modulator exact")
    q.add_argument("--problem", choices=("is", "vc"))
    q.add_argument("--k", type=int)
    q.add_argument("--out", help="output prefix: PREFIX.dimacs, PREFIX.inst, PREFIX.trace")
    q.add_argument("--rule6-plugin", help="final-stage plugin (default pass-through)")
    q.add_argument("--report", action="store_true", help="print rule counts and size-bound checks")
    common(q)
    q.set_defaults(func=cmd_kernelize)

    q = sub.add_parser("solve", help="decide a small instance exactly")
    q.add_argument("--graph", required=True)
    q.add_argument("--instance", help="sidecar supplying k and problem")
    q.add_argument("--k", type=int)
    q.add_argument("--problem", choices=("is", "vc"))
    q.add_argument("--witness", action="store_true", help="print a solution when the answer is yes")
    budget_flags(q)
    common(q)
    q.set_defaults(func=cmd_solve)

    q = sub.add_parser("lift", help="turn a kernel solution into an original solution")
    q.add_argument("--original", required=True, help="prefix (or .dimacs/.inst file) of the original instance")
    q.add_argument("--trace", required=True)
    q.add_argument("--solution", required=True, help="1-based vertex ids of the kernel solution")
    common(q)
    q.set_defaults(func=cmd_lift)

    q = sub.add_parser("gen-hard", help="build the gadget instance for a DIMACS CNF formula")
    q.add_argument("--cnf", required=True)
    q.add_argument("--out", help="output prefix: PREFIX.dimacs and PREFIX.inst")
    common(q)
    q.set_defaults(func=cmd_gen_hard)

    q = sub.add_parser("check-props", help="run randomized property suites against the oracle")
    q.add_argument("--suite", nargs="+", choices=sorted(SUITES) + ["all"], default=["all"])
    q.add_argument("--trials", type=int, default=200)
    q.add_argument("--seed", type=int, default=0)
    common(q)
    q.set_defaults(func=cmd_check_props)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (BoundViolation, AssertionError) as e:
        print(f"error: invariant violated: {e}", file=sys.stderr)
        return INVARIANT
    except (UsageError, GraphError, InvalidInstance, CnfParseError, TraceError, LiftError,
            PluginRejected, OracleBudgetExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
