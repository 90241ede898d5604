"""Command-line surface: load a problem description, run one computation
or verification, and emit a human-readable report followed by greppable
key=value lines.

Exit codes: 0 computed or verified true, 1 check evaluated false (report
carries a witness), 2 input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import codes, oracle
from .balls import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    I_ball_cardinality,
    I_sphere_cardinality,
    PartitionImpossibleError,
    partition_centers,
    r_ball_cardinality,
)
from .mset import ShapeError
from .pomset import (
    CycleError,
    Ideal,
    NotAnIdealError,
    Pomset,
    enumerate_ideals,
    enumerate_root_downsets,
)
from .space import Space, Vector, distance, pomset_weight, support

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


@dataclass
class Problem:
    space: Space
    code: codes.Code | None = None
    ideal: Ideal | None = None
    radius: int | None = None


def problem_from_dict(doc: dict) -> Problem:
    """Validate and assemble a problem from its JSON document."""
    m = int(doc["m"])
    pd = doc["pomset"]
    pomset = Pomset.from_relations(int(pd["s"]), m // 2, pd.get("relations", []))
    space = Space(m, pomset, tuple(doc["labeling"]))
    code = None
    if "code" in doc:
        cd = doc["code"]
        if "generator" in cd:
            code = codes.span_generator(space, cd["generator"])
        elif "codewords" in cd:
            code = codes.Code.from_codewords(space, cd["codewords"])
        else:
            raise ValueError("code must supply 'codewords' or 'generator'")
    ideal = None
    if "ideal" in doc:
        ideal = Ideal(pomset, tuple(doc["ideal"]["counts"]))
    radius = None
    if "radius" in doc:
        radius = int(doc["radius"])
        if not 0 <= radius <= space.max_weight:
            raise ValueError(f"radius {radius} outside 0..{space.max_weight}")
    return Problem(space, code, ideal, radius)


def load_problem(path: str) -> Problem:
    with open(path, "r", encoding="utf-8") as fh:
        return problem_from_dict(json.load(fh))


def problem_to_dict(p: Problem) -> dict:
    """Canonical document: closed relation set, sorted, codewords ordered."""
    doc: dict = {
        "m": p.space.m,
        "pomset": {
            "s": p.space.s,
            "relations": [list(pair) for pair in sorted(p.space.pomset.order)],
        },
        "labeling": list(p.space.labeling),
    }
    if p.code is not None:
        if p.code.generator is not None:
            doc["code"] = {"generator": [list(r) for r in p.code.generator]}
        else:
            doc["code"] = {"codewords": [list(w.coords) for w in p.code.codewords]}
    if p.ideal is not None:
        doc["ideal"] = {"counts": list(p.ideal.counts)}
    if p.radius is not None:
        doc["radius"] = p.radius
    return doc


def canonical_json(p: Problem) -> str:
    return json.dumps(problem_to_dict(p), sort_keys=True, indent=2) + "\n"


class Report:
    """Accumulates a '#'-prefixed human section and key=value lines."""

    def __init__(self, machine_only: bool, out=None):
        self.machine_only = machine_only
        self.out = out if out is not None else sys.stdout
        self._human: list[str] = []
        self._kv: list[tuple[str, str]] = []

    def say(self, text: str) -> None:
        self._human.append(text)

    def put(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (tuple, list)):
            value = ",".join(str(x) for x in value)
        self._kv.append((key, str(value)))

    def emit(self) -> None:
        if not self.machine_only:
            for line in self._human:
                print(f"# {line}", file=self.out)
        for key, value in self._kv:
            print(f"{key}={value}", file=self.out)


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def _ideal_str(i: Ideal) -> str:
    return f"{i} counts={','.join(str(c) for c in i.counts)}"


def _need_code(problem: Problem) -> codes.Code:
    if problem.code is None:
        raise ValueError("this command needs a code in the problem file")
    return problem.code


def _resolve_ideal(problem: Problem, args) -> Ideal | None:
    if getattr(args, "ideal", None) is not None:
        return Ideal(problem.space.pomset, _parse_ints(args.ideal))
    return problem.ideal


def _resolve_radius(problem: Problem, args) -> int | None:
    if getattr(args, "radius", None) is not None:
        return args.radius
    return problem.radius


def _resolve_ideal_or_radius(problem: Problem, args) -> tuple[Ideal | None, int | None]:
    ideal = _resolve_ideal(problem, args)
    radius = _resolve_radius(problem, args)
    explicit_ideal = getattr(args, "ideal", None) is not None
    explicit_radius = getattr(args, "radius", None) is not None
    if explicit_ideal and not explicit_radius:
        return ideal, None
    if explicit_radius and not explicit_ideal:
        return None, radius
    if ideal is not None and radius is not None:
        raise ValueError("both ideal and radius available; pass --ideal or --radius")
    return ideal, radius


def _vector_arg(problem: Problem, text: str) -> Vector:
    return problem.space.vector(_parse_ints(text))


def cmd_weight(problem, args, rep) -> int:
    u = _vector_arg(problem, args.vector)
    w = pomset_weight(u)
    rep.say(f"weight of {u} is {w}; support {support(u)}")
    rep.put("weight", w)
    return EXIT_OK


def cmd_distance(problem, args, rep) -> int:
    u = _vector_arg(problem, args.vector)
    v = _vector_arg(problem, args.other)
    d = distance(u, v)
    rep.say(f"distance between {u} and {v} is {d}")
    rep.put("distance", d)
    return EXIT_OK


def cmd_ideals(problem, args, rep) -> int:
    found = enumerate_ideals(problem.space.pomset, args.cardinality)
    rep.say(f"{len(found)} ideal(s) of cardinality {args.cardinality}")
    for i in found:
        rep.say(_ideal_str(i))
    rep.put("count", len(found))
    for j, i in enumerate(found):
        rep.put(f"ideal.{j}", i.counts)
    return EXIT_OK


def cmd_downsets(problem, args, rep) -> int:
    found = enumerate_root_downsets(problem.space.pomset, args.size)
    rep.say(f"{len(found)} downset(s) of size {args.size}")
    rep.put("count", len(found))
    for j, down in enumerate(found):
        rep.put(f"downset.{j}", sorted(down))
    return EXIT_OK


def cmd_ball_size(problem, args, rep) -> int:
    ideal, radius = _resolve_ideal_or_radius(problem, args)
    if ideal is not None:
        size = I_ball_cardinality(problem.space, ideal)
        rep.say(f"ball of ideal {_ideal_str(ideal)} has {size} vectors")
    elif radius is not None:
        size = r_ball_cardinality(problem.space, radius)
        rep.say(f"ball of radius {radius} has {size} vectors")
    else:
        raise ValueError("need --ideal or --radius (or those fields in the file)")
    rep.put("size", size)
    return EXIT_OK


def cmd_sphere_size(problem, args, rep) -> int:
    ideal = _resolve_ideal(problem, args)
    if ideal is None:
        raise ValueError("need --ideal (or an ideal in the file)")
    size = I_sphere_cardinality(problem.space, ideal)
    rep.say(f"sphere of ideal {_ideal_str(ideal)} has {size} vectors")
    rep.put("size", size)
    return EXIT_OK


def cmd_partition(problem, args, rep) -> int:
    ideal = _resolve_ideal(problem, args)
    if ideal is None:
        raise ValueError("need --ideal (or an ideal in the file)")
    try:
        centers = partition_centers(problem.space, ideal, args.budget)
    except PartitionImpossibleError as exc:
        rep.say(f"no tiling exists: {exc}")
        rep.put("partition", False)
        rep.put("witness_element", exc.element)
        rep.emit()
        return EXIT_FALSE
    rep.say(f"{len(centers)} centers tile the space for {_ideal_str(ideal)}")
    rep.put("partition", True)
    rep.put("count", len(centers))
    for j, center in enumerate(centers):
        rep.put(f"center.{j}", center.coords)
    return EXIT_OK


def cmd_check_perfect(problem, args, rep) -> int:
    code = _need_code(problem)
    ideal, radius = _resolve_ideal_or_radius(problem, args)
    if ideal is not None:
        result = codes.check_I_perfect(code, ideal, args.budget)
        rep.say(f"ideal {_ideal_str(ideal)}")
        rep.put("mode", "ideal")
    elif radius is not None:
        result = codes.check_r_perfect(code, radius, args.budget)
        rep.say(f"radius {radius}")
        rep.put("mode", "radius")
    else:
        raise ValueError("need --ideal or --radius (or those fields in the file)")
    rep.put("perfect", result.ok)
    if result.ok:
        rep.say("balls at the codewords tile the space")
        return EXIT_OK
    rep.say(f"not perfect: {result.reason} at {result.witness}")
    rep.put("witness", result.witness)
    return EXIT_FALSE


def cmd_check_error_correcting(problem, args, rep) -> int:
    code = _need_code(problem)
    radius = _resolve_radius(problem, args)
    if radius is None:
        raise ValueError("need --radius (or a radius in the file)")
    result = codes.check_r_error_correcting(code, radius, args.budget)
    rep.put("error_correcting", result.ok)
    if result.ok:
        rep.say(f"radius-{radius} balls at the codewords are pairwise disjoint")
        return EXIT_OK
    rep.say(f"balls overlap: {result.reason} at {result.witness}")
    rep.put("witness", result.witness)
    return EXIT_FALSE


def _singleton_facts(code: codes.Code) -> dict:
    d = codes.min_distance(code)
    sp = code.space
    return {
        "d": d,
        "r": (d - 1) // sp.height,
        "rhs": codes.singleton_rhs(code),
        "lhs": sp.n - codes.ceil_log(code.size, sp.m),
    }


def cmd_check_mds(problem, args, rep) -> int:
    code = _need_code(problem)
    facts = _singleton_facts(code)
    mds = codes.is_MDS(code)
    rep.say(
        f"MDS: {'true' if mds else 'false'}, d={facts['d']}, rhs={facts['rhs']}"
    )
    for key in ("d", "r", "rhs", "lhs"):
        rep.put(key, facts[key])
    rep.put("mds", mds)
    return EXIT_OK if mds else EXIT_FALSE


def cmd_singleton(problem, args, rep) -> int:
    code = _need_code(problem)
    facts = _singleton_facts(code)
    rep.say(
        f"n - ceil(log_m K) = {facts['lhs']} >= {facts['rhs']} = "
        f"max block sum at root size {facts['r']}"
    )
    for key in ("d", "r", "rhs", "lhs"):
        rep.put(key, facts[key])
    rep.put("attained", facts["lhs"] == facts["rhs"])
    return EXIT_OK


def cmd_dual(problem, args, rep) -> int:
    code = _need_code(problem)
    dual = codes.dual_code(code, args.budget)
    rep.say(f"dual code has {dual.size} codewords")
    rep.put("size", dual.size)
    for j, w in enumerate(dual.codewords):
        rep.put(f"codeword.{j}", w.coords)
    return EXIT_OK


def cmd_weight_dist(problem, args, rep) -> int:
    code = _need_code(problem)
    sp = code.space
    if args.closed_form:
        t = sp.labeling[0]
        if any(k != t for k in sp.labeling):
            raise ValueError("closed form needs equal block dimensions")
        if not sp.pomset.is_chain:
            raise ValueError("closed form needs a chain order")
        k = codes.ceil_log(code.size, sp.m)
        if sp.m ** k != code.size:
            raise ValueError("closed form needs a code of size m^k")
        dist = codes.mds_chain_weight_distribution(
            sp.n, k, t, sp.m, sp.s, expected_d=codes.min_distance(code)
        )
        rep.put("source", "closed-form")
    else:
        dist = codes.weight_distribution(code)
        rep.put("source", "census")
    rep.say(
        "weights: "
        + ", ".join(f"{r}:{a}" for r, a in enumerate(dist.counts) if a)
    )
    for r, a in enumerate(dist.counts):
        rep.put(f"A.{r}", a)
    return EXIT_OK


def cmd_intersect(problem, args, rep) -> int:
    code = _need_code(problem)
    ideal = _resolve_ideal(problem, args)
    if ideal is None:
        raise ValueError("need --ideal (or an ideal in the file)")
    if args.center is None:
        raise ValueError("need --center")
    x = _vector_arg(problem, args.center)
    count = codes.ball_code_intersection(code, ideal, x)
    rep.say(f"{count} codeword(s) inside the ball of {_ideal_str(ideal)} at {x}")
    rep.put("count", count)
    return EXIT_OK


def cmd_block_threshold(problem, args, rep) -> int:
    code = _need_code(problem)
    threshold, witnesses = codes.block_dependency_witnesses(code, args.budget)
    direct = codes.min_ideal_root_size(code)
    rep.say(
        f"first dependent block set has size {threshold}; "
        f"codeword-side minimum is {direct}"
    )
    rep.put("threshold", threshold)
    rep.put("min_root", direct)
    for j, down in enumerate(witnesses):
        rep.put(f"witness.{j}", sorted(down))
    return EXIT_OK


def cmd_oracle(problem, args, rep) -> int:
    sp = problem.space
    if args.mode == "census":
        report = oracle.weight_census(sp, args.budget)
        rep.say(f"census over {report.total} vectors")
        rep.put("total", report.total)
        for r in sorted(report.sphere_counts):
            rep.put(f"sphere.{r}", report.sphere_counts[r])
        for key in sorted(report.ideal_sphere_counts):
            name = ",".join(str(c) for c in key)
            rep.put(f"ideal_sphere.{name}", report.ideal_sphere_counts[key])
        return EXIT_OK
    if args.mode == "metric":
        report = oracle.verify_metric(sp, seed=args.seed)
        rep.say(
            ("exhaustive" if report.exhaustive else "sampled")
            + f" metric check over {report.triples_checked} triples"
        )
        rep.put("passed", report.passed)
        rep.put("exhaustive", report.exhaustive)
        rep.put("triples", report.triples_checked)
        if report.counterexample:
            axiom, u, v, w = report.counterexample
            rep.say(f"{axiom} fails at u={u} v={v} w={w}")
            rep.put("axiom", axiom)
            rep.put("u", u)
            rep.put("v", v)
            if w is not None:
                rep.put("w", w)
        return EXIT_OK if report.passed else EXIT_FALSE
    report = oracle.verify_formula_suite(sp, budget=args.budget, seed=args.seed)
    for check in report.checks:
        rep.say(f"{check.name}: {check.status} ({check.detail})")
        rep.put(f"check.{check.name}", check.status)
    rep.put("ok", report.ok)
    return EXIT_OK if report.ok else EXIT_FALSE


COMMANDS = {
    "weight": cmd_weight,
    "distance": cmd_distance,
    "ideals": cmd_ideals,
    "downsets": cmd_downsets,
    "ball-size": cmd_ball_size,
    "sphere-size": cmd_sphere_size,
    "partition": cmd_partition,
    "check-perfect": cmd_check_perfect,
    "check-error-correcting": cmd_check_error_correcting,
    "check-mds": cmd_check_mds,
    "singleton": cmd_singleton,
    "dual": cmd_dual,
    "weight-dist": cmd_weight_dist,
    "intersect": cmd_intersect,
    "block-threshold": cmd_block_threshold,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="enumeration budget (vectors / memberships)")
    flags.add_argument("--seed", type=int, default=0,
                       help="seed for sampled verification")
    flags.add_argument("--machine", action="store_true",
                       help="suppress the human section, print key=value only")

    parser = argparse.ArgumentParser(
        prog="pomsetblock",
        description="Block codes under the pomset metric: weights, balls, "
                    "perfectness, Singleton/MDS checks and brute-force oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *, mode_choices=None):
        p = sub.add_parser(name, parents=[flags])
        if mode_choices:
            p.add_argument("mode", choices=mode_choices)
        p.add_argument("problem", help="path to a problem JSON file")
        return p

    p = add("weight")
    p.add_argument("--vector", required=True, help="comma-separated coordinates")
    p = add("distance")
    p.add_argument("--vector", required=True)
    p.add_argument("--other", required=True)
    p = add("ideals")
    p.add_argument("--cardinality", type=int, required=True)
    p = add("downsets")
    p.add_argument("--size", type=int, required=True)
    p = add("ball-size")
    p.add_argument("--ideal", help="comma-separated ideal counts")
    p.add_argument("--radius", type=int)
    p = add("sphere-size")
    p.add_argument("--ideal")
    p = add("partition")
    p.add_argument("--ideal")
    p = add("check-perfect")
    p.add_argument("--ideal")
    p.add_argument("--radius", type=int)
    p = add("check-error-correcting")
    p.add_argument("--radius", type=int)
    add("check-mds")
    add("singleton")
    add("dual")
    p = add("weight-dist")
    p.add_argument("--closed-form", action="store_true")
    p = add("intersect")
    p.add_argument("--ideal")
    p.add_argument("--center", required=True)
    add("block-threshold")
    add("oracle", mode_choices=("census", "metric", "suite"))
    return parser


def run(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.machine, out)
    try:
        problem = load_problem(args.problem)
        status = COMMANDS[args.command](problem, args, rep)
    except BudgetExceededError as exc:
        rep.say(f"budget exceeded: {exc}")
        rep.put("error", "budget")
        rep.emit()
        return EXIT_BUDGET
    except (
        ShapeError,
        NotAnIdealError,
        CycleError,
        codes.UndefinedDistanceError,
        ValueError,
        KeyError,
        TypeError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        rep.say(f"input error: {exc}")
        rep.put("error", "input")
        rep.emit()
        return EXIT_INPUT
    rep.emit()
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
