"""Command-line front end.

Subcommands: radius, center, envelope, distance, crosscheck,
verify {holder|bp-sets|cac|lim-identities|axioms}, fuzz conjecture.

Exit codes: 0 success, 1 property violation (verify/crosscheck/fuzz), 2 schema
violation in an instance file, 3 kind/space mismatch.  Reports are printed as
small tables; ``--json PATH`` additionally writes the machine-readable report,
byte-identical across runs with the same command line and seed.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import oracles
from .envelopes import center_box, coordinate_envelopes, enlargement_inclusion_check
from .euclidean_center import (
    holder_center_bound,
    set_center_shift_bound,
    smallest_enclosing_ball,
)
from .instances import (
    Report,
    SchemaError,
    format_float,
    format_rational,
    input_digest,
    jsonable,
    load_instances,
    seq_to_json_dict,
    serialize_instances,
)
from .oscillation import (
    OscillationScalars,
    oscillation_scalars,
    radius_with_infinity,
    sequence_space_radius,
    vanishing_envelopes,
    zero_clamp_center,
)
from .sampling import random_pointset, random_seq, split_seed, trial_rng
from .selector import canonical_center
from .sequences import KindMismatchError, RepresentableSeq, SpaceKind, cluster_set
from .tail_metric import EUCLID, L1, SUP, tail_pseudometric, tail_pseudometric_bounds

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_SCHEMA = 2
EXIT_KIND = 3

SPACE_OF_KIND = {
    SpaceKind.SUP_FINITE: "sup",
    SpaceKind.EUCLIDEAN: "euclid",
    SpaceKind.C0_SPIKE: "c0",
    SpaceKind.C_TAIL: "c",
    SpaceKind.LINF_TAIL: "linf",
}
NORMS = {"sup": SUP, "euclid": EUCLID, "l1": L1}


def _check_space(seq: RepresentableSeq, space: str | None) -> str:
    natural = SPACE_OF_KIND[seq.kind]
    if space is None:
        return natural
    ok = space == natural or (space == "linf" and seq.kind is SpaceKind.C_TAIL)
    if not ok:
        raise KindMismatchError(f"--space {space} does not match sequence kind {seq.kind.value}")
    return space


def _radius_with_oracle(seq: RepresentableSeq, space: str) -> dict:
    if space == "euclid":
        ball = smallest_enclosing_ball(cluster_set(seq))
        orc = oracles.euclidean_radius_oracle(cluster_set(seq))
        return {"space": space, "radius": format_float(ball.radius),
                "oracle": format_float(orc.value),
                "difference": format_float(abs(ball.radius - orc.value))}
    if space == "sup":
        value = center_box(coordinate_envelopes(seq)).radius
    elif space == "c0":
        value = sequence_space_radius(seq, "c0")
        assert value == radius_with_infinity(vanishing_envelopes(seq))
    else:
        value = sequence_space_radius(seq, space)
    orc = oracles.supnorm_radius_oracle(seq)
    return {"space": space, "radius": format_rational(value),
            "oracle": format_rational(orc.value),
            "difference": format_rational(abs(value - orc.value))}


def _print_table(rows: list[dict]) -> None:
    if not rows:
        return
    keys = list(rows[0].keys())
    widths = {k: max(len(k), *(len(str(r.get(k, ""))) for r in rows)) for k in keys}
    print("  ".join(k.ljust(widths[k]) for k in keys))
    print("  ".join("-" * widths[k] for k in keys))
    for r in rows:
        print("  ".join(str(r.get(k, "")).ljust(widths[k]) for k in keys))


def _finish(report: Report, args, code: int = EXIT_OK) -> int:
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return code


def cmd_radius(args) -> int:
    seqs = load_instances(args.input)
    with open(args.input, encoding="utf-8") as fh:
        digest = input_digest(fh.read())
    rows = [_radius_with_oracle(s, _check_space(s, args.space)) for s in seqs]
    _print_table(rows)
    report = Report(command="radius", inputs_digest=digest, results={"sequences": rows})
    return _finish(report, args)


def cmd_center(args) -> int:
    seqs = load_instances(args.input)
    with open(args.input, encoding="utf-8") as fh:
        digest = input_digest(fh.read())
    rows = []
    results = []
    for s in seqs:
        space = _check_space(s, args.space)
        entry: dict = {"space": space}
        if space == "euclid":
            ball = smallest_enclosing_ball(cluster_set(s))
            entry["radius"] = format_float(ball.radius)
            entry["center"] = "(" + ", ".join(format_float(x) for x in ball.center) + ")"
            results.append({"space": space, "ball": ball})
        elif space == "sup":
            box = center_box(coordinate_envelopes(s))
            g = canonical_center(s)
            entry["radius"] = format_rational(box.radius)
            entry["center"] = "(" + ", ".join(format_rational(x) for x in g) + ")"
            entry["box"] = " x ".join(f"[{format_rational(lo)},{format_rational(hi)}]"
                                      for lo, hi in box.intervals)
            results.append({"space": space, "box": box, "selector": list(g)})
        else:
            env = vanishing_envelopes(s) if space == "c0" else None
            if env is not None:
                r = radius_with_infinity(env)
                g = zero_clamp_center(env)
                entry["radius"] = format_rational(r)
                entry["center"] = "(" + ", ".join(format_rational(x) for x in g) + ")"
                results.append({"space": space, "radius": r, "selector": list(g)})
            else:
                r = sequence_space_radius(s, space)
                entry["radius"] = format_rational(r)
                results.append({"space": space, "radius": r})
        rows.append(entry)
    _print_table(rows)
    report = Report(command="center", inputs_digest=digest, results={"sequences": results})
    return _finish(report, args)


def cmd_envelope(args) -> int:
    seqs = load_instances(args.input)
    with open(args.input, encoding="utf-8") as fh:
        digest = input_digest(fh.read())
    rows = []
    results = []
    for s in seqs:
        space = _check_space(s, args.space)
        if space == "sup":
            env = coordinate_envelopes(s)
        elif space == "c0":
            env = vanishing_envelopes(s)
        else:
            raise KindMismatchError("envelope applies to sup and c0 models")
        orc_env = oracles.window_envelope(
            s, s.joint_preperiod_length() + max(s.dim, s.joint_preperiod_length()) + 3 * s.joint_cycle_length() + 1)
        agree = env == orc_env
        row = {"space": space,
               "lower": "(" + ", ".join(format_rational(x) for x in env.lower) + ")",
               "upper": "(" + ", ".join(format_rational(x) for x in env.upper) + ")",
               "oracle_agrees": agree}
        if env.infinity is not None:
            row["infinity"] = f"[{format_rational(env.infinity[0])}, {format_rational(env.infinity[1])}]"
        rows.append(row)
        results.append({"space": space, "envelope": env, "oracle_agrees": agree})
        if not agree:
            return _finish(Report("envelope", digest, results={"sequences": results}), args,
                           EXIT_VIOLATION)
    _print_table(rows)
    return _finish(Report(command="envelope", inputs_digest=digest,
                          results={"sequences": results}), args)


def cmd_distance(args) -> int:
    xs = load_instances(args.a)
    ys = load_instances(args.b)
    x, y = xs[0], ys[0]
    norm = NORMS[args.norm] if args.norm else (EUCLID if x.kind is SpaceKind.EUCLIDEAN else SUP)
    d = tail_pseudometric(x, y, norm)
    horizon = 4 * (max(x.joint_preperiod_length(), y.joint_preperiod_length()) + 1
                   + x.joint_cycle_length() * y.joint_cycle_length()) + 8
    lo, hi = tail_pseudometric_bounds(x, y, horizon, horizon // 2, norm)
    fmt = format_float if isinstance(d, float) else format_rational
    _print_table([{"d": fmt(d), "method": "cluster_hausdorff",
                   "bounds": f"[{fmt(lo)}, {fmt(hi)}]"}])
    ok = (lo <= d <= hi) if isinstance(d, float) else (lo == d == hi)
    report = Report(command="distance",
                    results={"d": d, "method": "cluster_hausdorff", "bounds": [lo, hi],
                             "oracle_agrees": bool(ok)})
    return _finish(report, args, EXIT_OK if ok else EXIT_VIOLATION)


def _crosscheck_one(space: str, rng) -> tuple[bool, dict]:
    if space == "euclid":
        seq = random_seq(rng, SpaceKind.EUCLIDEAN)
        ball = smallest_enclosing_ball(cluster_set(seq))
        orc = oracles.euclidean_radius_oracle(cluster_set(seq))
        diff = abs(ball.radius - orc.value)
        return diff <= 1e-6, {"diff": diff, "seq": seq_to_json_dict(seq)}
    kind = {"sup": SpaceKind.SUP_FINITE, "c0": SpaceKind.C0_SPIKE,
            "c": SpaceKind.C_TAIL, "linf": SpaceKind.LINF_TAIL}[space]
    seq = random_seq(rng, kind)
    if space == "sup":
        value = center_box(coordinate_envelopes(seq)).radius
    elif space == "c0":
        value = sequence_space_radius(seq, "c0")
        if value != radius_with_infinity(vanishing_envelopes(seq)):
            return False, {"diff": None, "seq": seq_to_json_dict(seq)}
    elif space == "c":
        value = sequence_space_radius(seq, "c")
        if value != sequence_space_radius(seq, "linf"):
            return False, {"diff": None, "seq": seq_to_json_dict(seq)}
    else:
        value = sequence_space_radius(seq, "linf")
    orc = oracles.supnorm_radius_oracle(seq)
    diff = abs(value - orc.value)
    return diff == 0, {"diff": diff, "seq": seq_to_json_dict(seq)}


def cmd_crosscheck(args) -> int:
    worst = None
    failures = 0
    witness = None
    for i in range(args.trials):
        ok, info = _crosscheck_one(args.space, trial_rng(args.seed, i))
        if not ok:
            failures += 1
            witness = witness or info["seq"]
        if info["diff"] is not None and (worst is None or info["diff"] > worst):
            worst = info["diff"]
    rows = [{"space": args.space, "trials": args.trials, "failures": failures,
             "max_diff": format_float(float(worst)) if worst is not None else "0"}]
    _print_table(rows)
    report = Report(command=f"crosscheck {args.space}", seed=args.seed,
                    results={"trials": args.trials, "failures": failures,
                             "max_diff": float(worst) if worst is not None else 0.0,
                             "witness": witness})
    return _finish(report, args, EXIT_OK if failures == 0 else EXIT_VIOLATION)


def _verify_holder(args) -> tuple[int, dict]:
    min_slack, witness = None, None
    for i in range(args.trials):
        rng = trial_rng(args.seed, i)
        dim = args.dim or rng.randint(2, 5)
        x = random_seq(rng, SpaceKind.EUCLIDEAN, dim=dim)
        y = random_seq(rng, SpaceKind.EUCLIDEAN, dim=dim)
        slack = holder_center_bound(x, y)
        if min_slack is None or slack < min_slack:
            min_slack = slack
            witness = {"x": seq_to_json_dict(x), "y": seq_to_json_dict(y)}
    ok = min_slack is None or min_slack >= -1e-7
    return (EXIT_OK if ok else EXIT_VIOLATION), {"min_slack": min_slack, "worst_instance": witness}


def _verify_bp_sets(args) -> tuple[int, dict]:
    min_slack, witness = None, None
    for i in range(args.trials):
        rng = trial_rng(args.seed, i)
        dim = args.dim or rng.randint(2, 5)
        a = random_pointset(rng, dim)
        b = random_pointset(rng, dim)
        slack = set_center_shift_bound(a, b)
        if min_slack is None or slack < min_slack:
            min_slack = slack
            witness = {"a": [[str(c) for c in p] for p in a],
                       "b": [[str(c) for c in p] for p in b]}
    ok = min_slack is None or min_slack >= -1e-7
    return (EXIT_OK if ok else EXIT_VIOLATION), {"min_slack": min_slack, "worst_instance": witness}


def _verify_cac(args) -> tuple[int, dict]:
    delta = Fraction(args.delta) if args.delta else Fraction(1)
    worst, witness = Fraction(0), None
    for i in range(args.trials):
        rng = trial_rng(args.seed, i)
        seq = random_seq(rng, SpaceKind.SUP_FINITE, dim=args.dim)
        rep = enlargement_inclusion_check(seq, delta, split_seed(args.seed, i), 32)
        if rep.max_distance > worst:
            worst = rep.max_distance
            witness = seq_to_json_dict(seq)
    ok = worst <= 1
    return (EXIT_OK if ok else EXIT_VIOLATION), {"max_distance": worst, "worst_instance": witness}


def _verify_lim_identities(args) -> tuple[int, dict]:
    violations = 0
    witness = None
    kinds = [SpaceKind.C0_SPIKE, SpaceKind.C_TAIL, SpaceKind.LINF_TAIL]
    for i in range(args.trials):
        rng = trial_rng(args.seed, i)
        seq = random_seq(rng, kinds[i % 3])
        try:
            scal = oscillation_scalars(seq)
            checks = [
                scal.beta <= scal.alpha,
                max(scal.beta, scal.gamma) == max(scal.alpha, scal.gamma),
                max(scal.beta, 2 * scal.delta) == max(scal.alpha, 2 * scal.delta),
            ]
            if not all(checks):
                raise AssertionError
        except AssertionError:
            violations += 1
            witness = witness or seq_to_json_dict(seq)
    ok = violations == 0
    return (EXIT_OK if ok else EXIT_VIOLATION), {"violations": violations, "worst_instance": witness}


def _verify_axioms(args) -> tuple[int, dict]:
    worst = 0.0
    witness = None
    for i in range(args.trials):
        rng = trial_rng(args.seed, i)
        kind = SpaceKind.SUP_FINITE if i % 2 == 0 else SpaceKind.EUCLIDEAN
        norm = SUP if kind is SpaceKind.SUP_FINITE else EUCLID
        dim = args.dim or rng.randint(1, 3)
        x, y, z = (random_seq(rng, kind, dim=dim) for _ in range(3))
        dxy = tail_pseudometric(x, y, norm)
        dyx = tail_pseudometric(y, x, norm)
        dxz = tail_pseudometric(x, z, norm)
        dyz = tail_pseudometric(y, z, norm)
        sym_gap = abs(float(dxy) - float(dyx))
        tri_gap = float(dxz) - (float(dxy) + float(dyz))
        refl = float(tail_pseudometric(x, x, norm))
        gap = max(sym_gap, tri_gap, refl)
        if gap > worst:
            worst = gap
            witness = seq_to_json_dict(x)
    ok = worst <= 1e-9
    return (EXIT_OK if ok else EXIT_VIOLATION), {"max_violation": worst, "worst_instance": witness}


def cmd_verify(args) -> int:
    runner = {
        "holder": _verify_holder,
        "bp-sets": _verify_bp_sets,
        "cac": _verify_cac,
        "lim-identities": _verify_lim_identities,
        "axioms": _verify_axioms,
    }[args.property]
    code, results = runner(args)
    shown = {k: (format_float(float(v)) if isinstance(v, (float, Fraction)) else v)
             for k, v in results.items() if k != "worst_instance"}
    _print_table([{"property": args.property, "trials": args.trials,
                   "status": "ok" if code == EXIT_OK else "VIOLATION", **shown}])
    report = Report(command=f"verify {args.property}", seed=args.seed,
                    results={"trials": args.trials, **results})
    return _finish(report, args, code)


def cmd_fuzz(args) -> int:
    from .conjecture import conjecture_search
    report = conjecture_search(args.trials, args.seed, args.norm_family_size)
    _print_table([{"trials": report.trials, "examined": report.examined,
                   "candidates": len(report.candidates)}])
    out = Report(command="fuzz conjecture", seed=args.seed,
                 results=report.to_json_dict())
    return _finish(out, args)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="asymcenter",
                                description="Asymptotic centers and radii of representable sequences")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_io(sp, needs_input=True):
        if needs_input:
            sp.add_argument("-i", "--input", required=True, help="instance JSON file")
        sp.add_argument("--space", choices=["sup", "c0", "c", "linf", "euclid"])
        sp.add_argument("--json", help="write the machine-readable report here")

    sp = sub.add_parser("radius", help="asymptotic radius with oracle comparison")
    add_io(sp)
    sp.set_defaults(func=cmd_radius)

    sp = sub.add_parser("center", help="center set / selector with radius")
    add_io(sp)
    sp.set_defaults(func=cmd_center)

    sp = sub.add_parser("envelope", help="upper/lower envelopes with oracle comparison")
    add_io(sp)
    sp.set_defaults(func=cmd_envelope)

    sp = sub.add_parser("distance", help="tail pseudometric between two instances")
    sp.add_argument("a", help="first instance file")
    sp.add_argument("b", help="second instance file")
    sp.add_argument("--norm", choices=["sup", "euclid", "l1"])
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("crosscheck", help="closed forms vs oracles on random instances")
    sp.add_argument("--space", choices=["sup", "c0", "c", "linf", "euclid"], required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_crosscheck)

    sp = sub.add_parser("verify", help="run a property suite")
    sp.add_argument("property", choices=["holder", "bp-sets", "cac", "lim-identities", "axioms"])
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--dim", type=int)
    sp.add_argument("--delta", help="enlargement parameter as a rational, e.g. 1 or 1/2")
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("fuzz", help="exploratory searches")
    fuzz_sub = sp.add_subparsers(dest="what", required=True)
    fc = fuzz_sub.add_parser("conjecture", help="hunt for pairs equal under every sampled norm")
    fc.add_argument("--trials", type=int, default=50)
    fc.add_argument("--seed", type=int, default=0)
    fc.add_argument("--norm-family-size", type=int, default=6)
    fc.add_argument("--json")
    fc.set_defaults(func=cmd_fuzz)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except KindMismatchError as exc:
        print(f"kind/space mismatch: {exc}", file=sys.stderr)
        return EXIT_KIND
    except FileNotFoundError as exc:
        print(f"schema error: cannot read {exc.filename}", file=sys.stderr)
        return EXIT_SCHEMA


if __name__ == "__main__":
    sys.exit(main())
