"""Command-line front end.

Exit codes: 0 success or connectable, 1 unconnectable (or an invalid
connector for ``verify``), 2 usage error, 3 unsupported or budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .connector import (
    BUDGET_EXHAUSTED,
    CONNECTABLE,
    UNCONNECTABLE,
    UNSUPPORTED,
    Verdict,
    connector_from_paths,
    format_connector,
    parse_connector,
    verify_connector,
)
from .hypercube import DimensionError, format_bits, parse_bits
from .pairset import (
    PairSet,
    PairSetError,
    SixCycleObstruction,
    classify,
    encompassment,
    separating_coordinate,
    sigma,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3

# colours cycled over paths in --dot output
PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]


class UsageError(Exception):
    pass


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2))
    else:
        print(text)


def _pairset(text: str) -> PairSet:
    try:
        return PairSet.parse(text)
    except (PairSetError, ValueError) as e:
        raise UsageError(f"bad pair-set literal {text!r}: {e}") from e


def to_dot(paths, n: int) -> str:
    """Graphviz drawing of Q_n with each path in its own colour."""
    lines = ["graph Q {", "  node [shape=circle, fontsize=10];"]
    on_path = set()
    for idx, path in enumerate(paths):
        colour = PALETTE[idx % len(PALETTE)]
        for u, v in zip(path, path[1:]):
            on_path.add((min(u, v), max(u, v)))
            lines.append(
                f'  "{format_bits(u, n)}" -- "{format_bits(v, n)}" [color={colour}, penwidth=3];'
            )
        if len(path) == 1:
            lines.append(f'  "{format_bits(path[0], n)}" [color={colour}, penwidth=3];')
    for u in range(1 << n):
        for j in range(n):
            v = u ^ (1 << j)
            if u < v and (u, v) not in on_path:
                lines.append(f'  "{format_bits(u, n)}" -- "{format_bits(v, n)}" [color=gray80];')
    lines.append("}")
    return "\n".join(lines)


# --------------------------------------------------------------------- solve


def _run_engine(A: PairSet, engine: str, budget: int) -> Verdict:
    from .constructor import solve, solve_auto
    from .oracle import oracle_solve

    if engine == "constructor":
        return solve(A)
    if engine == "oracle":
        try:
            return oracle_solve(A, budget)
        except DimensionError as e:
            return Verdict(UNSUPPORTED, detail=str(e))
    return solve_auto(A, budget)


def _configuration(A: PairSet, v: Verdict) -> str | None:
    if v.configuration or v.status != UNCONNECTABLE:
        return v.configuration
    from .constructor.tables import forbidden_name

    return forbidden_name(A) if A.n <= 4 else None


def cmd_solve(args) -> int:
    A = _pairset(args.pairs)
    v = _run_engine(A, args.engine, args.budget)
    conf = _configuration(A, v)
    n = A.n
    doc = {
        "command": "solve",
        "n": n,
        "pairs": A.format(),
        "engine": args.engine,
        "status": v.status,
        "certificate": v.certificate,
        "configuration": conf,
    }
    text = [f"{A.format()}: {v.status}"]
    if v.certificate:
        text.append(f"certificate: {v.certificate}")
    if conf:
        text.append(f"configuration: {conf}")
    if v.detail:
        text.append(f"detail: {v.detail}")
        doc["detail"] = v.detail
    if v.connector is not None:
        lit = format_connector(v.connector, n)
        doc["connector"] = lit
        doc["paths"] = [[format_bits(x, n) for x in v.connector[p]] for p in A.pairs]
        text.append(f"connector: {lit}")
    if v.trace is not None:
        doc["trace"] = v.trace.to_dict()
        if args.trace:
            text.append("trace:")
            text += ["  " + line for line in v.trace.lines()]
    if v.nodes:
        doc["nodes"] = v.nodes
    if args.dot and v.connector is not None:
        print(to_dot([v.connector[p] for p in A.pairs], n))
    else:
        _emit(args, doc, "\n".join(text))
    if v.status == CONNECTABLE:
        return EXIT_OK
    if v.status == UNCONNECTABLE:
        return EXIT_NO
    return EXIT_UNSUPPORTED


# -------------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    A = _pairset(args.pairs)
    try:
        paths = parse_connector(args.connector, A.n)
    except ValueError as e:
        raise UsageError(f"bad connector literal: {e}") from e
    C = connector_from_paths(paths, A.n)
    bad = verify_connector(A, C)
    if len(C) != len(paths) and bad is None:
        bad_text = "two paths share the same ends"
        doc = {"command": "verify", "valid": False, "clause": "pairs", "detail": bad_text}
        _emit(args, doc, f"invalid (pairs): {bad_text}")
        return EXIT_NO
    if bad is None:
        _emit(args, {"command": "verify", "valid": True}, "valid connector")
        return EXIT_OK
    doc = {"command": "verify", "valid": False, "clause": bad.clause, "detail": bad.detail}
    _emit(args, doc, f"invalid ({bad.clause}): {bad.detail}")
    return EXIT_NO


# ---------------------------------------------------------------------- gray


def cmd_gray(args) -> int:
    from .constructor.gray import EvenDistanceError, hamiltonian_path, transitions

    try:
        n, a = parse_bits(args.start)
        m, b = parse_bits(args.end)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if n != m:
        raise UsageError("both ends need the same number of coordinates")
    try:
        path = hamiltonian_path(a, b, n)
    except EvenDistanceError:
        doc = {
            "command": "gray",
            "status": UNCONNECTABLE,
            "certificate": "parity-obstruction",
        }
        _emit(args, doc, "unconnectable: the ends have equal parity (parity-obstruction)")
        return EXIT_NO
    except DimensionError as e:
        raise UsageError(str(e)) from e
    words = [format_bits(v, n) for v in path]
    steps = transitions(path)
    if args.dot:
        print(to_dot([path], n))
        return EXIT_OK
    doc = {"command": "gray", "status": CONNECTABLE, "n": n, "path": words, "transitions": steps}
    _emit(args, doc, "\n".join(words) + "\ntransitions: " + " ".join(map(str, steps)))
    return EXIT_OK


# -------------------------------------------------------------------- census


def _sizes(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out += range(int(lo), int(hi) + 1)
        else:
            out.append(int(part))
    return tuple(sorted(set(out)))


def _edge_pairs(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    if text.startswith("exactly-"):
        k = int(text[len("exactly-") :])
        return (k, k)
    if text.startswith("at-least-"):
        return (int(text[len("at-least-") :]), 1 << 20)
    if ".." in text:
        lo, hi = text.split("..")
        return (int(lo), int(hi))
    k = int(text)
    return (k, k)


def cmd_census(args) -> int:
    from .enumeration import ENUM_CAP, Filter, census, decide, sample_pairsets

    try:
        flt = Filter(
            sizes=_sizes(args.size),
            odd=args.odd,
            balanced=args.balanced,
            pure=args.pure,
            edge_pairs=_edge_pairs(args.edge_pairs),
            enc_empty=None if args.enc is None else args.enc == "empty",
            diminishable=args.diminishable,
        )
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.sample:
        return _census_sample(args, flt, decide, sample_pairsets)
    if args.n > ENUM_CAP:
        raise UsageError(f"exhaustive censuses are capped at n={ENUM_CAP}; use --sample")
    rep = census(args.n, flt, source=args.engine, jobs=args.jobs)
    target = args.verdict
    doc = {"command": "census", **rep.to_dict()}
    lines = [
        f"Q_{args.n}, {flt.describe()}, verdicts by {args.engine}",
        f"total: {rep.class_count} classes, {rep.raw_count} raw pair-sets",
    ]
    statuses = [CONNECTABLE, UNCONNECTABLE, UNSUPPORTED, BUDGET_EXHAUSTED]
    if target != "all":
        statuses = [target]
    for st in statuses:
        c, r = rep.counts(st)
        lines.append(f"{st}: {c} classes, {r} raw pair-sets")
    if target != "all":
        c, r = rep.counts(target)
        doc["selected"] = {"verdict": target, "classes": c, "raw": r}
        for res in rep.with_status(target):
            lines.append(f"  {res.rep.format()}  orbit {res.orbit_size}")
    if args.expect is not None and target != "all":
        c, r = rep.counts(target)
        hit = [name for name, val in (("raw", r), ("classes", c)) if val == args.expect]
        doc["expected"] = {"value": args.expect, "matching_conventions": hit}
        lines.append(
            f"expected {args.expect}: "
            + (f"matched by {' and '.join(hit)} count" if hit else "matched by neither convention")
        )
    if flt.edge_pairs is not None and flt.edge_pairs[0] == flt.edge_pairs[1] and target != "all":
        # the "at least k edge-pairs" reading, reported as a secondary line
        wide = Filter(**{**flt.__dict__, "edge_pairs": (flt.edge_pairs[0], 1 << 20)})
        rep2 = census(args.n, wide, source=args.engine, jobs=args.jobs)
        c2, r2 = rep2.counts(target)
        doc["at_least_reading"] = {"filter": wide.describe(), "classes": c2, "raw": r2}
        lines.append(f"secondary ({wide.describe()}): {target}: {c2} classes, {r2} raw")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _census_sample(args, flt, verdict, sampler) -> int:
    if args.seed is None:
        raise UsageError("--sample needs an explicit --seed")
    rng = random.Random(args.seed)
    engine = "auto" if args.engine == "both" else args.engine
    tally: dict[str, int] = {}
    bad = []
    for A in sampler(args.n, flt, args.sample, rng):
        v = verdict(A, engine)
        tally[v.status] = tally.get(v.status, 0) + 1
        if args.verdict != "all" and v.status == args.verdict:
            bad.append(A.format())
    doc = {
        "command": "census",
        "n": args.n,
        "filter": flt.describe(),
        "sampled": args.sample,
        "seed": args.seed,
        "counts": tally,
        "selected": bad,
    }
    lines = [f"Q_{args.n}, {flt.describe()}, {args.sample} samples (seed {args.seed})"]
    lines += [f"{k}: {v}" for k, v in sorted(tally.items())]
    lines += [f"  {s}" for s in bad]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


# ------------------------------------------------------------ classify/canon


def cmd_classify(args) -> int:
    A = _pairset(args.pairs)
    f = classify(A)
    n = A.n
    enco, enc = encompassment(A)
    sig = [tuple(sigma(A, i)) for i in range(n)]
    doc = {"command": "classify", "n": n, "pairs": A.format(), **f.__dict__}
    doc["sigma"] = sig
    doc["enco"] = sorted(format_bits(v, n) for v in enco)
    doc["enc"] = sorted(format_bits(v, n) for v in enc)
    lines = [f"{A.format()} in Q_{n}"]
    for k, v in f.__dict__.items():
        lines.append(f"{k}: {v}")
    lines.append("sigma: " + " ".join(f"{i}:{a},{b}" for i, (a, b) in enumerate(sig)))
    lines.append("enc: " + (" ".join(doc["enc"]) or "empty"))
    if len(A) in (2, 3) and all(p.is_edge for p in A.pairs):
        s = separating_coordinate(A)
        sep = None if isinstance(s, SixCycleObstruction) else s
        doc["separating_coordinate"] = sep
        lines.append(f"separating coordinate: {sep if sep is not None else 'none (six-cycle)'}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_canon(args) -> int:
    from .symmetry import SWEEP_CAP, canonical_form

    A = _pairset(args.pairs)
    if A.n > SWEEP_CAP:
        raise UsageError(f"canonical forms are capped at n={SWEEP_CAP}")
    cf = canonical_form(A)
    rep = cf.rep
    w = cf.witness
    doc = {
        "command": "canon",
        "n": A.n,
        "pairs": A.format(),
        "canonical": rep.format(),
        "orbit_size": cf.orbit_size,
        "stabilizer_order": cf.stabilizer_order,
        "witness": {"perm": list(w.perm), "mask": format_bits(w.mask, A.n)},
    }
    text = (
        f"canonical: {rep.format()}\norbit size: {cf.orbit_size}\n"
        f"stabilizer order: {cf.stabilizer_order}\n"
        f"witness: perm {list(w.perm)} then xor {format_bits(w.mask, A.n)}"
    )
    _emit(args, doc, text)
    return EXIT_OK


# ---------------------------------------------------------------------- main


def _tristate(p: argparse.ArgumentParser, name: str, help_: str) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument(f"--{name}", dest=name, action="store_true", default=None, help=help_)
    g.add_argument(f"--not-{name}", dest=name, action="store_false", help=f"negation of --{name}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="cubepaths", description="Prescribed-end path covers of Q_n")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="decide connectability of a pair-set")
    p.add_argument("pairs", help='pair-set literal, e.g. "0000-0111,0001-0110"')
    p.add_argument("--engine", choices=["auto", "constructor", "oracle"], default="auto")
    p.add_argument("--budget", type=int, default=10**8, help="oracle node budget")
    p.add_argument("--trace", action="store_true", help="print the construction trace")
    p.add_argument("--dot", action="store_true", help="emit the connector as Graphviz")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check a connector")
    p.add_argument("pairs")
    p.add_argument("connector", help='paths, e.g. "000,001;010,011,111,110,100,101"')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gray", parents=[common], help="Gray code with prescribed ends")
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="end", required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("census", parents=[common], help="count classes and raw pair-sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size", default="1", help='sizes, e.g. "4", "1-3" or "2,3"')
    _tristate(p, "odd", "only odd pair-sets")
    _tristate(p, "balanced", "only balanced pair-sets")
    _tristate(p, "pure", "no degenerate pairs")
    _tristate(p, "diminishable", "only diminishable pair-sets")
    p.add_argument("--edge-pairs", help='"exactly-K", "at-least-K" or "LO..HI"')
    p.add_argument("--enc", choices=["empty", "nonempty"])
    p.add_argument(
        "--verdict",
        choices=[CONNECTABLE, UNCONNECTABLE, UNSUPPORTED, BUDGET_EXHAUSTED, "all"],
        default="all",
    )
    p.add_argument("--engine", choices=["oracle", "constructor", "auto", "both"], default="oracle")
    p.add_argument("--expect", type=int, help="report which counting convention equals this")
    p.add_argument("--sample", type=int, help="draw this many random pair-sets instead")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("classify", parents=[common], help="flags, sigma counts, encompassment")
    p.add_argument("pairs")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("canon", parents=[common], help="canonical form under Aut(Q_n)")
    p.add_argument("pairs")
    p.set_defaults(func=cmd_canon)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"cubepaths: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
