"""Command-line surface: generate, solve, color, check, convert, sweep.

Exit codes: 0 success (and, for `verify`, no MISMATCH/INDETERMINATE);
1 a check failed or a MISMATCH occurred; 2 usage error; 3 a verdict was
INDETERMINATE.  With `--format json`, standard output carries the machine
payload only and every human-readable line goes to standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .colorings import (
    afl_min_block_coloring,
    block_coloring,
    coloring_from_json,
    coloring_to_json,
    interval_coloring,
    validate_coloring,
)
from .errors import CapacityError, StateError
from .harness import (
    CLAIM_DOUBLED_VECTOR,
    CLAIM_RESIDUE_WINDOW,
    CLAIM_SANDWICH_UNIFORM,
    CLAIM_TWO_GAP_WINDOW,
    CLAIM_UNIFORM_GAP,
    CLAIM_VECTOR_GAP,
    CLAIM_VECTOR_GAP_CONJECTURE,
    CLAIM_WINDOW_INDEPENDENCE,
    InstanceSpec,
    record_to_json,
    run_instance,
    spec_hash,
    write_summary_csv,
)
from .hypergraph import build_stable_kneser, hypergraph_to_json
from .solver import NEG_INFINITY, chromatic_number, independence_number
from .tucker import build_lambda, tucker_report_to_json, verify_tucker_conditions
from .wgraph import (
    build_w_graph,
    coloring_to_st_partition,
    st_partition_from_json,
    st_partition_to_coloring,
    st_partition_to_json,
)

_USAGE_ERROR = 2


class _CliError(Exception):
    """Usage-level error: message printed to stderr, exit code 2."""


def _info(args, msg: str) -> None:
    """Human-readable line: stderr under --format json, stdout otherwise."""
    stream = sys.stderr if getattr(args, "format", "text") == "json" else sys.stdout
    print(msg, file=stream)


def _parse_svec(args) -> tuple:
    has_svec = getattr(args, "svec", None) is not None
    has_s = getattr(args, "s", None) is not None
    if has_svec and has_s:
        raise _CliError("--svec and --s are mutually exclusive")
    if has_svec:
        try:
            svec = tuple(int(x) for x in args.svec.split(","))
        except ValueError:
            raise _CliError(f"--svec must be comma-separated integers, got {args.svec!r}")
        if getattr(args, "k", None) is not None and len(svec) != args.k:
            raise _CliError(f"--svec has {len(svec)} entries but --k is {args.k}")
        return svec
    if has_s:
        if getattr(args, "k", None) is None:
            raise _CliError("--s requires --k")
        return (args.s,) * args.k
    raise _CliError("one of --svec or --s is required")


def _instance_args(p: argparse.ArgumentParser, with_r: bool = True) -> None:
    p.add_argument("--n", type=int, required=True, help="ground-set size")
    p.add_argument("--k", type=int, help="subset size (required with --s)")
    if with_r:
        p.add_argument("--r", type=int, default=2, help="uniformity (default 2)")
    p.add_argument("--svec", help="stability vector, comma-separated")
    p.add_argument("--s", type=int, help="uniform stability (expands to --svec)")
    p.add_argument(
        "--family",
        choices=["uniform", "vector", "uniform-stable", "vector-stable"],
        help="informational tag; the stability vector already determines the instance",
    )


def _build_instance(args):
    svec = _parse_svec(args)
    k = args.k if args.k is not None else len(svec)
    r = getattr(args, "r", 2)
    return build_stable_kneser(args.n, k, r, svec)


def _cmd_generate(args) -> int:
    H = _build_instance(args)
    print(hypergraph_to_json(H))
    _info(args, f"# {H.vertex_count} vertices, r={H.r}, svec={H.svec}")
    return 0


def _cmd_chi(args) -> int:
    H = _build_instance(args)
    t0 = time.perf_counter()
    result = chromatic_number(H, budget=args.budget)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        payload = {
            "n": H.n,
            "k": H.k,
            "r": H.r,
            "svec": list(H.svec),
            "chi": "-inf" if result.chi == NEG_INFINITY else result.chi,
            "status": result.status,
        }
        if result.status == "indeterminate":
            payload["bounds"] = list(result.bounds)
        elif result.certificate is not None:
            payload["certificate"] = list(result.certificate.assignment)
        print(json.dumps(payload))
    else:
        if result.status == "indeterminate":
            print(f"INDETERMINATE (bounds {result.bounds[0]}..{result.bounds[1]})")
        elif result.chi == NEG_INFINITY:
            print("-inf")
        else:
            print(result.chi)
    _info(args, f"# status={result.status} in {elapsed:.2f}s")
    return 3 if result.status == "indeterminate" else 0


def _cmd_alpha(args) -> int:
    if args.w:
        if args.s1 is None or args.s2 is None:
            raise _CliError("--w requires --s1 and --s2")
        G = build_w_graph(args.n, args.s1, args.s2)
        label = f"W(n={args.n}, s1={args.s1}, s2={args.s2})"
    else:
        H = _build_instance(args)
        if H.r != 2:
            raise _CliError("independence number is defined here for r=2 instances")
        G = H
        label = f"KG(n={H.n}, k={H.k}, svec={H.svec})"
    result = independence_number(G, budget=args.budget)
    # W-graph vertices are the integers 1..n stored at id i-1
    witness = (
        tuple(v + 1 for v in result.witness) if args.w else result.witness
    )
    if args.format == "json":
        print(json.dumps({"alpha": result.alpha, "witness": list(witness)}))
    else:
        print(result.alpha)
    _info(args, f"# {label}: witness {witness}")
    return 0


def _cmd_color(args) -> int:
    if args.scheme == "afl":
        if args.k is None:
            raise _CliError("--scheme afl requires --k (full hypergraph, no --svec)")
        c = afl_min_block_coloring(args.n, args.k, args.r)
        H = build_stable_kneser(args.n, args.k, args.r, (1,) * args.k)
    elif args.scheme == "interval":
        svec = _parse_svec(args)
        c = interval_coloring(args.n, svec)
        H = build_stable_kneser(args.n, len(svec), 2, svec)
    else:
        H = _build_instance(args)
        c = block_coloring(H)
    check = validate_coloring(H, c)
    print(coloring_to_json(c))
    _info(
        args,
        f"# scheme={c.scheme} palette={c.palette_size} proper={check.proper}",
    )
    return 0 if check.proper else 1


def _cmd_tucker_check(args) -> int:
    svec = _parse_svec(args)
    if args.coloring:
        with open(args.coloring, "r", encoding="utf-8") as fh:
            c = coloring_from_json(fh.read())
    else:
        H = build_stable_kneser(args.n, len(svec), 2, svec)
        result = chromatic_number(H, budget=args.budget)
        if result.certificate is None:
            raise _CliError("no optimal coloring available for this instance")
        c = result.certificate
        _info(args, f"# using optimal coloring with {c.palette_size} colors")
    lam = build_lambda(args.n, svec, c)
    report = verify_tucker_conditions(lam)
    print(tucker_report_to_json(report))
    _info(
        args,
        f"# checked {report.sets_checked} signed sets, "
        f"{report.pairs_checked} ordered pairs: "
        f"{'clean' if report.ok else 'VIOLATIONS FOUND'}",
    )
    return 0 if report.ok else 1


def _cmd_st_partition(args) -> int:
    svec = _parse_svec(args)
    if len(svec) != 2:
        raise _CliError("star/triangle conversion needs a length-2 stability vector")
    H = build_stable_kneser(args.n, 2, 2, svec)
    if bool(args.coloring) == bool(args.partition):
        raise _CliError("exactly one of --coloring or --partition is required")
    if args.coloring:
        with open(args.coloring, "r", encoding="utf-8") as fh:
            c = coloring_from_json(fh.read())
        P = coloring_to_st_partition(H, c)
        back = st_partition_to_coloring(H, P)
        roundtrip = back.assignment == c.assignment
        print(st_partition_to_json(P))
        _info(args, f"# {len(P.parts)} parts; round-trip identical: {roundtrip}")
        return 0 if roundtrip else 1
    with open(args.partition, "r", encoding="utf-8") as fh:
        P = st_partition_from_json(fh.read())
    c = st_partition_to_coloring(H, P)
    check = validate_coloring(H, c)
    print(coloring_to_json(c))
    _info(args, f"# palette={c.palette_size} proper={check.proper}")
    return 0 if check.proper else 1


# ---------------------------------------------------------------------------
# verify


def _default_grid(claim: str) -> list:
    mk = InstanceSpec
    if claim == CLAIM_UNIFORM_GAP:
        return [
            mk(family="uniform-stable", n=n, k=2, r=r, svec=(s, s), claim=claim)
            for r in (2, 3)
            for s in (2, 3)
            for n in range(2 * max(r, s), 10)
        ]
    if claim == CLAIM_VECTOR_GAP:
        out = []
        for s1 in (2, 4):
            for s2 in range(1, min(4, 2 * s1) + 1):
                for n in range(s1 + s2, 13):
                    out.append(
                        mk(family="vector-stable", n=n, k=2, r=2, svec=(s1, s2), claim=claim)
                    )
        for s1, s2 in ((2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (4, 4)):
            for s3 in range(1, min(4, 2 * min(s1, s2)) + 1):
                for n in range(s1 + s2 + s3, 13):
                    out.append(
                        mk(family="vector-stable", n=n, k=3, r=2, svec=(s1, s2, s3), claim=claim)
                    )
        return out
    if claim == CLAIM_VECTOR_GAP_CONJECTURE:
        # odd-minimum bodies sit outside the proven hypotheses
        return [
            mk(family="vector-stable", n=n, k=2, r=2, svec=(3, s2), claim=claim)
            for s2 in range(1, 7)
            for n in range(3 + s2, 12)
        ]
    if claim == CLAIM_TWO_GAP_WINDOW:
        return [
            mk(family="vector-stable", n=n, k=2, r=2, svec=(s1, s2), claim=claim)
            for s1 in (1, 2)
            for s2 in range(2 * s1, 3 * s1 + 1)
            for n in range(2 * s2 - 2, 15)
        ]
    if claim == CLAIM_DOUBLED_VECTOR:
        out = [
            mk(family="vector-stable", n=n, k=2, r=4, svec=(4, 4), claim=claim)
            for n in range(8, 13)
        ]
        out += [
            mk(family="vector-stable", n=n, k=2, r=4, svec=(6, 4), claim=claim)
            for n in range(10, 15)
        ]
        return out
    if claim == CLAIM_RESIDUE_WINDOW:
        return [
            mk(family="uniform-stable", n=n, k=2, r=4, svec=(6, 6), claim=claim)
            for n in range(12, 17)
        ]
    if claim == CLAIM_SANDWICH_UNIFORM:
        return [
            mk(family="uniform-stable", n=n, k=2, r=4, svec=(5, 5), claim=claim)
            for n in (10, 11, 13, 14)
        ]
    if claim == CLAIM_WINDOW_INDEPENDENCE:
        return [
            mk(family="w-graph", n=n, k=2, r=2, svec=(s1, s2), claim=claim)
            for s1 in (1, 2, 3)
            for s2 in range(2 * s1, 10)
            for n in range(max(1, 2 * s2 - 2), 17)
        ]
    raise _CliError(f"no default grid for claim {claim!r}")


def _grid_from_file(path: str, default_claim) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        rows = json.load(fh)
    if not isinstance(rows, list):
        raise _CliError("grid file must hold a JSON array of instance objects")
    specs = []
    for row in rows:
        claim = row.get("claim", default_claim)
        if claim is None:
            raise _CliError("grid row missing 'claim' and no --claim given")
        specs.append(
            InstanceSpec(
                family=row["family"],
                n=int(row["n"]),
                k=int(row["k"]),
                r=int(row.get("r", 2)),
                svec=tuple(row["svec"]),
                claim=claim,
            )
        )
    return specs


def _verdict_line(payload: dict) -> str:
    svec = ",".join(map(str, payload["svec"]))
    extra = f" ({payload['notes']})" if payload["notes"] else ""
    return (
        f"{payload['verdict']:<22} {payload['claim']} "
        f"n={payload['n']} k={payload['k']} r={payload['r']} svec=({svec}) "
        f"expected={payload['expected']} actual={payload['actual']}{extra}"
    )


def _cmd_verify(args) -> int:
    if args.grid == "default":
        if not args.claim:
            raise _CliError("--grid default requires --claim")
        specs = _default_grid(args.claim)
    else:
        specs = _grid_from_file(args.grid, args.claim)
    if args.jobs > 1:
        print("# single-process build: running serially", file=sys.stderr)

    log_path = args.log
    if log_path is None and args.cache:
        os.makedirs(args.cache, exist_ok=True)
        log_path = os.path.join(args.cache, "verify-log.ndjson")

    logged = {}
    if log_path and args.resume:
        try:
            with open(log_path, "r", encoding="utf-8") as fh:
                for line in fh:
                    if line.strip():
                        row = json.loads(line)
                        logged[row["hash"]] = row
        except FileNotFoundError:
            pass

    payloads = []
    records = []
    for spec in specs:
        h = spec_hash(spec)
        if h in logged:
            payloads.append(logged[h])
            print(f"# cached: {h}", file=sys.stderr)
            continue
        record = run_instance(spec, budget=args.budget)
        records.append(record)
        payload = json.loads(record_to_json(record))
        payloads.append(payload)
        if log_path:
            with open(log_path, "a", encoding="utf-8") as fh:
                fh.write(record_to_json(record) + "\n")

    counts: dict = {}
    for payload in payloads:
        counts[payload["verdict"]] = counts.get(payload["verdict"], 0) + 1

    if args.format == "json":
        stripped = [{k: v for k, v in p.items() if k != "elapsed_ms"} for p in payloads]
        print(json.dumps(stripped, indent=None))
        print(f"# {counts}", file=sys.stderr)
    else:
        for payload in payloads:
            print(_verdict_line(payload))
        summary = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        print(f"summary: {summary}")

    if args.csv:
        write_summary_csv(records, args.csv)
        print(f"# summary CSV written to {args.csv}", file=sys.stderr)

    if counts.get("CONJECTURE-INCONSISTENT"):
        print(
            "# WARNING: conjectured formula failed on a solved instance",
            file=sys.stderr,
        )
    if counts.get("MISMATCH"):
        return 1
    if counts.get("INDETERMINATE"):
        return 3
    return 0


# ---------------------------------------------------------------------------
# selftest


def _cmd_selftest(args) -> int:
    from . import selftest as st

    return st.run(quick=args.quick)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="stable-kneser",
        description=(
            "Exact chromatic numbers, constructive colorings, combinatorial "
            "label checks, and formula sweeps for stable Kneser hypergraphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a hypergraph as JSON")
    _instance_args(p)
    p.add_argument("--format", choices=["text", "json"], default="json")

    p = sub.add_parser("chi", help="exact chromatic number")
    _instance_args(p)
    p.add_argument("--budget", type=int, help="work-unit budget for the solver")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("alpha", help="independence number")
    p.add_argument("--w", action="store_true", help="use the window graph W(n,s1,s2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s1", type=int)
    p.add_argument("--s2", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--svec")
    p.add_argument("--s", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("color", help="constructive colorings with validation")
    p.add_argument("--scheme", choices=["block", "afl", "interval"], required=True)
    _instance_args(p)
    p.add_argument("--format", choices=["text", "json"], default="json")

    p = sub.add_parser("tucker-check", help="exhaustive signed-set label check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--svec")
    p.add_argument("--s", type=int)
    p.add_argument("--coloring", help="JSON coloring file (default: solve for optimal)")
    p.add_argument("--budget", type=int)
    p.add_argument("--format", choices=["text", "json"], default="json")

    p = sub.add_parser("st-partition", help="star/triangle partition conversion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--svec")
    p.add_argument("--s", type=int)
    p.add_argument("--coloring", help="JSON coloring file to convert to a partition")
    p.add_argument("--partition", help="JSON partition file to convert to a coloring")
    p.add_argument("--format", choices=["text", "json"], default="json")

    p = sub.add_parser("verify", help="sweep a claim over a grid of instances")
    p.add_argument(
        "--claim",
        choices=sorted(
            [
                CLAIM_UNIFORM_GAP,
                CLAIM_VECTOR_GAP,
                CLAIM_VECTOR_GAP_CONJECTURE,
                CLAIM_TWO_GAP_WINDOW,
                CLAIM_DOUBLED_VECTOR,
                CLAIM_RESIDUE_WINDOW,
                CLAIM_SANDWICH_UNIFORM,
                CLAIM_WINDOW_INDEPENDENCE,
            ]
        ),
        help="claim id (required with --grid default; default claim for grid files)",
    )
    p.add_argument("--grid", default="default", help="'default' or a JSON grid file")
    p.add_argument("--budget", type=int, help="work-unit budget per solver call")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--log", help="append-only NDJSON verdict log")
    p.add_argument("--csv", help="write a summary CSV")
    p.add_argument(
        "--cache",
        default=os.environ.get("STABLE_KNESER_CACHE"),
        help="cache directory (default: $STABLE_KNESER_CACHE); holds the verdict log",
    )
    p.add_argument(
        "--resume",
        action="store_true",
        help="replay instances already present in the log instead of re-solving",
    )
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("selftest", help="run the full acceptance checklist in-process")
    p.add_argument(
        "--quick",
        action="store_true",
        help="shrink the large grids (smoke mode; the full run is the contract)",
    )

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0

    handlers = {
        "generate": _cmd_generate,
        "chi": _cmd_chi,
        "alpha": _cmd_alpha,
        "color": _cmd_color,
        "tucker-check": _cmd_tucker_check,
        "st-partition": _cmd_st_partition,
        "verify": _cmd_verify,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return _USAGE_ERROR
    except (ValueError, CapacityError, StateError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return _USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
