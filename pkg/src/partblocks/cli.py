"""Command-line interface: ``partblocks {core,abacus,orbit,blocks,verify,tables}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.  JSON output
uses sorted keys and fixed orderings so equal inputs give equal bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import abacus as ab
from . import blocktheory as bt
from .diagoracle.cellmodules import half_diagram_basis
from .diagoracle.export import structure_constants
from .diagoracle.fields import is_prime
from .diagoracle.specht import specht_module
from .partcomb import Partition, PartitionError, new_partition, partitions_up_to
from .verify import Case, VerifyConfig, run_verification

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_partition(text: str) -> Partition:
    """``"5,4"``, ``"5 4"``, ``"[5,4]"``; ``""``, ``"0"``, ``"()"`` and ``"∅"`` are empty."""
    cleaned = text.strip().strip("[]()").replace(",", " ")
    if cleaned in ("", "∅", "0", "empty"):
        return new_partition(())
    try:
        return new_partition(int(x) for x in cleaned.split())
    except (ValueError, PartitionError) as exc:
        raise UsageError(f"not a partition: {text!r} ({exc})") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ": "), indent=2)


def _prime(p: int | None) -> int:
    if p is None or not is_prime(p):
        raise UsageError(f"--p must be a prime, got {p}")
    return p


def _residue(delta: int | None, p: int) -> int:
    if delta is None:
        raise UsageError("--delta is required")
    if delta % p == 0:
        raise UsageError("delta must be nonzero modulo p")
    return delta % p


def _delta_ext(text: str, p: int) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--delta-ext expects a,b; got {text!r}") from None
    if a % p == 0 and b % p == 0:
        raise UsageError("delta must be nonzero")
    return a % p, b % p


# -- subcommands ----------------------------------------------------------------


def cmd_core(args) -> int:
    lam = parse_partition(args.partition)
    p = _prime(args.p)
    core = ab.p_core(lam, p)
    b = args.b if args.b is not None else max(lam.degree, 1)
    if b < lam.degree:
        raise UsageError(f"--b must be at least |lambda| = {lam.degree}")
    if args.json:
        print(_dump({"partition": lam.to_json(), "p": p, "core": core.to_json(), "abacus": ab.abacus_json(ab.abacus_of(lam, p, b)), "core_abacus": ab.abacus_json(ab.abacus_of(core, p, b))}))
    else:
        print(f"{p}-core of {lam}: {core}")
        print(ab.render_ascii(ab.abacus_of(lam, p, b)))
        print("slides to")
        print(ab.render_ascii(ab.abacus_of(core, p, b)))
    return EXIT_OK


def cmd_abacus(args) -> int:
    lam = parse_partition(args.partition)
    p = _prime(args.p)
    b = args.b if args.b is not None else max(lam.degree, 1)
    if b < lam.degree:
        raise UsageError(f"--b must be at least |lambda| = {lam.degree}")
    if args.delta is not None:
        m = ab.marked_abacus(lam, p, _residue(args.delta, p), b)
    else:
        m = ab.abacus_of(lam, p, b)
    print(_dump(ab.abacus_json(m)) if args.json else ab.render_ascii(m))
    return EXIT_OK


def cmd_orbit(args) -> int:
    lam = parse_partition(args.partition)
    p = _prime(args.p)
    delta = _residue(args.delta, p)
    if lam.degree > args.n:
        raise UsageError(f"{lam} is not in Lambda_<={args.n}")
    orbit = sorted(bt.charp_orbit(lam, args.n, p, delta), key=Partition.sort_key)
    low = bt.orbit_minimum(lam, args.n, p, delta)
    if args.json:
        print(_dump({"partition": lam.to_json(), "n": args.n, "p": p, "delta": delta, "orbit": [m.to_json() for m in orbit], "minimum": low.to_json()}))
    else:
        print(f"orbit of {lam} in Lambda_<={args.n}, p={p}, delta={delta}:")
        for m in orbit:
            print(f"  {m}")
        print(f"minimal element: {low}")
    return EXIT_OK


def _blocks_for(args) -> tuple[bt.BlockPartition, dict]:
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if args.char0:
        if args.delta is None:
            raise UsageError("--delta is required")
        if args.delta == 0:
            raise UsageError("delta must be nonzero")
        return bt.char0_blocks(n, args.delta), {"mode": "char0", "n": n, "delta": args.delta}
    p = _prime(args.p)
    if args.delta_ext is not None:
        a, b = _delta_ext(args.delta_ext, p)
        if b != 0:
            if args.limiting:
                raise UsageError("--limiting needs delta in the prime field")
            return bt.nonintegral_blocks(n, p), {"mode": "nonintegral", "n": n, "p": p, "delta": [a, b]}
        delta = a
    else:
        delta = _residue(args.delta, p)
    if args.limiting:
        return bt.limiting_blocks(n, p, delta), {"mode": "limiting", "n": n, "p": p, "delta": delta}
    return bt.charp_blocks(n, p, delta), {"mode": "charp", "n": n, "p": p, "delta": delta}


def cmd_blocks(args) -> int:
    blocks, meta = _blocks_for(args)
    if args.table:
        for k, c in enumerate(blocks.classes):
            print(f"{k:3d}  " + "  ".join(str(lam) for lam in c))
    else:
        print(_dump(blocks.to_json() | {"query": meta} if args.with_query else blocks.to_json()))
    return EXIT_OK


def cmd_verify(args) -> int:
    single = None
    if args.n is not None or args.p is not None or args.delta is not None or args.delta_ext is not None:
        if args.n is None:
            raise UsageError("--n is required for a single-case run")
        if args.delta_ext is not None:
            p = _prime(args.p)
            single = Case("ext", args.n, p, _delta_ext(args.delta_ext, p))
        elif args.p is not None:
            p = _prime(args.p)
            single = Case("charp", args.n, p, _residue(args.delta, p))
        else:
            if args.delta is None or args.delta == 0:
                raise UsageError("delta must be a nonzero integer")
            single = Case("char0", args.n, None, args.delta)
    primes = tuple(int(x) for x in args.primes.split(",")) if args.primes else (2, 3, 5)
    for p in primes:
        _prime(p)
    config = VerifyConfig(n_max=args.n_max, primes=primes, char0=not args.no_char0, ext=args.ext, single=single, oracle_max_n=args.oracle_max_n)
    progress = (lambda line: print(line, file=sys.stderr)) if args.verbose else None
    report = run_verification(config, with_timings=not args.no_timings, progress=progress)
    text = _dump(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if report["match"] else EXIT_MISMATCH


def cmd_tables(args) -> int:
    if args.table == "structure":
        print(_dump(structure_constants(args.n)))
        return EXIT_OK
    if args.table == "dims":
        rows = []
        for lam in partitions_up_to(args.n):
            t = args.n - lam.degree
            rank = half_diagram_basis(args.n, t).rank
            dim_s = specht_module(lam).dimension
            rows.append({"label": lam.to_json(), "half_rank": rank, "specht_dim": dim_s, "cell_dim": rank * dim_s})
        if args.json:
            print(_dump({"n": args.n, "cell_modules": rows}))
        else:
            for r in rows:
                print(f"{str(new_partition(r['label'])):>10}  {r['half_rank']:5d} x {r['specht_dim']:2d} = {r['cell_dim']}")
        return EXIT_OK
    # blocks table: one line per (n, delta) for a fixed prime
    p = _prime(args.p)
    for n in range(args.n + 1):
        for d in range(1, p):
            print(f"n={n} p={p} delta={d}: {bt.charp_blocks(n, p, d)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partblocks", description="Blocks of partition algebras from partition combinatorics.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("core", help="p-core of a partition with its abacus")
    c.add_argument("partition")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--b", type=int)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_core)

    a = sub.add_parser("abacus", help="render the (marked) abacus of a partition")
    a.add_argument("partition")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--b", type=int)
    a.add_argument("--delta", type=int, help="draw the marker for this residue")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_abacus)

    o = sub.add_parser("orbit", help="marked-abacus orbit of a partition and its minimal element")
    o.add_argument("partition")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--delta", type=int, required=True)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_orbit)

    b = sub.add_parser("blocks", help="block partition of Lambda_<=n")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--p", type=int)
    b.add_argument("--delta", type=int)
    b.add_argument("--delta-ext", help="a,b for delta = a + b x in GF(p^2)")
    b.add_argument("--char0", action="store_true", help="characteristic zero with integer delta")
    b.add_argument("--limiting", action="store_true", help="limiting blocks restricted to Lambda_<=n")
    b.add_argument("--table", action="store_true", help="plain text instead of JSON")
    b.add_argument("--with-query", action="store_true", help="echo the resolved query in the JSON")
    b.set_defaults(func=cmd_blocks)

    v = sub.add_parser("verify", help="compare criterion blocks with the diagram-algebra oracle")
    v.add_argument("--n-max", type=int, default=3)
    v.add_argument("--primes", default="2,3,5")
    v.add_argument("--no-char0", action="store_true")
    v.add_argument("--ext", action="store_true", help="include GF(4) with delta outside GF(2)")
    v.add_argument("--n", type=int)
    v.add_argument("--p", type=int)
    v.add_argument("--delta", type=int)
    v.add_argument("--delta-ext")
    v.add_argument("--oracle-max-n", type=int)
    v.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    v.add_argument("--output", "-o")
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="block tables, cell-module dimensions, structure constants")
    t.add_argument("table", choices=["blocks", "dims", "structure"])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--p", type=int)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_tables)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"partblocks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, PartitionError) as exc:
        print(f"partblocks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
