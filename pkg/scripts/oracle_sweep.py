"""Compare criterion blocks with the diagram-algebra oracle over a grid.

Defaults cover n <= 3 over GF(2), GF(3), GF(5), the rationals and GF(4).
``--n-max 4`` is accepted but takes minutes per case: the algebra has
dimension 4140 there.
"""

from __future__ import annotations

import argparse
import json
import sys

from partblocks.verify import VerifyConfig, run_verification


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=3)
    parser.add_argument("--primes", default="2,3,5")
    parser.add_argument("--no-ext", action="store_true")
    parser.add_argument("--json", action="store_true", help="print the full report")
    args = parser.parse_args()
    config = VerifyConfig(
        n_max=args.n_max,
        primes=tuple(int(x) for x in args.primes.split(",")),
        ext=not args.no_ext,
        oracle_max_n=max(args.n_max, 3),
    )
    report = run_verification(config, progress=lambda line: print(line, file=sys.stderr))
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    cases = len(report["criterion_blocks"])
    print(f"{cases - len(report['mismatches'])}/{cases} cases agree; total {report['timings']['total']:.1f}s")
    return 0 if report["match"] else 1


if __name__ == "__main__":
    sys.exit(main())
