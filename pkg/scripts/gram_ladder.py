"""Gram ranks and cell-module dimensions along every delta-pair chain."""

from __future__ import annotations

import argparse

from partblocks.blocktheory import char0_block_chain
from partblocks.diagoracle.cellmodules import CellModule, gram_rank
from partblocks.diagoracle.fields import RationalField
from partblocks.partcomb import partitions_up_to


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=3)
    args = parser.parse_args()
    n, Q = args.n, RationalField()
    for delta in range(1, 2 * n - 1):
        print(f"delta = {delta}")
        seen = set()
        for lam in partitions_up_to(n):
            if lam in seen:
                continue
            chain = char0_block_chain(lam, delta, n)
            seen.update(chain)
            if len(chain) == 1:
                continue
            cells = [f"{mu}: rank {gram_rank(mu, n, delta, Q)} / dim {CellModule(mu, n, delta, Q).dimension}" for mu in chain]
            print("  " + "  ->  ".join(cells))


if __name__ == "__main__":
    main()
