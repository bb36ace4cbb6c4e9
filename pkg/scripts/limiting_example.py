"""The (7,3^2,1^2) orbit at n = 15, p = 5, delta = 1, and its limiting block."""

from __future__ import annotations

from partblocks.abacus import marked_abacus, render_ascii
from partblocks.blocktheory import charp_orbit, limiting_same_block, orbit_minimum
from partblocks.partcomb import new_partition, sort_partitions


def main() -> None:
    lam, n, p, delta = new_partition((7, 3, 3, 1, 1)), 15, 5, 1
    orbit = sort_partitions(charp_orbit(lam, n, p, delta))
    print(f"orbit of {lam} in Lambda_<={n}, p={p}, delta={delta} ({len(orbit)} elements):")
    for mu in orbit:
        print(f"  {str(mu):<14} degree {mu.degree}")
    low = orbit_minimum(lam, n, p, delta)
    print(f"minimal element: {low}")
    print(render_ascii(marked_abacus(low, p, delta, n)))
    for m in (n, n + 5, n + 10):
        print(f"n={m}: orbit size {len(charp_orbit(lam, m, p, delta))}")
    print(f"limiting_same_block({lam}, {low}) = {limiting_same_block(lam, low, p, delta)}")


if __name__ == "__main__":
    main()
