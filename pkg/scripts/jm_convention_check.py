"""Test both conventions for the merging diagram in the Jucys-Murphy recursion.

For each convention and field the script checks the quotient identities,
centrality of Z_n, and whether Z_n acts on each cell module as the scalar
t*delta + C(|lam|,2) + ct(lam).
"""

from __future__ import annotations

import argparse

from partblocks.diagoracle.algebra import PartitionAlgebra
from partblocks.diagoracle.cellmodules import CellModule
from partblocks.diagoracle.diagrams import generators
from partblocks.diagoracle.fields import make_field
from partblocks.diagoracle.jucys_murphy import CONVENTIONS, JucysMurphy, quotient_identities, z_scalar_in
from partblocks.diagoracle.linalg import is_scalar_matrix
from partblocks.partcomb import partitions_up_to


def check(n: int, field_spec: str, delta, convention: str) -> tuple[bool, bool, list[str]]:
    F = make_field(field_spec)
    A = PartitionAlgebra(n, delta, F)
    jm = JucysMurphy(A, convention)
    z = jm.Z()
    quotient = all(quotient_identities(jm).values())
    central = all(z.commutator(A.diagram(d)).is_zero() for d in generators(n).values())
    failures = []
    for lam in partitions_up_to(n):
        cm = CellModule(lam, n, delta, F)
        if not is_scalar_matrix(F, cm.act_element(z), z_scalar_in(F, lam, n, delta)):
            failures.append(str(lam))
    return quotient, central, failures


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=3)
    args = parser.parse_args()
    cases = [("QQ", 3), ("QQ", -1), ("2", 1), ("3", 2), ("5", 4), ("2^2", (0, 1))]
    print(f"{'convention':<10} {'field':<8} {'delta':<7} quotient central  scalar failures")
    for convention in CONVENTIONS:
        for spec, delta in cases:
            q, c, bad = check(args.n, spec, delta, convention)
            name = make_field(spec).name
            print(f"{convention:<10} {name:<8} {str(delta):<7} {str(q):<8} {str(c):<8} {', '.join(bad) or '-'}")


if __name__ == "__main__":
    main()
