"""Recover the correction terms of sigma_3 by linear algebra.

Writes sigma_3 = s_1 s_2 sigma_2 s_2 s_1 + X with X unknown in P_3(delta) and
imposes three linear conditions on X:

* L_3 commutes with the subalgebra generated by s_1, p_1, p_2, p_{1,2}, p_{2,3};
* Z_3 = L_{1/2} + ... + L_3 commutes with every generator;
* X vanishes modulo diagrams with fewer than three propagating blocks.

The solution set is an affine space.  The script then asks which integer
combinations of candidate monomials (the shapes appearing in the recursion)
land in it, and prints the unique fit.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from partblocks.diagoracle.algebra import PartitionAlgebra, product
from partblocks.diagoracle.diagrams import all_diagrams, generators
from partblocks.diagoracle.fields import RationalField
from partblocks.diagoracle.jucys_murphy import JucysMurphy
from partblocks.diagoracle.linalg import EchelonBasis


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--delta", type=Fraction, default=Fraction(7, 3))
    args = parser.parse_args()

    Q, n = RationalField(), 3
    A = PartitionAlgebra(n, args.delta, Q)
    jm = JucysMurphy(A, "adjacent")
    basis = list(all_diagrams(n))
    index = {d: i for i, d in enumerate(basis)}
    N = len(basis)

    def vec(e):
        v = [Fraction(0)] * N
        for d, c in e.terms.items():
            v[index[d]] = c
        return v

    s1, s2 = A.s(1), A.s(2)
    h1, h2 = jm.p_half(1), jm.p_half(2)
    L1, L2 = jm.L(1), jm.L(2)
    core = s1 * s2 * jm.sigma(2) * s2 * s1
    # L_3 without its correction term
    base = -(s2 * L2 * h2) - h2 * L2 * s2 + h2 * L2 * A.p(3) * h2 + s2 * L2 * s2 + core
    z_base = base
    for k in range(1, 6):
        z_base = z_base + jm._L_twice(k)

    eqs = EchelonBasis(Q, N + 1)  # last column carries the inhomogeneous part

    def commute_with(g, offset):
        ge = A.diagram(g)
        cols = [vec(A.diagram(d).commutator(ge)) for d in basis]
        b = vec(offset.commutator(ge))
        for r in range(N):
            eqs.add([cols[j][r] for j in range(N)] + [b[r]])

    gens = generators(n)
    for name in ("s_1,2", "p_1", "p_2", "p_1,2", "p_2,3"):
        commute_with(gens[name], base)
    for g in gens.values():
        commute_with(g, z_base)
    for j, d in enumerate(basis):
        if d.propagating_count == n:
            row = [Fraction(0)] * (N + 1)
            row[j] = Fraction(1)
            eqs.add(row)

    null = eqs.nullspace()
    particular = [v for v in null if v[N] != 0]
    if not particular:
        print("no correction X satisfies the conditions")
        return
    v = particular[0]
    X = [x / v[N] for x in v[:N]]
    homogeneous = [w[:N] for w in null if w[N] == 0]
    print(f"solution space: particular X with support {sum(1 for x in X if x)}, homogeneous dimension {len(homogeneous)}")

    p2 = A.p(2)
    candidates = {
        "s_2 h_1 L_1 s_2 h_1": (s2, h1, L1, s2, h1),
        "s_2 h_1 L_1 s_2 h_1 s_2": (s2, h1, L1, s2, h1, s2),
        "h_1 L_1 s_2 h_1": (h1, L1, s2, h1),
        "h_1 L_1 s_2 h_1 s_2": (h1, L1, s2, h1, s2),
        "s_2 h_1 L_1 s_1 h_2 p_2 h_1": (s2, h1, L1, s1, h2, p2, h1),
        "h_1 L_1 s_1 h_2 p_2 h_1": (h1, L1, s1, h2, p2, h1),
        "h_1 p_2 h_2 s_1 L_1 h_1 s_2": (h1, p2, h2, s1, L1, h1, s2),
        "h_1 p_2 h_2 s_1 L_1 h_1": (h1, p2, h2, s1, L1, h1),
    }
    names = list(candidates)
    cvec = [vec(product(A, candidates[k])) for k in names]
    fit = EchelonBasis(Q, len(names) + len(homogeneous) + 1)
    for r in range(N):
        fit.add([c[r] for c in cvec] + [w[r] for w in homogeneous] + [-X[r]])
    fits = [w for w in fit.nullspace() if w[-1] != 0]
    print(f"{len(fits)} affine fit(s) by candidate monomials (free directions: {len(fit.nullspace()) - len(fits)})")
    for w in fits:
        coeffs = {names[j]: w[j] / w[-1] for j in range(len(names)) if w[j]}
        for name, c in coeffs.items():
            print(f"  {str(c):>5}  {name}")
    for w in fit.nullspace():
        if w[-1] == 0:
            rel = {names[j]: w[j] for j in range(len(names)) if w[j]}
            print("  relation among candidates modulo the homogeneous part:", {k: str(c) for k, c in rel.items()})
    print("h_i denotes the merging diagram p_{i,i+1}")


if __name__ == "__main__":
    main()
