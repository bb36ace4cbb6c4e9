"""Structure constants of ``P_n(delta)`` as plain JSON.

The product of two basis diagrams is another diagram times ``delta^k``, so
the table records ``[i, j, k_index, loops]`` and is independent of delta
and of the field.
"""

from __future__ import annotations

from .diagrams import all_diagrams, compose


def structure_constants(n: int) -> dict:
    basis = all_diagrams(n)
    index = {d: i for i, d in enumerate(basis)}
    products = []
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            z, loops = compose(x, y)
            products.append([i, j, index[z], loops])
    return {
        "n": n,
        "dimension": len(basis),
        "basis": [d.to_json() for d in basis],
        "products": products,
    }
