"""Evidence for the braid model used when p < r <= p+q.

That range places the twisted strands across both sides of the torus pattern,
so the link is built from the (p+q)-strand permutation braid of T(p, q) with the
twist on its first r strands. Two checks back this up:

1. the permutation braid alone has the Jones polynomial of the p-strand torus
   braid, and for r <= p adding the twist agrees with the p-strand model;
2. Jones is unchanged under p <-> q for every small tuple, including r > p.

The naive alternative (torus braid on the first p of r strands, twist on all r)
fails check 2 and even has the wrong number of components.
"""

from math import gcd

from ttunlink.braid import BraidWord, closure_components, concat, embed
from ttunlink.invariants import jones_polynomial
from ttunlink.ttlink import (
    TwistedTorusParams,
    lorenz_torus_braid,
    torus_braid,
    twist_braid,
    twisted_torus_braid,
)

LIMIT = 9


def naive_braid(p, q, r, s):
    return concat(embed(torus_braid(p, q), r), twist_braid(r, r, s))


def lorenz_with_twist(p, q, r, s):
    base = lorenz_torus_braid(p, q)
    return concat(base, twist_braid(base.strands, r, s))


def main():
    torus_ok = sum(
        jones_polynomial(lorenz_torus_braid(p, q)) == jones_polynomial(torus_braid(p, q))
        for p in range(2, 6)
        for q in range(1, 6)
    )
    print(f"permutation braid vs torus braid: {torus_ok}/20 agree")

    same, total = 0, 0
    for p in range(2, 7):
        for q in range(1, 8 - p):
            for r in range(2, p + 1):
                for s in (-1, 1):
                    total += 1
                    a = jones_polynomial(lorenz_with_twist(p, q, r, s))
                    same += a == jones_polynomial(twisted_torus_braid(TwistedTorusParams(p, q, r, s)))
    print(f"r <= p, both models: {same}/{total} agree")

    swaps = naive_swaps = naive_counts = checked = 0
    for p in range(2, 7):
        for q in range(2, 7):
            if p + q > LIMIT:
                continue
            for r in range(p + 1, p + q + 1):
                for s in (-2, -1, 1, 2):
                    checked += 1
                    here = twisted_torus_braid(TwistedTorusParams(p, q, r, s))
                    there = twisted_torus_braid(TwistedTorusParams(q, p, r, s))
                    swaps += jones_polynomial(here) == jones_polynomial(there)
                    naive = naive_braid(p, q, r, s)
                    naive_counts += closure_components(naive).count == gcd(p, q)
                    if r <= q:
                        naive_swaps += jones_polynomial(naive) == jones_polynomial(
                            twisted_torus_braid(TwistedTorusParams(q, p, r, s))
                        )
    print(f"r > p swap symmetry, permutation-braid model: {swaps}/{checked}")
    print(f"r > p naive model with gcd components: {naive_counts}/{checked}")
    print(f"r > p naive model matching the swapped r <= q link: {naive_swaps}")


if __name__ == "__main__":
    main()
