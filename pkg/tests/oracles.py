"""Independent reference computations used only by the test suite.

None of these share code with the package's Temperley-Lieb evaluator or with
handle reduction; they are slow and meant for small inputs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from ttunlink.braid import BraidWord
from ttunlink.laurent import DELTA, LaurentPoly


class _DisjointSets:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)

    def count(self):
        return len({self.find(x) for x in range(len(self.parent))})


def state_sum_bracket(w: BraidWord) -> LaurentPoly:
    """Kauffman bracket by summing over all 2^k smoothings of the closed braid.

    Node (level, pos) sits between letters; a positive crossing smoothed
    vertically weighs A and horizontally (cap over cup) weighs A^-1, and the
    weights swap for negative crossings.
    """
    n, k = w.strands, len(w.letters)

    def node(level, pos):
        return level * n + pos

    total = LaurentPoly()
    for choice in product((0, 1), repeat=k):
        ds = _DisjointSets((k + 1) * n)
        exp = 0
        for level, (g, horizontal) in enumerate(zip(w.letters, choice)):
            i = abs(g)
            for pos in range(n):
                if pos not in (i - 1, i):
                    ds.union(node(level, pos), node(level + 1, pos))
            if horizontal:
                ds.union(node(level, i - 1), node(level, i))
                ds.union(node(level + 1, i - 1), node(level + 1, i))
                exp += -1 if g > 0 else 1
            else:
                ds.union(node(level, i - 1), node(level + 1, i - 1))
                ds.union(node(level, i), node(level + 1, i))
                exp += 1 if g > 0 else -1
        for pos in range(n):
            ds.union(node(k, pos), node(0, pos))
        total = total + LaurentPoly.monomial(exp) * DELTA ** (ds.count() - 1)
    return total


def jones_derivative_at_one(jones: LaurentPoly) -> Fraction:
    """dV/dt at t = 1 for V written in A with t = A^-4."""
    return Fraction(-1, 4) * sum(e * c for e, c in jones.coeffs.items())


def total_linking_from_jones(jones: LaurentPoly, components: int) -> Fraction:
    """Total linking number from V'(1) = -3 (-2)^(c-2) * sum of linking numbers."""
    return jones_derivative_at_one(jones) / (-3 * Fraction(-2) ** (components - 2))


def burau_matrix(w: BraidWord, t: Fraction = Fraction(2)):
    """Unreduced Burau matrix at a rational t; equal braids give equal matrices."""
    n = w.strands
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for g in w.letters:
        i = abs(g) - 1
        if g > 0:
            block = [[1 - t, t], [Fraction(1), Fraction(0)]]
        else:
            block = [[Fraction(0), Fraction(1)], [1 / t, 1 - 1 / t]]
        # m <- m * B acting on columns i, i+1
        for row in m:
            a, b = row[i], row[i + 1]
            row[i] = a * block[0][0] + b * block[1][0]
            row[i + 1] = a * block[0][1] + b * block[1][1]
    return m

