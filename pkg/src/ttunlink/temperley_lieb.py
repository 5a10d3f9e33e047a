"""Temperley-Lieb diagrams and the Kauffman-bracket action of braid letters.

Boundary points of an n-strand diagram are numbered ``0 .. n-1`` along the top
and ``n .. 2n-1`` along the bottom (bottom ``j`` is point ``n + j``). Products
stack left-to-right from top to bottom: in ``x * y`` the bottom of ``x`` is
glued to the top of ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np
from scipy import sparse

from .braid import LetterOutOfRange, StrandMismatch
from .laurent import DELTA, LaurentPoly


@dataclass(frozen=True)
class TLDiagram:
    n: int
    match: tuple[int, ...]

    def __post_init__(self):
        m = self.match
        if len(m) != 2 * self.n:
            raise ValueError(f"expected {2 * self.n} endpoints, got {len(m)}")
        for a, b in enumerate(m):
            if b == a or m[b] != a:
                raise ValueError(f"not a fixed-point-free involution: {m}")
        if not is_planar(self.n, m):
            raise ValueError(f"arcs cross: {m}")

    @classmethod
    def identity(cls, n: int) -> "TLDiagram":
        return cls(n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def generator(cls, n: int, i: int) -> "TLDiagram":
        """Cup-cap diagram e_i joining strands i-1 and i (1-indexed i)."""
        if not 1 <= i <= n - 1:
            raise LetterOutOfRange(f"e_{i} not defined on {n} strands")
        m = list(range(n, 2 * n)) + list(range(n))
        m[i - 1], m[i] = i, i - 1
        m[n + i - 1], m[n + i] = n + i, n + i - 1
        return cls(n, tuple(m))

    def __mul__(self, other: "TLDiagram") -> tuple["TLDiagram", int]:
        match, loops = compose(self.n, self.match, other.match)
        return TLDiagram(self.n, match), loops

    def closure_loops(self) -> int:
        return closure_loops(self.n, self.match)


def _cyclic_position(n: int, point: int) -> int:
    # top left-to-right, then bottom right-to-left
    return point if point < n else 3 * n - 1 - point


def is_planar(n: int, match) -> bool:
    order = sorted(range(2 * n), key=lambda x: _cyclic_position(n, x))
    stack: list[int] = []
    for x in order:
        if stack and stack[-1] == match[x]:
            stack.pop()
        else:
            stack.append(x)
    return not stack


def compose(n: int, top, bottom) -> tuple[tuple[int, ...], int]:
    """Glue ``top`` above ``bottom``; return the resulting matching and the number
    of closed loops created in the middle."""
    # nodes: 0..n-1 outer top, n..2n-1 middle, 2n..3n-1 outer bottom
    def via_top(node):
        return top[node]

    def via_bottom(node):
        return bottom[node - n] + n

    result = [0] * (2 * n)
    seen_mid = [False] * n

    def walk(node, step_top):
        while True:
            nxt = via_top(node) if step_top else via_bottom(node)
            if nxt < n or nxt >= 2 * n:
                return nxt
            seen_mid[nxt - n] = True
            node = nxt
            step_top = not step_top

    for t in range(n):
        end = walk(t, True)
        result[t] = end if end < n else end - n
    for b in range(n):
        end = walk(2 * n + b, False)
        result[n + b] = end if end < n else end - n

    loops = 0
    for m0 in range(n):
        if seen_mid[m0]:
            continue
        loops += 1
        node = n + m0
        step_top = True
        while not seen_mid[node - n]:
            seen_mid[node - n] = True
            node = via_top(node) if step_top else via_bottom(node)
            step_top = not step_top
    return tuple(result), loops


def closure_loops(n: int, match) -> int:
    """Loops formed when top j is joined to bottom j for every j."""
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        x = start
        while not seen[x]:
            seen[x] = True
            y = match[x]
            seen[y] = True
            x = y - n if y >= n else y + n
    return loops


def noncrossing_matchings(n: int) -> list[tuple[int, ...]]:
    """All Catalan(n) planar matchings, as ``match`` tuples."""
    # order[c] = boundary point at cyclic position c
    order = [c if c < n else 3 * n - 1 - c for c in range(2 * n)]

    @lru_cache(maxsize=None)
    def pairings(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        if lo > hi:
            return ((),)
        out = []
        for k in range(lo + 1, hi + 1, 2):
            for inner in pairings(lo + 1, k - 1):
                for outer in pairings(k + 1, hi):
                    out.append(((lo, k),) + inner + outer)
        return tuple(out)

    result = []
    for arcs in pairings(0, 2 * n - 1):
        m = [0] * (2 * n)
        for a, b in arcs:
            pa, pb = order[a], order[b]
            m[pa], m[pb] = pb, pa
        result.append(tuple(m))
    result.sort()
    return result


class TLElement:
    """Finite Z[A, A^-1]-combination of diagrams on ``n`` strands."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[TLDiagram, LaurentPoly] = ()):
        self.n = n
        self.terms = {d: c for d, c in dict(terms).items() if not c.is_zero()}
        for d in self.terms:
            if d.n != n:
                raise StrandMismatch(f"diagram on {d.n} strands in TL_{n}")

    @classmethod
    def identity(cls, n: int) -> "TLElement":
        return cls(n, {TLDiagram.identity(n): LaurentPoly.const(1)})

    def __eq__(self, other):
        return isinstance(other, TLElement) and self.n == other.n and self.terms == other.terms

    def __add__(self, other: "TLElement") -> "TLElement":
        if self.n != other.n:
            raise StrandMismatch(f"TL_{self.n} vs TL_{other.n}")
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return TLElement(self.n, out)

    def __mul__(self, other: "TLElement") -> "TLElement":
        return tl_multiply(self, other)

    def __repr__(self):
        body = ", ".join(f"{d.match}: {c}" for d, c in self.terms.items())
        return f"TLElement({self.n}, {{{body}}})"


def tl_of_letter(letter: int, n: int) -> TLElement:
    """sigma_i -> A + A^-1 e_i, sigma_i^-1 -> A^-1 + A e_i."""
    i = abs(letter)
    if letter == 0 or i > n - 1:
        raise LetterOutOfRange(f"letter {letter} out of range for {n} strands")
    sign = 1 if letter > 0 else -1
    return TLElement(
        n,
        {
            TLDiagram.identity(n): LaurentPoly.monomial(sign),
            TLDiagram.generator(n, i): LaurentPoly.monomial(-sign),
        },
    )


def tl_multiply(x: TLElement, y: TLElement) -> TLElement:
    if x.n != y.n:
        raise StrandMismatch(f"TL_{x.n} vs TL_{y.n}")
    delta_pow = [LaurentPoly.const(1)]
    out: dict[TLDiagram, LaurentPoly] = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            d, loops = dx * dy
            while len(delta_pow) <= loops:
                delta_pow.append(delta_pow[-1] * DELTA)
            c = cx * cy * delta_pow[loops]
            out[d] = out[d] + c if d in out else c
    return TLElement(x.n, out)


def tl_trace(x: TLElement) -> LaurentPoly:
    """Markov closure, normalized so the closure of one loop is 1."""
    total = LaurentPoly()
    for d, c in x.terms.items():
        total = total + c * DELTA ** (d.closure_loops() - 1)
    return total


class ActionTables:
    """Precomputed right action of each e_i on the diagram basis of TL_n."""

    def __init__(self, n: int):
        self.n = n
        self.diagrams = noncrossing_matchings(n)
        self.index = {m: k for k, m in enumerate(self.diagrams)}
        self.size = len(self.diagrams)
        self.identity = self.index[TLDiagram.identity(n).match]
        self.closure = np.array(
            [closure_loops(n, m) for m in self.diagrams], dtype=np.int64
        )
        self.image: dict[int, np.ndarray] = {}
        self.loop: dict[int, np.ndarray] = {}
        self.no_loop_op: dict[int, sparse.csr_matrix] = {}
        self.loop_op: dict[int, sparse.csr_matrix] = {}
        self.fan_in = 1
        cols = np.arange(self.size)
        for i in range(1, n):
            e = TLDiagram.generator(n, i).match
            img = np.empty(self.size, dtype=np.int64)
            lp = np.empty(self.size, dtype=bool)
            for k, m in enumerate(self.diagrams):
                res, loops = compose(n, m, e)
                img[k] = self.index[res]
                lp[k] = loops > 0
            self.image[i] = img
            self.loop[i] = lp
            ones = np.ones(self.size, dtype=np.int64)
            shape = (self.size, self.size)
            self.no_loop_op[i] = sparse.csr_matrix(
                (ones[~lp], (img[~lp], cols[~lp])), shape=shape
            )
            self.loop_op[i] = sparse.csr_matrix(
                (ones[lp], (img[lp], cols[lp])), shape=shape
            )
            self.fan_in = max(self.fan_in, int(np.bincount(img).max()))


@lru_cache(maxsize=None)
def action_tables(n: int) -> ActionTables:
    return ActionTables(n)
