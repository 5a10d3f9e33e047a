"""Linking matrices, Kauffman bracket and Jones polynomial of braid closures."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .braid import BraidWord, closure_components, delete_components, identity, writhe
from .laurent import DELTA, LaurentPoly
from .temperley_lieb import TLElement, action_tables, tl_of_letter, tl_trace
from .ttlink import TwistedTorusParams

DEFAULT_JONES_LIMIT = 10
_INT64_HEADROOM = 2**62


class InvariantError(ValueError):
    pass


class StrandLimitExceeded(InvariantError):
    pass


class OddCrossingParity(InvariantError):
    pass


class NotTwoComponents(InvariantError):
    pass


def jones_limit() -> int:
    env = os.environ.get("TTLINK_JONES_LIMIT")
    return int(env) if env else DEFAULT_JONES_LIMIT


@dataclass(frozen=True)
class LinkingMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def linking_matrix(w: BraidWord) -> LinkingMatrix:
    labels = closure_components(w).label
    c = max(labels) + 1
    tally = [[0] * c for _ in range(c)]
    at = list(range(w.strands))
    for g in w.letters:
        i = abs(g)
        a, b = labels[at[i - 1]], labels[at[i]]
        if a != b:
            sign = 1 if g > 0 else -1
            tally[a][b] += sign
            tally[b][a] += sign
        at[i - 1], at[i] = at[i], at[i - 1]
    for a in range(c):
        for b in range(c):
            if tally[a][b] % 2:
                raise OddCrossingParity(
                    f"odd crossing count {tally[a][b]} between components {a}, {b}"
                )
    return LinkingMatrix(tuple(tuple(v // 2 for v in row) for row in tally))


def predicted_two_component_linking(tp: TwistedTorusParams) -> Fraction:
    p, q, r, s = tp.as_tuple()
    if tp.d != 2:
        raise NotTwoComponents(f"gcd({p},{q}) = {tp.d}, expected 2")
    if r > p:
        raise InvariantError(f"prediction requires r <= p, got r={r} > p={p}")
    if r % 2 == 0:
        return Fraction(p * q, 4) + Fraction(s * r * r, 4)
    rp = (r - 1) // 2
    return Fraction(p * q, 4) + s * rp * (rp + 1)


# Each letter multiplies the state by A^-3 times a combination of even shifts,
# so stored columns hold exponents offset + 2k and no shift is negative.
# (identity, no-loop, loop_a, loop_b) in units of A^2
_SHIFTS = {1: (2, 1, 2, 0), -1: (1, 2, 3, 1)}


def _apply_letter(S, tables, letter):
    i = abs(letter)
    sid, snl, sla, slb = _SHIFTS[1 if letter > 0 else -1]
    C, W = S.shape
    out = np.zeros((C, W + 3), dtype=S.dtype)
    out[:, sid : sid + W] = S
    if S.dtype == object:
        img, lp = tables.image[i], tables.loop[i]
        nl = np.zeros_like(S)
        lo = np.zeros_like(S)
        np.add.at(nl, img[~lp], S[~lp])
        np.add.at(lo, img[lp], S[lp])
    else:
        nl = tables.no_loop_op[i] @ S
        lo = tables.loop_op[i] @ S
    out[:, snl : snl + W] += nl
    out[:, sla : sla + W] -= lo
    out[:, slb : slb + W] -= lo
    return out


def _trim(S, offset):
    nz = np.flatnonzero(S.any(axis=0))
    if nz.size == 0:
        return S[:, :1] * 0, offset
    first, last = int(nz[0]), int(nz[-1])
    if first == 0 and last == S.shape[1] - 1:
        return S, offset
    # sparse products want C-contiguous input; copy once here, not per product
    return np.ascontiguousarray(S[:, first : last + 1]), offset + 2 * first


def kauffman_bracket(w: BraidWord, limit: int | None = None) -> LaurentPoly:
    """Bracket of the closure of ``w``, normalized to 1 on the unknot."""
    limit = jones_limit() if limit is None else limit
    if w.strands > limit:
        raise StrandLimitExceeded(f"{w.strands} strands exceeds limit {limit}")
    tables = action_tables(w.strands)
    S = np.zeros((tables.size, 1), dtype=np.int64)
    S[tables.identity, 0] = 1
    offset = 0
    guard = _INT64_HEADROOM // (1 + 2 * tables.fan_in)
    for g in w.letters:
        if S.dtype != object and np.abs(S).max() > guard:
            S = S.astype(object)
        S = _apply_letter(S, tables, g)
        offset -= 3
        S, offset = _trim(S, offset)
    S = S.astype(object)
    total = LaurentPoly()
    for loops in np.unique(tables.closure):
        col = S[tables.closure == loops].sum(axis=0)
        poly = LaurentPoly((offset + 2 * k, int(v)) for k, v in enumerate(col))
        total = total + poly * DELTA ** (int(loops) - 1)
    return total


def kauffman_bracket_generic(w: BraidWord) -> LaurentPoly:
    """Same value via explicit Temperley-Lieb products (slow; for cross-checks)."""
    x = TLElement.identity(w.strands)
    for g in w.letters:
        x = x * tl_of_letter(g, w.strands)
    return tl_trace(x)


def jones_polynomial(w: BraidWord, limit: int | None = None) -> LaurentPoly:
    """(-A)^(-3 writhe) * bracket; t = A^-4."""
    wr = writhe(w)
    factor = LaurentPoly.monomial(-3 * wr, -1 if wr % 2 else 1)
    return factor * kauffman_bracket(w, limit)


def unlink_jones(c: int) -> LaurentPoly:
    # empty braid closes to the c-component unlink; writhe 0
    return kauffman_bracket(identity(c), limit=max(c, 1))


@dataclass
class ConsistencyReport:
    components: int
    linking: list[list[int]]
    linking_zero: bool
    jones: LaurentPoly | None
    jones_unlink: bool | None  # None when skipped
    component_jones_trivial: list[bool | None] = field(default_factory=list)
    strands: int = 0

    @property
    def jones_skipped(self) -> bool:
        return self.jones_unlink is None

    @property
    def consistent(self) -> bool:
        checks = [self.linking_zero]
        if self.jones_unlink is not None:
            checks.append(self.jones_unlink)
        checks.extend(x for x in self.component_jones_trivial if x is not None)
        return all(checks)

    @property
    def fully_clean(self) -> bool:
        """Zero linking and Jones computed and equal to the unlink value."""
        return self.linking_zero and self.jones_unlink is True

    def obstructions(self) -> list[str]:
        out = []
        if not self.linking_zero:
            out.append("linking")
        if self.jones_unlink is False:
            out.append("jones")
        if any(x is False for x in self.component_jones_trivial):
            out.append("component_jones")
        return out

    def to_json(self) -> dict:
        d = {
            "components": self.components,
            "strands": self.strands,
            "linking": self.linking,
            "linking_zero": self.linking_zero,
            "jones": "skipped" if self.jones is None else self.jones.to_json(),
            "jones_unlink": "skipped" if self.jones_unlink is None else self.jones_unlink,
            "consistent": self.consistent,
        }
        if self.component_jones_trivial:
            d["component_jones_trivial"] = [
                "skipped" if x is None else x for x in self.component_jones_trivial
            ]
        return d


def unlink_consistent(
    w: BraidWord, limit: int | None = None, components: bool = False
) -> ConsistencyReport:
    """Necessary conditions for the closure of ``w`` to be an unlink.

    With ``components=True`` each single-component sublink is also checked for
    Jones = 1 (whenever its braid fits under the strand limit).
    """
    limit = jones_limit() if limit is None else limit
    labels = closure_components(w)
    lk = linking_matrix(w)
    jones = None
    matches = None
    if w.strands <= limit:
        jones = jones_polynomial(w, limit)
        matches = jones == unlink_jones(labels.count)
    per_component: list[bool | None] = []
    if components and labels.count > 1:
        for c in range(labels.count):
            sub = delete_components(w, {c})
            if sub.strands <= limit:
                per_component.append(jones_polynomial(sub, limit) == LaurentPoly.const(1))
            else:
                per_component.append(None)
    return ConsistencyReport(
        components=labels.count,
        linking=lk.tolist(),
        linking_zero=lk.is_zero(),
        jones=jones,
        jones_unlink=matches,
        component_jones_trivial=per_component,
        strands=w.strands,
    )


def torus_pair_linking(p: int, q: int) -> Fraction:
    """Linking number of any two components of the torus link T(p, q)."""
    d = gcd(p, q)
    return Fraction(p * q, d * d)
