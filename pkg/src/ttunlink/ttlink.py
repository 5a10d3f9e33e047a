"""Braid presentations of torus links and twisted torus links T(p, q, r, s)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .braid import BraidWord, closure_components, concat


class ParameterError(ValueError):
    pass


class BlockTooWide(ParameterError):
    pass


class BlockBeyondTorus(ParameterError):
    pass


@dataclass(frozen=True, order=True)
class TwistedTorusParams:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        p, q, r, s = self.p, self.q, self.r, self.s
        if p < 2:
            raise ParameterError(f"p must be > 1, got {p}")
        if q < 1:
            raise ParameterError(f"q must be >= 1, got {q}")
        if not 2 <= r <= p + q:
            raise ParameterError(f"r must satisfy 2 <= r <= p+q={p + q}, got {r}")
        if s == 0:
            raise ParameterError("s must be nonzero")

    @property
    def d(self) -> int:
        return gcd(self.p, self.q)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    def __str__(self):
        return f"{self.p},{self.q},{self.r},{self.s}"


@dataclass(frozen=True)
class ComponentParams:
    """One ``(p', q', r', s)`` tuple per closure component; ``r'`` counts the
    twisted-block strands owned by that component."""

    components: tuple[tuple[int, int, int, int], ...]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]


def parse_params(text: str) -> TwistedTorusParams:
    parts = text.replace(" ", "").split(",")
    if len(parts) != 4:
        raise ParameterError(f"expected 'p,q,r,s', got {text!r}")
    try:
        p, q, r, s = (int(x) for x in parts)
    except ValueError as exc:
        raise ParameterError(f"expected four integers, got {text!r}") from exc
    return TwistedTorusParams(p, q, r, s)


def torus_braid(p: int, q: int) -> BraidWord:
    """(s_1 ... s_{p-1})^q on p strands; inverse generators in descending order
    when q < 0."""
    if p < 1:
        raise ParameterError(f"p must be >= 1, got {p}")
    if q >= 0:
        block = tuple(range(1, p))
    else:
        block = tuple(-i for i in range(p - 1, 0, -1))
    return BraidWord(p, block * abs(q))


def full_twist_block(r: int, s: int) -> tuple[int, ...]:
    if s > 0:
        return tuple(range(1, r)) * (s * r)
    return tuple(-i for i in range(r - 1, 0, -1)) * (-s * r)


def twist_braid(n: int, r: int, s: int) -> BraidWord:
    """s full twists on the first r of n strands."""
    if r > n:
        raise BlockTooWide(f"block of {r} strands does not fit in {n}")
    if r < 2:
        raise ParameterError(f"twist block needs r >= 2, got {r}")
    if s == 0:
        raise ParameterError("s must be nonzero")
    return BraidWord(n, full_twist_block(r, s))


def lorenz_torus_braid(p: int, q: int) -> BraidWord:
    """Positive permutation braid on p+q strands whose closure is T(p, q).

    The p left strands shift right by q while the q right strands pass under
    them to the far left, one at a time.
    """
    letters: list[int] = []
    for j in range(q):
        letters.extend(range(p + j, j, -1))
    return BraidWord(p + q, tuple(letters))


def twisted_torus_braid(tp: TwistedTorusParams) -> BraidWord:
    p, q, r, s = tp.as_tuple()
    if r <= p:
        return concat(torus_braid(p, q), twist_braid(p, r, s))
    base = lorenz_torus_braid(p, q)
    return concat(base, twist_braid(base.strands, r, s))


def swap_pq(tp: TwistedTorusParams) -> TwistedTorusParams:
    return TwistedTorusParams(tp.q, tp.p, tp.r, tp.s)


def normalize(tp: TwistedTorusParams) -> TwistedTorusParams:
    """Swap so that q <= p."""
    return swap_pq(tp) if tp.q > tp.p else tp


def block_ownership(tp: TwistedTorusParams) -> list[int]:
    """Number of twisted-block strands owned by each closure component."""
    labels = closure_components(twisted_torus_braid(tp))
    owned = [0] * labels.count
    for j in range(tp.r):
        owned[labels.label[j]] += 1
    return owned


def component_parameters(tp: TwistedTorusParams) -> ComponentParams:
    if tp.r > tp.p:
        raise BlockBeyondTorus(f"r={tp.r} exceeds p={tp.p}")
    d = tp.d
    return ComponentParams(
        tuple((tp.p // d, tp.q // d, rr, tp.s) for rr in block_ownership(tp))
    )

