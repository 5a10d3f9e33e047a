"""Arithmetic classification of unknotted twisted torus knots and of twisted
torus links that are unlinks.

Everything here is integer arithmetic on (p, q, r, s); no braid is built and
no invariant is evaluated, so verdicts can be checked independently against
:mod:`ttunlink.invariants`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .invariants import predicted_two_component_linking
from .ttlink import TwistedTorusParams


class ClassifierError(ValueError):
    pass


class NotAKnot(ClassifierError):
    pass


class NotALink(ClassifierError):
    pass


class WrongComponentCount(ClassifierError):
    pass


class PositiveTwist(ClassifierError):
    pass


@dataclass(frozen=True)
class LeeFamily:
    tag: str  # L1..L7, or "torus" for a degenerate block (r < 2)
    witness: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    p: int
    q: int
    r: int
    s: int
    is_unlink: bool
    family: str | None = None
    witness: dict | None = None
    reason: str | None = None
    context: dict | None = None

    def __post_init__(self):
        if (self.family is None) == (self.reason is None):
            raise ValueError("exactly one of family / reason must be set")

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "s": self.s,
            "unlink": self.is_unlink,
            "family": self.family,
            "witness": self.witness,
            "reason": self.reason,
        }
        if self.context:
            out["context"] = self.context
        return out


def fibonacci_upto(limit: int) -> list[int]:
    """[f_1, f_2, ...] with f_1 = f_2 = 1, stopping after the first term > limit."""
    fib = [1, 1]
    while fib[-1] <= limit:
        fib.append(fib[-1] + fib[-2])
    return fib


def lee_unknot_family(p: int, q: int, r: int, s: int) -> LeeFamily | None:
    """Which of the seven unknotted twisted torus knot families (p, q, r, s)
    lies in, if any.

    Inputs with r < 2 carry no twisting and are decided as torus knots.
    """
    if gcd(p, q) != 1:
        raise NotAKnot(f"gcd({p},{q}) = {gcd(p, q)}")
    if q > p:
        p, q = q, p
    if r < 2:
        return LeeFamily("torus", {}) if min(p, q) == 1 else None
    if s == 0:
        raise ClassifierError("s must be nonzero")

    if s == -1:
        n = q
        if p == n + 1 and r == n + 1 and n >= 1:
            return LeeFamily("L1", {"n": n})
        if p == n + 1 and r == n and n >= 2:
            return LeeFamily("L2", {"n": n})
    if s <= -2 and r == q and q >= 2:
        m, n = -s, q
        for sign in (1, -1):
            if p == m * n + sign:
                return LeeFamily("L3", {"m": m, "n": n, "sign": sign})
    if s == -1:
        if q == 1 and r == 2 and p >= 3:
            return LeeFamily("L4", {"n": p})
        n = q
        if n >= 2 and r == 2 * n:
            for sign in (1, -1):
                if p == 4 * n + sign:
                    return LeeFamily("L5", {"n": n, "sign": sign})
        n = q + 1
        if n >= 4 and n % 2 == 0 and p == n + 1 and r == n:
            return LeeFamily("L6", {"n": n})
        fib = fibonacci_upto(p)
        for n in range(4, len(fib)):
            # f_n is fib[n - 1]
            if (p, q, r) == (fib[n], fib[n - 2], fib[n - 1]):
                return LeeFamily("L7", {"n": n})
    return None


def component_types(p: int, q: int, r: int, s: int) -> list[tuple[int, int, int, int]]:
    """Twisted torus knot type of each component for r <= p.

    The torus braid sends position i to i - q (mod p), so the components are the
    residue classes mod d and the block {0, ..., r-1} gives class c
    ``r // d`` strands, plus one more when c < r % d.
    """
    d = gcd(p, q)
    return [(p // d, q // d, r // d + (1 if c < r % d else 0), s) for c in range(d)]


def _match_families(p: int, q: int, r: int, s: int) -> tuple[str, dict] | None:
    if s == -1 and p % 2 == 0 and (p, q, r) == (p, p - 2, p - 1) and p >= 4:
        return "F1", {"n": (p - 2) // 2}
    if s == -1 and q >= 2 and (p, r) == (4 * q, 2 * q):
        return "F2", {"n": q}
    if s <= -2 and q >= 2 and r == q and p == -s * q:
        return "F3", {"m": q, "n": -s}
    return None


def unlink_verdict(p: int, q: int, r: int, s: int) -> Verdict:
    tp = TwistedTorusParams(p, q, r, s)
    if tp.d == 1:
        raise NotALink(f"gcd({p},{q}) = 1; use lee_unknot_family")
    if q > p:
        p, q = q, p
    hit = _match_families(p, q, r, s)
    if hit is not None:
        family, witness = hit
        return Verdict(*tp.as_tuple(), True, family=family, witness=witness)

    def reject(reason, **ctx):
        return Verdict(*tp.as_tuple(), False, reason=reason, context=ctx or None)

    if s > 0:
        return reject("PositiveTwist")
    if r > p:
        return reject("RBeyondP")
    if gcd(p, q) == 2:
        lk = predicted_two_component_linking(TwistedTorusParams(p, q, r, s))
        if lk != 0:
            return reject("LinkingObstruction", linking=str(lk))
        comps = component_types(p, q, r, s)
        knotted = [c for c in comps if lee_unknot_family(*c) is None]
        if knotted:
            return reject("ComponentKnotted", components=[list(c) for c in knotted])
    return reject("NoFamily")


def unlink_verdict_params(tp: TwistedTorusParams) -> Verdict:
    return unlink_verdict(*tp.as_tuple())


@dataclass
class AnalysisReport:
    parity: str
    relation: str
    lhs: int
    rhs: int
    holds: bool
    components: list[tuple[int, int, int, int]]
    lee: list[LeeFamily | None]

    def to_json(self) -> dict:
        return {
            "parity": self.parity,
            "relation": self.relation,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "components": [list(c) for c in self.components],
            "lee": [None if f is None else {"tag": f.tag, **f.witness} for f in self.lee],
        }


def two_component_analysis(p: int, q: int, r: int, s: int) -> AnalysisReport:
    """Zero-linking relation and component types for a two-component T(p,q,r,s)
    with r <= p and s < 0."""
    tp = TwistedTorusParams(p, q, r, s)
    if tp.d != 2:
        raise WrongComponentCount(f"gcd({p},{q}) = {tp.d}, expected 2")
    if s > 0:
        raise PositiveTwist("linking number is positive for s > 0")
    if q > p:
        p, q = q, p
    if r > p:
        raise ClassifierError(f"component analysis needs r <= p, got r={r} > p={p}")
    if r % 2 == 0:
        parity, relation, rhs = "even", "pq = -r^2 s", -r * r * s
    else:
        rp = (r - 1) // 2
        parity, relation, rhs = "odd", "pq = -4r'(r'+1)s", -4 * rp * (rp + 1) * s
    comps = component_types(p, q, r, s)
    return AnalysisReport(
        parity=parity,
        relation=relation,
        lhs=p * q,
        rhs=rhs,
        holds=p * q == rhs,
        components=comps,
        lee=[lee_unknot_family(*c) for c in comps],
    )


def family_members(bound: int) -> dict[str, list[tuple[int, int, int, int]]]:
    """All members of the three unlink families with p <= bound."""
    out: dict[str, list[tuple[int, int, int, int]]] = {"F1": [], "F2": [], "F3": []}
    n = 1
    while 2 * n + 2 <= bound:
        out["F1"].append((2 * n + 2, 2 * n, 2 * n + 1, -1))
        n += 1
    n = 2
    while 4 * n <= bound:
        out["F2"].append((4 * n, n, 2 * n, -1))
        n += 1
    for m in range(2, bound // 2 + 1):
        for n in range(2, bound // m + 1):
            out["F3"].append((m * n, m, m, -n))
    return out


def families_disjoint_check(bound: int) -> bool:
    if bound < 4:
        raise ClassifierError(f"bound must be >= 4, got {bound}")
    seen: dict[tuple, str] = {}
    for family, members in family_members(bound).items():
        for t in members:
            if t in seen and seen[t] != family:
                return False
            seen[t] = family
    return True
