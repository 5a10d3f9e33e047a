"""Braid word problem by Dehornoy handle reduction.

A sigma_i-handle is a subword ``x v y`` with ``x = ±i``, ``y = -x`` and ``v``
free of letters of index ``<= i``. Reducing it replaces every ``±(i+1)`` of
``v`` by ``(-e(i+1)) (±i) (e(i+1))`` where ``e`` is the sign of ``x``, and drops
``x`` and ``y``. A word with no handle is empty or sigma-positive/negative, so it
represents the identity exactly when it is empty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, StrandMismatch, concat, inverse

DEFAULT_STEP_LIMIT = 10**6


class StepLimitExceeded(RuntimeError):
    pass


class ParameterOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Handle:
    start: int
    end: int

    def generator(self, letters) -> int:
        return abs(letters[self.start])


def find_handle(letters) -> Handle | None:
    """The handle whose right end is leftmost. It contains no other handle, so
    it is always permitted."""
    # last[a] = position of the latest letter of index a not yet cut off by a
    # smaller index
    last: dict[int, int] = {}
    for j, x in enumerate(letters):
        a = abs(x)
        i = last.get(a)
        if i is not None and letters[i] == -x:
            return Handle(i, j)
        last[a] = j
        for b in [b for b in last if b > a]:
            del last[b]
    return None


def reduce_handle(letters: list[int], h: Handle) -> list[int]:
    x = letters[h.start]
    a = abs(x)
    e = 1 if x > 0 else -1
    mid: list[int] = []
    for y in letters[h.start + 1 : h.end]:
        if abs(y) == a + 1:
            f = 1 if y > 0 else -1
            mid.extend((-e * (a + 1), f * a, e * (a + 1)))
        else:
            mid.append(y)
    return letters[: h.start] + mid + letters[h.end + 1 :]


def handle_reduce(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> BraidWord:
    letters = list(w.letters)
    steps = 0
    while True:
        h = find_handle(letters)
        if h is None:
            return BraidWord(w.strands, tuple(letters))
        letters = reduce_handle(letters, h)
        steps += 1
        if steps > step_limit:
            raise StepLimitExceeded(f"no handle-free form after {step_limit} reductions")


def is_trivial(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    return not handle_reduce(w, step_limit).letters


def braids_equal(a: BraidWord, b: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    if a.strands != b.strands:
        raise StrandMismatch(f"{a.strands} strands vs {b.strands} strands")
    return is_trivial(concat(a, inverse(b)), step_limit)


def _descending_inverse(n: int) -> tuple[int, ...]:
    # s_{2n}^-1 ... s_1^-1
    return tuple(-i for i in range(2 * n, 0, -1))


def _ascending(n: int) -> tuple[int, ...]:
    # s_1 ... s_{2n+1}
    return tuple(range(1, 2 * n + 2))


def twist_identity_pair(n: int, k: int) -> tuple[BraidWord, BraidWord]:
    """The two sides of the rewriting identity for T(2n+2, 2n, 2n+1, -1):

    (D)^(2n+1) (U)^(2n)  =  (D)^(2n-k) s_{2n+1} s_{2n} ... s_{2n+1-k} (U)^(2n-k-1)

    with D = s_{2n}^-1 ... s_1^-1 and U = s_1 ... s_{2n+1} on 2n+2 strands.
    """
    if n < 1 or k < 0 or 2 * n - k - 1 < 0:
        raise ParameterOutOfRange(f"need n >= 1, 0 <= k <= 2n-1; got n={n}, k={k}")
    D, U = _descending_inverse(n), _ascending(n)
    lhs = D * (2 * n + 1) + U * (2 * n)
    middle = tuple(range(2 * n + 1, 2 * n - k, -1))
    rhs = D * (2 * n - k) + middle + U * (2 * n - k - 1)
    return BraidWord(2 * n + 2, lhs), BraidWord(2 * n + 2, rhs)


def twist_identity_report(n: int, step_limit: int = DEFAULT_STEP_LIMIT) -> dict[int, bool]:
    """Handle-reduction verdict for every admissible k."""
    if n < 1:
        raise ParameterOutOfRange(f"need n >= 1, got {n}")
    out = {}
    for k in range(0, 2 * n):
        lhs, rhs = twist_identity_pair(n, k)
        out[k] = braids_equal(lhs, rhs, step_limit)
    return out


def twist_identity_check(n: int, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    return all(twist_identity_report(n, step_limit).values())
