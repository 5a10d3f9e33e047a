"""Braid words on a fixed number of strands.

A letter ``g`` with ``|g| = i`` is the Artin generator sigma_i (``g > 0``) or its
inverse (``g < 0``); positive letters are positive crossings. Generators are
1-indexed, strand positions are 0-indexed: letter ``±i`` exchanges the strands
sitting at positions ``i - 1`` and ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class BraidError(ValueError):
    pass


class LetterOutOfRange(BraidError):
    pass


class ZeroLetter(BraidError):
    pass


class StrandMismatch(BraidError):
    pass


class UnknownComponent(BraidError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strands must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        for g in self.letters:
            if g == 0:
                raise ZeroLetter("letter 0 is not a generator")
            if abs(g) > self.strands - 1:
                raise LetterOutOfRange(
                    f"letter {g} out of range for {self.strands} strands"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return inverse(self) ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def __str__(self):
        return format_braid(self)


@dataclass(frozen=True)
class Permutation:
    """``image[j]`` is the end position of the strand starting at position ``j``."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a bijection: {self.image}")

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def cycles(self) -> list[list[int]]:
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.image[j]
            out.append(cyc)
        return out


@dataclass(frozen=True)
class ComponentLabeling:
    strands: int
    label: tuple[int, ...]
    count: int

    def members(self, component: int) -> list[int]:
        return [j for j, c in enumerate(self.label) if c == component]


def make_braid(strands: int, letters: Iterable[int]) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatch(f"{a.strands} strands vs {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-g for g in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for g in w.letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.strands, tuple(stack))


def embed(w: BraidWord, strands: int, shift: int = 0) -> BraidWord:
    """View ``w`` as a braid on ``strands`` strands, acting on positions
    ``shift .. shift + w.strands - 1``."""
    if shift < 0 or shift + w.strands > strands:
        raise StrandMismatch(
            f"cannot place {w.strands} strands at offset {shift} in {strands}"
        )
    return BraidWord(
        strands, tuple(g + shift if g > 0 else g - shift for g in w.letters)
    )


def permutation(w: BraidWord) -> Permutation:
    # at[k] = starting position of the strand now at position k
    at = list(range(w.strands))
    for g in w.letters:
        i = abs(g)
        at[i - 1], at[i] = at[i], at[i - 1]
    image = [0] * w.strands
    for pos, start in enumerate(at):
        image[start] = pos
    return Permutation(tuple(image))


def closure_components(w: BraidWord) -> ComponentLabeling:
    label = [-1] * w.strands
    count = 0
    # cycles() walks starts in increasing order, so ids follow the smallest start
    for cyc in permutation(w).cycles():
        for j in cyc:
            label[j] = count
        count += 1
    return ComponentLabeling(w.strands, tuple(label), count)


def writhe(w: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in w.letters)


def conjugate(w: BraidWord, g: int) -> BraidWord:
    if g == 0:
        raise ZeroLetter("letter 0 is not a generator")
    if abs(g) > w.strands - 1:
        raise LetterOutOfRange(f"letter {g} out of range for {w.strands} strands")
    return BraidWord(w.strands, (-g,) + w.letters + (g,))


def delete_components(w: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Braid of the sublink formed by the closure components in ``keep``.

    Strands of dropped components are removed together with every crossing
    they take part in; surviving strands are renumbered in their left-to-right
    order at each point of the word.
    """
    labels = closure_components(w)
    keep = set(keep)
    if not keep:
        raise UnknownComponent("keep must name at least one component")
    bad = [c for c in keep if not 0 <= c < labels.count]
    if bad:
        raise UnknownComponent(f"unknown components {sorted(bad)}")
    kept_start = [labels.label[j] in keep for j in range(w.strands)]
    at = list(range(w.strands))
    out = []
    for g in w.letters:
        i = abs(g)
        a, b = at[i - 1], at[i]
        if kept_start[a] and kept_start[b]:
            left = sum(1 for k in range(i - 1) if kept_start[at[k]])
            out.append(left + 1 if g > 0 else -(left + 1))
        at[i - 1], at[i] = b, a
    return BraidWord(sum(kept_start), tuple(out))


def format_braid(w: BraidWord) -> str:
    if not w.letters:
        return f"{w.strands}:"
    return f"{w.strands}: " + " ".join(str(g) for g in w.letters)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"n: g1 g2 ..."``."""
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise BraidError(f"expected 'n: g1 g2 ...', got {text!r}")
    try:
        strands = int(head)
        letters = [int(tok) for tok in tail.split()]
    except ValueError as exc:
        raise BraidError(f"malformed braid word {text!r}") from exc
    return make_braid(strands, letters)


def random_word(rng, strands: int, length: int) -> BraidWord:
    if strands < 2:
        return identity(strands)
    letters = [
        rng.randint(1, strands - 1) * rng.choice((1, -1)) for _ in range(length)
    ]
    return BraidWord(strands, tuple(letters))


def juxtapose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Split union: ``b`` placed to the right of ``a``."""
    n = a.strands + b.strands
    return concat(embed(a, n), embed(b, n, a.strands))

