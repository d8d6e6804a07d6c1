"""
Braid words over the Artin generators.

Letter ``k > 0`` is the generator sigma_k (strand at position ``k`` crosses
over the strand at ``k+1``); ``-k`` is its inverse.  Crossing data are
recorded by tracking which strand occupies each position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionError, MalformedInput
from .matrices import CrossingMatrix
from .permutations import Permutation


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 1:
            raise MalformedInput(f"strand count must be positive, got {self.n}")
        for k in letters:
            if isinstance(k, bool) or not isinstance(k, int) or not 1 <= abs(k) <= self.n - 1:
                raise MalformedInput(f"letter {k!r} out of range for {self.n} strands")

    @classmethod
    def parse(cls, text: str, n: int) -> BraidWord:
        try:
            letters = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise MalformedInput(f"bad braid word {text!r}") from exc
        return cls(n, letters)

    def is_positive(self) -> bool:
        return all(k > 0 for k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise DimensionError(f"cannot concatenate words on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-k for k in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


def concat(words: Iterable[BraidWord], n: int) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.n != n:
            raise DimensionError(f"word on {w.n} strands in a product on {n}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def strand_positions(w: BraidWord) -> Iterator[list[int]]:
    """Yield the position -> strand table (0-based labels) before each letter and after the last."""
    at = list(range(w.n))
    yield list(at)
    for k in w.letters:
        p = abs(k) - 1
        at[p], at[p + 1] = at[p + 1], at[p]
        yield list(at)


def crossing_matrix(w: BraidWord) -> CrossingMatrix:
    n = w.n
    rows = [[0] * n for _ in range(n)]
    at = list(range(n))
    for k in w.letters:
        p = abs(k) - 1
        left, right = at[p], at[p + 1]
        if k > 0:
            rows[left][right] += 1
        else:
            rows[right][left] -= 1
        at[p], at[p + 1] = right, left
    return CrossingMatrix(tuple(map(tuple, rows)))


def permutation_of_word(w: BraidWord) -> Permutation:
    at = list(range(1, w.n + 1))
    for k in w.letters:
        p = abs(k) - 1
        at[p], at[p + 1] = at[p + 1], at[p]
    # the final arrangement of strand labels is exactly the image word
    return Permutation(tuple(at))


def mirror_word(w: BraidWord) -> BraidWord:
    n = w.n
    return BraidWord(n, tuple((n - k) if k > 0 else -(n + k) for k in w.letters))


def permutation_braid_word(p: Permutation) -> BraidWord:
    """Positive word crossing each inverted pair of ``p`` exactly once.

    Bubble-sort schedule: sweep left to right, emitting sigma_k whenever the
    strands at positions ``k, k+1`` still have to cross, until none do.
    """
    target = p.mapping
    at = list(range(p.n))
    letters = []
    swapped = True
    while swapped:
        swapped = False
        for k in range(p.n - 1):
            if target[at[k]] > target[at[k + 1]]:
                at[k], at[k + 1] = at[k + 1], at[k]
                letters.append(k + 1)
                swapped = True
    return BraidWord(p.n, tuple(letters))


def hook_word(i: int, j: int, n: int) -> BraidWord:
    """Pure braid in which strand ``i`` passes over the strands between, hooks ``j`` and returns."""
    if not 1 <= i < j <= n:
        raise DimensionError(f"hook needs 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    out = list(range(i, j))
    back = [-k for k in range(j - 2, i - 1, -1)]
    return BraidWord(n, tuple(out + [j - 1] + back))
