"""
Permutations of positions ``1..n`` acting on the right as rearrangements.

A :class:`Permutation` is stored as its image word ``(1 2 ... n)^p``: the
symbol sitting at position ``i`` of a word moves to position ``p(i)``.  The
mapping form is derived on demand, so ``word[k] == i`` exactly when
``p(i) == k``.

>>> p = Permutation((2, 4, 1, 3))
>>> p.mapping
(3, 1, 4, 2)
>>> "".join(apply_to_word(p, "abcd"))
'bdac'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence, TypeVar

from .errors import DimensionError, MalformedInput, ORSetError

T = TypeVar("T")

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word or sorted(word) != list(range(1, len(word) + 1)):
            raise MalformedInput(f"{list(word)} is not a permutation of 1..{len(word)}")

    @property
    def n(self) -> int:
        return len(self.word)

    @cached_property
    def mapping(self) -> tuple[int, ...]:
        """Images ``(p(1), ..., p(n))``."""
        images = [0] * self.n
        for k, i in enumerate(self.word, start=1):
            images[i - 1] = k
        return tuple(images)

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    def is_identity(self) -> bool:
        return all(w == k for k, w in enumerate(self.word, start=1))

    def __str__(self) -> str:
        return " ".join(map(str, self.word))

    @classmethod
    def from_mapping(cls, images: Sequence[int]) -> Permutation:
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise MalformedInput(f"{list(images)} is not a permutation of 1..{n}")
        word = [0] * n
        for i, k in enumerate(images, start=1):
            word[k - 1] = i
        return cls(tuple(word))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        try:
            word = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise MalformedInput(f"bad permutation text {text!r}") from exc
        return cls(word)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int) -> Permutation:
    """The adjacent transposition interchanging positions ``i`` and ``i+1``."""
    if not 1 <= i < n:
        raise DimensionError(f"transposition index {i} out of range for n={n}")
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation(tuple(word))


def reversal(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def apply_to_word(p: Permutation, w: Sequence[T]) -> list[T]:
    """Rearrange ``w`` so the symbol at position ``i`` lands at position ``p(i)``."""
    if len(w) != p.n:
        raise DimensionError(f"word of length {len(w)} vs permutation of {p.n}")
    out: list = [None] * p.n
    for i, k in enumerate(p.mapping):
        out[k - 1] = w[i]
    return out


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The rearrangement ``p`` followed by ``q``."""
    if p.n != q.n:
        raise DimensionError(f"cannot compose permutations of {p.n} and {q.n}")
    return Permutation.from_mapping(tuple(q.mapping[k - 1] for k in p.mapping))


def inverse(p: Permutation) -> Permutation:
    # the image word of the inverse is the mapping of p
    return Permutation(p.mapping)


@dataclass(frozen=True)
class ORSet:
    """A set of index pairs ``(i, j)`` with ``1 <= i < j <= n``."""

    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        pairs = frozenset((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for i, j in pairs:
            if not 1 <= i < j <= self.n:
                raise MalformedInput(f"pair {(i, j)} invalid for n={self.n}")

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))


def or_set(p: Permutation) -> ORSet:
    m = p.mapping
    pairs = {
        (i + 1, j + 1)
        for i in range(p.n)
        for j in range(i + 1, p.n)
        if m[i] > m[j]
    }
    return ORSet(p.n, frozenset(pairs))


def check_or_set(s: ORSet) -> None:
    """Raise :class:`ORSetError` at the first triple violating either closure condition."""
    pairs = s.pairs
    for i, k, j in itertools.combinations(range(1, s.n + 1), 3):
        if (i, j) in pairs and (i, k) not in pairs and (k, j) not in pairs:
            raise ORSetError(1, (i, k, j))
    for i, k, j in itertools.combinations(range(1, s.n + 1), 3):
        if (i, k) in pairs and (k, j) in pairs and (i, j) not in pairs:
            raise ORSetError(2, (i, k, j))


def permutation_from_or_set(s: ORSet) -> Permutation:
    """Reconstruct the unique permutation whose order-reversal set is ``s``.

    Raises :class:`ORSetError` when ``s`` is not an order-reversal set.
    """
    check_or_set(s)
    out_deg = [0] * (s.n + 1)
    in_deg = [0] * (s.n + 1)
    for i, j in s.pairs:
        out_deg[i] += 1
        in_deg[j] += 1
    images = tuple(i + out_deg[i] - in_deg[i] for i in range(1, s.n + 1))
    return Permutation.from_mapping(images)


def _check_index_set(idx: Sequence[int], n: int) -> tuple[int, ...]:
    idx = tuple(idx)
    if not idx:
        raise MalformedInput("empty index set")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise MalformedInput(f"index set {list(idx)} is not strictly increasing")
    if idx[0] < 1 or idx[-1] > n:
        raise MalformedInput(f"index set {list(idx)} not within 1..{n}")
    return idx


def restrict(p: Permutation, idx: Sequence[int]) -> Permutation:
    """Restriction of ``p`` to the positions in ``idx``, relabelled ``1..len(idx)``."""
    idx = _check_index_set(idx, p.n)
    rank = {v: r for r, v in enumerate(idx, start=1)}
    pairs = {(rank[i], rank[j]) for i, j in or_set(p).pairs if i in rank and j in rank}
    return permutation_from_or_set(ORSet(len(idx), frozenset(pairs)))


def rearrange_matrix(a: Iterable[Sequence[int]], p: Permutation) -> Rows:
    """Move entry ``(i, j)`` of ``a`` to ``(p(i), p(j))``."""
    rows = [tuple(r) for r in a]
    n = p.n
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionError(f"matrix shape does not match permutation of {n}")
    m = [k - 1 for k in p.mapping]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        oi = out[m[i]]
        ri = rows[i]
        for j in range(n):
            oi[m[j]] = ri[j]
    return tuple(tuple(r) for r in out)
