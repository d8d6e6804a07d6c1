"""
Brute-force oracles and generators for tests and sweeps.

Nothing here touches the division search: realizations are found by plain
enumeration of positive words, so agreement with the search is meaningful.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .errors import PreconditionError
from .matrices import CrossingMatrix, in_sr_plus, is_t0
from .words import BraidWord, crossing_matrix, hook_word

MAX_N = 5
MAX_ENTRY = 3


def enumerate_positive_words(n: int, length: int) -> Iterator[BraidWord]:
    """All ``(n-1)**length`` positive words, lexicographically."""
    if n < 2 and length > 0:
        return
    for letters in itertools.product(range(1, n), repeat=length):
        yield BraidWord(n, letters)


def brute_force_realizations(a: CrossingMatrix) -> list[BraidWord]:
    if any(v < 0 for r in a.rows for v in r):
        return []
    return [w for w in enumerate_positive_words(a.n, a.total) if crossing_matrix(w) == a]


def _guard(n: int, max_entry: int):
    problems = []
    if not 1 <= n <= MAX_N:
        problems.append(f"n={n} outside 1..{MAX_N}")
    if not 0 <= max_entry <= MAX_ENTRY:
        problems.append(f"max_entry={max_entry} outside 0..{MAX_ENTRY}")
    if problems:
        raise PreconditionError(problems)


def _cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _build(n: int, cells, values) -> CrossingMatrix:
    rows = [[0] * n for _ in range(n)]
    for (i, j), (s, r) in zip(cells, values):
        rows[i][j] = s + r
        rows[j][i] = s
    return CrossingMatrix(tuple(map(tuple, rows)))


def sr_candidates(n: int, max_entry: int, max_sum: int | None = None) -> Iterator[CrossingMatrix]:
    """Every choice of ``(s, r)`` per above-diagonal cell with ``s + r <= max_entry``."""
    _guard(n, max_entry)
    choices = [(s, r) for s in range(max_entry + 1) for r in (0, 1) if s + r <= max_entry]
    cells = _cells(n)
    for values in itertools.product(choices, repeat=len(cells)):
        if max_sum is not None and sum(2 * s + r for s, r in values) > max_sum:
            continue
        yield _build(n, cells, values)


def enumerate_sr_plus(n: int, max_entry: int, max_sum: int | None = None) -> Iterator[CrossingMatrix]:
    """SR+ matrices with entries in ``[0, max_entry]`` and, optionally, entry sum at most ``max_sum``."""
    for a in sr_candidates(n, max_entry, max_sum):
        if in_sr_plus(a):
            yield a


def symmetric_candidates(n: int, max_entry: int) -> Iterator[CrossingMatrix]:
    _guard(n, max_entry)
    cells = _cells(n)
    for values in itertools.product(range(max_entry + 1), repeat=len(cells)):
        yield _build(n, cells, [(v, 0) for v in values])


def enumerate_symmetric_t0(n: int, max_entry: int) -> Iterator[CrossingMatrix]:
    for a in symmetric_candidates(n, max_entry):
        if is_t0(a):
            yield a


def random_word(n: int, length: int, seed: int) -> BraidWord:
    rng = random.Random(seed)
    if n < 2:
        return BraidWord(n, ())
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
    return BraidWord(n, letters)


def random_pure_word(n: int, hooks: int, seed: int) -> BraidWord:
    """Concatenation of ``hooks`` random hook words, each possibly inverted."""
    rng = random.Random(seed)
    letters: list[int] = []
    if n < 2:
        return BraidWord(n, ())
    for _ in range(hooks):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        w = hook_word(i, j, n)
        if rng.random() < 0.5:
            w = w.inverse()
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))
