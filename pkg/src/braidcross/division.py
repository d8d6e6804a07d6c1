"""
Left division by permutations, blockages, and the realizability search.

A matrix in SR+ is the crossing matrix of a positive braid exactly when some
sequence of allowed left divisions by adjacent transpositions reaches zero.
Every positive word ``k1 k2 ...`` realizing the matrix corresponds to exactly
one division sequence ``k1, k2, ...``, so counting division paths counts
words.  The search is a depth-first walk over these sequences with an exact
memo table keyed by the quotient matrix.
"""

from __future__ import annotations

import enum
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .errors import Indeterminate, NotInSRPlusError, NotSubordinate, DimensionError
from .matrices import CrossingMatrix, in_sr_plus, r_matrix
from .permutations import Permutation, transposition
from .words import BraidWord

DEFAULT_BUDGET = 10**8


# --- single divisions ---------------------------------------------------------

def subordinate(p: Permutation, a: CrossingMatrix) -> bool:
    if p.n != a.n:
        raise DimensionError(f"permutation of {p.n} vs {a.n}x{a.n} matrix")
    return r_matrix(p) <= a


def left_divide(a: CrossingMatrix, p: Permutation) -> CrossingMatrix:
    """The quotient ``b`` with ``crossing_product(R_p, b) == a``."""
    if not subordinate(p, a):
        raise NotSubordinate(f"R_p is not entrywise below the matrix for p = {p}")
    return (a - r_matrix(p)).rearrange(p)


def divide_by_transposition(a: CrossingMatrix, i: int) -> CrossingMatrix:
    return left_divide(a, transposition(a.n, i))


def divide_along(a: CrossingMatrix, letters) -> list[CrossingMatrix]:
    """Successive quotients of ``a`` by the transpositions named in ``letters``."""
    states = [a]
    for k in letters:
        states.append(divide_by_transposition(states[-1], k))
    return states


def allowed_divisions(a: CrossingMatrix) -> list[int]:
    """Positions ``i`` whose transposition divides ``a`` with a quotient still in SR+."""
    if not in_sr_plus(a):
        raise NotInSRPlusError(f"allowed divisions need an SR+ matrix: {in_sr_plus(a).describe()}")
    return [
        i for i in range(1, a.n)
        if a.entry(i, i + 1) >= 1 and in_sr_plus(divide_by_transposition(a, i))
    ]


# --- blockages ----------------------------------------------------------------

class BlockageKind(str, enum.Enum):
    R_FIRST = "RFirst"   # tableau R, 0, bS
    S_FIRST = "SFirst"   # tableau bS, 0, R


@dataclass(frozen=True)
class Blockage:
    i: int
    j: int
    k: int
    kind: BlockageKind
    b: int

    @property
    def blocked_cell(self) -> tuple[int, int]:
        return (self.i, self.j) if self.kind is BlockageKind.R_FIRST else (self.j, self.k)


def find_blockages(a: CrossingMatrix) -> list[Blockage]:
    rows = a.rows
    n = a.n
    found = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if rows[i][k] or rows[k][i]:
                    continue
                if rows[i][j] == 1 and rows[j][i] == 0 and rows[j][k] == rows[k][j] != 0:
                    found.append(Blockage(i + 1, j + 1, k + 1, BlockageKind.R_FIRST, rows[j][k]))
                if rows[i][j] == rows[j][i] != 0 and rows[j][k] == 1 and rows[k][j] == 0:
                    found.append(Blockage(i + 1, j + 1, k + 1, BlockageKind.S_FIRST, rows[i][j]))
    return found


def blocked_cells(a: CrossingMatrix) -> set[tuple[int, int]]:
    return {bl.blocked_cell for bl in find_blockages(a)}


def is_totally_blocked(a: CrossingMatrix) -> bool:
    """Every nonzero first-superdiagonal entry is a blocked R."""
    check = in_sr_plus(a)
    if not check:
        raise NotInSRPlusError(check.describe())
    if a.is_zero():
        raise NotInSRPlusError("the zero matrix is not totally blocked")
    blocked = blocked_cells(a)
    return all(
        (i, i + 1) in blocked for i in range(1, a.n) if a.entry(i, i + 1) != 0
    )


# --- verdicts -------------------------------------------------------------------

@dataclass(frozen=True)
class NotInSRPlus:
    reason: str
    where: tuple[int, ...] | None = None
    kind = "not_in_sr_plus"

    def to_json(self) -> dict:
        out = {"verdict": self.kind, "reason": self.reason}
        if self.where is not None:
            out["where"] = list(self.where)
        return out


@dataclass(frozen=True)
class Realizable:
    """``count`` is ``None`` when the search stopped at the first witness."""

    count: int | None
    witnesses: tuple[BraidWord, ...] = ()
    kind = "realizable"

    def to_json(self) -> dict:
        out: dict = {"verdict": self.kind}
        if self.count is not None:
            out["count"] = self.count
        if self.witnesses:
            out["witnesses"] = [str(w) for w in self.witnesses]
        return out


@dataclass(frozen=True)
class VirtuallyTotallyBlocked:
    """One maximal division path (lowest index first) and the totally blocked matrix it ends at."""

    path: tuple[int, ...]
    terminal: CrossingMatrix
    kind = "virtually_totally_blocked"

    def to_json(self) -> dict:
        return {
            "verdict": self.kind,
            "certificate": {"path": list(self.path), "terminal": self.terminal.to_json()},
        }


Classification = Union[NotInSRPlus, Realizable, VirtuallyTotallyBlocked]


class SearchMode(str, enum.Enum):
    FIRST = "first"
    COUNT = "count"
    ALL = "all"


@dataclass(frozen=True)
class SearchConfig:
    mode: SearchMode = SearchMode.FIRST
    max_witnesses: int | None = None
    memoize: bool = True
    parallel: bool = False
    budget: int = DEFAULT_BUDGET
    workers: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "mode", SearchMode(self.mode))
        if self.max_witnesses is not None and self.max_witnesses < 1:
            raise ValueError("max_witnesses must be at least 1 when bounded")
        if self.budget < 1:
            raise ValueError("budget must be positive")


# --- search core on flat row-major tuples ---------------------------------------

@lru_cache(maxsize=None)
def _swap_map(n: int, i: int) -> tuple[int, ...]:
    """Source index for each target cell when rows/columns ``i`` and ``i+1`` are swapped (0-based)."""
    sigma = list(range(n))
    sigma[i], sigma[i + 1] = i + 1, i
    return tuple(sigma[r] * n + sigma[c] for r in range(n) for c in range(n))


def _divide_flat(a: tuple[int, ...], n: int, i: int) -> tuple[int, ...]:
    b = [a[m] for m in _swap_map(n, i)]
    b[(i + 1) * n + i] -= 1
    return tuple(b)


def _quotient_ok(b: tuple[int, ...], n: int, i: int) -> bool:
    """T0 on the triples of ``b`` that contain both ``i`` and ``i+1``.

    For ``a`` in SR+ these are the only conditions a transposition quotient
    can break; every other triple of ``b`` is a relabelled triple of ``a``.
    """
    j = i + 1
    if b[i * n + j]:
        return True
    for x in range(i):
        if b[x * n + i] == 0 and b[x * n + j] != 0:
            return False
    for y in range(j + 1, n):
        if b[j * n + y] == 0 and b[i * n + y] != 0:
            return False
    return True


def _children(a: tuple[int, ...], n: int) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for i in range(n - 1):
        if a[i * n + i + 1] >= 1:
            b = _divide_flat(a, n, i)
            if _quotient_ok(b, n, i):
                out.append((i + 1, b))
    return out


class _Search:
    def __init__(self, n: int, memoize: bool, budget: int):
        self.n = n
        self.memoize = memoize
        self.budget = budget
        self.memo: dict[tuple[int, ...], int] = {}
        self.dead: set[tuple[int, ...]] = set()
        self.nodes = 0

    def _tick(self, size: int):
        if size > self.budget:
            raise Indeterminate(self.budget)

    def count(self, a: tuple[int, ...], remaining: int) -> int:
        if remaining == 0:
            return 1
        if self.memoize:
            hit = self.memo.get(a)
            if hit is not None:
                return hit
        else:
            self.nodes += 1
            self._tick(self.nodes)
        total = 0
        for _, b in _children(a, self.n):
            total += self.count(b, remaining - 1)
        if self.memoize:
            self.memo[a] = total
            self._tick(len(self.memo))
        return total

    def first(self, a: tuple[int, ...], remaining: int, path: list[int]) -> list[int] | None:
        if remaining == 0:
            return list(path)
        if self.memoize:
            if a in self.dead:
                return None
        else:
            self.nodes += 1
            self._tick(self.nodes)
        for i, b in _children(a, self.n):
            path.append(i)
            found = self.first(b, remaining - 1, path)
            path.pop()
            if found is not None:
                return found
        if self.memoize:
            self.dead.add(a)
            self._tick(len(self.dead))
        return None

    def enumerate(self, a: tuple[int, ...], remaining: int, path: list[int]) -> Iterator[tuple[int, ...]]:
        """Division sequences reaching zero, in lexicographic order."""
        if remaining == 0:
            yield tuple(path)
            return
        if self.memoize:
            # only descend into branches that are known to reach zero
            if self.count(a, remaining) == 0:
                return
        else:
            self.nodes += 1
            self._tick(self.nodes)
        for i, b in _children(a, self.n):
            if self.memoize and self.count(b, remaining - 1) == 0:
                continue
            path.append(i)
            yield from self.enumerate(b, remaining - 1, path)
            path.pop()


def _run(search: _Search, a: tuple[int, ...], remaining: int, mode: SearchMode, limit: int | None):
    """Return ``(count or None, witness sequences)`` for one root."""
    if mode is SearchMode.FIRST:
        found = search.first(a, remaining, [])
        return (None, [] if found is None else [tuple(found)])
    if mode is SearchMode.COUNT:
        return (search.count(a, remaining), [])
    witnesses = []
    for seq in search.enumerate(a, remaining, []):
        witnesses.append(seq)
        if limit is not None and len(witnesses) >= limit:
            break
    if search.memoize:
        total = search.count(a, remaining)
    elif limit is None or len(witnesses) < limit:
        total = len(witnesses)
    else:
        total = search.count(a, remaining)
    return (total, witnesses)


def _branch_job(n, a, remaining, mode, memoize, budget, limit):
    search = _Search(n, memoize, budget)
    return _run(search, a, remaining, SearchMode(mode), limit)


class _RecursionLimit:
    def __init__(self, depth: int):
        self.depth = depth

    def __enter__(self):
        self.old = sys.getrecursionlimit()
        if self.depth + 500 > self.old:
            sys.setrecursionlimit(self.depth + 500)

    def __exit__(self, *exc):
        sys.setrecursionlimit(self.old)


def _certificate(a: tuple[int, ...], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    path = []
    while True:
        kids = _children(a, n)
        if not kids:
            return tuple(path), a
        i, a = kids[0]
        path.append(i)


def classify(a: CrossingMatrix, cfg: SearchConfig | None = None) -> Classification:
    """Decide whether ``a`` is the crossing matrix of a positive braid.

    Raises :class:`Indeterminate` if the node budget runs out.
    """
    cfg = cfg or SearchConfig()
    check = in_sr_plus(a)
    if not check:
        return NotInSRPlus(check.reason, check.where)
    n = a.n
    flat = a.flat
    remaining = a.total
    with _RecursionLimit(remaining):
        if cfg.parallel and remaining > 0:
            count, seqs = _parallel(flat, n, remaining, cfg)
        else:
            search = _Search(n, cfg.memoize, cfg.budget)
            count, seqs = _run(search, flat, remaining, cfg.mode, cfg.max_witnesses)
    realizable = bool(seqs) if cfg.mode is SearchMode.FIRST else count > 0
    if realizable:
        words = tuple(BraidWord(n, s) for s in seqs)
        return Realizable(count, words)
    path, terminal = _certificate(flat, n)
    return VirtuallyTotallyBlocked(path, CrossingMatrix.from_flat(n, terminal))


def _parallel(flat, n, remaining, cfg: SearchConfig):
    kids = _children(flat, n)
    if not kids:
        return (0, [])
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        futures = [
            pool.submit(_branch_job, n, b, remaining - 1, cfg.mode.value, cfg.memoize, cfg.budget,
                        cfg.max_witnesses)
            for _, b in kids
        ]
        results = [f.result() for f in futures]
    total = 0
    seqs: list[tuple[int, ...]] = []
    for (i, _), (count, sub) in zip(kids, results):
        if count is not None:
            total += count
        seqs.extend((i,) + s for s in sub)
    if cfg.mode is SearchMode.FIRST:
        return (None, seqs[:1])
    if cfg.max_witnesses is not None:
        seqs = seqs[:cfg.max_witnesses]
    return (total, seqs)


def count_realizations(a: CrossingMatrix, budget: int = DEFAULT_BUDGET) -> int:
    """Number of positive words whose crossing matrix is ``a``."""
    if not in_sr_plus(a):
        return 0
    search = _Search(a.n, True, budget)
    with _RecursionLimit(a.total):
        return search.count(a.flat, a.total)


def first_witness(a: CrossingMatrix, **kwargs) -> BraidWord | None:
    result = classify(a, SearchConfig(mode=SearchMode.FIRST, **kwargs))
    return result.witnesses[0] if isinstance(result, Realizable) else None
