"""
Crossing matrices: the value type, SR decomposition and tableaux, the T0/T1
zero-pattern conditions, SR+ membership, configurations and mirrors.

All indices in the public API are 1-based; rows are stored 0-based.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionError,
    MalformedInput,
    NotAPermutation,
    SRDecompositionError,
)
from .permutations import (
    ORSet,
    Permutation,
    _check_index_set,
    inverse,
    or_set,
    permutation_from_or_set,
    rearrange_matrix,
)


@dataclass(frozen=True)
class CrossingMatrix:
    """Square integer matrix with zero diagonal."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise MalformedInput("matrix must have at least one row")
        for r in rows:
            if len(r) != n:
                raise MalformedInput(f"matrix is not square: row of length {len(r)} in {n}x{n}")
            for v in r:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise MalformedInput(f"entry {v!r} is not an integer")
        for i in range(n):
            if rows[i][i] != 0:
                raise MalformedInput(f"diagonal entry ({i + 1},{i + 1}) is {rows[i][i]}, must be 0")

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    @property
    def total(self) -> int:
        """Sum of all entries, written N(A)."""
        return sum(map(sum, self.rows))

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.rows))

    @classmethod
    def from_flat(cls, n: int, flat: Sequence[int]) -> CrossingMatrix:
        return cls(tuple(tuple(flat[r * n:(r + 1) * n]) for r in range(n)))

    @classmethod
    def zero(cls, n: int) -> CrossingMatrix:
        return cls(tuple((0,) * n for _ in range(n)))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n))

    def transpose(self) -> CrossingMatrix:
        return CrossingMatrix(tuple(zip(*self.rows)))

    def _check_same(self, other: CrossingMatrix):
        if self.n != other.n:
            raise DimensionError(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other: CrossingMatrix) -> CrossingMatrix:
        self._check_same(other)
        return CrossingMatrix(tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: CrossingMatrix) -> CrossingMatrix:
        self._check_same(other)
        return CrossingMatrix(tuple(
            tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __neg__(self) -> CrossingMatrix:
        return CrossingMatrix(tuple(tuple(-x for x in r) for r in self.rows))

    def __le__(self, other: CrossingMatrix) -> bool:
        self._check_same(other)
        return all(x <= y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))

    def rearrange(self, p: Permutation) -> CrossingMatrix:
        return CrossingMatrix(rearrange_matrix(self.rows, p))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        width = max(len(str(v)) for r in self.rows for v in r)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)


def matrix_from_json(obj) -> CrossingMatrix:
    """Accept ``{"n": N, "rows": [...]}`` or a bare array of arrays."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from exc
    if isinstance(obj, dict):
        if "rows" not in obj:
            raise MalformedInput("matrix object needs a 'rows' field")
        rows = obj["rows"]
        n = obj.get("n")
    else:
        rows, n = obj, None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInput("rows must be an array of arrays")
    a = CrossingMatrix(tuple(tuple(r) for r in rows))
    if n is not None and n != a.n:
        raise MalformedInput(f"declared n={n} but got {a.n} rows")
    return a


def r_matrix(p: Permutation) -> CrossingMatrix:
    """The 0/1 matrix with ones exactly on the order-reversal set of ``p``."""
    n = p.n
    rows = [[0] * n for _ in range(n)]
    for i, j in or_set(p).pairs:
        rows[i - 1][j - 1] = 1
    return CrossingMatrix(tuple(map(tuple, rows)))


def sym_matrix(n: int, i: int, j: int, value: int = 1) -> CrossingMatrix:
    """``value`` times the symmetric matrix with ones at ``(i, j)`` and ``(j, i)``."""
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise DimensionError(f"bad position ({i},{j}) for n={n}")
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = rows[j - 1][i - 1] = value
    return CrossingMatrix(tuple(map(tuple, rows)))


def transposition_matrix(n: int, i: int) -> CrossingMatrix:
    if not 1 <= i < n:
        raise DimensionError(f"transposition index {i} out of range for n={n}")
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][i] = 1
    return CrossingMatrix(tuple(map(tuple, rows)))


def matrix_images(a: CrossingMatrix) -> tuple[int, ...]:
    """``i + rowsum_i - colsum_i`` for each ``i``, which need not be a permutation."""
    cols = [sum(c) for c in zip(*a.rows)]
    return tuple(i + sum(r) - c for i, (r, c) in enumerate(zip(a.rows, cols), start=1))


def permutation_of_matrix(a: CrossingMatrix) -> Permutation:
    images = matrix_images(a)
    seen = set()
    for v in images:
        if not 1 <= v <= a.n or v in seen:
            raise NotAPermutation(images, v)
        seen.add(v)
    return Permutation.from_mapping(images)


def crossing_product(a: CrossingMatrix, b: CrossingMatrix) -> CrossingMatrix:
    """Crossing matrix of a braid for ``a`` followed by a braid for ``b``.

    Strand ``i`` of the second braid continues the strand of the first that
    ended at position ``i``, so ``b`` is relabelled by the inverse of the
    permutation of ``a`` under the rearrangement action.
    """
    if a.n != b.n:
        raise DimensionError(f"{a.n}x{a.n} vs {b.n}x{b.n}")
    p = permutation_of_matrix(a)
    return a + b.rearrange(inverse(p))


# --- T0 / T1 ---------------------------------------------------------------

def _triples(n: int):
    return itertools.combinations(range(n), 3)


def t0_violation(a: CrossingMatrix) -> tuple[int, int, int] | None:
    """First triple ``i<k<j`` with ``a_ik = a_kj = 0`` but ``a_ij != 0``."""
    rows = a.rows
    for i, k, j in _triples(a.n):
        if rows[i][k] == 0 and rows[k][j] == 0 and rows[i][j] != 0:
            return (i + 1, k + 1, j + 1)
    return None


def t1_violation(a: CrossingMatrix) -> tuple[int, int, int] | None:
    rows = a.rows
    for i, k, j in _triples(a.n):
        if rows[i][k] != 0 and rows[k][j] != 0 and rows[i][j] == 0:
            return (i + 1, k + 1, j + 1)
    return None


def is_t0(a: CrossingMatrix) -> bool:
    return t0_violation(a) is None


def is_t1(a: CrossingMatrix) -> bool:
    return t1_violation(a) is None


# --- SR decomposition -------------------------------------------------------

@dataclass(frozen=True)
class SRDecomposition:
    s: CrossingMatrix
    r: CrossingMatrix

    @property
    def n(self) -> int:
        return self.s.n

    def permutation(self) -> Permutation:
        """The permutation whose order-reversal set is the support of ``r``."""
        pairs = {(i + 1, j + 1) for i, row in enumerate(self.r.rows) for j, v in enumerate(row) if v}
        return permutation_from_or_set(ORSet(self.n, frozenset(pairs)))


def sr_parts(a: CrossingMatrix) -> list[tuple[int, int]]:
    """Raw ``(s_ij, r_ij) = (a_ji, a_ij - a_ji)`` for ``i<j`` in row-major order."""
    rows = a.rows
    return [
        (rows[j][i], rows[i][j] - rows[j][i])
        for i in range(a.n)
        for j in range(i + 1, a.n)
    ]


def sr_decompose(a: CrossingMatrix) -> SRDecomposition:
    """Split ``a`` into symmetric ``S`` plus an R-matrix, or raise :class:`SRDecompositionError`."""
    n = a.n
    s = [[0] * n for _ in range(n)]
    r = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            sij = a.rows[j][i]
            rij = a.rows[i][j] - sij
            if rij not in (0, 1):
                raise SRDecompositionError("r_not_zero_one", (i + 1, j + 1))
            s[i][j] = s[j][i] = sij
            r[i][j] = rij
    rm = CrossingMatrix(tuple(map(tuple, r)))
    bad = t0_violation(rm)
    if bad is not None:
        raise SRDecompositionError("r_not_t0", bad)
    bad = t1_violation(rm)
    if bad is not None:
        raise SRDecompositionError("r_not_t1", bad)
    return SRDecomposition(CrossingMatrix(tuple(map(tuple, s))), rm)


@dataclass(frozen=True)
class SRPlusCheck:
    """Outcome of an SR+ membership test; truthy when the matrix is a member."""

    ok: bool
    reason: str | None = None
    where: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "in SR+"
        return self.reason if self.where is None else f"{self.reason} at {list(self.where)}"


def in_sr_plus(a: CrossingMatrix) -> SRPlusCheck:
    for i, row in enumerate(a.rows, start=1):
        for j, v in enumerate(row, start=1):
            if v < 0:
                return SRPlusCheck(False, "negative_entry", (i, j))
    try:
        sr_decompose(a)
    except SRDecompositionError as exc:
        return SRPlusCheck(False, exc.reason, exc.where)
    bad = t0_violation(a)
    if bad is not None:
        return SRPlusCheck(False, "not_t0", bad)
    return SRPlusCheck(True)


# --- tableaux ---------------------------------------------------------------

def format_cell(s: int, r: int) -> str:
    if s == 0 and r == 0:
        return "0"
    out = ""
    if s:
        out = "S" if s == 1 else "-S" if s == -1 else f"{s}S"
    if r:
        coef = "" if abs(r) == 1 else str(abs(r))
        sign = "-" if r < 0 else ("+" if out else "")
        out += f"{sign}{coef}R"
    return out


_CELL = re.compile(r"^(?:(?P<s>[+-]?\d*)S)?(?:(?P<r>[+-]?\d*)R)?$")


def _coef(text: str) -> int:
    if text in ("", "+"):
        return 1
    if text == "-":
        return -1
    return int(text)


def parse_cell(text: str) -> tuple[int, int]:
    text = text.strip().replace(" ", "")
    if text == "0":
        return (0, 0)
    m = _CELL.match(text)
    if not m or (m["s"] is None and m["r"] is None):
        raise MalformedInput(f"malformed tableau cell {text!r}")
    if m["s"] is not None and m["r"] is not None and m["r"][:1] not in ("+", "-"):
        raise MalformedInput(f"malformed tableau cell {text!r}")
    s = _coef(m["s"]) if m["s"] is not None else 0
    r = _coef(m["r"]) if m["r"] is not None else 0
    return (s, r)


@dataclass(frozen=True)
class Tableau:
    """Above-diagonal ``(s, r)`` cells in row-major order."""

    n: int
    cells: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.cells) != self.n * (self.n - 1) // 2:
            raise MalformedInput(f"{len(self.cells)} cells do not fit an {self.n}x{self.n} tableau")

    @classmethod
    def of(cls, a: CrossingMatrix) -> Tableau:
        return cls(a.n, tuple(sr_parts(a)))

    def cell(self, i: int, j: int) -> tuple[int, int]:
        # offset of row i in row-major upper-triangular storage
        n = self.n
        start = (i - 1) * n - (i - 1) * i // 2
        return self.cells[start + (j - i - 1)]

    def labels(self) -> list[str]:
        return [format_cell(s, r) for s, r in self.cells]

    def render(self) -> str:
        labels = iter(self.labels())
        lines = ["|".join(next(labels) for _ in range(self.n - i)) for i in range(1, self.n)]
        return "\n".join(lines)

    def to_matrix(self) -> CrossingMatrix:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        cells = iter(self.cells)
        for i in range(n):
            for j in range(i + 1, n):
                s, r = next(cells)
                rows[j][i] = s
                rows[i][j] = s + r
        return CrossingMatrix(tuple(map(tuple, rows)))


def tableau_render(a: CrossingMatrix, strict: bool = True) -> str:
    """Render the SR tableau of ``a``, one tableau row per line, cells joined by ``|``.

    In strict mode ``a`` must have an SR decomposition; otherwise raw cells
    are printed whatever their R coefficient.
    """
    if strict:
        sr_decompose(a)
    return Tableau.of(a).render()


def tableau_parse(text: str, n: int | None = None) -> CrossingMatrix:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if n is None:
        if not lines:
            raise MalformedInput("empty tableau; pass n explicitly for 1x1")
        n = len(lines) + 1
    if len(lines) != n - 1:
        raise MalformedInput(f"expected {n - 1} tableau rows, got {len(lines)}")
    cells = []
    for i, line in enumerate(lines, start=1):
        parts = line.split("|")
        if len(parts) != n - i:
            raise MalformedInput(f"tableau row {i} has {len(parts)} cells, expected {n - i}")
        cells.extend(parse_cell(p) for p in parts)
    return Tableau(n, tuple(cells)).to_matrix()


# --- configurations and mirrors ---------------------------------------------

def configuration(a: CrossingMatrix, idx: Sequence[int]) -> CrossingMatrix:
    idx = _check_index_set(idx, a.n)
    return CrossingMatrix(tuple(tuple(a.rows[i - 1][j - 1] for j in idx) for i in idx))


def mirror(a: CrossingMatrix) -> CrossingMatrix:
    """Flip ``a`` about its antidiagonal: entry ``(i, j)`` becomes ``a[m+1-j][m+1-i]``.

    This is the crossing matrix of the braid viewed from behind, so it maps
    crossing matrices of positive braids to crossing matrices of positive
    braids.
    """
    m = a.n
    return CrossingMatrix(tuple(
        tuple(a.rows[m - 1 - j][m - 1 - i] for j in range(m)) for i in range(m)
    ))
