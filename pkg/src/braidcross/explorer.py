"""
Experiments on positive realizability of symmetric matrices.

Covers the 4-strand sweep (symmetric 4x4 matrices are positively realizable
exactly when T0), symmetrizations of permutation braids, fully supported
positions and probes of the adjacency conjecture for them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .division import (
    Realizable,
    SearchConfig,
    SearchMode,
    classify,
)
from .errors import PreconditionError
from .matrices import CrossingMatrix, is_t0, r_matrix, sym_matrix
from .oracle import enumerate_symmetric_t0
from .permutations import Permutation, inverse
from .words import BraidWord, crossing_matrix, permutation_braid_word, strand_positions


@dataclass
class T04Report:
    max_entry: int
    checked: int = 0
    realizable: int = 0
    unrealizable_t0: list[CrossingMatrix] = field(default_factory=list)
    realizable_non_t0: list[CrossingMatrix] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unrealizable_t0 and not self.realizable_non_t0

    def to_json(self) -> dict:
        return {
            "max_entry": self.max_entry,
            "checked": self.checked,
            "realizable": self.realizable,
            "unrealizable_t0": [a.to_json() for a in self.unrealizable_t0],
            "realizable_non_t0": [a.to_json() for a in self.realizable_non_t0],
            "ok": self.ok,
        }


def verify_t04(max_entry: int, cfg: SearchConfig | None = None) -> T04Report:
    """Classify every symmetric T0 4x4 matrix with entries up to ``max_entry``."""
    if not 0 <= max_entry <= 3:
        raise PreconditionError([f"max_entry={max_entry} outside 0..3"])
    cfg = cfg or SearchConfig(mode=SearchMode.FIRST)
    report = T04Report(max_entry)
    for a in enumerate_symmetric_t0(4, max_entry):
        report.checked += 1
        verdict = classify(a, cfg)
        if isinstance(verdict, Realizable):
            report.realizable += 1
            if not is_t0(a):
                report.realizable_non_t0.append(a)
        else:
            report.unrealizable_t0.append(a)
    return report


def symmetrization_word(p: Permutation) -> BraidWord:
    return permutation_braid_word(p) + permutation_braid_word(inverse(p))


def verify_symmetrization(p: Permutation) -> bool:
    r = r_matrix(p)
    return crossing_matrix(symmetrization_word(p)) == r + r.transpose()


def fully_supported_positions(a: CrossingMatrix) -> list[tuple[int, int]]:
    if not a.is_symmetric():
        raise PreconditionError(["matrix is not symmetric"])
    n = a.n
    rows = a.rows
    return [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if all(rows[i][k] or rows[k][j] for k in range(i + 1, j))
    ]


def adjacency_prefix(w: BraidWord, i: int, j: int) -> int | None:
    """Length of the shortest prefix of ``w`` after which strands ``i`` and ``j`` sit side by side."""
    for length, at in enumerate(strand_positions(w)):
        pi, pj = at.index(i - 1), at.index(j - 1)
        if abs(pi - pj) == 1:
            return length
    return None


@dataclass(frozen=True)
class ProbeReport:
    matrix: CrossingMatrix
    position: tuple[int, int]
    base_realizable: bool
    augmented_realizable: bool
    adjacency_witness: BraidWord | None = None
    witnesses_scanned: int = 0

    @property
    def augmented(self) -> CrossingMatrix:
        i, j = self.position
        return self.matrix + sym_matrix(self.matrix.n, i, j)

    @property
    def is_counterexample(self) -> bool:
        return self.base_realizable and not self.augmented_realizable

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix.to_json(),
            "position": list(self.position),
            "verdict": "counterexample" if self.is_counterexample else "consistent",
            "base_realizable": self.base_realizable,
            "augmented_realizable": self.augmented_realizable,
            "adjacency_witness": None if self.adjacency_witness is None else str(self.adjacency_witness),
            "witnesses_scanned": self.witnesses_scanned,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def probe_conjecture(a: CrossingMatrix, i: int, j: int, max_witnesses: int | None = 10_000,
                     budget: int | None = None) -> ProbeReport:
    """Test whether raising the zero entry at a fully supported ``(i, j)`` to one keeps ``a`` realizable.

    Also scans up to ``max_witnesses`` realizations of ``a`` for one in which
    strands ``i`` and ``j`` become adjacent.
    """
    problems = []
    n = a.n
    if not a.is_symmetric():
        problems.append("matrix is not symmetric")
    if not 1 <= i < j <= n:
        problems.append(f"position ({i},{j}) needs 1 <= i < j <= {n}")
    else:
        if a.entry(i, j) != 0:
            problems.append(f"entry ({i},{j}) is {a.entry(i, j)}, not 0")
        if a.is_symmetric() and (i, j) not in fully_supported_positions(a):
            problems.append(f"position ({i},{j}) is not fully supported")
    extra = {} if budget is None else {"budget": budget}
    base = None
    if not problems:
        base = classify(a, SearchConfig(mode=SearchMode.ALL, max_witnesses=max_witnesses, **extra))
        if not isinstance(base, Realizable):
            problems.append("matrix is not positively realizable")
    if problems:
        raise PreconditionError(problems)

    adjacency = None
    for w in base.witnesses:
        if adjacency_prefix(w, i, j) is not None:
            adjacency = w
            break
    augmented = a + sym_matrix(n, i, j)
    aug = classify(augmented, SearchConfig(mode=SearchMode.FIRST, **extra))
    return ProbeReport(a, (i, j), True, isinstance(aug, Realizable), adjacency, len(base.witnesses))


def probe_all(a: CrossingMatrix, **kwargs) -> Iterator[ProbeReport]:
    """Probe every zero fully supported position of ``a``."""
    for i, j in fully_supported_positions(a):
        if a.entry(i, j) == 0:
            yield probe_conjecture(a, i, j, **kwargs)


def probe_sweep(n: int, max_entry: int, **kwargs) -> Iterator[ProbeReport]:
    """Probe all realizable symmetric T0 matrices of the given size."""
    for a in enumerate_symmetric_t0(n, max_entry):
        if not isinstance(classify(a), Realizable):
            continue
        yield from probe_all(a, **kwargs)
