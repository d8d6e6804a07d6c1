"""Exception types shared across the package.

Each exception carries a short machine-readable ``code`` used by the CLI when
reporting errors as JSON.
"""

from __future__ import annotations


class BraidCrossError(Exception):
    code = "error"


class DimensionError(BraidCrossError, ValueError):
    code = "dimension_mismatch"


class MalformedInput(BraidCrossError, ValueError):
    code = "malformed_input"


class ORSetError(BraidCrossError, ValueError):
    """A pair set fails one of the two order-reversal closure conditions.

    ``condition`` is 1 or 2 and ``triple`` is the offending ``(i, k, j)``
    with ``i < k < j``.
    """

    code = "not_an_or_set"

    def __init__(self, condition: int, triple: tuple[int, int, int]):
        i, k, j = triple
        if condition == 1:
            msg = f"condition 1 fails at {triple}: ({i},{j}) present but neither ({i},{k}) nor ({k},{j})"
        else:
            msg = f"condition 2 fails at {triple}: ({i},{k}) and ({k},{j}) present but not ({i},{j})"
        super().__init__(msg)
        self.condition = condition
        self.triple = triple


class NotAPermutation(BraidCrossError, ValueError):
    code = "not_a_permutation"

    def __init__(self, images: tuple[int, ...], value: int):
        super().__init__(f"row/column sums give {list(images)}; value {value} collides or is out of range")
        self.images = images
        self.value = value


class SRDecompositionError(BraidCrossError, ValueError):
    """No SR decomposition exists.

    ``reason`` is one of ``r_not_zero_one`` (``where`` is a cell),
    ``r_not_t0`` or ``r_not_t1`` (``where`` is a triple ``(i, k, j)``).
    """

    code = "no_sr_decomposition"

    def __init__(self, reason: str, where: tuple[int, ...]):
        super().__init__(f"{reason} at {where}")
        self.reason = reason
        self.where = where


class NotSubordinate(BraidCrossError, ValueError):
    code = "not_subordinate"


class NotInSRPlusError(BraidCrossError, ValueError):
    code = "not_in_sr_plus"


class Indeterminate(BraidCrossError, RuntimeError):
    """The search exceeded its node budget before reaching a verdict."""

    code = "indeterminate"

    def __init__(self, budget: int):
        super().__init__(f"search exceeded node budget of {budget}")
        self.budget = budget


class PreconditionError(BraidCrossError, ValueError):
    code = "precondition"

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems
