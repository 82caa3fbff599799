"""Validated production datasets and per-unit ratio tables.

Everything downstream reduces to two vectors per reference unit: for each
peer j, the worst input ratio ``alpha[j]`` (how much every input of the
reference must be inflated before j's inputs fit inside) and the worst
output ratio ``beta[j]`` (how far every output of the reference can be
inflated while staying below j's outputs). This module owns the dataset
container, the scaling-regime and tolerance types, and the ratio table.

Arithmetic is duck-typed. Datasets may hold floats (the default) or
``fractions.Fraction`` entries (exact mode); every operation in the
package runs unchanged on either, so exact cross-checks exercise the same
code as the fast path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    DuplicateNameError,
    EmptyDatasetError,
    IndexOutOfRangeError,
    NonpositiveValueError,
    RaggedRowsError,
)

Numeric = Union[int, float, Fraction]


class Delta(Enum):
    """Scaling regime: which multiples of an observed unit the technology admits."""

    VRS = "vrs"  # scaling factor fixed at 1
    CRS = "crs"  # any nonnegative factor
    NIRS = "nirs"  # factor in [0, 1]
    NDRS = "ndrs"  # factor >= 1

    @property
    def bounds(self) -> tuple[int, int | None]:
        """Closed feasible interval for the scaling factor, ``None`` = unbounded."""
        return _DELTA_BOUNDS[self]


_DELTA_BOUNDS: dict[Delta, tuple[int, int | None]] = {
    Delta.VRS: (1, 1),
    Delta.CRS: (0, None),
    Delta.NIRS: (0, 1),
    Delta.NDRS: (1, None),
}


class Orientation(Enum):
    """Direction of a radial efficiency measurement."""

    INPUT = "input"
    OUTPUT = "output"


@dataclass(frozen=True)
class Tolerance:
    """Epsilon used by classification thresholds.

    Geometry (membership, dominance, scores) is computed with exact
    comparisons; only classification layers (scale ratios, returns-to-scale
    classes, score-equality tests) consult this value.
    """

    eps: float = 1e-9

    def __post_init__(self) -> None:
        if not 0.0 < self.eps < 1e-3:
            raise ValueError(f"eps must lie in (0, 1e-3), got {self.eps!r}")


@dataclass(frozen=True)
class Dataset:
    """Immutable table of named units with positive inputs and outputs.

    Construct through :func:`validate_dataset`; the raw constructor performs
    no checking.
    """

    names: tuple[str, ...]
    inputs: tuple[tuple[Numeric, ...], ...]
    outputs: tuple[tuple[Numeric, ...], ...]

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return len(self.inputs[0])

    @property
    def s(self) -> int:
        return len(self.outputs[0])

    def unit(self, o: int) -> tuple[tuple[Numeric, ...], tuple[Numeric, ...]]:
        """Input and output vectors of unit ``o``."""
        check_index(self, o)
        return self.inputs[o], self.outputs[o]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise IndexOutOfRangeError(f"no unit named {name!r}") from None

    def as_exact(self) -> "Dataset":
        """Copy with every entry converted to an exact rational."""
        return Dataset(
            self.names,
            tuple(tuple(Fraction(v) for v in row) for row in self.inputs),
            tuple(tuple(Fraction(v) for v in row) for row in self.outputs),
        )

    def as_float(self) -> "Dataset":
        """Copy with every entry converted to a double."""
        return Dataset(
            self.names,
            tuple(tuple(float(v) for v in row) for row in self.inputs),
            tuple(tuple(float(v) for v in row) for row in self.outputs),
        )


def check_index(d: Dataset, o: int) -> None:
    if not isinstance(o, int) or not 0 <= o < d.n:
        raise IndexOutOfRangeError(f"unit index {o!r} outside 0..{d.n - 1}")


def _positive_finite(v: Numeric) -> bool:
    if isinstance(v, float) and not math.isfinite(v):
        return False
    try:
        return v > 0
    except TypeError:
        return False


def validate_dataset(
    names: Sequence[str],
    inputs: Sequence[Sequence[Numeric]],
    outputs: Sequence[Sequence[Numeric]],
) -> Dataset:
    """Check and freeze a parsed table.

    Raises:
        EmptyDatasetError: no rows, or a unit with no inputs or no outputs.
        RaggedRowsError: row counts or row lengths disagree.
        DuplicateNameError: repeated unit name.
        NonpositiveValueError: an entry is not a positive finite number.
    """
    names = tuple(str(x) for x in names)
    rows_x = tuple(tuple(row) for row in inputs)
    rows_y = tuple(tuple(row) for row in outputs)
    if len(names) == 0:
        raise EmptyDatasetError("dataset has no units")
    if len(rows_x) != len(names) or len(rows_y) != len(names):
        raise RaggedRowsError(
            f"{len(names)} names but {len(rows_x)} input rows and {len(rows_y)} output rows"
        )
    m = len(rows_x[0])
    s = len(rows_y[0])
    if m == 0:
        raise EmptyDatasetError("units must consume at least one input")
    if s == 0:
        raise EmptyDatasetError("units must produce at least one output")
    for k, (rx, ry) in enumerate(zip(rows_x, rows_y)):
        if len(rx) != m or len(ry) != s:
            raise RaggedRowsError(f"row {k} ({names[k]!r}) has inconsistent arity")
        for v in (*rx, *ry):
            if not _positive_finite(v):
                raise NonpositiveValueError(
                    f"unit {names[k]!r} has non-positive entry {v!r}"
                )
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise DuplicateNameError(f"duplicate unit name {name!r}")
        seen.add(name)
    return Dataset(names, rows_x, rows_y)


@dataclass(frozen=True)
class RatioTable:
    """Worst input and output ratios of every unit against one reference.

    ``alpha[j]`` is the max over input dimensions of ``x[j]/x[o]``,
    ``beta[j]`` the min over output dimensions of ``y[j]/y[o]``. Both are 1
    at the reference itself.
    """

    reference: int
    alpha: tuple[Numeric, ...]
    beta: tuple[Numeric, ...]


def ratio_table(d: Dataset, o: int) -> RatioTable:
    """Ratio table of dataset ``d`` against reference unit ``o``."""
    check_index(d, o)
    xo, yo = d.inputs[o], d.outputs[o]
    alpha = tuple(max(xj / xr for xj, xr in zip(row, xo)) for row in d.inputs)
    beta = tuple(min(yj / yr for yj, yr in zip(row, yo)) for row in d.outputs)
    return RatioTable(o, alpha, beta)
