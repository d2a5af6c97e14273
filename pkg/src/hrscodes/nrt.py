"""The NRT weight and distance on s x r matrices over GF(p).

A column's weight is s - i + 1 where i is the 1-based index of its topmost
nonzero entry (0 for a zero column); a matrix weighs the sum of its column
weights.  Codewords, received words and error patterns all live here.
"""

import numpy as np

from .errors import ParameterError
from .field import PrimeField


class NrtMatrix:
    """An s x r matrix over a prime field, entries reduced into [0, p).

    The backing array is frozen after construction; arithmetic returns new
    instances.  Row 1 (index 0) is the order-0 derivative row.
    """

    __slots__ = ("field", "entries")

    def __init__(self, field: PrimeField, entries):
        a = np.array(entries, dtype=field.dtype)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise ParameterError(f"expected a non-empty 2-D matrix, got shape {a.shape}")
        a %= field.p
        a.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", a)

    def __setattr__(self, name, value):
        raise AttributeError("NrtMatrix is immutable")

    @classmethod
    def zeros(cls, field: PrimeField, s: int, r: int):
        return cls(field, np.zeros((s, r), dtype=field.dtype))

    @property
    def s(self) -> int:
        return self.entries.shape[0]

    @property
    def r(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def to_lists(self) -> list[list[int]]:
        """Rows as plain lists of ints (row 1 first)."""
        return [[int(x) for x in row] for row in self.entries]

    def _check(self, other):
        if not isinstance(other, NrtMatrix):
            raise TypeError(f"expected NrtMatrix, got {type(other).__name__}")
        self.field.require_same(other.field)
        if self.shape != other.shape:
            raise ParameterError(
                f"shape mismatch: {self.shape} vs {other.shape}"
            )

    def __eq__(self, other):
        return (
            isinstance(other, NrtMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.all(self.entries == other.entries))
        )

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        return NrtMatrix(self.field, (self.entries + other.entries) % self.field.p)

    def __sub__(self, other):
        self._check(other)
        return NrtMatrix(self.field, (self.entries - other.entries) % self.field.p)

    def __neg__(self):
        return NrtMatrix(self.field, (-self.entries) % self.field.p)

    def __repr__(self):
        return f"NrtMatrix({self.to_lists()}, p={self.field.p})"


def column_weight(col, s: int | None = None) -> int:
    """NRT weight of one length-s column: s - i + 1 at topmost nonzero row i."""
    col = list(col)
    if s is None:
        s = len(col)
    elif len(col) != s:
        raise ParameterError(f"column has length {len(col)}, expected {s}")
    for idx, c in enumerate(col):
        if c != 0:
            return s - idx
    return 0


def column_weights(entries: np.ndarray) -> np.ndarray:
    """Vector of per-column NRT weights of a 2-D array (no field needed)."""
    s = entries.shape[0]
    nonzero = entries != 0
    # argmax finds the first True per column; all-zero columns weigh 0.
    top = np.argmax(nonzero, axis=0)
    return np.where(nonzero.any(axis=0), s - top, 0)


def nrt_weight(a: NrtMatrix) -> int:
    """Sum of the NRT weights of all columns."""
    return int(column_weights(a.entries).sum())


def nrt_distance(a: NrtMatrix, b: NrtMatrix) -> int:
    """d_N(A, B) = weight of A - B; requires equal shapes and moduli."""
    a._check(b)
    return nrt_weight(a - b)
