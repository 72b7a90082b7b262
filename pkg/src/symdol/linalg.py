"""Dense exact linear algebra over the Gaussian rationals.

Matrices carry explicit shape so that zero-row / zero-column maps (which
arise at truncation and vacuum boundaries) compose correctly.  Ranks and
kernel dimensions come from fraction-exact Gaussian elimination; there is
no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .gaussian import GaussianRational, ZERO, ONE


@dataclass(frozen=True)
class Mat:
    nrows: int
    ncols: int
    rows: tuple[tuple[GaussianRational, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("column count mismatch")

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.rows[i][j]


def mat_from_rows(rows: Iterable[Iterable]) -> Mat:
    coerced = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in rows)
    nrows = len(coerced)
    ncols = len(coerced[0]) if nrows else 0
    return Mat(nrows, ncols, coerced)


def zeros(nrows: int, ncols: int) -> Mat:
    return Mat(nrows, ncols, tuple(tuple(ZERO for _ in range(ncols)) for _ in range(nrows)))


def identity(n: int) -> Mat:
    return Mat(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))


def scalar_matrix(n: int, value) -> Mat:
    value = GaussianRational.coerce(value)
    return Mat(n, n, tuple(tuple(value if i == j else ZERO for j in range(n)) for i in range(n)))


def mat_add(a: Mat, b: Mat) -> Mat:
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValueError("shape mismatch in mat_add")
    return Mat(a.nrows, a.ncols,
               tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))


def mat_sub(a: Mat, b: Mat) -> Mat:
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValueError("shape mismatch in mat_sub")
    return Mat(a.nrows, a.ncols,
               tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))


def mat_scale(a: Mat, c) -> Mat:
    c = GaussianRational.coerce(c)
    return Mat(a.nrows, a.ncols, tuple(tuple(c * x for x in row) for row in a.rows))


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Matrix product a @ b; inner dimension 0 yields the zero map."""
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch in mat_mul: {a.nrows}x{a.ncols} @ {b.nrows}x{b.ncols}")
    if a.ncols == 0:
        return zeros(a.nrows, b.ncols)
    out = []
    bt = list(zip(*b.rows))
    for row in a.rows:
        out.append(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt))
    return Mat(a.nrows, b.ncols, tuple(out))


def is_zero(a: Mat) -> bool:
    return all(not x for row in a.rows for x in row)


def rank(a: Mat) -> int:
    """Rank by exact row reduction."""
    if a.nrows == 0 or a.ncols == 0:
        return 0
    m = [list(row) for row in a.rows]
    r = 0
    for col in range(a.ncols):
        pivot = next((i for i in range(r, a.nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col]
        for i in range(r + 1, a.nrows):
            if m[i][col]:
                factor = m[i][col] / inv
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == a.nrows:
            break
    return r


def kernel_dimension(a: Mat) -> int:
    return a.ncols - rank(a)


def scalar_identity_value(a: Mat) -> Optional[GaussianRational]:
    """Return c if a == c*I, else None.  0x0 matrices count as 0*I."""
    if a.nrows != a.ncols:
        return None
    if a.nrows == 0:
        return ZERO
    c = a.rows[0][0]
    for i in range(a.nrows):
        for j in range(a.ncols):
            expected = c if i == j else ZERO
            if a.rows[i][j] != expected:
                return None
    return c
