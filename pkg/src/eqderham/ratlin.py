"""Exact sparse linear algebra over the rationals.

Ranks, kernels and quotient-space representatives, all computed through one
canonical primitive: integer row reduction to reduced echelon form (see
``_rref_py`` / ``_rref.pyx``).  The RREF of a matrix is unique, so every
result here is deterministic and bit-identical across backends and runs.

``Rat`` is :class:`fractions.Fraction`: arbitrary-precision numerator,
positive denominator, always reduced — exactly the invariants we need.
"""

from fractions import Fraction
from math import lcm

from ._backend import backend_name, rref_primitive
from .errors import DimensionMismatchError, InvalidComplexError

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

__all__ = [
    "Rat",
    "rat",
    "RatMatrix",
    "rank",
    "kernel_basis",
    "quotient_basis",
    "rref",
    "solve_columns",
    "backend_name",
]


def rat(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


class RatMatrix:
    """Sparse exact-rational matrix: {(row, col): nonzero Fraction}."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise DimensionMismatchError(f"entry ({i},{j}) outside {nrows}x{ncols}")
                v = rat(v)
                if v:
                    self.entries[(i, j)] = v

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise DimensionMismatchError("ragged rows")
            for j, v in enumerate(r):
                if v:
                    entries[(i, j)] = rat(v)
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_columns(cls, cols, nrows):
        entries = {}
        for j, c in enumerate(cols):
            if isinstance(c, dict):
                for i, v in c.items():
                    if v:
                        entries[(i, j)] = rat(v)
            else:
                if len(c) != nrows:
                    raise DimensionMismatchError("column length mismatch")
                for i, v in enumerate(c):
                    if v:
                        entries[(i, j)] = rat(v)
        return cls(nrows, len(cols), entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): ONE for i in range(n)})

    def __getitem__(self, key):
        return self.entries.get(key, ZERO)

    def __eq__(self, other):
        return (
            isinstance(other, RatMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"RatMatrix({self.nrows}x{self.ncols}, {len(self.entries)} entries)"

    def dense_rows(self):
        rows = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def mat_vec(self, v):
        if len(v) != self.ncols:
            raise DimensionMismatchError("vector length != ncols")
        out = [ZERO] * self.nrows
        for (i, j), a in self.entries.items():
            if v[j]:
                out[i] += a * v[j]
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatchError("inner dimensions differ")
        by_row = {}
        for (i, k), a in self.entries.items():
            by_row.setdefault(k, []).append((i, a))
        entries = {}
        for (k, j), b in other.entries.items():
            for i, a in by_row.get(k, ()):
                key = (i, j)
                s = entries.get(key, ZERO) + a * b
                if s:
                    entries[key] = s
                elif key in entries:
                    del entries[key]
        return RatMatrix(self.nrows, other.ncols, entries)

    def __add__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("shape mismatch")
        entries = dict(self.entries)
        for key, v in other.entries.items():
            s = entries.get(key, ZERO) + v
            if s:
                entries[key] = s
            elif key in entries:
                del entries[key]
        return RatMatrix(self.nrows, self.ncols, entries)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        c = rat(scalar)
        return RatMatrix(
            self.nrows, self.ncols, {k: c * v for k, v in self.entries.items()} if c else {}
        )

    def scale_columns(self, vec):
        entries = {}
        for (i, j), v in self.entries.items():
            w = v * vec[j]
            if w:
                entries[(i, j)] = w
        return RatMatrix(self.nrows, self.ncols, entries)

    def is_zero(self):
        return not self.entries


def vstack(mats):
    """Stack matrices with equal column counts on top of each other."""
    mats = list(mats)
    ncols = mats[0].ncols if mats else 0
    entries = {}
    offset = 0
    for m in mats:
        if m.ncols != ncols:
            raise DimensionMismatchError("column counts differ")
        for (i, j), v in m.entries.items():
            entries[(offset + i, j)] = v
        offset += m.nrows
    return RatMatrix(offset, ncols, entries)


def _scaled_int_rows(rows):
    """Clear denominators row by row; row scaling preserves the row space."""
    out = []
    for r in rows:
        denom = lcm(*(f.denominator for f in r)) if r else 1
        out.append([int(f * denom) for f in r])
    return out


def rref(rows):
    """Rational reduced row echelon form of a list of Fraction rows.

    Returns ``(reduced_rows, pivot_columns)`` with unit pivots; the result
    is the unique RREF of the row span.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    reduced, pivots = rref_primitive(_scaled_int_rows(rows), ncols)
    out = []
    for row, p in zip(reduced, pivots):
        pv = row[p]
        out.append([Fraction(x, pv) for x in row])
    return out, pivots


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals."""
    return len(rref(m.dense_rows())[1])


def kernel_basis(m: RatMatrix):
    """Deterministic basis of ker(m); length = ncols - rank(m)."""
    reduced, pivots = rref(m.dense_rows())
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.ncols
        v[free] = ONE
        for r, p in enumerate(pivots):
            if reduced[r][free]:
                v[p] = -reduced[r][free]
        basis.append(tuple(v))
    return basis


class _Reducer:
    """Incremental reduction against a growing RREF basis."""

    def __init__(self, vectors=()):
        self.rows = []
        self.pivots = []
        for v in vectors:
            self.add(v)

    def reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] -= c * x
        return v

    def add(self, v):
        """Reduce v; if nonzero, normalize to unit leading entry and insert.

        Returns the inserted row or None if v was dependent.
        """
        v = self.reduce(v)
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            return None
        inv = ONE / v[lead]
        v = [x * inv for x in v]
        # clear the new pivot from existing rows to stay fully reduced
        for idx, row in enumerate(self.rows):
            c = row[lead]
            if c:
                self.rows[idx] = [x - c * y for x, y in zip(row, v)]
        k = 0
        while k < len(self.pivots) and self.pivots[k] < lead:
            k += 1
        self.rows.insert(k, v)
        self.pivots.insert(k, lead)
        return tuple(v)

    @property
    def rank(self):
        return len(self.rows)


def quotient_basis(cycles, boundaries):
    """Dimension and representatives of span(cycles)/span(boundaries).

    Representatives are cycles fully reduced against the boundaries and
    against each other, normalized to unit leading coefficient; determinism
    follows from the RREF normal form and the input order of the cycles.
    Raises InvalidComplexError if the boundaries do not lie in the span of
    the cycles.
    """
    cycles = [tuple(c) for c in cycles]
    boundaries = [tuple(b) for b in boundaries]
    cycle_red = _Reducer(cycles)
    for b in boundaries:
        if any(cycle_red.reduce(b)):
            raise InvalidComplexError("boundary outside the span of the cycles")
    red = _Reducer(boundaries)
    boundary_rank = red.rank
    reps = []
    for c in cycles:
        inserted = red.add(c)
        if inserted is not None:
            reps.append(inserted)
    dim = cycle_red.rank - boundary_rank
    assert dim == len(reps)
    return dim, reps


def solve_columns(m: RatMatrix, b):
    """Deterministic x with m @ x = b (free variables 0), or None."""
    if len(b) != m.nrows:
        raise DimensionMismatchError("rhs length != nrows")
    rows = m.dense_rows()
    aug = [row + [rat(v)] for row, v in zip(rows, b)]
    if not aug:
        return tuple()
    reduced, pivots = rref(aug)
    x = [ZERO] * m.ncols
    for row, p in zip(reduced, pivots):
        if p == m.ncols:
            return None  # inconsistent system
        x[p] = row[m.ncols]
    return tuple(x)
