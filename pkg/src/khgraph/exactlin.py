"""Exact sparse linear algebra over the rationals.

Ranks are computed by fraction-free elimination on integer rows: rational
matrices are first scaled row-by-row to integers, which does not change rank.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple

from .errors import ComplexIntegrityError, ContractError

Entry = Tuple[int, int]


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable sparse matrix with exact rational entries.

    ``entries`` maps ``(row, col)`` to a nonzero ``int`` or ``Fraction``.
    """

    row_count: int
    col_count: int
    entries: Mapping[Entry, Rational] = field(default_factory=dict)

    def __post_init__(self):
        if self.row_count < 0 or self.col_count < 0:
            raise ContractError("matrix dimensions must be nonnegative")
        clean: Dict[Entry, Rational] = {}
        for (r, c), v in dict(self.entries).items():
            if not (0 <= r < self.row_count and 0 <= c < self.col_count):
                raise ContractError(f"entry ({r}, {c}) outside {self.row_count}x{self.col_count}")
            if isinstance(v, bool) or not isinstance(v, Rational):
                raise ContractError(f"entry ({r}, {c}) is not an exact rational: {v!r}")
            if v == 0:
                raise ContractError(f"entry ({r}, {c}) stores an explicit zero")
            clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, rows: Iterable[Iterable[Rational]], col_count: int | None = None) -> "SparseMatrix":
        rows = [list(r) for r in rows]
        ncols = col_count if col_count is not None else (len(rows[0]) if rows else 0)
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ContractError("ragged dense matrix")
            for j, v in enumerate(row):
                if v != 0:
                    entries[(i, j)] = v
        return cls(len(rows), ncols, entries)

    @classmethod
    def zeros(cls, row_count: int, col_count: int) -> "SparseMatrix":
        return cls(row_count, col_count, {})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.row_count, self.col_count)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.col_count, self.row_count,
                            {(c, r): v for (r, c), v in self.entries.items()})

    def to_dense(self) -> list:
        out = [[0] * self.col_count for _ in range(self.row_count)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def rows(self) -> Dict[int, Dict[int, Rational]]:
        out: Dict[int, Dict[int, Rational]] = {}
        for (r, c), v in self.entries.items():
            out.setdefault(r, {})[c] = v
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.col_count != other.row_count:
            raise ContractError(f"cannot multiply {self.shape} by {other.shape}")
        other_rows = other.rows()
        acc: Dict[Entry, Rational] = {}
        for (r, k), v in self.entries.items():
            for c, w in other_rows.get(k, {}).items():
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return SparseMatrix(self.row_count, other.col_count,
                            {rc: v for rc, v in acc.items() if v != 0})

    def is_zero(self) -> bool:
        return not self.entries


def _integer_rows(m: SparseMatrix) -> list:
    rows = []
    for row in m.rows().values():
        den = 1
        for v in row.values():
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        rows.append({c: int(v * den) for c, v in row.items()})
    return rows


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def _peel_singletons(rows: list) -> Tuple[list, int]:
    """Drop rows that own a column nobody else touches; each one adds 1 to the rank."""
    col_rows: Dict[int, set] = {}
    for k, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(k)
    alive = set(range(len(rows)))
    stack = [c for c, rs in col_rows.items() if len(rs) == 1]
    rank = 0
    while stack:
        c = stack.pop()
        rs = col_rows.get(c)
        if not rs or len(rs) != 1:
            continue
        (k,) = rs
        alive.discard(k)
        rank += 1
        for c2 in rows[k]:
            s = col_rows[c2]
            s.discard(k)
            if len(s) == 1:
                stack.append(c2)
    return [rows[k] for k in sorted(alive)], rank


def rank_exact(m: SparseMatrix) -> int:
    """Rank of ``m`` over Q.

    Rows are reduced one at a time against an echelon basis keyed by leading
    column; each elimination step is ``p*row - row[c]*pivot``, followed by
    division by the row content, so entries stay integral and small.
    """
    if m.row_count == 0 or m.col_count == 0 or not m.entries:
        return 0
    rows, rank = _peel_singletons(_integer_rows(m))
    # Short rows first keeps fill-in down on cube differentials.
    rows.sort(key=len)
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            a, b = piv[lead], row[lead]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
        if rank + len(pivots) == min(m.row_count, m.col_count):
            break
    return rank + len(pivots)


def homology_dim(d_out: SparseMatrix, d_in: SparseMatrix) -> int:
    """Dimension of ker(d_out) / im(d_in) at a middle space of dimension n.

    ``d_in`` is ``n x a`` (maps into the space), ``d_out`` is ``b x n``.
    Raises ``ComplexIntegrityError`` if ``d_out @ d_in`` is nonzero.
    """
    n = d_out.col_count
    if d_in.row_count != n:
        raise ContractError(
            f"middle dimension mismatch: d_out has {n} columns, d_in has {d_in.row_count} rows")
    if not (d_out @ d_in).is_zero():
        raise ComplexIntegrityError("d_out . d_in != 0")
    return n - rank_exact(d_out) - rank_exact(d_in)
