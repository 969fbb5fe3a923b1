"""Semi-standard skew Young tableaux and their pattern correspondence.

An integer pattern with nonnegative rows encodes a chain of nested
partitions; recording, for each cell, the first chain index covering it
yields a semi-standard skew tableau of shape ``outer / inner`` whose content
is the right-minus-left boundary of any integrating array.  Rows are
1-indexed top-down and columns 1-indexed left-right.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import ConvexConfig, GTPattern, InputError


@dataclass(frozen=True)
class SkewTableau:
    """Filling of the cells of ``outer`` outside ``inner``.

    ``rows[r-1]`` lists the entries of row ``r`` left to right, occupying
    columns ``inner_r + 1 .. outer_r``.  Entries weakly increase along rows,
    strictly increase down columns, and lie in ``1..n`` where
    ``n = len(outer) - len(inner)``.
    """

    outer: tuple
    inner: tuple
    rows: tuple

    def __post_init__(self):
        outer = tuple(self.outer)
        inner = tuple(self.inner)
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)
        for name, part in (("outer", outer), ("inner", inner)):
            if any(not isinstance(v, int) or v < 0 for v in part):
                raise InputError(f"{name} shape must be a nonnegative integer partition")
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise InputError(f"{name} shape must be weakly decreasing")
        if len(inner) > len(outer):
            raise InputError("inner shape has more rows than outer")
        pad = inner + (0,) * (len(outer) - len(inner))
        if any(pad[r] > outer[r] for r in range(len(outer))):
            raise InputError("inner shape must fit inside outer")
        if len(rows) != len(outer):
            raise InputError("one entry row per outer part required")
        n = len(outer) - len(inner)
        for r, row in enumerate(rows):
            if len(row) != outer[r] - pad[r]:
                raise InputError(f"row {r + 1} must hold {outer[r] - pad[r]} entries")
            if any(not isinstance(v, int) or not 1 <= v <= n for v in row):
                raise InputError(f"entries must be integers in 1..{n}")
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise InputError(f"row {r + 1} must be weakly increasing")
        for r in range(1, len(outer)):
            for col in range(pad[r] + 1, outer[r] + 1):
                if pad[r - 1] < col <= outer[r - 1]:
                    upper = rows[r - 1][col - pad[r - 1] - 1]
                    lower = rows[r][col - pad[r] - 1]
                    if upper >= lower:
                        raise InputError(f"column {col} must strictly increase downward")

    def entry(self, r: int, col: int) -> int:
        pad = self.inner[r - 1] if r <= len(self.inner) else 0
        return self.rows[r - 1][col - pad - 1]

    def to_json(self) -> dict:
        return {
            "outer": list(self.outer),
            "inner": list(self.inner),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SkewTableau":
        try:
            return cls(tuple(data["outer"]), tuple(data["inner"]), tuple(map(tuple, data["rows"])))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed tableau JSON: {exc}") from exc


def _padded_chain(p: GTPattern):
    """Pattern rows as nested partitions, padded with zeros to full length."""
    c = p.config
    if not c.is_trapezoidal:
        raise InputError("tableaux correspond to trapezoidal patterns")
    n, m = c.n, c.m
    width = n + m
    chain = []
    for i in range(n + 1):
        row = p.rows[i]
        if any(not isinstance(v, int) for v in row):
            raise InputError("tableaux need an integer pattern")
        if any(v < 0 for v in row):
            raise InputError("tableaux need nonnegative pattern rows; shift first")
        chain.append(tuple(row) + (0,) * (width - len(row)))
    return chain, n, m


def pattern_to_tableau(p: GTPattern) -> SkewTableau:
    """Tableau whose entry at each cell is the first chain index covering it.

    Row ``i`` of the pattern is a partition; consecutive rows are nested, and
    the cells added at step ``i`` all receive entry ``i``.  The content of
    the result is the right boundary of the pattern integrated with zero
    left boundary.
    """
    chain, n, m = _padded_chain(p)
    for i in range(n):
        if any(chain[i][r] > chain[i + 1][r] for r in range(n + m)):
            raise InputError("pattern rows are not nested partitions")
    outer = chain[n]
    inner = chain[0][:m]
    pad = inner + (0,) * n
    rows = []
    for r in range(n + m):
        row = []
        for col in range(pad[r] + 1, outer[r] + 1):
            i = next(i for i in range(1, n + 1) if chain[i][r] >= col)
            row.append(i)
        rows.append(tuple(row))
    return SkewTableau(outer, inner, tuple(rows))


def tableau_to_pattern(t: SkewTableau) -> GTPattern:
    """The pattern whose row ``i`` is the region occupied by entries ``<= i``
    together with the inner shape; inverse of ``pattern_to_tableau``."""
    m = len(t.inner)
    n = len(t.outer) - m
    if n < 0:
        raise InputError("outer shape needs at least as many rows as inner")
    pad = t.inner + (0,) * n
    rows = []
    for i in range(n + 1):
        full = []
        for r in range(n + m):
            count = sum(1 for v in t.rows[r] if v <= i)
            full.append(pad[r] + count)
        if any(v != 0 for v in full[i + m :]):
            raise InputError(f"entries below row {i + m} are too small for a pattern")
        rows.append(tuple(full[: i + m]))
    return GTPattern(ConvexConfig.trapezoid(n, m), tuple(rows))


def content(t: SkewTableau) -> tuple:
    """How many times each entry ``1..n`` occurs."""
    n = len(t.outer) - len(t.inner)
    counts = [0] * n
    for row in t.rows:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)
