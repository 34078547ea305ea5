"""Partitions, rows, skew shapes, horizontal strips and multiskew partitions.

Conventions: cells are ``(i, j)`` pairs, 1-indexed, with row 1 drawn at the
bottom. The content of a cell is ``j - i``. A row ``a/b`` is the one-row skew
shape with contents ``b, ..., a - 1``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

Partition = tuple[int, ...]


class ShapeError(ValueError):
    """Malformed shape or shape text."""


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[k] >= parts[k + 1] for k in range(len(parts) - 1)
    )


def as_partition(parts: Sequence[int]) -> Partition:
    """Sort a composition into a partition, dropping zeros."""
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def conjugate_partition(parts: Sequence[int]) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(parts[0]))


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in decreasing lexicographic order: ``(n), (n-1, 1), ...``."""
    if max_part is None:
        max_part = n
    if max_parts is None:
        max_parts = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when ``lam`` dominates ``mu`` (equal sizes assumed)."""
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


@dataclass(frozen=True, order=True)
class Row:
    """The one-row skew shape ``a/b``; empty rows are rejected."""

    a: int
    b: int

    def __post_init__(self):
        if self.b < 0 or self.a <= self.b:
            raise ShapeError(f"row {self.a}/{self.b} must satisfy a > b >= 0")

    @property
    def left(self) -> int:
        """Smallest content."""
        return self.b

    @property
    def right(self) -> int:
        """Largest content."""
        return self.a - 1

    @property
    def size(self) -> int:
        return self.a - self.b

    def __len__(self) -> int:
        return self.a - self.b

    @property
    def contents(self) -> range:
        return range(self.b, self.a)

    def shift(self) -> "Row":
        return Row(self.a + 1, self.b + 1)

    @classmethod
    def from_contents(cls, left: int, right: int) -> "Row":
        return cls(right + 1, left)

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"


def row_shift(row: Row) -> Row:
    """Shift a row one column to the right, ``a/b -> (a+1)/(b+1)``."""
    return row.shift()


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram ``outer/inner``; both are stored without trailing zeros."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = tuple(self.outer)
        inner = tuple(p for p in self.inner if p > 0)
        if not is_partition(outer) or not is_partition(inner):
            raise ShapeError(f"{outer}/{inner} is not a pair of partitions")
        if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
            raise ShapeError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def inner_part(self, i: int) -> int:
        return self.inner[i - 1] if i <= len(self.inner) else 0

    def outer_part(self, i: int) -> int:
        return self.outer[i - 1] if i <= len(self.outer) else 0

    def cells(self) -> list[tuple[int, int]]:
        """Cells in reading order: bottom row first, left to right."""
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner_part(i) + 1, self.outer[i - 1] + 1)
        ]

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_intervals(self) -> list[tuple[int, int]]:
        """Content interval ``(lo, hi)`` of every nonempty row, bottom to top."""
        out = []
        for i in range(1, len(self.outer) + 1):
            lo, hi = self.inner_part(i) + 1 - i, self.outer[i - 1] - i
            if lo <= hi:
                out.append((lo, hi))
        return out

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate_partition(self.outer), conjugate_partition(self.inner))

    def shift(self) -> "SkewShape":
        """Every cell moved one column right."""
        n = len(self.outer)
        return SkewShape(
            tuple(p + 1 for p in self.outer),
            tuple(self.inner_part(i) + 1 for i in range(1, n + 1)),
        )

    @property
    def is_straight(self) -> bool:
        return not self.inner

    @classmethod
    def from_row(cls, row: Row) -> "SkewShape":
        return cls((row.a,), (row.b,) if row.b else ())

    def as_row(self) -> Row | None:
        """The equivalent :class:`Row` when this shape is a single row."""
        if len(self.outer) == 1:
            return Row(self.outer[0], self.inner_part(1))
        return None

    def __str__(self) -> str:
        outer = ",".join(map(str, self.outer))
        inner = ",".join(map(str, self.inner))
        return f"({outer})/({inner})"


@dataclass(frozen=True)
class HorizontalStrip:
    """A tuple of rows ``(R_1, ..., R_n)``; ``R_1`` is drawn at the bottom."""

    rows: tuple[Row, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        if not rows:
            raise ShapeError("a horizontal strip needs at least one row")
        if not all(isinstance(r, Row) for r in rows):
            raise ShapeError("horizontal strip entries must be Row instances")
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, k):
        return self.rows[k]

    @property
    def size(self) -> int:
        return sum(r.size for r in self.rows)

    def replace(self, k: int, new_rows: Sequence[Row], count: int = 1) -> "HorizontalStrip":
        """Replace ``count`` rows starting at 0-based position ``k``."""
        return HorizontalStrip(self.rows[:k] + tuple(new_rows) + self.rows[k + count:])

    def to_multiskew(self) -> "Multiskew":
        return Multiskew(tuple(SkewShape.from_row(r) for r in self.rows))

    def __str__(self) -> str:
        return serialize_strip(self)

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "HorizontalStrip":
        return cls(tuple(Row(a, b) for a, b in pairs))


@dataclass(frozen=True)
class Multiskew:
    """A tuple of skew shapes."""

    shapes: tuple[SkewShape, ...]

    def __post_init__(self):
        shapes = tuple(self.shapes)
        if not shapes:
            raise ShapeError("a multiskew partition needs at least one shape")
        object.__setattr__(self, "shapes", shapes)

    def __len__(self) -> int:
        return len(self.shapes)

    def __iter__(self):
        return iter(self.shapes)

    def __getitem__(self, k):
        return self.shapes[k]

    @property
    def size(self) -> int:
        return sum(s.size() for s in self.shapes)

    def as_strip(self) -> HorizontalStrip | None:
        rows = [s.as_row() for s in self.shapes]
        if any(r is None for r in rows):
            return None
        return HorizontalStrip(tuple(rows))


ShapeLike = Union[HorizontalStrip, Multiskew]


def as_multiskew(m: ShapeLike) -> Multiskew:
    if isinstance(m, HorizontalStrip):
        return m.to_multiskew()
    if isinstance(m, Multiskew):
        return m
    raise TypeError(f"expected HorizontalStrip or Multiskew, got {type(m).__name__}")


def conjugate_multiskew(m: ShapeLike) -> Multiskew:
    """Conjugate every shape and reverse the tuple."""
    m = as_multiskew(m)
    return Multiskew(tuple(s.conjugate() for s in reversed(m.shapes)))


_ROW_RE = re.compile(r"^(\d+)/(\d+)$")


def parse_strip(text: str) -> HorizontalStrip:
    """Parse ``"4/0,5/2,2/0"``; whitespace is ignored."""
    cleaned = "".join(text.split())
    if not cleaned:
        raise ShapeError("empty strip text")
    rows = []
    for token in cleaned.split(","):
        match = _ROW_RE.match(token)
        if match is None:
            raise ShapeError(f"malformed row token {token!r}")
        a, b = int(match.group(1)), int(match.group(2))
        if a <= b:
            raise ShapeError(f"row {token!r} is empty")
        rows.append(Row(a, b))
    return HorizontalStrip(tuple(rows))


def serialize_strip(strip: HorizontalStrip) -> str:
    return ",".join(str(r) for r in strip.rows)


def strip_to_json(strip: HorizontalStrip) -> dict:
    return {"rows": [{"a": r.a, "b": r.b} for r in strip.rows]}


def strip_from_json(data: dict | str) -> HorizontalStrip:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return HorizontalStrip(tuple(Row(int(r["a"]), int(r["b"])) for r in data["rows"]))
    except (KeyError, TypeError) as exc:
        raise ShapeError(f"malformed strip JSON: {exc}") from exc


def multiskew_to_json(m: Multiskew) -> dict:
    return {"shapes": [{"outer": list(s.outer), "inner": list(s.inner)} for s in m.shapes]}


def multiskew_from_json(data: dict | str) -> Multiskew:
    if isinstance(data, str):
        data = json.loads(data)
    if "rows" in data:
        return strip_from_json(data).to_multiskew()
    try:
        return Multiskew(
            tuple(SkewShape(tuple(s["outer"]), tuple(s.get("inner", ()))) for s in data["shapes"])
        )
    except (KeyError, TypeError) as exc:
        raise ShapeError(f"malformed multiskew JSON: {exc}") from exc
