"""Semistandard tableaux: enumeration, jeu de taquin, cocharge and its relatives.

Tableaux are stored row by row with row 1 at the bottom, so columns strictly
increase upward. A skew tableau keeps the inner partition alongside the rows;
``rows[i]`` holds the entries of row ``i + 1`` starting in column
``inner[i] + 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterator, Sequence

from .shapes import Partition, ShapeError, SkewShape

Cell = tuple[int, int]


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        rows = [tuple(r) for r in self.rows]
        inner = list(self.inner) + [0] * max(0, len(rows) - len(self.inner))
        rows += [()] * (len(inner) - len(rows))
        while rows and not rows[-1] and inner[-1] == 0:
            rows.pop()
            inner.pop()
        outer = [i + len(r) for i, r in zip(inner, rows)]
        if any(p < 0 for p in inner) or any(inner[k] < inner[k + 1] for k in range(len(inner) - 1)):
            raise ShapeError(f"inner shape {inner} is not a partition")
        if any(outer[k] < outer[k + 1] for k in range(len(outer) - 1)):
            raise ShapeError(f"outer shape {outer} is not a partition")
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "inner", tuple(inner))

    # shape bookkeeping

    @property
    def outer(self) -> Partition:
        return tuple(p for p in (i + len(r) for i, r in zip(self.inner, self.rows)) if p)

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, tuple(p for p in self.inner if p))

    @property
    def is_straight(self) -> bool:
        return not any(self.inner)

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    def cells(self) -> dict[Cell, int]:
        return {
            (i + 1, self.inner[i] + k + 1): x
            for i, row in enumerate(self.rows)
            for k, x in enumerate(row)
        }

    def entries(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def weight(self) -> tuple[int, ...]:
        """``w_k`` = number of entries equal to ``k``, for ``k = 1..max``."""
        flat = self.entries()
        if not flat:
            return ()
        w = [0] * max(flat)
        for x in flat:
            w[x - 1] += 1
        return tuple(w)

    def count(self, letter: int) -> int:
        return sum(row.count(letter) for row in self.rows)

    def is_semistandard(self) -> bool:
        cells = self.cells()
        for (i, j), x in cells.items():
            if x < 1:
                return False
            right = cells.get((i, j + 1))
            if right is not None and right < x:
                return False
            above = cells.get((i + 1, j))
            if above is not None and above <= x:
                return False
        return True

    def __str__(self) -> str:
        return format_tableau(self)

    @classmethod
    def from_cells(cls, cells: dict[Cell, int], inner: Sequence[int] = ()) -> "Tableau":
        height = max([i for i, _ in cells] + [len(inner), 0])
        inner = list(inner) + [0] * (height - len(inner))
        rows = []
        for i in range(1, height + 1):
            cols = sorted(j for (r, j) in cells if r == i)
            if cols and cols != list(range(inner[i - 1] + 1, inner[i - 1] + len(cols) + 1)):
                raise ShapeError(f"row {i} of the cell map is not contiguous after the inner shape")
            rows.append(tuple(cells[(i, j)] for j in cols))
        return cls(tuple(rows), tuple(inner))


def parse_tableau(text: str) -> Tableau:
    """Parse ``"1,1,2;2,3;3"`` (bottom row first); a leading ``.`` marks an inner cell."""
    rows, inner = [], []
    for chunk in "".join(text.split()).split(";"):
        tokens = [t for t in chunk.split(",") if t] if chunk else []
        skip = 0
        while skip < len(tokens) and tokens[skip] == ".":
            skip += 1
        try:
            rows.append(tuple(int(t) for t in tokens[skip:]))
        except ValueError as exc:
            raise ShapeError(f"malformed tableau row {chunk!r}") from exc
        inner.append(skip)
    t = Tableau(tuple(rows), tuple(inner))
    if not t.is_semistandard():
        raise ShapeError(f"{text!r} is not semistandard")
    return t


def format_tableau(t: Tableau) -> str:
    parts = []
    for i, row in enumerate(t.rows):
        parts.append(",".join(["."] * t.inner[i] + [str(x) for x in row]))
    return ";".join(parts)


# enumeration

def _fillings(shape: SkewShape, max_entry: int) -> Iterator[tuple[int, ...]]:
    """SSYT fillings of ``shape`` as tuples in reading order, lexicographically."""
    if len(shape.outer) == 1:
        yield from combinations_with_replacement(range(1, max_entry + 1), shape.outer[0] - shape.inner_part(1))
        return
    cells = shape.cells()
    index = {c: k for k, c in enumerate(cells)}
    left = [index.get((i, j - 1)) for i, j in cells]
    below = [index.get((i - 1, j)) for i, j in cells]
    values = [0] * len(cells)

    def fill(k: int):
        if k == len(cells):
            yield tuple(values)
            return
        lo = 1
        if left[k] is not None:
            lo = values[left[k]]
        if below[k] is not None:
            lo = max(lo, values[below[k]] + 1)
        for x in range(lo, max_entry + 1):
            values[k] = x
            yield from fill(k + 1)

    yield from fill(0)


def enumerate_ssyt(shape: SkewShape, max_entry: int) -> Iterator[Tableau]:
    """Every SSYT of ``shape`` with entries at most ``max_entry``, in reading-word lex order."""
    if max_entry < 1:
        raise ValueError("max_entry must be positive")
    cells = shape.cells()
    for values in _fillings(shape, max_entry):
        yield Tableau.from_cells(dict(zip(cells, values)), shape.inner)


def _horizontal_strips(lam: Partition, size: int, bound: Partition | None) -> Iterator[Partition]:
    """Partitions ``nu`` with ``nu/lam`` a horizontal strip of ``size`` cells, largest first."""
    rows = len(lam) + 1
    lam_ext = list(lam) + [0]

    def grow(k: int, remaining: int, acc: list[int]):
        if k == rows:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        cap = remaining if k == 0 else min(remaining, lam_ext[k - 1] - lam_ext[k])
        if bound is not None:
            limit = bound[k] if k < len(bound) else 0
            cap = min(cap, limit - lam_ext[k])
        for add in range(cap, -1, -1):
            acc.append(lam_ext[k] + add)
            yield from grow(k + 1, remaining - add, acc)
            acc.pop()

    yield from grow(0, size, [])


def enumerate_ssyt_weight(weight: Sequence[int], shape: Partition | None = None) -> Iterator[Tableau]:
    """Straight-shape SSYT with ``w(T) = weight``, optionally restricted to one shape."""
    weight = tuple(weight)
    if shape is not None:
        shape = tuple(shape)
        if sum(shape) != sum(weight):
            return

    def build(k: int, lam: Partition, rows: list[list[int]]):
        if k == len(weight):
            if shape is None or lam == shape:
                yield Tableau(tuple(tuple(r) for r in rows))
            return
        for nu in _horizontal_strips(lam, weight[k], shape):
            new_rows = [list(r) for r in rows] + [[] for _ in range(len(nu) - len(rows))]
            for i, p in enumerate(nu):
                new_rows[i].extend([k + 1] * (p - (lam[i] if i < len(lam) else 0)))
            yield from build(k + 1, nu, new_rows)

    yield from build(0, (), [])


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: tuple[int, ...]) -> int:
    # peel off the largest letter: lam/nu must be a horizontal strip of size mu[-1]
    if not mu:
        return 1 if not lam else 0
    last = mu[-1]
    total = 0
    lam_ext = list(lam) + [0]
    rows = len(lam)

    def shrink(k: int, remaining: int, acc: list[int]):
        nonlocal total
        if k == rows:
            if remaining == 0:
                total += _kostka(tuple(p for p in acc if p), mu[:-1])
            return
        # nu_k in [lam_{k+1}, lam_k]
        lowest = lam_ext[k + 1]
        for nu_k in range(lam_ext[k], lowest - 1, -1):
            take = lam_ext[k] - nu_k
            if take > remaining:
                break
            acc.append(nu_k)
            shrink(k + 1, remaining - take, acc)
            acc.pop()

    shrink(0, last, [])
    return total


def kostka_number(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of shape ``lam`` and weight ``mu`` (``mu`` any composition)."""
    lam = tuple(p for p in lam if p)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    return _kostka(lam, mu)


# jeu de taquin

def inside_corners(t: Tableau) -> list[Cell]:
    inner = list(t.inner)
    out = []
    for i, p in enumerate(inner):
        below_next = inner[i + 1] if i + 1 < len(inner) else 0
        if p > below_next:
            out.append((i + 1, p))
    return out


def jdt_slide(t: Tableau, corner: Cell) -> Tableau:
    """Slide into an inside corner; on ties the entry above moves."""
    if corner not in inside_corners(t):
        raise ValueError(f"{corner} is not an inside corner of {t.shape}")
    cells = t.cells()
    inner = list(t.inner)
    inner[corner[0] - 1] -= 1
    hole = corner
    while True:
        i, j = hole
        above, right = cells.get((i + 1, j)), cells.get((i, j + 1))
        if above is None and right is None:
            break
        if right is None or (above is not None and above <= right):
            src = (i + 1, j)
        else:
            src = (i, j + 1)
        cells[hole] = cells.pop(src)
        hole = src
    return Tableau.from_cells(cells, inner)


def rectify(t: Tableau, choose: Callable[[list[Cell]], Cell] | None = None) -> Tableau:
    """Slide until the shape is straight; ``choose`` picks among inside corners."""
    while any(t.inner):
        corners = inside_corners(t)
        t = jdt_slide(t, corners[-1] if choose is None else choose(corners))
    return t


def random_rectify(t: Tableau, rng: random.Random) -> Tableau:
    return rectify(t, rng.choice)


# cocharge and friends

def catabolism_steps(t: Tableau) -> list[tuple[Tableau, int]]:
    """Successive tableaux of catabolism with the size of the top row moved at each step.

    The last entry is a single row paired with 0.
    """
    t = rectify(t)
    steps = []
    while len(t.rows) > 1:
        top, rest = t.rows[-1], t.rows[:-1]
        steps.append((t, len(top)))
        t = rectify(Tableau((top,) + rest, (len(rest[0]),)))
    steps.append((t, 0))
    return steps


def cocharge(t: Tableau) -> int:
    """Cocharge by catabolism: move the top row to the lower right, rectify, repeat."""
    return sum(moved for _, moved in catabolism_steps(t))


def restrict(t: Tableau, i: int, j: int) -> Tableau:
    """Skew tableau of the entries ``x`` with ``i <= x <= j`` of a straight ``t``."""
    if not t.is_straight:
        t = rectify(t)
    rows, inner = [], []
    for row in t.rows:
        kept = tuple(x for x in row if i <= x <= j)
        below = sum(1 for x in row if x < i)
        rows.append(kept)
        inner.append(below)
    return Tableau(tuple(rows), tuple(inner))


def restrict_rectify(t: Tableau, i: int, j: int) -> Tableau:
    """``T|_{i,j}``: rectification of the entries in ``[i, j]``; empty if none."""
    if i >= j:
        raise ValueError("need i < j")
    return rectify(restrict(t, i, j))


def f_statistic(t: Tableau, letter: int | None = None) -> int:
    """Largest left shift of the bottom row keeping columns strict, capped by ``w_letter``.

    ``letter`` defaults to the smallest entry of ``t``.
    """
    if not t.is_straight:
        raise ValueError("f_statistic needs a straight-shape tableau")
    if len(t) == 0:
        return 0
    if letter is None:
        letter = min(t.entries())
    bottom = t.rows[0]
    second = t.rows[1] if len(t.rows) > 1 else ()
    cap = min(len(bottom) - len(second), t.count(letter))
    best = 0
    for shift in range(1, cap + 1):
        if all(second[c] > bottom[c + shift] for c in range(len(second))):
            best = shift
        else:
            break
    return best


def cocharge_ij(t: Tableau, i: int, j: int) -> int:
    """``w_i(T) - f(T|_{i,j})``."""
    return t.count(i) - f_statistic(restrict_rectify(t, i, j), letter=i)
