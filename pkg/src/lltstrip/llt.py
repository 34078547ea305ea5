"""LLT polynomials straight from the inversion definition.

The brute-force engine enumerates every semistandard multiskew tableau with
entries at most ``num_vars``. Per-shape fillings are stored as numpy arrays;
a combination's monomial and inversion count are sums of per-shape and
per-pair contributions, so they are assembled by broadcasting and tallied
with ``np.unique``.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import prod

import numpy as np

from .graph import m_interval
from .qschur import PositivityViolation, QPoly, SchurExpansion, monomials_to_schur, multinomial
from .shapes import HorizontalStrip, Multiskew, ShapeLike, SkewShape, as_multiskew
from .tableaux import Tableau, _fillings

DEFAULT_BUDGET = int(os.environ.get("LLTSTRIP_BUDGET", str(10**8)))

# elements per broadcast block
_BLOCK = 1 << 21


class BudgetExceeded(RuntimeError):
    """Predicted enumeration size is above the configured ceiling."""


class SymmetryError(ArithmeticError):
    """Monomial coefficients differ on permutations of the same exponent vector."""


@dataclass(frozen=True)
class MultiskewTableau:
    parts: tuple[Tableau, ...]

    @property
    def shape(self) -> Multiskew:
        return Multiskew(tuple(t.shape for t in self.parts))

    def weight(self, num_vars: int | None = None) -> tuple[int, ...]:
        entries = [x for t in self.parts for x in t.entries()]
        n = num_vars or max(entries, default=0)
        w = [0] * n
        for x in entries:
            w[x - 1] += 1
        return tuple(w)

    def __str__(self):
        return " | ".join(str(t) for t in self.parts)


@dataclass
class InversionReport:
    total: int
    per_pair: dict[tuple[int, int], int] = field(default_factory=dict)


def _attacking_cells(first: SkewShape, second: SkewShape):
    """Index pairs ``(p, r, kind)`` of attacking cells; kind 0 equal contents, 1 first is one to the right."""
    c1 = [j - i for i, j in first.cells()]
    c2 = [j - i for i, j in second.cells()]
    out = []
    for p, a in enumerate(c1):
        for r, b in enumerate(c2):
            if a == b:
                out.append((p, r, 0))
            elif a == b + 1:
                out.append((p, r, 1))
    return out


def attack_pairs(m: ShapeLike) -> int:
    """Number of attacking cell pairs across distinct shapes."""
    shapes = as_multiskew(m).shapes
    return sum(len(_attacking_cells(shapes[i], shapes[j])) for i, j in combinations(range(len(shapes)), 2))


def inversions(t: MultiskewTableau) -> InversionReport:
    shapes = [p.shape for p in t.parts]
    values = [[p.cells()[c] for c in s.cells()] for p, s in zip(t.parts, shapes)]
    per_pair = {}
    for i, j in combinations(range(len(shapes)), 2):
        count = 0
        for p, r, kind in _attacking_cells(shapes[i], shapes[j]):
            x, y = values[i][p], values[j][r]
            if (kind == 0 and x > y) or (kind == 1 and y > x):
                count += 1
        per_pair[(i + 1, j + 1)] = count
    return InversionReport(sum(per_pair.values()), per_pair)


def M_total(m: ShapeLike) -> int:
    """Sum of ``M(R, R')`` over rows ``R`` of an earlier shape and ``R'`` of a later one."""
    shapes = as_multiskew(m).shapes
    intervals = [s.row_intervals() for s in shapes]
    total = 0
    for i, j in combinations(range(len(shapes)), 2):
        for l1, r1 in intervals[i]:
            for l2, r2 in intervals[j]:
                total += m_interval(l1, r1, l2, r2)
    return total


def max_inversion_tableau(m: ShapeLike) -> MultiskewTableau:
    """Fill each row with the rank of its leftmost cell in reverse content reading order."""
    shapes = as_multiskew(m).shapes
    starts = []
    for k, s in enumerate(shapes):
        for i in range(1, len(s.outer) + 1):
            lo = s.inner_part(i) + 1
            if lo <= s.outer[i - 1]:
                starts.append((lo - i, k, i))
    # decreasing content; ties from the top (later shape, higher row) down
    starts.sort(key=lambda x: (-x[0], -x[1], -x[2]))
    label = {(k, i): n for n, (_, k, i) in enumerate(starts, 1)}
    parts = []
    for k, s in enumerate(shapes):
        cells = {(i, j): label[(k, i)] for i, j in s.cells()}
        parts.append(Tableau.from_cells(cells, s.inner))
    return MultiskewTableau(tuple(parts))


def kappa_rotate(m: ShapeLike) -> ShapeLike:
    """Move the last shape, shifted one column right, to the front."""
    if isinstance(m, HorizontalStrip):
        return HorizontalStrip((m.rows[-1].shift(),) + m.rows[:-1])
    shapes = as_multiskew(m).shapes
    return Multiskew((shapes[-1].shift(),) + shapes[:-1])


def default_num_vars(m: ShapeLike) -> int:
    """Rows for a horizontal strip, total cells otherwise."""
    if isinstance(m, HorizontalStrip):
        return len(m)
    ms = as_multiskew(m)
    if ms.as_strip() is not None:
        return len(ms)
    return ms.size


def predicted_count(m: ShapeLike, num_vars: int) -> int:
    from math import comb

    total = 1
    for s in as_multiskew(m).shapes:
        row = s.as_row()
        if row is not None:
            total *= comb(row.size + num_vars - 1, row.size)
        else:
            total *= sum(1 for _ in _fillings(s, num_vars))
    return total


def llt_monomials(m: ShapeLike, num_vars: int, budget: int | None = None) -> dict[tuple[int, ...], QPoly]:
    """Every monomial coefficient of ``G`` in ``num_vars`` variables, keyed by exponent vector."""
    shapes = as_multiskew(m).shapes
    budget = DEFAULT_BUDGET if budget is None else budget
    n = num_vars
    expected = predicted_count(m, n)
    if expected > budget:
        raise BudgetExceeded(f"{expected} tableaux predicted, budget is {budget}")
    sizes = [s.size() for s in shapes]
    fills = [
        np.array(list(_fillings(s, n)), dtype=np.int16).reshape(-1, sz) for s, sz in zip(shapes, sizes)
    ]
    counts = [len(f) for f in fills]
    if 0 in counts:
        return {}
    cells_total = sum(sizes)
    base = cells_total + 1
    inv_span = M_total(m) + 1
    if inv_span * base**n >= 2**62:
        raise BudgetExceeded("monomial key does not fit in 64 bits; reduce num_vars")

    powers = (base ** np.arange(n, dtype=np.int64)) * inv_span
    keys = [powers[f - 1].sum(axis=1) if f.shape[1] else np.zeros(len(f), np.int64) for f in fills]
    pair_inv = {}
    for i, j in combinations(range(len(shapes)), 2):
        mat = np.zeros((counts[i], counts[j]), dtype=np.int64)
        for p, r, kind in _attacking_cells(shapes[i], shapes[j]):
            a = fills[i][:, p][:, None]
            b = fills[j][:, r][None, :]
            mat += (a > b) if kind == 0 else (b > a)
        pair_inv[(i, j)] = mat

    k = len(shapes)
    tally: dict[int, int] = defaultdict(int)
    rest = prod(counts[1:])
    block = max(1, _BLOCK // max(rest, 1))
    for start in range(0, counts[0], block):
        stop = min(counts[0], start + block)
        dims = [stop - start] + counts[1:]
        total = np.zeros(dims, dtype=np.int64)

        def view(arr, axes):
            shape = [1] * k
            for ax, size in zip(axes, arr.shape):
                shape[ax] = size
            return arr.reshape(shape)

        total += view(keys[0][start:stop], [0])
        for s in range(1, k):
            total += view(keys[s], [s])
        for (i, j), mat in pair_inv.items():
            total += view(mat[start:stop] if i == 0 else mat, [i, j])
        uniq, cnt = np.unique(total, return_counts=True)
        for key, c in zip(uniq.tolist(), cnt.tolist()):
            tally[key] += c

    out: dict[tuple[int, ...], dict[int, int]] = defaultdict(dict)
    for key, c in tally.items():
        inv, rem = key % inv_span, key // inv_span
        w = []
        for _ in range(n):
            rem, digit = divmod(rem, base)
            w.append(digit)
        out[tuple(w)][inv] = c
    return {w: QPoly(c) for w, c in out.items()}


def symmetrize(monomials: dict[tuple[int, ...], QPoly], num_vars: int) -> dict[tuple[int, ...], QPoly]:
    """Collapse to partition-indexed coefficients, checking symmetry on the way."""
    classes: dict[tuple[int, ...], list[QPoly]] = defaultdict(list)
    for w, c in monomials.items():
        classes[tuple(sorted(w, reverse=True))].append(c)
    out = {}
    for lam, polys in classes.items():
        mult = [lam.count(v) for v in set(lam)]
        if len(polys) != multinomial(mult) or any(p != polys[0] for p in polys):
            raise SymmetryError(f"coefficients of the permutations of {lam} disagree")
        out[tuple(p for p in lam if p)] = polys[0]
    return out


def brute_force_llt(m: ShapeLike, num_vars: int | None = None, budget: int | None = None) -> SchurExpansion:
    """Schur expansion of ``G_m(x; q)`` by enumerating all tableaux."""
    n = default_num_vars(m) if num_vars is None else num_vars
    ms = as_multiskew(m)
    mono = symmetrize(llt_monomials(ms, n, budget), n)
    expansion = monomials_to_schur(mono, ms.size, n)
    if not expansion.is_schur_positive():
        bad = [lam for lam, c in expansion.terms.items() if not c.is_nonnegative()]
        raise PositivityViolation(f"negative Schur coefficients at {bad[:3]} for {m}")
    return expansion


def enumerate_multiskew_tableaux(m: ShapeLike, num_vars: int):
    """Plain generator over all multiskew tableaux; small inputs only."""
    from itertools import product

    from .tableaux import enumerate_ssyt

    shapes = as_multiskew(m).shapes
    per_shape = [list(enumerate_ssyt(s, num_vars)) for s in shapes]
    for combo in product(*per_shape):
        yield MultiskewTableau(combo)
