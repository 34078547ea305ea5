"""The cocharge formula for triangle-free horizontal strips and the row rewrite relations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .graph import GraphError, WeightedGraph, build_graph, commutes, is_triangle_free
from .llt import brute_force_llt, kappa_rotate
from .qschur import QPoly, SchurExpansion
from .shapes import HorizontalStrip, Row, ShapeError
from .tableaux import Tableau, cocharge, cocharge_ij, enumerate_ssyt_weight, restrict_rectify


class TriangleError(GraphError):
    """The weighted graph contains a triangle, so the cocharge formula does not apply."""


class PreconditionError(ValueError):
    """A rewrite relation was applied to rows that do not satisfy its hypothesis."""


_cocharge_ij = lru_cache(maxsize=1 << 16)(cocharge_ij)
_restrict_rectify = lru_cache(maxsize=1 << 16)(restrict_rectify)


def cocharge_pi(t: Tableau, g: WeightedGraph) -> int:
    """``sum over edges {i, j} of min(M_ij, cocharge_ij(t))``."""
    weight = t.weight()
    if len(weight) > g.n or any(t.count(k) != g.weight(k) for k in range(1, g.n + 1)):
        raise GraphError(f"tableau weight {weight} does not match vertex weights {g.vertex_weights}")
    return sum(min(m, _cocharge_ij(t, i, j)) for (i, j), m in g.edges.items())


def formula_from_graph(g: WeightedGraph) -> SchurExpansion:
    if not is_triangle_free(g):
        raise TriangleError("weighted graph has a triangle; the cocharge formula does not apply")
    terms: dict[tuple[int, ...], QPoly] = {}
    for t in enumerate_ssyt_weight(g.vertex_weights):
        lam = t.outer
        terms[lam] = terms.get(lam, QPoly()) + QPoly.monomial(cocharge_pi(t, g))
    return SchurExpansion(terms)


def formula_expansion(s: HorizontalStrip) -> SchurExpansion:
    """Schur expansion of ``G_s`` from the weighted graph alone; requires a triangle-free graph."""
    return formula_from_graph(build_graph(s))


def is_labeled_path(g: WeightedGraph) -> bool:
    """Edges are exactly ``{k, k+1}`` for ``k = 1..n-1``."""
    return set(g.edges) == {(k, k + 1) for k in range(1, g.n)}


def path_expansion(s: HorizontalStrip) -> SchurExpansion:
    """Formula specialised to a labeled path: ``cocharge_{i,i+1}`` is the second-row length of ``T|_{i,i+1}``."""
    g = build_graph(s)
    if not is_labeled_path(g):
        raise GraphError("weighted graph is not the path v1 - v2 - ... - vn")
    terms: dict[tuple[int, ...], QPoly] = {}
    for t in enumerate_ssyt_weight(g.vertex_weights):
        stat = 0
        for (i, j), m in g.edges.items():
            r = _restrict_rectify(t, i, j)
            stat += min(m, len(r.rows[1]) if len(r.rows) > 1 else 0)
        terms[t.outer] = terms.get(t.outer, QPoly()) + QPoly.monomial(stat)
    return SchurExpansion(terms)


def hall_littlewood_expansion(lam: Sequence[int]) -> SchurExpansion:
    """``sum over T of weight lam of q^cocharge(T) s_shape(T)``."""
    terms: dict[tuple[int, ...], QPoly] = {}
    for t in enumerate_ssyt_weight(tuple(lam)):
        terms[t.outer] = terms.get(t.outer, QPoly()) + QPoly.monomial(cocharge(t))
    return SchurExpansion(terms)


def nested_strip(lam: Sequence[int]) -> HorizontalStrip:
    """``(lam_1/0, lam_2/0, ...)``."""
    return HorizontalStrip(tuple(Row(p, 0) for p in lam if p > 0))


# --- rewrite relations --------------------------------------------------------


@dataclass(frozen=True)
class FormalSum:
    """A finite ``Z[q]``-combination of horizontal strips of equal size."""

    terms: Mapping[HorizontalStrip, QPoly]

    def __post_init__(self):
        clean = {s: QPoly(c) if isinstance(c, int) else c for s, c in dict(self.terms).items()}
        clean = {s: c for s, c in clean.items() if c}
        if len({s.size for s in clean}) > 1:
            raise ShapeError("all strips in a formal sum must have the same number of cells")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def of(cls, pairs: Iterable[tuple[HorizontalStrip, QPoly | int]]) -> "FormalSum":
        acc: dict[HorizontalStrip, QPoly] = {}
        for s, c in pairs:
            acc[s] = acc.get(s, QPoly()) + c
        return cls(acc)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum.of(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scale(-1)

    def scale(self, c: QPoly | int) -> "FormalSum":
        return FormalSum({s: v * c for s, v in self.terms.items()})

    def append(self, spectators: Sequence[Row], prepend: Sequence[Row] = ()) -> "FormalSum":
        """Concatenate spectator rows on both sides of every strip."""
        return FormalSum.of(
            (HorizontalStrip(tuple(prepend) + s.rows + tuple(spectators)), c) for s, c in self.terms.items()
        )

    def num_vars(self) -> int:
        return max((len(s) for s in self.terms), default=1)

    def expand(self, num_vars: int | None = None, budget: int | None = None) -> SchurExpansion:
        n = num_vars or self.num_vars()
        total = SchurExpansion()
        for s, c in self.terms.items():
            total = total + brute_force_llt(s, n, budget) * c
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{s}]" for s, c in sorted(self.terms.items(), key=lambda x: str(x[0])))


def union_row(r: Row, rp: Row) -> Row:
    lo, hi = min(r.left, rp.left), max(r.right, rp.right)
    if max(r.left, rp.left) > min(r.right, rp.right) + 1:
        raise PreconditionError(f"rows {r} and {rp} are not contiguous")
    return Row.from_contents(lo, hi)


def intersection_row(r: Row, rp: Row) -> Row | None:
    lo, hi = max(r.left, rp.left), min(r.right, rp.right)
    return Row.from_contents(lo, hi) if lo <= hi else None


def _pair(s: HorizontalStrip, k: int) -> tuple[Row, Row]:
    if not 0 <= k < len(s) - 1:
        raise PreconditionError(f"no adjacent pair at position {k} in a {len(s)}-row strip")
    return s[k], s[k + 1]


def swap_pair(s: HorizontalStrip, k: int) -> HorizontalStrip:
    r, rp = _pair(s, k)
    return s.replace(k, (rp, r), 2)


def merge_eligible(r: Row, rp: Row) -> bool:
    return rp.left == r.right + 1


def apply_merge_relation(s: HorizontalStrip, k: int) -> FormalSum:
    """Rows ``R = s[k]``, ``R' = s[k+1]`` with ``l(R') = r(R) + 1``.

    Returns ``q*s + (1 - q)*(s with the pair merged into R u R')``, which is
    LLT-equivalent to ``s`` with the pair swapped.
    """
    r, rp = _pair(s, k)
    if not merge_eligible(r, rp):
        raise PreconditionError(f"merge needs l(R') = r(R) + 1, got {r} and {rp}")
    merged = s.replace(k, (union_row(r, rp),), 2)
    return FormalSum.of([(s, QPoly.monomial(1)), (merged, QPoly({0: 1, 1: -1}))])


def merge_identity(s: HorizontalStrip, k: int) -> tuple[FormalSum, FormalSum]:
    """Both sides of ``q(R,R') + (R u R') = q(R u R') + (R',R)`` in context."""
    r, rp = _pair(s, k)
    if not merge_eligible(r, rp):
        raise PreconditionError(f"merge needs l(R') = r(R) + 1, got {r} and {rp}")
    merged = s.replace(k, (union_row(r, rp),), 2)
    q = QPoly.monomial(1)
    lhs = FormalSum.of([(s, q), (merged, 1)])
    rhs = FormalSum.of([(merged, q), (swap_pair(s, k), 1)])
    return lhs, rhs


def apply_commute_swap(s: HorizontalStrip, k: int) -> HorizontalStrip:
    r, rp = _pair(s, k)
    if not commutes(r, rp):
        raise PreconditionError(f"rows {r} and {rp} do not commute")
    return swap_pair(s, k)


def inductive_eligible(r: Row, rp: Row) -> bool:
    return not commutes(r, rp) and rp.left < r.left


def apply_inductive_relation(s: HorizontalStrip, k: int) -> tuple[HorizontalStrip, HorizontalStrip]:
    """``(R, R') = q (R', R) + (1 - q) (R u R', R n R')``; returns the two strips on the right.

    An empty intersection row is dropped from the second strip.
    """
    r, rp = _pair(s, k)
    if commutes(r, rp):
        raise PreconditionError(f"rows {r} and {rp} commute")
    if not rp.left < r.left:
        raise PreconditionError(f"need l(R') < l(R), got {r} and {rp}")
    inter = intersection_row(r, rp)
    replacement = (union_row(r, rp),) + ((inter,) if inter is not None else ())
    return swap_pair(s, k), s.replace(k, replacement, 2)


def inductive_formal_sum(s: HorizontalStrip, k: int) -> FormalSum:
    first, second = apply_inductive_relation(s, k)
    return FormalSum.of([(first, QPoly.monomial(1)), (second, QPoly({0: 1, 1: -1}))])


def find_inductive_pair(s: HorizontalStrip) -> int | None:
    """Eligible adjacent pair touching the smallest possible vertex label, or ``None``."""
    candidates = [k for k in range(len(s) - 1) if inductive_eligible(s[k], s[k + 1])]
    if not candidates:
        return None
    g = build_graph(s)
    label = {row - 1: lab for lab, row in enumerate(g.row_of, 1)}
    return min(candidates, key=lambda k: (min(label[k], label[k + 1]), k))


def _translate(s: HorizontalStrip) -> HorizontalStrip:
    shift = min(r.b for r in s)
    return HorizontalStrip(tuple(Row(r.a - shift, r.b - shift) for r in s))


def normalize_for_induction(s: HorizontalStrip, max_states: int = 20000) -> tuple[HorizontalStrip, int] | None:
    """Search commute swaps and rotations for a strip with an eligible pair.

    Both moves preserve the LLT polynomial. Returns the first strip found in
    breadth-first order together with the pair position, or ``None`` when no
    reachable strip has one.
    """
    start = _translate(s)
    seen = {start}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        k = find_inductive_pair(cur)
        if k is not None:
            return cur, k
        moves = [kappa_rotate(cur)]
        moves += [swap_pair(cur, j) for j in range(len(cur) - 1) if commutes(cur[j], cur[j + 1])]
        for nxt in moves:
            key = _translate(nxt)
            if key not in seen:
                if len(seen) >= max_states:
                    return None
                seen.add(key)
                queue.append(nxt)
    return None
