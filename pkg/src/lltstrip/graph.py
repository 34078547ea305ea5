"""The weighted graph of a horizontal strip and the row statistics behind it.

Vertices are labelled ``1..n`` in content reading order of the rightmost
cells; the weight of an edge joining rows ``R_i, R_j`` (tuple order ``i < j``)
is the overlap statistic ``M(R_i, R_j)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .shapes import HorizontalStrip, Row


class GraphError(ValueError):
    pass


def m_interval(l1: int, r1: int, l2: int, r2: int) -> int:
    """``M`` for rows given by content intervals ``[l1, r1]`` and ``[l2, r2]``."""
    if l1 > l2:
        l2, r2 = l2 + 1, r2 + 1
    return max(0, min(r1, r2) - max(l1, l2) + 1)


def m_statistic(row: Row, other: Row) -> int:
    """``|c(R) & c(R')|`` if ``l(R) <= l(R')``, else ``|c(R) & c(R'^+)|``."""
    return m_interval(row.left, row.right, other.left, other.right)


def commutes(row: Row, other: Row) -> bool:
    return m_statistic(row, other) == m_statistic(other, row)


def classify_pair(row: Row, other: Row) -> str:
    """``"separated"``, ``"nested"`` (nested or left-aligned) or ``"staggered"``.

    Only staggered pairs fail to commute.
    """
    lo, hi = (row, other) if row.left <= other.left else (other, row)
    if lo.right < hi.left - 1:
        return "separated"
    if lo.left == hi.left or hi.right <= lo.right:
        return "nested"
    return "staggered"


def rows_attack(row: Row, other: Row) -> bool:
    """Some cells of the two rows have equal contents or differ by one (lower row's cell to the right)."""
    return any(c in other.contents or c - 1 in other.contents for c in row.contents)


@dataclass(frozen=True)
class WeightedGraph:
    vertex_weights: tuple[int, ...]
    edges: Mapping[tuple[int, int], int] = field(default_factory=dict)
    row_of: tuple[int, ...] | None = None

    def __post_init__(self):
        weights = tuple(int(w) for w in self.vertex_weights)
        if any(w < 1 for w in weights):
            raise GraphError("vertex weights must be positive")
        n = len(weights)
        edges: dict[tuple[int, int], int] = {}
        for (u, v), m in dict(self.edges).items():
            if u == v:
                raise GraphError("self-loops are not allowed")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u},{v}) out of range")
            key = (min(u, v), max(u, v))
            if m < 0 or m > min(weights[u - 1], weights[v - 1]):
                raise GraphError(f"edge {key} weight {m} exceeds its endpoint weights")
            if m:
                edges[key] = int(m)
        object.__setattr__(self, "vertex_weights", weights)
        object.__setattr__(self, "edges", dict(sorted(edges.items())))

    @property
    def n(self) -> int:
        return len(self.vertex_weights)

    def weight(self, v: int) -> int:
        return self.vertex_weights[v - 1]

    def m(self, u: int, v: int) -> int:
        return self.edges.get((min(u, v), max(u, v)), 0)

    def neighbors(self, v: int) -> list[int]:
        return sorted([b for (a, b) in self.edges if a == v] + [a for (a, b) in self.edges if b == v])

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    @property
    def total_edge_weight(self) -> int:
        return sum(self.edges.values())

    def components(self) -> list[list[int]]:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def relabel(self, perm: Sequence[int]) -> "WeightedGraph":
        """Vertex ``v`` becomes ``perm[v - 1]``."""
        weights = [0] * self.n
        for v in range(1, self.n + 1):
            weights[perm[v - 1] - 1] = self.weight(v)
        edges = {(perm[u - 1], perm[v - 1]): m for (u, v), m in self.edges.items()}
        return WeightedGraph(tuple(weights), edges)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.vertex_weights == other.vertex_weights and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_weights, tuple(self.edges.items())))

    def to_json(self) -> dict:
        out = {
            "vertices": [{"label": v, "weight": w} for v, w in enumerate(self.vertex_weights, 1)],
            "edges": [{"u": u, "v": v, "m": m} for (u, v), m in self.edges.items()],
        }
        if self.row_of is not None:
            for item, r in zip(out["vertices"], self.row_of):
                item["row"] = r
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "WeightedGraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            verts = sorted(data["vertices"], key=lambda d: d["label"])
            if [d["label"] for d in verts] != list(range(1, len(verts) + 1)):
                raise GraphError("vertex labels must be 1..n")
            edges = {(int(e["u"]), int(e["v"])): int(e["m"]) for e in data.get("edges", [])}
            rows = tuple(d["row"] for d in verts) if all("row" in d for d in verts) and verts else None
            return cls(tuple(int(d["weight"]) for d in verts), edges, rows)
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc

    def to_dot(self, name: str = "Pi") -> str:
        lines = [f"graph {name} {{"]
        for v, w in enumerate(self.vertex_weights, 1):
            lines.append(f'  v{v} [label="{w}", xlabel="v{v}"];')
        for (u, v), m in self.edges.items():
            lines.append(f'  v{u} -- v{v} [label="{m}"];')
        lines.append("}")
        return "\n".join(lines)


def content_reading_order(strip: HorizontalStrip) -> list[int]:
    """0-based row indices sorted by rightmost content, ties bottom to top."""
    return sorted(range(len(strip)), key=lambda k: (strip[k].right, k))


def build_graph(strip: HorizontalStrip) -> WeightedGraph:
    order = content_reading_order(strip)
    label = {row: lab for lab, row in enumerate(order, 1)}
    edges = {}
    for i, j in combinations(range(len(strip)), 2):
        m = m_statistic(strip[i], strip[j])
        if (m > 0) != rows_attack(strip[i], strip[j]):
            raise AssertionError(f"attack relation disagrees with M for rows {i + 1}, {j + 1}")
        if m:
            edges[(label[i], label[j])] = m
    weights = tuple(strip[k].size for k in order)
    return WeightedGraph(weights, edges, tuple(k + 1 for k in order))


def is_triangle_free(g: WeightedGraph) -> bool:
    adj = {v: set(g.neighbors(v)) for v in range(1, g.n + 1)}
    return not any(adj[u] & adj[v] for (u, v) in g.edges)


@dataclass(frozen=True)
class CaterpillarDecomposition:
    spine: tuple[int, ...]
    legs: dict[int, int]

    @property
    def vertices(self) -> list[int]:
        return sorted(set(self.spine) | set(self.legs))


def _path_between(g: WeightedGraph, start: int, end: int) -> list[int] | None:
    prev = {start: None}
    queue = [start]
    for v in queue:
        for w in g.neighbors(v):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    if end not in prev:
        return None
    path = [end]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return path[::-1]


def caterpillar_decompose(g: WeightedGraph) -> list[CaterpillarDecomposition]:
    """Spine = path from the smallest to the largest label of each component."""
    if not is_triangle_free(g):
        raise GraphError("graph has a triangle")
    out = []
    for comp in g.components():
        if sum(1 for (u, v) in g.edges if u in comp) != len(comp) - 1:
            raise GraphError(f"component {comp} is not a tree")
        spine = _path_between(g, comp[0], comp[-1])
        on_spine = set(spine)
        legs = {}
        for v in comp:
            if v in on_spine:
                continue
            nbrs = g.neighbors(v)
            if len(nbrs) != 1 or nbrs[0] not in on_spine:
                raise GraphError(f"component {comp} is not a caterpillar in label order")
            if g.m(v, nbrs[0]) != g.weight(v):
                raise GraphError(f"leg v{v} has edge weight {g.m(v, nbrs[0])} != |v{v}| = {g.weight(v)}")
            legs[v] = nbrs[0]
        out.append(CaterpillarDecomposition(tuple(spine), legs))
    return out


@dataclass
class AdmissibilityReport:
    ok: bool
    violations: list[str]

    def __bool__(self):
        return self.ok


def check_admissible(g: WeightedGraph) -> AdmissibilityReport:
    """Check the four structural conditions a strip graph must satisfy."""
    bad: list[str] = []
    n = g.n
    for (i, k) in g.edges:
        for j in range(i + 1, k):
            if g.m(j, k) != g.weight(j):
                bad.append(f"part1: v{i}~v{k} but M[{j},{k}]={g.m(j, k)} != |v{j}|={g.weight(j)}")
    for i in range(1, n + 1):
        up = [j for j in g.neighbors(i) if j > i]
        if len(up) > 1:
            bad.append(f"part2: v{i} has {len(up)} neighbours with larger labels")
    if is_triangle_free(g):
        try:
            caterpillar_decompose(g)
        except GraphError as exc:
            bad.append(f"part3: {exc}")
    else:
        bad.append("part3: graph has a triangle")
    for i in range(1, n + 1):
        total = sum(g.m(i, j) for j in g.neighbors(i))
        if total > g.weight(i) + 1:
            bad.append(f"part4: |v{i}|+1={g.weight(i) + 1} < {total}")
    return AdmissibilityReport(not bad, bad)


def realize(g: WeightedGraph, check: bool = True) -> HorizontalStrip:
    """A horizontal strip whose graph is isomorphic to the admissible triangle-free ``g``."""
    report = check_admissible(g)
    if not report:
        raise GraphError("inadmissible graph: " + "; ".join(report.violations))
    rows: list[Row] = []
    offset = 0
    for cat in caterpillar_decompose(g):
        spine = cat.spine
        if list(spine) != sorted(spine):
            raise GraphError("spine labels do not increase along the path")
        a = [0]
        for t in range(1, len(spine)):
            a.append(a[-1] + g.weight(spine[t - 1]) - g.m(spine[t - 1], spine[t]) + 1)
        b = [a[t] + g.weight(spine[t]) - 1 for t in range(len(spine))]
        placed: dict[int, tuple[int, int]] = {v: (a[t], b[t]) for t, v in enumerate(spine)}
        for t in range(1, len(spine)):
            acc = 0
            for j in range(spine[t - 1] + 1, spine[t]):
                lo = b[t - 1] + acc + 2
                acc += g.weight(j)
                placed[j] = (lo, b[t - 1] + acc + 1)
        # legs between consecutive spine vertices come first, then the spine top-down
        order = [j for t in range(1, len(spine)) for j in range(spine[t - 1] + 1, spine[t])]
        order += list(reversed(spine))
        for v in order:
            lo, hi = placed[v]
            rows.append(Row.from_contents(lo + offset, hi + offset))
        offset += max(hi for _, hi in placed.values()) + 3
    strip = HorizontalStrip(tuple(rows))
    if check and g.n <= 10 and not graphs_isomorphic(build_graph(strip), g):
        raise AssertionError("realized strip does not reproduce the graph")
    return strip


def _signature(g: WeightedGraph, v: int) -> tuple:
    return (g.weight(v), tuple(sorted((g.weight(w), g.m(v, w)) for w in g.neighbors(v))))


def graphs_isomorphic(g1: WeightedGraph, g2: WeightedGraph, limit: int = 10) -> bool:
    """Exhaustive search for a bijection preserving vertex and edge weights."""
    if g1.n != g2.n:
        return False
    if g1.n > limit:
        raise GraphError(f"isomorphism search limited to {limit} vertices")
    if sorted(g1.vertex_weights) != sorted(g2.vertex_weights):
        return False
    if sorted(g1.edges.values()) != sorted(g2.edges.values()):
        return False
    sig1 = {v: _signature(g1, v) for v in range(1, g1.n + 1)}
    sig2 = {v: _signature(g2, v) for v in range(1, g2.n + 1)}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False
    order = sorted(range(1, g1.n + 1), key=lambda v: -g1.degree(v))
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in range(1, g2.n + 1):
            if w in used or sig2[w] != sig1[v]:
                continue
            if any(g1.m(v, u) != g2.m(w, image[u]) for u in image):
                continue
            image[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del image[v]
            used.discard(w)
        return False

    return extend(0)


def munin_predict(r1: Row, r2: Row, r: Row) -> tuple[int, int]:
    """Predicted ``(M(R1 & R2, R), M(R1 | R2, R))`` for a staggered pair with ``l(R2) < l(R1)``.

    The prediction is checked against direct computation on the
    intersection and union rows.
    """
    if commutes(r1, r2) or not r2.left < r1.left:
        raise GraphError("need R1, R2 non-commuting with l(R2) < l(R1)")
    big_m, m1, m2 = m_statistic(r1, r2), m_statistic(r1, r), m_statistic(r2, r)
    inter = min(big_m - 1, m1, m2)
    union = min(r.size, max(m1, m2, m1 + m2 - (big_m - 1)))
    lo, hi = r1.left, r2.right
    direct_inter = m_interval(lo, hi, r.left, r.right) if lo <= hi else 0
    direct_union = m_interval(r2.left, r1.right, r.left, r.right)
    if (inter, union) != (direct_inter, direct_union):
        raise AssertionError(
            f"munin prediction {(inter, union)} != direct {(direct_inter, direct_union)} for {r1},{r2},{r}"
        )
    return inter, union


def edge_list(g: WeightedGraph) -> Iterable[tuple[int, int, int]]:
    return ((u, v, m) for (u, v), m in g.edges.items())
