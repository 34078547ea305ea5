"""Seeded random inputs: horizontal strips, eligible row pairs and admissible graphs."""

from __future__ import annotations

import random
from typing import Iterator

from .graph import WeightedGraph, check_admissible, commutes
from .shapes import HorizontalStrip, Row


def _rng(seed_or_rng: int | random.Random | None) -> random.Random:
    return seed_or_rng if isinstance(seed_or_rng, random.Random) else random.Random(seed_or_rng)


def random_strip(
    rng: int | random.Random | None = None, max_rows: int = 4, max_cells: int = 4, min_rows: int = 1
) -> HorizontalStrip:
    """Row sizes uniform in ``1..max_cells``; left ends uniform in a window twice the total size."""
    rng = _rng(rng)
    n = rng.randint(min_rows, max_rows)
    sizes = [rng.randint(1, max_cells) for _ in range(n)]
    window = 2 * sum(sizes)
    rows = []
    for size in sizes:
        left = rng.randint(0, window - 1)
        rows.append(Row.from_contents(left, left + size - 1))
    shift = min(r.b for r in rows)
    return HorizontalStrip(tuple(Row(r.a - shift, r.b - shift) for r in rows))


def random_strips(
    seed: int, count: int, max_rows: int = 4, max_cells: int = 4, min_rows: int = 1
) -> list[HorizontalStrip]:
    rng = random.Random(seed)
    return [random_strip(rng, max_rows, max_cells, min_rows) for _ in range(count)]


def random_row(rng: random.Random, max_cells: int = 4, window: int = 8) -> Row:
    size = rng.randint(1, max_cells)
    left = rng.randint(0, window)
    return Row.from_contents(left, left + size - 1)


def random_pair(rng: random.Random, kind: str, max_cells: int = 4, window: int = 8) -> tuple[Row, Row]:
    """An adjacent pair ``(R, R')`` eligible for ``kind`` in ``{"merge", "commute", "inductive"}``."""
    while True:
        r = random_row(rng, max_cells, window)
        if kind == "merge":
            size = rng.randint(1, max_cells)
            return r, Row.from_contents(r.right + 1, r.right + size)
        rp = random_row(rng, max_cells, window)
        if kind == "commute" and commutes(r, rp):
            return r, rp
        if kind == "inductive" and not commutes(r, rp) and rp.left < r.left:
            return r, rp


def embed_pair(
    rng: random.Random, pair: tuple[Row, Row], spectators: int, max_cells: int = 3, window: int = 8
) -> tuple[HorizontalStrip, int]:
    """Insert the pair at a random position among ``spectators`` random rows; returns the pair index."""
    others = [random_row(rng, max_cells, window) for _ in range(spectators)]
    k = rng.randint(0, spectators)
    rows = others[:k] + list(pair) + others[k:]
    return HorizontalStrip(tuple(rows)), k


def _random_component(rng: random.Random, start: int, size: int, max_weight: int):
    labels = list(range(start, start + size))
    weights = {v: rng.randint(1, max_weight) for v in labels}
    if size == 1:
        return weights, {}
    inner = labels[1:-1]
    spine = [labels[0]] + sorted(v for v in inner if rng.random() < 0.5) + [labels[-1]]
    edges = {}
    for u, v in zip(spine, spine[1:]):
        # every label strictly between u and v hangs off v as a leg of full weight
        for j in range(u + 1, v):
            weights[v] = max(weights[v], weights[j])
            edges[(j, v)] = weights[j]
        edges[(u, v)] = rng.randint(1, min(weights[u], weights[v]))
    return weights, edges


def random_admissible_graph(
    rng: int | random.Random | None = None, max_n: int = 6, max_weight: int = 4, max_tries: int = 1000
) -> WeightedGraph:
    """Triangle-free graph passing :func:`check_admissible`, built component by component."""
    rng = _rng(rng)
    for _ in range(max_tries):
        n = rng.randint(1, max_n)
        weights: dict[int, int] = {}
        edges: dict[tuple[int, int], int] = {}
        start = 1
        while start <= n:
            size = rng.randint(1, n - start + 1)
            w, e = _random_component(rng, start, size, max_weight)
            weights.update(w)
            edges.update(e)
            start += size
        g = WeightedGraph(tuple(weights[v] for v in range(1, n + 1)), edges)
        if check_admissible(g):
            return g
    raise RuntimeError("no admissible graph found; loosen the parameters")


def random_admissible_graphs(seed: int, count: int, max_n: int = 6, max_weight: int = 4) -> Iterator[WeightedGraph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_admissible_graph(rng, max_n, max_weight)
