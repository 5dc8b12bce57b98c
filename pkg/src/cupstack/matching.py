"""Maximum matching, Gallai-Edmonds structure, and assignment solving.

Unlike the game board, matching hosts may be disconnected (the structure
theory is applied to a graph with a vertex removed), so this module works
on a bare adjacency view rather than the connected Graph type.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment


class BareGraph:
    """Simple undirected graph, connectivity not required."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def without(self, removed: set[int]) -> tuple["BareGraph", dict[int, int]]:
        keep = [v for v in range(self.n) if v not in removed]
        remap = {v: i for i, v in enumerate(keep)}
        edges = [(remap[u], remap[v]) for u, v in self.edges()
                 if u in remap and v in remap]
        return BareGraph(len(keep), edges), remap

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in self.adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            out.append(sorted(comp))
        return out


def _bare(g) -> BareGraph:
    if isinstance(g, BareGraph):
        return g
    return BareGraph(g.n, g.edges())


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]

    @staticmethod
    def of(pairs: Iterable[tuple[int, int]]) -> "Matching":
        return Matching(frozenset(tuple(sorted(p)) for p in pairs))

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def max_matching(g) -> Matching:
    """Maximum-cardinality matching by augmenting paths with blossom
    contraction; deterministic because roots and neighbors are scanned
    in ascending order."""
    g = _bare(g)
    n = g.n
    match = [-1] * n

    def find_augmenting(root: int) -> bool:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = True
                blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in g.adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for root in range(n):
        if match[root] == -1:
            find_augmenting(root)
    return Matching.of((v, match[v]) for v in range(n) if match[v] > v)


def matching_number(g) -> int:
    return max_matching(g).size


def has_perfect_matching(g) -> bool:
    g = _bare(g)
    return g.n % 2 == 0 and matching_number(g) * 2 == g.n


def is_factor_critical(g) -> bool:
    """True iff removing any single vertex leaves a perfectly matchable graph."""
    g = _bare(g)
    if g.n % 2 == 0:
        return False
    for v in range(g.n):
        sub, _ = g.without({v})
        if not has_perfect_matching(sub):
            return False
    return True


@dataclass(frozen=True)
class GallaiEdmondsPartition:
    I_components: tuple[tuple[int, ...], ...]
    A: tuple[int, ...]
    Z: tuple[int, ...]

    @property
    def I(self) -> tuple[int, ...]:
        return tuple(sorted(v for comp in self.I_components for v in comp))


def gallai_edmonds(g) -> GallaiEdmondsPartition:
    """Structure partition (I, A, Z): I holds the vertices missed by some
    maximum matching, found by comparing the matching number with and
    without each vertex; A is the outside neighborhood of I; Z the rest."""
    g = _bare(g)
    nu = matching_number(g)
    inessential = set()
    for v in range(g.n):
        sub, _ = g.without({v})
        if matching_number(sub) == nu:
            inessential.add(v)
    A = sorted({u for v in inessential for u in g.adj[v]} - inessential)
    Z = sorted(set(range(g.n)) - inessential - set(A))
    sub, remap = g.without(set(range(g.n)) - inessential)
    inverse = {i: v for v, i in remap.items()}
    comps = tuple(tuple(sorted(inverse[i] for i in comp))
                  for comp in sub.components())
    return GallaiEdmondsPartition(tuple(sorted(comps)), tuple(A), tuple(Z))


def near_perfect_matching(g, avoid: int) -> Matching:
    """Perfect matching of g minus one vertex; g must be factor-critical."""
    g = _bare(g)
    sub, remap = g.without({avoid})
    m = max_matching(sub)
    if m.size * 2 != sub.n:
        raise ValueError(f"graph minus vertex {avoid} has no perfect matching")
    inverse = {i: v for v, i in remap.items()}
    return Matching.of((inverse[a], inverse[b]) for a, b in m.edges)


def hungarian_max_weight(weights: Sequence[Sequence[int]]) -> tuple[list[tuple[int, int]], int]:
    """Maximum-weight perfect matching of a square bipartite instance."""
    w = np.asarray(weights)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ValueError("instance must be square")
    rows, cols = linear_sum_assignment(w, maximize=True)
    pairs = sorted(zip(rows.tolist(), cols.tolist()))
    total = int(w[rows, cols].sum())
    return pairs, total
