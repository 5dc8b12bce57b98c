"""Graph representation, distances, and the cup game semantics.

Vertices are dense integers 0..n-1.  A move picks up every cup on one
vertex and drops the pile on another vertex that already holds a cup,
provided the hop distance between the two equals the pile size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed or out-of-contract graph input."""


class Graph:
    """Connected simple undirected graph on vertices 0..n-1."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[Sequence[object]] = None):
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj)
        self.labels = tuple(labels) if labels is not None else None
        self._dist: Optional[list[list[int]]] = None
        if not self._connected():
            raise GraphError("graph is disconnected")

    def _connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def bfs_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def distances(self) -> list[list[int]]:
        if self._dist is None:
            self._dist = [self.bfs_from(s) for s in range(self.n)]
        return self._dist

    def dist(self, u: int, v: int) -> int:
        return self.distances()[u][v]

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph; returns it with the old->new vertex map."""
        order = sorted(vertices)
        remap = {v: i for i, v in enumerate(order)}
        sub_edges = [(remap[u], remap[v]) for u, v in self.edges()
                     if u in remap and v in remap]
        return Graph(len(order), sub_edges), remap


class CubeBoard:
    """Distance backend for the hypercube Q^d: vertices are bitmasks and
    the hop distance is the Hamming distance, so no matrix is stored."""

    def __init__(self, d: int):
        if d < 0:
            raise GraphError("dimension must be nonnegative")
        self.d = d
        self.n = 1 << d

    def dist(self, u: int, v: int) -> int:
        return (u ^ v).bit_count()

    def neighbors(self, u: int) -> list[int]:
        return [u ^ (1 << i) for i in range(self.d)]

    def to_graph(self) -> Graph:
        return Graph(self.n, [(u, u ^ (1 << i))
                              for u in range(self.n)
                              for i in range(self.d) if not u >> i & 1],
                     labels=[format(u, f"0{max(self.d, 1)}b")
                             for u in range(self.n)])


def parse_graph(text: str) -> Graph:
    """Parse the edge-list graph format: '# comment', 'n <count>', 'e <u> <v>'."""
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate n line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: malformed n line")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before n line")
            if len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
                raise GraphError(f"line {lineno}: malformed edge line")
            u, v = int(parts[1]), int(parts[2])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"line {lineno}: vertex out of range")
            if u == v:
                raise GraphError(f"line {lineno}: self-loop")
            if (u, v) in edges or (v, u) in edges:
                raise GraphError(f"line {lineno}: duplicate edge")
            edges.append((u, v))
        else:
            raise GraphError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphError("missing n line")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def all_pairs_distances(g: Graph) -> list[list[int]]:
    return g.distances()


def shells(g: Graph, r: int) -> list[list[int]]:
    """Vertex sets N_0(r)..N_ecc(r) grouped by distance from r."""
    dist = g.bfs_from(r)
    out: list[list[int]] = [[] for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        out[d].append(v)
    return out


def eccentricity(g: Graph, v: int) -> int:
    return max(g.bfs_from(v))


def diameter(g: Graph) -> int:
    return max(eccentricity(g, v) for v in range(g.n))


@dataclass(frozen=True, slots=True)
class Move:
    src: int
    dst: int

    def __post_init__(self):
        if self.src == self.dst:
            raise ValueError("move endpoints must differ")


@dataclass(frozen=True)
class Configuration:
    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError("negative cup count")

    @property
    def size(self) -> int:
        return sum(self.counts)

    @staticmethod
    def all_ones(n: int) -> "Configuration":
        return Configuration((1,) * n)


@dataclass(frozen=True)
class Plan:
    n: int
    target: int
    moves: tuple[Move, ...]
    initial: Optional[Configuration] = None

    def initial_config(self) -> Configuration:
        return self.initial if self.initial is not None else Configuration.all_ones(self.n)

    def to_json_dict(self) -> dict:
        out: dict = {"n": self.n, "target": self.target,
                     "moves": [[m.src, m.dst] for m in self.moves]}
        if self.initial is not None:
            out["initial"] = list(self.initial.counts)
        return out

    @staticmethod
    def from_json_dict(data: dict) -> "Plan":
        moves = tuple(Move(int(a), int(b)) for a, b in data["moves"])
        initial = None
        if data.get("initial") is not None:
            initial = Configuration(tuple(int(c) for c in data["initial"]))
        return Plan(int(data["n"]), int(data["target"]), moves, initial)


def legal_move(board, c: Configuration, mv: Move) -> bool:
    """A move is legal when both endpoints hold a cup and the pile on the
    source exactly covers the hop distance to the destination."""
    pile = c.counts[mv.src]
    return pile >= 1 and c.counts[mv.dst] >= 1 and board.dist(mv.src, mv.dst) == pile


def apply_move(c: Configuration, mv: Move) -> Configuration:
    if c.counts[mv.src] < 1:
        raise ValueError(f"source {mv.src} has no cup")
    if c.counts[mv.dst] < 1:
        raise ValueError(f"destination {mv.dst} has no cup")
    counts = list(c.counts)
    counts[mv.dst] += counts[mv.src]
    counts[mv.src] = 0
    return Configuration(tuple(counts))


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    step: Optional[int] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_plan(board, plan: Plan, initial: Optional[Configuration] = None) -> VerifyResult:
    """Replay a plan move by move; accept iff every move is legal and the
    final configuration has every cup on the target."""
    config = initial if initial is not None else plan.initial_config()
    if len(config.counts) != board.n:
        return VerifyResult(False, None, "initial configuration size mismatch")
    counts = list(config.counts)
    total = sum(counts)
    for i, mv in enumerate(plan.moves):
        if not (0 <= mv.src < board.n and 0 <= mv.dst < board.n):
            return VerifyResult(False, i, f"move {i}: vertex out of range")
        pile = counts[mv.src]
        if pile < 1:
            return VerifyResult(False, i, f"move {i}: source {mv.src} empty")
        if counts[mv.dst] < 1:
            return VerifyResult(False, i, f"move {i}: destination {mv.dst} empty")
        d = board.dist(mv.src, mv.dst)
        if d != pile:
            return VerifyResult(
                False, i,
                f"move {i}: pile {pile} at {mv.src} but dist({mv.src},{mv.dst})={d}")
        counts[mv.dst] += pile
        counts[mv.src] = 0
    if counts[plan.target] != total:
        return VerifyResult(False, None, "final configuration not concentrated on target")
    return VerifyResult(True)


@dataclass(frozen=True)
class StackingPart:
    vertices: tuple[int, ...]
    cups: tuple[int, ...]        # cup counts aligned with vertices
    staging: int                 # vertex the part stacks onto


@dataclass(frozen=True)
class StackingPartition:
    target: int
    parts: tuple[StackingPart, ...]


FeasibilityOracle = Callable[[Graph, Configuration, int], Optional[Plan]]


def verify_partition(g: Graph, c: Configuration, r: int,
                     p: StackingPartition,
                     feasibility_oracle: FeasibilityOracle) -> VerifyResult:
    """Check the four defining properties of a stacking partition:
    (1) the part vertex sets cover V - {r}, (2) the sub-configurations are
    disjoint and sum to the cups off r, (3) each part stacks onto its
    staging vertex whose distance to r equals its cup total, and (4) the
    within-part plan only uses moves whose endpoint distance inside the
    part equals the distance in the host graph."""
    if p.target != r:
        return VerifyResult(False, None, "partition target mismatch")
    covered: set[int] = set()
    for idx, part in enumerate(p.parts):
        if r in part.vertices:
            return VerifyResult(False, idx, f"part {idx}: contains the target")
        if covered & set(part.vertices):
            return VerifyResult(False, idx, f"part {idx}: overlaps an earlier part (property 2)")
        covered |= set(part.vertices)
    if covered != set(range(g.n)) - {r}:
        return VerifyResult(False, None, "parts do not cover V - target (property 1)")
    total = sum(sum(part.cups) for part in p.parts)
    if total != c.size - c.counts[r]:
        return VerifyResult(False, None, "sub-configurations do not sum to C - r (property 2)")
    for idx, part in enumerate(p.parts):
        for v, cups in zip(part.vertices, part.cups):
            if cups != c.counts[v]:
                return VerifyResult(
                    False, idx, f"part {idx}: cup count at {v} disagrees with C (property 2)")
        pile = sum(part.cups)
        if g.dist(part.staging, r) != pile:
            return VerifyResult(
                False, idx,
                f"part {idx}: dist(staging, target) != cup total (property 3)")
        try:
            sub, remap = g.subgraph(part.vertices)
        except GraphError:
            return VerifyResult(False, idx, f"part {idx}: induced subgraph disconnected")
        sub_counts = [0] * sub.n
        for v, cups in zip(part.vertices, part.cups):
            sub_counts[remap[v]] = cups
        sub_config = Configuration(tuple(sub_counts))
        sub_plan = feasibility_oracle(sub, sub_config, remap[part.staging])
        if sub_plan is None:
            return VerifyResult(
                False, idx, f"part {idx}: not stackable onto staging vertex (property 3)")
        if not verify_plan(sub, sub_plan, sub_config):
            return VerifyResult(False, idx, f"part {idx}: feasibility plan invalid")
        inverse = {i: v for v, i in remap.items()}
        for mv in sub_plan.moves:
            if sub.dist(mv.src, mv.dst) != g.dist(inverse[mv.src], inverse[mv.dst]):
                return VerifyResult(
                    False, idx,
                    f"part {idx}: within-part move distance differs from host distance (property 4)")
    return VerifyResult(True)
