"""Generators and constructive planners for the stackable graph families."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .graphs import (CubeBoard, Graph, Move, Plan, diameter, eccentricity,
                     shells)
from .matching import Matching
from .ecc2 import ecc2_decide, ecc2_plan, plan_from_matching


class FamilyError(ValueError):
    """Invalid family parameters."""


# ---------------------------------------------------------------- generators

def path_graph(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def spider_graph(legs: Sequence[int]) -> Graph:
    """Spider with root 0 and legs of the given lengths, numbered leg by leg."""
    if not legs or any(l < 1 for l in legs):
        raise FamilyError("legs must be positive lengths")
    edges = []
    labels: list[object] = ["root"]
    nxt = 1
    for li, length in enumerate(legs):
        prev = 0
        for step in range(length):
            edges.append((prev, nxt))
            labels.append(f"leg{li}+{step + 1}")
            prev = nxt
            nxt += 1
    return Graph(nxt, edges, labels=labels)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def multipartite_graph(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive vertex ranges."""
    if len(sizes) < 2 or any(a < 1 for a in sizes):
        raise FamilyError("need at least two parts of positive size")
    bounds = [0]
    for a in sizes:
        bounds.append(bounds[-1] + a)
    edges = []
    labels = []
    for pi, a in enumerate(sizes):
        labels += [f"part{pi}.{j}" for j in range(a)]
        for pj in range(pi + 1, len(sizes)):
            for u in range(bounds[pi], bounds[pi + 1]):
                for v in range(bounds[pj], bounds[pj + 1]):
                    edges.append((u, v))
    return Graph(bounds[-1], edges, labels=labels)


def star_graph(m: int) -> Graph:
    return multipartite_graph([1, m])


def kneser_graph(m: int, k: int) -> Graph:
    """Vertices are the k-subsets of {1..m}; disjoint sets are adjacent."""
    if not (m >= 2 * k + 1 and k >= 1):
        raise FamilyError("kneser graph needs m >= 2k+1 for connectivity")
    subsets = list(combinations(range(1, m + 1), k))
    index = {s: i for i, s in enumerate(subsets)}
    edges = [(index[a], index[b]) for a, b in combinations(subsets, 2)
             if not set(a) & set(b)]
    return Graph(len(subsets), edges, labels=subsets)


def petersen_graph() -> Graph:
    return kneser_graph(5, 2)


def johnson_graph(m: int, k: int, s: int) -> Graph:
    """Vertices are the k-subsets of {1..m}; adjacency is |A & B| = s."""
    if not (0 <= s < k <= m):
        raise FamilyError("johnson graph needs 0 <= s < k <= m")
    subsets = list(combinations(range(1, m + 1), k))
    index = {t: i for i, t in enumerate(subsets)}
    edges = [(index[a], index[b]) for a, b in combinations(subsets, 2)
             if len(set(a) & set(b)) == s]
    return Graph(len(subsets), edges, labels=subsets)


def grid_graph(m: int, k: int) -> Graph:
    """The m-by-k grid; vertex (x, y) has index y*m + x."""
    if m < 1 or k < 1:
        raise FamilyError("grid dimensions must be positive")
    edges = []
    for y in range(k):
        for x in range(m):
            if x + 1 < m:
                edges.append((y * m + x, y * m + x + 1))
            if y + 1 < k:
                edges.append((y * m + x, (y + 1) * m + x))
    return Graph(m * k, edges, labels=[(x, y) for y in range(k)
                                       for x in range(m)])


def cube_graph(d: int) -> Graph:
    if d < 0 or d > 12:
        raise FamilyError("explicit cube graphs supported for 0 <= d <= 12")
    return CubeBoard(d).to_graph()


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()


def generate(spec: FamilySpec) -> Graph:
    fam, p = spec.family, spec.params
    if fam == "path":
        return path_graph(*p)
    if fam == "cycle":
        return cycle_graph(*p)
    if fam == "spider":
        return spider_graph(p)
    if fam == "complete":
        return complete_graph(*p)
    if fam == "multipartite":
        return multipartite_graph(p)
    if fam == "star":
        return star_graph(*p)
    if fam == "kneser":
        return kneser_graph(*p)
    if fam == "petersen":
        return petersen_graph()
    if fam == "johnson":
        return johnson_graph(*p)
    if fam == "grid":
        return grid_graph(*p)
    if fam == "cube":
        return cube_graph(*p)
    raise FamilyError(f"unknown family {fam!r}")


# ----------------------------------------------------------------- planners

def _endpoint_moves(seq: Sequence[int]) -> list[Move]:
    """Stack a fresh all-ones path, given as a vertex sequence, onto its
    first vertex.  Requires dist(seq[i], seq[j]) = |i - j| in the host."""
    if len(seq) <= 1:
        return []
    inner = list(reversed(seq[1:]))
    return _endpoint_moves(inner) + [Move(seq[-1], seq[0])]


def _stack_path_onto(seq: Sequence[int], j: int) -> list[Move]:
    """Stack a fresh all-ones path onto seq[j] (any position)."""
    moves: list[Move] = []
    left = list(seq[:j])
    if left:
        moves += _endpoint_moves(left)           # pile at seq[0], distance j
        moves.append(Move(left[0], seq[j]))
    right = list(reversed(seq[j + 1:]))
    if right:
        moves += _endpoint_moves(right)          # pile at seq[-1]
        moves.append(Move(right[0], seq[j]))
    return moves


def plan_path_endpoint(n: int) -> Plan:
    """Stack the path 0..n-1 onto vertex 0 in exactly n-1 moves."""
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return Plan(n, 0, tuple(_endpoint_moves(list(range(n)))))


def plan_path(n: int, r: int) -> Plan:
    if not 0 <= r < n:
        raise FamilyError("target out of range")
    moves: list[Move] = []
    left = list(range(r - 1, -1, -1))       # r-1 down to 0, far end last
    if left:
        moves += _endpoint_moves(list(reversed(left)))  # stack 0..r-1 onto 0
        moves.append(Move(0, r))
    right = list(range(r + 1, n))
    if right:
        moves += _endpoint_moves(list(reversed(right)))  # stack onto n-1
        moves.append(Move(n - 1, r))
    return Plan(n, r, tuple(moves))


def plan_cycle(n: int, r: int) -> Plan:
    """Split the cycle at the far side of r into two arcs and stack each
    arc onto the arc endpoint whose distance to r equals the arc size."""
    if not 0 <= r < n:
        raise FamilyError("target out of range")
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    m = n // 2
    rel = lambda i: (r + i) % n
    moves: list[Move] = []
    arc1 = [rel(i) for i in range(m, 0, -1)]          # stacked onto rel(m)
    moves += _endpoint_moves(arc1)
    moves.append(Move(rel(m), r))
    arc2 = [rel(i) for i in range(m + 1, n)]          # stacked onto rel(m+1)
    if arc2:
        moves += _endpoint_moves(arc2)
        moves.append(Move(rel(m + 1), r))
    return Plan(n, r, tuple(moves))


def plan_spider(legs: Sequence[int]) -> Plan:
    """Stack a spider onto its root: each leg piles up on its leaf, then
    the whole pile jumps the leg length back to the root."""
    g = spider_graph(legs)
    moves: list[Move] = []
    nxt = 1
    for length in legs:
        leg = list(range(nxt, nxt + length))
        nxt += length
        moves += _endpoint_moves(list(reversed(leg)))   # stack onto the leaf
        moves.append(Move(leg[-1], 0))
    return Plan(g.n, 0, tuple(moves))


def plan_dominating(g: Graph, r: int) -> Plan:
    if set(g.adj[r]) | {r} != set(range(g.n)):
        raise FamilyError(f"vertex {r} is not dominating")
    return Plan(g.n, r, tuple(Move(z, r) for z in range(g.n) if z != r))


def multipartite_decide(sizes: Sequence[int], i: int) -> tuple[bool, Optional[Plan]]:
    """Closed-form decision for a complete multipartite target: part i is
    stackable iff its size is at most (n+1)/2.  A plan is produced when
    the decision is positive."""
    if not 0 <= i < len(sizes):
        raise FamilyError("part index out of range")
    n = sum(sizes)
    decision = 2 * sizes[i] <= n + 1
    if not decision:
        return False, None
    g = multipartite_graph(sizes)
    r = sum(sizes[:i])
    if sizes[i] == 1:
        return True, plan_dominating(g, r)
    plan = ecc2_plan(g, r)
    if plan is None:
        raise AssertionError("closed form and matching decision disagree")
    return True, plan


def plan_ham_ecc2(g: Graph, r: int, hampath: Sequence[int]) -> Plan:
    """Plan for an eccentricity-2 target from a Hamiltonian path: match
    consecutive vertices along the two half-paths on either side of r,
    leaving only neighbors of r unmatched."""
    if sorted(hampath) != list(range(g.n)):
        raise FamilyError("sequence is not a permutation of the vertices")
    for a, b in zip(hampath, hampath[1:]):
        if b not in g.adj[a]:
            raise FamilyError(f"consecutive vertices {a},{b} are not adjacent")
    if eccentricity(g, r) != 2:
        raise FamilyError(f"target {r} does not have eccentricity 2")
    pos = hampath.index(r)
    pairs: list[tuple[int, int]] = []
    for piece in (list(reversed(hampath[:pos])), list(hampath[pos + 1:])):
        # piece[0] is adjacent to r; drop it when the piece has odd size.
        start = 1 if len(piece) % 2 else 0
        for idx in range(start, len(piece) - 1, 2):
            pairs.append((piece[idx], piece[idx + 1]))
    return plan_from_matching(g, r, Matching.of(pairs))


def kneser_stackable(m: int, k: int) -> tuple[Optional[bool], Optional[Graph]]:
    """Decide stackability of the Kneser graph K(m, k).  Proven range:
    m >= 3k-1 >= 5 plus (5, 2).  In the unresolved band 2k+1 <= m <= 3k-2
    the answer is reported as unknown rather than guessed."""
    if k < 1 or m < 2 * k + 1:
        raise FamilyError("kneser graph needs m >= 2k+1")
    if not ((m >= 3 * k - 1 and 3 * k - 1 >= 5) or (m, k) == (5, 2)):
        return None, None
    g = kneser_graph(m, k)
    if diameter(g) != 2:
        raise AssertionError("kneser graph in range should have diameter 2")
    # Vertex transitive, so one target decides all of them.
    w = ecc2_decide(g, 0)
    return w.decision, g


def plan_grid(m: int, k: int, r: tuple[int, int]) -> Plan:
    """Stack the m-by-k grid onto r = (x, y): the row and column through r
    form four straight arms; each open quadrant is cut into straight rows
    or columns staged at distance equal to their size.  A square quadrant
    borrows the far cell of one arm to even up its last line."""
    a, b = r
    if not (0 <= a < m and 0 <= b < k):
        raise FamilyError("target out of range")
    if m == 1 or k == 1:
        plan = plan_path(max(m, k), a if k == 1 else b)
        return Plan(m * k, plan.target, plan.moves)
    vid = lambda x, y: y * m + x
    target = vid(a, b)
    moves: list[Move] = []
    # Arms before donation: lists run from the cell next to r outward.
    arms = {
        "E": [vid(x, b) for x in range(a + 1, m)],
        "N": [vid(a, y) for y in range(b + 1, k)],
        "W": [vid(x, b) for x in range(a - 1, -1, -1)],
        "S": [vid(a, y) for y in range(b - 1, -1, -1)],
    }
    donated: set[str] = set()

    def quadrant(sx: int, sy: int, steal_arm: str) -> None:
        w = (m - 1 - a) if sx > 0 else a
        h = (k - 1 - b) if sy > 0 else b
        if w == 0 or h == 0:
            return
        cell = lambda i, t: vid(a + sx * i, b + sy * t)
        if w > h:
            lines = [[cell(i, t) for i in range(1, w + 1)] for t in range(1, h + 1)]
            stages = [w - t - 1 for t in range(1, h + 1)]   # list index of stage
        elif h > w:
            lines = [[cell(s, t) for t in range(1, h + 1)] for s in range(1, w + 1)]
            stages = [h - s - 1 for s in range(1, w + 1)]
        else:
            # Square quadrant: all lines but the last are staged as usual;
            # the last line grows by the far cell of the adjacent arm and
            # is staged one step further out.
            if steal_arm in ("E", "W"):                      # column lines
                lines = [[cell(s, t) for t in range(1, h + 1)]
                         for s in range(1, w)]
                stages = [h - s - 1 for s in range(1, w)]
                extended = [cell(w, t) for t in range(0, h + 1)]
            else:                                            # row lines
                lines = [[cell(i, t) for i in range(1, w + 1)]
                         for t in range(1, h)]
                stages = [w - t - 1 for t in range(1, h)]
                extended = [cell(i, h) for i in range(0, w + 1)]
            donated.add(steal_arm)
            lines.append(extended)
            stages.append(1)
        for line, stage in zip(lines, stages):
            moves.extend(_stack_path_onto(line, stage))
            moves.append(Move(line[stage], target))

    quadrant(+1, +1, "E")    # north-east steals the east arm's far cell
    quadrant(-1, +1, "N")
    quadrant(-1, -1, "W")
    quadrant(+1, -1, "S")
    for name, cells in arms.items():
        if name in donated:
            cells = cells[:-1]
        if not cells:
            continue
        moves.extend(_endpoint_moves(list(reversed(cells))))
        moves.append(Move(cells[-1], target))
    return Plan(m * k, target, tuple(moves))
