"""Polynomial decision for eccentricity-2 targets, and plan extraction.

A target r with eccentricity 2 is reachable by every cup iff the graph
has a matching saturating the distance-2 shell N_2(r).  The decision
pipeline builds such a matching from the Gallai-Edmonds structure of
G - r: a perfect matching on Z, an assignment of A into the
factor-critical components maximizing how many components that lie
entirely inside N_2(r) get covered, and near-perfect matchings filling
each component.  The final verdict is read off the assembled matching,
never assumed from the intermediate steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Configuration, Graph, Move, Plan, eccentricity, shells
from .matching import (BareGraph, GallaiEdmondsPartition, Matching,
                       gallai_edmonds, hungarian_max_weight, max_matching,
                       near_perfect_matching)


@dataclass(frozen=True)
class Ecc2Witness:
    decision: bool
    matching: Optional[Matching]           # saturates N_2(r) iff decision
    ge: GallaiEdmondsPartition             # structure of G - r (original labels)
    critical_components: tuple[tuple[int, ...], ...]  # components inside N_2(r)
    assignment: tuple[tuple[int, int], ...]  # (A vertex, component index) pairs


def _component_matchings(host: BareGraph, comp: tuple[int, ...],
                         avoid: int) -> list[tuple[int, int]]:
    sub, remap = host.without(set(range(host.n)) - set(comp))
    inverse = {i: v for v, i in remap.items()}
    m = near_perfect_matching(sub, remap[avoid])
    return [(inverse[a], inverse[b]) for a, b in m.edges]


def ecc2_decide(g: Graph, r: int) -> Ecc2Witness:
    if eccentricity(g, r) != 2:
        raise ValueError(f"target {r} does not have eccentricity 2")
    sh = shells(g, r)
    n2 = set(sh[2])
    # Work on G - r, keeping original vertex labels throughout.
    host, remap = BareGraph(g.n, g.edges()).without({r})
    inverse = {i: v for v, i in remap.items()}
    ge_local = gallai_edmonds(host)
    comps = tuple(tuple(sorted(inverse[i] for i in comp))
                  for comp in ge_local.I_components)
    A = tuple(sorted(inverse[i] for i in ge_local.A))
    Z = tuple(sorted(inverse[i] for i in ge_local.Z))
    ge = GallaiEdmondsPartition(tuple(sorted(comps)), A, Z)
    comps = ge.I_components

    edges: set[tuple[int, int]] = set()
    # Perfect matching on Z.
    if Z:
        subz, remapz = host.without(set(range(host.n)) -
                                    {remap[v] for v in Z})
        invz = {i: inverse[h] for h, i in remapz.items()}
        mz = max_matching(subz)
        if mz.size * 2 != subz.n:
            raise AssertionError("Z has no perfect matching; structure broken")
        for a, b in mz.edges:
            edges.add(tuple(sorted((invz[a], invz[b]))))

    critical = tuple(comp for comp in comps if set(comp) <= n2)
    assignment: list[tuple[int, int]] = []
    assigned_avoid: dict[int, int] = {}   # component index -> covered vertex y_x
    if comps and A:
        adj_sets = [set(comp) for comp in comps]
        neighbor = {v: set(g.adj[v]) for v in A}
        k = len(comps)
        big = k + 1
        # Columns: real A vertices then dummies, padded to k.
        weights = [[0] * k for _ in range(k)]
        for ci, comp in enumerate(comps):
            for ai, a in enumerate(A):
                if neighbor[a] & adj_sets[ci]:
                    weights[ci][ai] = big if set(comp) <= n2 else 1
        pairs, _ = hungarian_max_weight(weights)
        for ci, col in pairs:
            if col < len(A) and weights[ci][col] > 0:
                a = A[col]
                y = min(neighbor[a] & adj_sets[ci])
                edges.add(tuple(sorted((a, y))))
                assignment.append((a, ci))
                assigned_avoid[ci] = y
    for ci, comp in enumerate(comps):
        if len(comp) == 1 and ci not in assigned_avoid:
            continue
        if ci in assigned_avoid:
            avoid = assigned_avoid[ci]
        else:
            outside = [v for v in comp if v not in n2]
            avoid = min(outside) if outside else min(comp)
        if len(comp) > 1:
            for a, b in _component_matchings(
                    host, tuple(remap[v] for v in comp), remap[avoid]):
                edges.add(tuple(sorted((inverse[a], inverse[b]))))
    m = Matching(frozenset(edges))
    decision = n2 <= m.vertices()
    return Ecc2Witness(decision, m if decision else None, ge, critical,
                       tuple(sorted(assignment)))


def plan_from_matching(g: Graph, r: int, m: Matching) -> Plan:
    """Turn an N_2(r)-saturating matching into an explicit plan: matched
    pairs feed two cups to r over distance 2, everything else walks in.
    Dominating targets are the degenerate case with an empty shell."""
    if eccentricity(g, r) > 2:
        raise ValueError(f"target {r} has eccentricity above 2")
    sh = shells(g, r)
    n2 = set(sh[2]) if len(sh) > 2 else set()
    moves: list[Move] = []
    used: set[int] = {r}
    for x, y in m.sorted_edges():
        if y in n2:
            pass
        elif x in n2:
            x, y = y, x
        else:
            continue   # pair without a distance-2 endpoint; handled as singles
        moves.append(Move(x, y))
        moves.append(Move(y, r))
        used.add(x)
        used.add(y)
    singles = [z for z in range(g.n) if z not in used]
    for z in singles:
        if z in n2:
            raise ValueError(f"vertex {z} in N_2({r}) is not matched")
        moves.append(Move(z, r))
    return Plan(g.n, r, tuple(moves))


def ecc2_plan(g: Graph, r: int) -> Optional[Plan]:
    w = ecc2_decide(g, r)
    if not w.decision:
        return None
    return plan_from_matching(g, r, w.matching)


def diam2_decide(g: Graph) -> dict[int, Ecc2Witness]:
    from .graphs import diameter
    if diameter(g) != 2:
        raise ValueError("graph does not have diameter 2")
    out: dict[int, Ecc2Witness] = {}
    empty_ge = GallaiEdmondsPartition((), (), ())
    for r in range(g.n):
        if eccentricity(g, r) == 1:
            # Dominating target: every cup is one step away.
            out[r] = Ecc2Witness(True, Matching(frozenset()), empty_ge, (), ())
        else:
            out[r] = ecc2_decide(g, r)
    return out
