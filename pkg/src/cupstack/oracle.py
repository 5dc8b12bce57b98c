"""Exhaustive memoized search deciding stackability on small instances.

This is the ground truth the constructive planners are checked against.
States are exact cup-count vectors; the search is depth first with a
visited set, and a configurable state budget turns oversized instances
into an explicit "inconclusive" outcome instead of a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Configuration, Graph, Move, Plan

DEFAULT_BUDGET = 10**7


class BudgetExhausted(Exception):
    """The state budget ran out before the search was complete."""


@dataclass(frozen=True)
class OracleResult:
    decision: Optional[bool]     # None means inconclusive
    plan: Optional[Plan]
    states: int

    @property
    def inconclusive(self) -> bool:
        return self.decision is None


def _search(g: Graph, c: Configuration, r: int, budget: int,
            want_plan: bool) -> OracleResult:
    n = g.n
    dist = g.distances()
    total = c.size
    goal = tuple(total if v == r else 0 for v in range(n))
    start = tuple(c.counts)
    if start == goal:
        return OracleResult(True, Plan(n, r, ()) if want_plan else None, 1)
    visited = {start}
    # Iterative DFS; each stack frame tracks the move iterator position.
    path: list[Move] = []
    stack: list[tuple[tuple[int, ...], int, int]] = [(start, 0, 0)]
    while stack:
        state, src, dst = stack[-1]
        found = None
        while src < n:
            if state[src] == 0:
                src, dst = src + 1, 0
                continue
            pile = state[src]
            row = dist[src]
            while dst < n:
                if dst != src and state[dst] >= 1 and row[dst] == pile:
                    nxt = list(state)
                    nxt[dst] += pile
                    nxt[src] = 0
                    nxt_t = tuple(nxt)
                    if nxt_t not in visited:
                        found = (nxt_t, Move(src, dst))
                        dst += 1
                        break
                dst += 1
            if found is not None:
                break
            src, dst = src + 1, 0
        if found is None:
            stack.pop()
            if path:
                path.pop()
            continue
        stack[-1] = (state, src, dst)
        nxt_t, mv = found
        if len(visited) >= budget:
            return OracleResult(None, None, len(visited))
        visited.add(nxt_t)
        path.append(mv)
        if nxt_t == goal:
            plan = Plan(n, r, tuple(path), None if start == (1,) * n
                        else Configuration(start)) if want_plan else None
            return OracleResult(True, plan, len(visited))
        stack.append((nxt_t, 0, 0))
    return OracleResult(False, None, len(visited))


def oracle_search(g: Graph, c: Configuration, r: int,
                  budget: int = DEFAULT_BUDGET) -> OracleResult:
    if not (0 <= r < g.n):
        raise ValueError("target out of range")
    if len(c.counts) != g.n:
        raise ValueError("configuration size mismatch")
    if c.size < 1:
        raise ValueError("configuration must hold at least one cup")
    return _search(g, c, r, budget, want_plan=True)


def oracle_decide(g: Graph, c: Configuration, r: int,
                  budget: int = DEFAULT_BUDGET) -> Optional[bool]:
    return oracle_search(g, c, r, budget).decision


def oracle_plan(g: Graph, c: Configuration, r: int,
                budget: int = DEFAULT_BUDGET) -> Optional[Plan]:
    res = oracle_search(g, c, r, budget)
    if res.inconclusive:
        raise BudgetExhausted(f"budget of {budget} states exhausted")
    return res.plan


def oracle_stackable(g: Graph, budget: int = DEFAULT_BUDGET) -> dict[int, Optional[bool]]:
    """Per-target decision from the all-ones configuration."""
    ones = Configuration.all_ones(g.n)
    return {r: oracle_decide(g, ones, r, budget) for r in range(g.n)}


def feasibility_oracle(g: Graph, c: Configuration, r: int,
                       budget: int = DEFAULT_BUDGET) -> Optional[Plan]:
    """Feasibility backend for partition verification: a plan or None."""
    res = oracle_search(g, c, r, budget)
    if res.inconclusive:
        raise BudgetExhausted(f"budget of {budget} states exhausted")
    return res.plan if res.decision else None
