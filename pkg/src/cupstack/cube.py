"""Hypercube stacking plans for Q^d up to d = 20.

Vertices are d-bit masks and distance is the Hamming distance.  The plan
for the full cube is assembled from fragments, one per axis-aligned
subcube of a suitable split: each fragment empties its own vertices into
piles whose sizes equal their weights, and jumps each pile straight to
the all-zeros target.  Fragments only touch their own vertices plus the
target, so they compose in any order.

Subcubes whose level (the minimum vertex weight) is awkward cannot exit
on their own and are handled by coordination gadgets: level-3 4-cubes
split into three spiders; level-4 3-cubes work in pairs or triples of
adjacent labels along a revolving-door cycle; level-9-and-up 3-cubes
team up in chain triples (A, phi(A), phi(phi(A))) from a symmetric chain
decomposition, shuttling single cups between cubes until every pile
matches a weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .graphs import Configuration, CubeBoard, Move, Plan
from .oracle import oracle_search


class CubeError(ValueError):
    """Subcube outside the range a planner can handle."""


# ------------------------------------------------ symmetric chain machinery

def _unmatched(n: int, mask: int) -> tuple[list[int], list[int]]:
    """Bracket-match each member (1) with an earlier non-member (0);
    returns the unmatched one-positions and zero-positions."""
    stack: list[int] = []
    ones: list[int] = []
    for i in range(n):
        if mask >> i & 1:
            if stack:
                stack.pop()
            else:
                ones.append(i)
        else:
            stack.append(i)
    return ones, stack


def scd(n: int) -> list[list[int]]:
    """Symmetric chain decomposition of the subsets of an n-element set,
    as lists of bitmasks in ascending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    chains = []
    for mask in range(1 << n):
        ones, zeros = _unmatched(n, mask)
        if ones:
            continue               # not a chain bottom
        chain = [mask]
        cur = mask
        for z in zeros:
            cur |= 1 << z
            chain.append(cur)
        chains.append(chain)
    return chains


def phi(n: int, mask: int) -> int:
    """Chain predecessor of a set larger than half the ground set."""
    if 2 * mask.bit_count() <= n:
        raise ValueError("phi is only defined for sets larger than n/2")
    ones, _ = _unmatched(n, mask)
    return mask & ~(1 << ones[-1])


def _phi_or_none(n: int, mask: int) -> Optional[int]:
    return phi(n, mask) if 2 * mask.bit_count() > n else None


def revolving_door(m: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of {1..m} in revolving-door order: cyclically
    consecutive subsets exchange exactly one element."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    if k == 0:
        return [()]
    if k == m:
        return [tuple(range(1, m + 1))]
    head = revolving_door(m - 1, k)
    tail = [c + (m,) for c in reversed(revolving_door(m - 1, k - 1))]
    return head + tail


# ------------------------------------------------------- subcube primitives

@dataclass(frozen=True)
class SubcubeHandle:
    base: int
    free_dims: tuple[int, ...]

    @property
    def level(self) -> int:
        return self.base.bit_count()


def _embed(base: int, dims: Sequence[int], rel: int) -> int:
    x = base
    for i, dim in enumerate(dims):
        if rel >> i & 1:
            x |= 1 << dim
    return x


@lru_cache(maxsize=None)
def _standalone(k: int) -> tuple[tuple[int, int], ...]:
    """Full plan for an all-ones Q^k onto its zero vertex."""
    return tuple(_solve(0, tuple(range(k))))


def _gather_full(base: int, dims: Sequence[int], t_rel: int) -> list[tuple[int, int]]:
    """Stack a whole all-ones subcube onto the vertex at relative mask
    t_rel, by translating the standalone full-cube plan."""
    return [(_embed(base, dims, u ^ t_rel), _embed(base, dims, v ^ t_rel))
            for u, v in _standalone(len(dims))]


def _solve(base: int, dims: tuple[int, ...]) -> list[tuple[int, int]]:
    """Moves sending every cup of an all-ones subcube to the global zero:
    low levels split along a free dimension, high levels pile everything
    on a vertex whose weight is the subcube size and jump."""
    k = len(dims)
    l = base.bit_count()
    if k == 0:
        if l == 0:
            return []
        if l == 1:
            return [(base, 0)]
        raise CubeError(f"lone vertex of weight {l} cannot reach the target")
    if l < (1 << k) - k:
        return (_solve(base, dims[1:]) +
                _solve(base | (1 << dims[0]), dims[1:]))
    if l <= (1 << k):
        j = (1 << k) - l
        t = _embed(base, dims, (1 << j) - 1)
        return _gather_full(base, dims, (1 << j) - 1) + [(t, 0)]
    raise CubeError(f"level-{l} {k}-cube is not directly stackable")


def plan_low_subcube(handle: SubcubeHandle) -> list[tuple[int, int]]:
    """Fragment for a k-cube with k <= 3; the level-4 3-cube is the one
    excluded case (it needs a partner gadget)."""
    k = len(handle.free_dims)
    if k > 3:
        raise CubeError("plan_low_subcube handles k <= 3")
    if (k, handle.level) == (3, 4):
        raise CubeError("a level-4 3-cube cannot be stacked alone")
    return _solve(handle.base, handle.free_dims)


def plan_high_kcube(handle: SubcubeHandle) -> list[tuple[int, int]]:
    """Fragment for a k-cube whose level is at least 2^k - k: gather the
    whole cube on a weight-2^k vertex and jump."""
    k = len(handle.free_dims)
    l = handle.level
    if l < (1 << k) - k or l > (1 << k):
        raise CubeError(f"level {l} outside [{(1 << k) - k}, {1 << k}]")
    j = (1 << k) - l
    t = _embed(handle.base, handle.free_dims, (1 << j) - 1)
    return _gather_full(handle.base, handle.free_dims, (1 << j) - 1) + [(t, 0)]


# --------------------------------------------------------- 3-cube gathering

@lru_cache(maxsize=None)
def _q3_graph():
    return CubeBoard(3).to_graph()


@lru_cache(maxsize=None)
def _gather3(counts: tuple[int, ...], target: int) -> Optional[tuple[tuple[int, int], ...]]:
    """Move sequence concentrating a 3-cube configuration on one vertex,
    found by exhaustive search; None when impossible."""
    res = oracle_search(_q3_graph(), Configuration(counts), target,
                        budget=10**6)
    if res.decision is not True:
        return None
    return tuple((m.src, m.dst) for m in res.plan.moves)


# ------------------------------------------------------------ gadget library

LEVEL3_4CUBE_GADGET: tuple[tuple[int, int], ...] = (
    # three spiders collecting 3, 6, and 7 cups (relative 4-bit masks;
    # -1 stands for the global target)
    (1, 0), (2, 0), (0, -1),
    (5, 4), (4, 7), (6, 7), (3, 11), (11, 7), (7, -1),
    (14, 12), (8, 10), (13, 9), (12, 15), (10, 15), (9, 15), (15, -1),
)


def plan_level3_4cube(handle: SubcubeHandle) -> list[tuple[int, int]]:
    """Fragment for a level-3 4-cube: piles of 3, 6, and 7 cups exit from
    vertices of matching weight."""
    if handle.level != 3 or len(handle.free_dims) != 4:
        raise CubeError("gadget requires a level-3 4-cube")
    emb = lambda rel: _embed(handle.base, handle.free_dims, rel)
    return [(emb(a), 0 if b < 0 else emb(b)) for a, b in LEVEL3_4CUBE_GADGET]


PAIR_GADGET: tuple[tuple[str, int, str, int], ...] = (
    # two level-4 3-cubes U, V with adjacent labels: V lends three cups
    # to U's weight-6 vertex, then both empty through weight-5 vertices
    ("v", 3, "v", 7), ("v", 5, "v", 7), ("v", 7, "u", 3),
    ("u", 7, "u", 6), ("u", 6, "u", 3), ("u", 3, "", -1),
    ("u", 5, "u", 1), ("u", 1, "u", 2), ("u", 0, "u", 4), ("u", 4, "u", 2),
    ("u", 2, "", -1),
    ("v", 6, "v", 4), ("v", 4, "v", 1), ("v", 0, "v", 2), ("v", 2, "v", 1),
    ("v", 1, "", -1),
)

TRIPLE_GADGET: tuple[tuple[str, int, str, int], ...] = (
    # three consecutive labels U, V, W: the outer cubes each pass two cups
    # to V's top vertex, which exits with seven
    ("u", 3, "u", 7), ("u", 7, "v", 7), ("w", 3, "w", 7), ("w", 7, "v", 7),
    ("v", 3, "v", 7), ("v", 6, "v", 7), ("v", 7, "", -1),
    ("u", 1, "u", 0), ("u", 0, "u", 5), ("u", 2, "u", 6), ("u", 6, "u", 5),
    ("u", 4, "u", 5), ("u", 5, "", -1),
    ("w", 1, "w", 0), ("w", 0, "w", 5), ("w", 2, "w", 6), ("w", 6, "w", 5),
    ("w", 4, "w", 5), ("w", 5, "", -1),
    ("v", 5, "v", 4), ("v", 4, "v", 1), ("v", 0, "v", 2), ("v", 2, "v", 1),
    ("v", 1, "", -1),
)


def _compile_gadget(template, bases: dict[str, int],
                    dims: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for cu, ru, cv, rv in template:
        src = _embed(bases[cu], dims, ru)
        dst = 0 if rv < 0 else _embed(bases[cv], dims, rv)
        out.append((src, dst))
    return out


def plan_level4_3cubes(d: int, labels: Optional[Sequence[int]] = None
                       ) -> list[tuple[int, int]]:
    """Fragment covering every level-4 3-cube of the standard split: the
    labels are paired along a revolving-door cycle, with one triple when
    the count is odd."""
    if d < 8:
        raise CubeError("pair and triple gadgets need d >= 8")
    n = d - 3
    dims = (d - 3, d - 2, d - 1)
    cycle = [sum(1 << (e - 1) for e in c) for c in revolving_door(n, 4)]
    if labels is not None:
        expected = sorted(cycle)
        if sorted(labels) != expected:
            raise CubeError("labels must be exactly the level-4 labels")
    moves: list[tuple[int, int]] = []
    idx = 0
    if len(cycle) % 2:
        u, v, w = cycle[0], cycle[1], cycle[2]
        assert (u ^ v).bit_count() == 2 and (v ^ w).bit_count() == 2
        moves += _compile_gadget(TRIPLE_GADGET, {"u": u, "v": v, "w": w}, dims)
        idx = 3
    while idx < len(cycle):
        u, v = cycle[idx], cycle[idx + 1]
        assert (u ^ v).bit_count() == 2
        moves += _compile_gadget(PAIR_GADGET, {"u": u, "v": v}, dims)
        idx += 2
    return moves


@lru_cache(maxsize=None)
def _abc9_template() -> tuple[int, int, tuple, tuple, tuple]:
    """Steal choices and gathers for the level-9 chain triple: one cup
    hops B->A, one C->B, then each cube piles onto its bottom vertex."""
    ones = [1] * 8
    for t1 in range(1, 8):
        a_counts = list(ones)
        a_counts[t1] += 1
        ga = _gather3(tuple(a_counts), 0)
        if ga is None:
            continue
        for t2 in range(1, 8):
            if t2 == t1:
                continue
            b_counts = list(ones)
            b_counts[t1] = 0
            b_counts[t2] += 1
            gb = _gather3(tuple(b_counts), 0)
            if gb is None:
                continue
            c_counts = list(ones)
            c_counts[t2] = 0
            gc = _gather3(tuple(c_counts), 0)
            if gc is None:
                continue
            return t1, t2, ga, gb, gc
    raise AssertionError("no feasible level-9 triple template")


@lru_cache(maxsize=None)
def _steal5_template(l: int) -> tuple[int, tuple[int, ...], tuple]:
    """Launch pattern for chain triples at levels 10 to 12.  A and C each
    pile their own eight cups on the exit vertex t; B splits into piles
    of 2+3 for A and 1+2 for C, launched from vertices whose distance to
    the landing vertex equals the pile size."""
    j = 13 - l
    t = (1 << j) - 1            # relative mask of both exit vertices
    others = [v for v in range(8) if v != t]
    for x in others:            # pile-2 launch toward A, plus its feeder
        if (x ^ t).bit_count() != 1:
            continue
        for fx in others:
            if fx == x or (fx ^ x).bit_count() != 1:
                continue
            for y in others:    # pile-3 launch toward A, two feeders
                if y in (x, fx) or (y ^ t).bit_count() != 2:
                    continue
                feeders = [f for f in others
                           if f not in (x, fx, y) and (f ^ y).bit_count() == 1]
                for fy1, fy2 in combinations(feeders, 2):
                    for z in others:   # pile-2 launch toward C, one feeder
                        if z in (x, fx, y, fy1, fy2):
                            continue
                        if (z ^ t).bit_count() != 1:
                            continue
                        rest = set(range(8)) - {t, x, fx, y, fy1, fy2, z}
                        if len(rest) != 1:
                            continue
                        fz = rest.pop()
                        if (fz ^ z).bit_count() != 1:
                            continue
                        return t, (x, fx, y, fy1, fy2, z, fz), _gather3((1,) * 8, t)
    raise AssertionError(f"no feasible steal pattern at level {l}")


def plan_abc_triple(d: int, a_base: int, b_base: int, c_base: int,
                    dims: Sequence[int]) -> list[tuple[int, int]]:
    """Fragment for a chain triple of 3-cubes at levels l, l-1, l-2."""
    l = a_base.bit_count()
    if not (9 <= l <= 12):
        raise CubeError("chain triples cover levels 9 to 12")
    if b_base.bit_count() != l - 1 or c_base.bit_count() != l - 2:
        raise CubeError("triple levels must descend by one")
    if (a_base ^ b_base).bit_count() != 1 or (b_base ^ c_base).bit_count() != 1:
        raise CubeError("triple bases must be chain neighbors")
    ea = lambda rel: _embed(a_base, dims, rel)
    eb = lambda rel: _embed(b_base, dims, rel)
    ec = lambda rel: _embed(c_base, dims, rel)
    moves: list[tuple[int, int]] = []
    if l == 9:
        t1, t2, ga, gb, gc = _abc9_template()
        moves.append((eb(t1), ea(t1)))
        moves += [(ea(u), ea(v)) for u, v in ga]
        moves.append((ea(0), 0))                      # 9 cups, weight 9
        moves.append((ec(t2), eb(t2)))
        moves += [(eb(u), eb(v)) for u, v in gb]
        moves.append((eb(0), 0))                      # 8 cups, weight 8
        moves += [(ec(u), ec(v)) for u, v in gc]
        moves.append((ec(0), 0))                      # 7 cups, weight 7
    else:
        t, (x, fx, y, fy1, fy2, z, fz), gather = _steal5_template(l)
        moves += [(ea(u), ea(v)) for u, v in gather]  # A's 8 cups on a_t
        moves += [(eb(fx), eb(x)), (eb(x), ea(t)),
                  (eb(fy1), eb(y)), (eb(fy2), eb(y)), (eb(y), ea(t))]
        moves.append((ea(t), 0))                      # 13 cups, weight 13
        moves += [(ec(u), ec(v)) for u, v in gather]  # C's 8 cups on c_t
        moves += [(eb(t), ec(t)), (eb(fz), eb(z)), (eb(z), ec(t))]
        moves.append((ec(t), 0))                      # 11 cups, weight 11
    return moves


# ------------------------------------------------------------- full assembly

@dataclass(frozen=True)
class CubePlanResult:
    d: int
    plan: Plan
    complete: bool
    unassigned: tuple[int, ...]     # 3-cube label masks left without moves
    phase_moves: dict


def _abc_loop(n: int, pool: set[int], dims: Sequence[int],
              moves: list[tuple[int, int]]) -> list[int]:
    """Consume chain triples from the pool, highest label first; returns
    the labels that cannot join any triple (the reported gap)."""
    unassigned: list[int] = []
    high = sorted((m for m in pool if m.bit_count() >= 9),
                  key=lambda m: (m.bit_count(), m), reverse=True)
    removed: set[int] = set()
    for a in high:
        if a in removed:
            continue
        b = _phi_or_none(n, a)
        c = _phi_or_none(n, b) if b is not None else None
        if b is None or c is None:
            pool.remove(a)
            unassigned.append(a)
            continue
        if b not in pool or c not in pool or b in removed or c in removed:
            raise AssertionError("chain neighbors missing from the pool")
        removed.update((a, b, c))
        pool -= {a, b, c}
        moves.extend(plan_abc_triple(n + 3, a, b, c, dims))
    return sorted(unassigned)


def plan_cube(d: int) -> CubePlanResult:
    """Plan stacking the all-ones Q^d onto the zero vertex.  Complete for
    d <= 18; for d = 19 and 20 the level-9 3-cubes of the standard split
    have no partners and are reported as unassigned."""
    if not 0 <= d <= 20:
        raise CubeError("plans are only constructed for 0 <= d <= 20")
    moves: list[tuple[int, int]] = []
    phases: dict[str, int] = {}
    unassigned: list[int] = []

    def phase(name: str, start: int) -> None:
        phases[name] = phases.get(name, 0) + len(moves) - start

    if d <= 6:
        moves += _solve(0, tuple(range(d)))
        phases["direct"] = len(moves)
    elif d == 7:
        dims4 = (3, 4, 5, 6)
        for label in range(8):
            start = len(moves)
            if label.bit_count() <= 2:
                moves += _solve(label, dims4)
                phase("low-4cubes", start)
            else:
                moves += plan_level3_4cube(SubcubeHandle(label, dims4))
                phase("level3-4cube", start)
    elif d <= 15:
        n = d - 3
        dims3 = (d - 3, d - 2, d - 1)
        pool = set(range(1 << n))
        if d >= 12:
            start = len(moves)
            unassigned = _abc_loop(n, pool, dims3, moves)
            phase("chain-triples", start)
        start = len(moves)
        moves += plan_level4_3cubes(d)
        pool = {m for m in pool if m.bit_count() != 4}
        phase("level4-3cubes", start)
        start = len(moves)
        for label in sorted(pool):
            moves += _solve(label, dims3)
        phase("base-3cubes", start)
    else:
        n4 = d - 4
        dims4 = (d - 4, d - 3, d - 2, d - 1)
        dims3 = (d - 3, d - 2, d - 1)
        n = d - 3
        pool3: set[int] = set()
        start = len(moves)
        for label in range(1 << n4):
            if label.bit_count() >= 12:
                moves += plan_high_kcube(SubcubeHandle(label, dims4))
            else:
                pool3.add(label)
                pool3.add(label | (1 << n4))
        phase("high-4cubes", start)
        start = len(moves)
        unassigned = _abc_loop(n, pool3, dims3, moves)
        phase("chain-triples", start)
        start = len(moves)
        moves += plan_level4_3cubes(d)
        pool3 = {m for m in pool3 if m.bit_count() != 4}
        phase("level4-3cubes", start)
        start = len(moves)
        for label in sorted(pool3):
            moves += _solve(label, dims3)
        phase("base-3cubes", start)

    plan = Plan(1 << d, 0, tuple(Move(a, b) for a, b in moves))
    return CubePlanResult(d, plan, not unassigned, tuple(unassigned), phases)


def verify_cube_plan(result: CubePlanResult) -> bool:
    from .graphs import verify_plan
    return bool(verify_plan(CubeBoard(result.d), result.plan))
