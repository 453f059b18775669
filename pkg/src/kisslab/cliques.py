"""Maximum clique search on small graphs stored as int bitsets."""

from __future__ import annotations

import random
from typing import Sequence


class _Stop(Exception):
    pass


def greedy_clique(adj: Sequence[int], order: Sequence[int]) -> list[int]:
    chosen: list[int] = []
    allowed = (1 << len(adj)) - 1
    for v in order:
        if allowed >> v & 1:
            chosen.append(v)
            allowed &= adj[v]
    return chosen


def _color_sort(R: int, adj: Sequence[int]) -> list[tuple[int, int]]:
    # greedy colouring: each colour class is pairwise non-adjacent, so a
    # clique uses at most one vertex per colour
    out = []
    color = 0
    U = R
    while U:
        color += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            U &= ~low
            out.append((v, color))
    return out


def max_clique(adj: Sequence[int], *, beam_width: int | None = None, max_nodes: int | None = None,
               target: int | None = None, seed: int = 0) -> tuple[list[int], bool]:
    """Largest clique found by colour-bounded branch and bound.

    ``adj[v]`` is the neighbour bitset of v (no self loops).  Vertices are
    renumbered by decreasing degree with seeded random tie-breaks.  With
    ``beam_width`` only that many highest-colour branches are tried per
    node; ``max_nodes`` caps the number of search nodes; the search stops
    as soon as a clique of size ``target`` is found.  Returns the clique
    (original indices, sorted) and whether the search ran to completion
    without cuts, i.e. whether the result is certified maximum.
    """
    n = len(adj)
    if n == 0:
        return [], True
    rng = random.Random(seed)
    ties = list(range(n))
    rng.shuffle(ties)
    deg = [bin(a).count("1") for a in adj]
    order = sorted(range(n), key=lambda v: (-deg[v], ties[v]))
    pos = {v: i for i, v in enumerate(order)}
    radj = [0] * n
    for v in range(n):
        bits = 0
        a = adj[v]
        while a:
            low = a & -a
            bits |= 1 << pos[low.bit_length() - 1]
            a &= a - 1
        radj[pos[v]] = bits

    best = greedy_clique(radj, range(n))
    state = {"nodes": 0, "complete": True}

    def expand(R: int, clique: list[int]):
        nonlocal best
        state["nodes"] += 1
        if max_nodes is not None and state["nodes"] > max_nodes:
            state["complete"] = False
            raise _Stop
        colored = _color_sort(R, radj)
        branched = 0
        for v, c in reversed(colored):
            if len(clique) + c <= len(best):
                return
            if beam_width is not None and branched >= beam_width:
                state["complete"] = False
                return
            branched += 1
            clique.append(v)
            newR = R & radj[v]
            if newR:
                expand(newR, clique)
            elif len(clique) > len(best):
                best = list(clique)
                if target is not None and len(best) >= target:
                    raise _Stop
            clique.pop()
            R &= ~(1 << v)

    if target is None or len(best) < target:
        try:
            expand((1 << n) - 1, [])
        except _Stop:
            pass
    return sorted(order[v] for v in best), state["complete"]


def max_independent_set(conflicts: Sequence[int], **kwargs) -> tuple[list[int], bool]:
    n = len(conflicts)
    full = (1 << n) - 1
    adj = [full & ~conflicts[v] & ~(1 << v) for v in range(n)]
    return max_clique(adj, **kwargs)
