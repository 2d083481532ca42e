"""Carry-value digraph of the restricted base-3 multiplication transducer.

For ``m = 3t + 1`` the vertices are carry values and every edge records one
base-3 digit of ``p`` and of ``q`` in ``m * q = p``::

    3k   -> k        p=0, q=0   (step down)
    3k   -> k + t    p=1, q=1   (step up)
    3k+1 -> k        p=1, q=0
    3k+2 -> k + t+1  p=0, q=1

A representation of ``m`` is a closed walk at 0 whose first edge is the step
up out of 0.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from .numeric import normalize


class EdgeKind(enum.Enum):
    STEP_DOWN = ("StepDown0", 0, 0)
    STEP_UP = ("StepUp0", 1, 1)
    FORCED1 = ("Forced1", 1, 0)
    FORCED2 = ("Forced2", 0, 1)

    def __init__(self, title: str, p: int, q: int) -> None:
        self.title = title
        self.p = p
        self.q = q

    @property
    def is_choice(self) -> bool:
        return self in (EdgeKind.STEP_DOWN, EdgeKind.STEP_UP)


class Edge(NamedTuple):
    kind: EdgeKind
    target: int


class VertexBoundError(AssertionError):
    """A carry value exceeded floor(m/2); never observed, but checked."""


def _check_m(m: int) -> int:
    if m < 1 or m % 3 != 1:
        raise ValueError(f"carry digraph needs m = 1 (mod 3), got {m}")
    return (m - 1) // 3


def step(m: int, carry: int, choice: Optional[EdgeKind] = None) -> Tuple[int, int, int]:
    """One digit of the algorithm: returns ``(new_carry, p_digit, q_digit)``.

    ``choice`` must be ``EdgeKind.STEP_UP`` or ``EdgeKind.STEP_DOWN`` exactly
    when ``carry`` is divisible by 3, and omitted otherwise.
    """
    _check_m(m)
    r = carry % 3
    if r == 0:
        if choice is EdgeKind.STEP_UP:
            return (carry + m - 1) // 3, 1, 1
        if choice is EdgeKind.STEP_DOWN:
            return carry // 3, 0, 0
        raise ValueError(f"carry {carry} is divisible by 3: choose STEP_UP or STEP_DOWN")
    if choice is not None:
        raise ValueError(f"carry {carry} is not divisible by 3: no choice allowed")
    if r == 1:
        return (carry - 1) // 3, 1, 0
    return (carry + m) // 3, 0, 1


def out_edges(m: int, v: int) -> Tuple[Edge, ...]:
    """Outgoing edges of ``v``; step down is listed before step up."""
    if v % 3 == 0:
        return (
            Edge(EdgeKind.STEP_DOWN, step(m, v, EdgeKind.STEP_DOWN)[0]),
            Edge(EdgeKind.STEP_UP, step(m, v, EdgeKind.STEP_UP)[0]),
        )
    kind = EdgeKind.FORCED1 if v % 3 == 1 else EdgeKind.FORCED2
    return (Edge(kind, step(m, v)[0]),)


@dataclass(frozen=True)
class CarryDigraph:
    m: int
    t: int
    edges: Dict[int, Tuple[Edge, ...]] = field(repr=False)
    coreachable: FrozenSet[int] = field(repr=False)
    # shortest number of edges from a vertex back to 0
    dist_to_zero: Dict[int, int] = field(repr=False)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.edges)

    def representable(self) -> bool:
        return self.t in self.coreachable


def forward_closure(m: int) -> FrozenSet[int]:
    """Vertex set of D_m; raises VertexBoundError past floor(m/2)."""
    t = _check_m(m)
    bound = m // 2
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        if v > bound:
            raise VertexBoundError(f"D_{m} has vertex {v} > floor(m/2) = {bound}")
        k, r = divmod(v, 3)
        if r == 0:
            if k not in seen:
                seen.add(k)
                stack.append(k)
            w = k + t
        elif r == 1:
            w = k
        else:
            w = k + t + 1
        if w not in seen:
            seen.add(w)
            stack.append(w)
    return frozenset(seen)


def build_digraph(m: int) -> CarryDigraph:
    """Forward closure of vertex 0, plus distances back to 0."""
    t = _check_m(m)
    edges = {v: out_edges(m, v) for v in sorted(forward_closure(m))}
    preds: Dict[int, List[int]] = {v: [] for v in edges}
    for v, es in edges.items():
        for e in es:
            preds[e.target].append(v)
    dist = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in preds[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return CarryDigraph(m, t, edges, frozenset(dist), dist)


def _reaches_zero(m1: int) -> bool:
    t = (m1 - 1) // 3
    seen = {t}
    stack = [t]
    while stack:
        v = stack.pop()
        if v == 0:
            return True
        r = v % 3
        if r == 0:
            succ = (v // 3, (v + m1 - 1) // 3)
        elif r == 1:
            succ = ((v - 1) // 3,)
        else:
            succ = ((v + m1) // 3,)
        for w in succ:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def is_representable(m: int) -> bool:
    """Whether ``m = p(3)/q(3)`` for some Newman polynomials ``p, q``."""
    if m < 1:
        return False
    _, m1 = normalize(m)
    if m1 % 3 == 2:
        return False
    return _reaches_zero(m1)


def export_dot(g: CarryDigraph, pruned: bool = False) -> str:
    """Graphviz text; ``pruned`` keeps only vertices that can return to 0."""
    keep = g.coreachable if pruned else g.vertices
    lines = [f"digraph Dm_{g.m} {{", "  node [shape=circle];"]
    for v in sorted(keep):
        lines.append(f"  {v};")
    for v in sorted(keep):
        for e in g.edges[v]:
            if e.target in keep:
                lines.append(f'  {v} -> {e.target} [label="{e.kind.p}/{e.kind.q}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
