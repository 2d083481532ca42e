"""Representations ``m = p(3)/q(3)`` read off closed walks in the carry digraph."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .newman import (
    Classification,
    NewmanPoly,
    Universal,
    classify_pair,
    format_poly,
    multiply,
    newman_from_ternary,
    product_is_newman,
)
from .numeric import TernaryString, feasible_interval
from .transducer import CarryDigraph, EdgeKind, build_digraph


class VerificationError(RuntimeError):
    """A constructed pair failed ``p(3) == m * q(3)``."""


@dataclass(frozen=True)
class Representation:
    m: int
    p: TernaryString
    q: TernaryString

    def __post_init__(self) -> None:
        if self.p.value != self.m * self.q.value:
            raise VerificationError(
                f"{self.p.value} != {self.m} * {self.q.value} for p={self.p} q={self.q}"
            )

    @classmethod
    def from_msb(cls, m: int, p: str, q: str) -> "Representation":
        return cls(m, TernaryString.from_msb(p), TernaryString.from_msb(q))

    @property
    def p_poly(self) -> NewmanPoly:
        return newman_from_ternary(self.p)

    @property
    def q_poly(self) -> NewmanPoly:
        return newman_from_ternary(self.q)

    @property
    def length(self) -> int:
        """Walk length, i.e. number of base-3 digit positions of p."""
        return len(self.p)

    @property
    def key(self) -> Tuple[str, str]:
        return self.p.msb(), self.q.msb()

    # cached_property writes to __dict__ directly, so it works on a frozen class
    @cached_property
    def classification(self) -> Classification:
        return classify_pair(self.p_poly, self.q_poly)

    @property
    def is_universal(self) -> bool:
        return isinstance(self.classification, Universal)

    def to_record(self) -> Dict[str, Optional[str]]:
        c = self.classification
        return {
            "m": str(self.m),
            "p_ternary": self.p.msb(),
            "q_ternary": self.q.msb(),
            "p": str(self.p.value),
            "q": str(self.q.value),
            "class": c.label,
            "quotient": format_poly(c.quotient) if isinstance(c, Universal) else None,
        }

    def __str__(self) -> str:
        return f"{self.p.value}/{self.q.value}"


@dataclass(frozen=True)
class Walk:
    """Closed walk at vertex 0; ``vertices`` has one more entry than ``kinds``."""

    m: int
    vertices: Tuple[int, ...]
    kinds: Tuple[EdgeKind, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.kinds) + 1 or not self.kinds:
            raise ValueError("walk needs at least one edge and matching vertex list")
        if self.vertices[0] != 0 or self.vertices[-1] != 0:
            raise ValueError("walk must start and end at 0")
        if self.kinds[0] is not EdgeKind.STEP_UP:
            raise ValueError("walk must leave 0 by stepping up")

    @property
    def indecomposable(self) -> bool:
        return 0 not in self.vertices[1:-1]

    @property
    def choices(self) -> Tuple[int, ...]:
        """0 for step down, 1 for step up, at each choice point after the first edge."""
        return tuple(int(k is EdgeKind.STEP_UP) for k in self.kinds[1:] if k.is_choice)


def rep_from_walk(w: Walk) -> Representation:
    p = TernaryString.from_digits(k.p for k in w.kinds)
    q = TernaryString.from_digits(k.q for k in w.kinds)
    return Representation(w.m, p, q)


def iter_indecomposable_walks(g: CarryDigraph, max_len: int) -> Iterator[Walk]:
    """Depth-first, step down before step up; not sorted by length."""
    m, t = g.m, g.t
    if max_len < 1 or t not in g.coreachable or g.dist_to_zero[t] + 1 > max_len:
        return
    verts = [0, t]
    kinds = [EdgeKind.STEP_UP]
    dist = g.dist_to_zero
    edges = g.edges

    def dfs(v: int) -> Iterator[Walk]:
        if v == 0:
            yield Walk(m, tuple(verts), tuple(kinds))
            return
        used = len(kinds)
        for e in edges[v]:
            d = dist.get(e.target)
            if d is None or used + 1 + d > max_len:
                continue
            verts.append(e.target)
            kinds.append(e.kind)
            yield from dfs(e.target)
            verts.pop()
            kinds.pop()

    yield from dfs(t)


def enumerate_indecomposable(m: int, max_len: int) -> List[Representation]:
    """All indecomposable representations with at most ``max_len`` digits in p.

    Ordered by length, then lexicographically by the choices made (step down
    before step up).
    """
    g = build_digraph(m)
    walks = sorted(iter_indecomposable_walks(g, max_len), key=lambda w: (len(w.kinds), w.choices))
    seen = set()
    out = []
    for w in walks:
        rep = rep_from_walk(w)
        if rep.key not in seen:
            seen.add(rep.key)
            out.append(rep)
    return out


def _padded(rep: Representation) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    n = len(rep.p.digits)
    return rep.p.digits, rep.q.digits + (0,) * (n - len(rep.q.digits))


def compose_decomposable(
    parts: Sequence[Representation], zero_loops: Optional[Sequence[int]] = None
) -> Representation:
    """Concatenate representations, least significant part first.

    ``zero_loops[i]`` loops at 0 are inserted between part ``i`` and part
    ``i + 1``, so it has ``len(parts) - 1`` entries.
    """
    if not parts:
        raise ValueError("need at least one part")
    m = parts[0].m
    if any(r.m != m for r in parts):
        raise ValueError(f"parts represent different integers: {sorted({r.m for r in parts})}")
    loops = list(zero_loops) if zero_loops is not None else [0] * (len(parts) - 1)
    if len(loops) != len(parts) - 1 or any(z < 0 for z in loops):
        raise ValueError("zero_loops needs len(parts) - 1 non-negative entries")
    pd: List[int] = []
    qd: List[int] = []
    for i, rep in enumerate(parts):
        p, q = _padded(rep)
        pd.extend(p)
        qd.extend(q)
        if i < len(loops):
            pd.extend([0] * loops[i])
            qd.extend([0] * loops[i])
    return Representation(m, TernaryString.from_digits(pd), TernaryString.from_digits(qd))


def enumerate_representations(m: int, max_len: int) -> List[Representation]:
    """Indecomposable and decomposable representations with p of length <= max_len.

    Ordered like :func:`enumerate_indecomposable`: by length, then by the
    digits of the walk read from the start.
    """
    parts = [_padded(r) for r in enumerate_indecomposable(m, max_len)]

    @lru_cache(maxsize=None)
    def walks(budget: int) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
        # digit strings of walks that start with a part and end at 0
        out = []
        for p, q in parts:
            n = len(p)
            if n > budget:
                continue
            out.append((p, q))
            for z in range(budget - n):
                for tp, tq in walks(budget - n - z):
                    pad = (0,) * z
                    out.append((p + pad + tp, q + pad + tq))
        return tuple(out)

    reps = [
        Representation(m, TernaryString.from_digits(p), TernaryString.from_digits(q))
        for p, q in walks(max_len)
    ]
    reps.sort(key=lambda r: (r.length, _walk_order(r)))
    return reps


def _walk_order(rep: Representation) -> Tuple[int, ...]:
    # both digits 0 is a step down, both 1 a step up; reading p,q pairs from
    # the low end orders walks with step down first at every divergence
    p, q = _padded(rep)
    return tuple(2 * a + b for a, b in zip(p, q))


def is_indecomposable(rep: Representation) -> bool:
    """Whether the walk of ``rep`` avoids carry 0 strictly inside."""
    p, q = _padded(rep)
    low_p = low_q = 0
    power = 1
    for i in range(len(p) - 1):
        low_p += p[i] * power
        low_q += q[i] * power
        power *= 3
        if rep.m * low_q == low_p:
            return False
    return True


def classify(rep: Representation) -> Classification:
    return rep.classification


def _newman_product(a: NewmanPoly, f: NewmanPoly) -> TernaryString:
    prod = multiply(a, f)
    return TernaryString(prod.coeffs)


def extend_same_integer(rep: Representation, f: NewmanPoly) -> Representation:
    """``(f*p)(3) / (f*q)(3)``: another representation of the same integer."""
    p, q = rep.p_poly, rep.q_poly
    if not (product_is_newman(f, p) and product_is_newman(f, q)):
        raise ValueError(f"{f} shares an exponent gap with p or q; product leaves Newman form")
    return Representation(rep.m, _newman_product(p, f), _newman_product(q, f))


def scale_to_new_integer(rep: Representation, f: NewmanPoly) -> Representation:
    """Representation of ``f(3) * m`` with numerator ``f*p`` and the same q."""
    p = rep.p_poly
    if not product_is_newman(f, p):
        raise ValueError(f"{f} shares an exponent gap with p; product leaves Newman form")
    return Representation(rep.m * f(3), _newman_product(p, f), rep.q)


def degree_gap(rep: Representation) -> int:
    return rep.p.degree - rep.q.degree


def check_soundness(rep: Representation) -> None:
    """Raise unless ``deg p - deg q`` equals the feasible interval index of m."""
    r = feasible_interval(rep.m)
    if r != degree_gap(rep):
        raise VerificationError(f"deg p - deg q = {degree_gap(rep)} but m={rep.m} lies in I_{r}")

