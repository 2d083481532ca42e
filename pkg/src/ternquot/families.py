"""Closed-form families whose representations are all universal.

Four shapes of integer force ``p(x) = g(x) q(x)`` for a known ``g``:

* ``3^r + 1``
* ``(3^((r+1)k) - 1) / (3^k - 1)`` (base-``3^k`` repunits)
* ``(3^((2r+1)k) + 1) / (3^k + 1)`` (alternating sums of powers of ``3^k``)
* ``3^r - 3^s + 1`` with ``r > s > 0``

Two explicit generators are also provided: the ``p_k/q_k`` family for
``3^n - 2`` and the ``p_j/q_j`` family for 100.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Union

from .newman import IntPoly, NewmanPoly, ternary_from_newman
from .representations import Representation


@dataclass(frozen=True)
class PowerPlusOne:
    r: int

    @property
    def value(self) -> int:
        return 3**self.r + 1

    def quotient(self) -> IntPoly:
        return IntPoly.from_exponents([0, self.r])

    def render(self) -> str:
        return f"3^r+1 (r={self.r})"


@dataclass(frozen=True)
class Repunit:
    k: int
    r: int

    @property
    def value(self) -> int:
        return (3 ** ((self.r + 1) * self.k) - 1) // (3**self.k - 1)

    def quotient(self) -> IntPoly:
        return IntPoly.from_exponents(i * self.k for i in range(self.r + 1))

    def render(self) -> str:
        return f"(3^{{(r+1)k}}-1)/(3^k-1) (k={self.k},r={self.r})"


@dataclass(frozen=True)
class Alternating:
    k: int
    r: int

    @property
    def value(self) -> int:
        return (3 ** ((2 * self.r + 1) * self.k) + 1) // (3**self.k + 1)

    def quotient(self) -> IntPoly:
        g = IntPoly()
        for i in range(2 * self.r + 1):
            g = g + IntPoly.monomial(i * self.k, (-1) ** i)
        return g

    def render(self) -> str:
        return f"(3^{{(2r+1)k}}+1)/(3^k+1) (k={self.k},r={self.r})"


@dataclass(frozen=True)
class TwoPowerGap:
    r: int
    s: int

    @property
    def value(self) -> int:
        return 3**self.r - 3**self.s + 1

    def quotient(self) -> IntPoly:
        return IntPoly.monomial(self.r) - IntPoly.monomial(self.s) + IntPoly((1,))

    def render(self) -> str:
        return f"3^r-3^s+1 (r={self.r},s={self.s})"


FamilyTag = Union[PowerPlusOne, Repunit, Alternating, TwoPowerGap]


def detect_families(m: int) -> List[FamilyTag]:
    """Every family tag whose defining value equals ``m``.

    Any member has its top power of 3 below ``2m``, which bounds the search.
    """
    if m < 1:
        raise ValueError(f"detect_families needs m >= 1, got {m}")
    top = 0
    while 3 ** (top + 1) <= 2 * m:
        top += 1
    tags: List[FamilyTag] = []
    for r in range(1, top + 1):
        if PowerPlusOne(r).value == m:
            tags.append(PowerPlusOne(r))
    for k in range(1, top + 1):
        for r in range(1, top // k + 1):
            if Repunit(k, r).value == m:
                tags.append(Repunit(k, r))
            if 2 * r * k <= top and Alternating(k, r).value == m:
                tags.append(Alternating(k, r))
    for r in range(2, top + 1):
        for s in range(1, r):
            if TwoPowerGap(r, s).value == m:
                tags.append(TwoPowerGap(r, s))
    return tags


def canonical_quotient(tag: FamilyTag) -> IntPoly:
    return tag.quotient()


def _rep(m: int, p_exps, q_exps) -> Representation:
    p = ternary_from_newman(NewmanPoly(tuple(sorted(p_exps))))
    q = ternary_from_newman(NewmanPoly(tuple(sorted(q_exps))))
    return Representation(m, p, q)


def gen_3n2(n: int, k: int) -> Representation:
    """Representation of ``3^n - 2`` that takes the loop at ``(m-1)/2`` k times."""
    if n < 3 or k < 0:
        raise ValueError(f"gen_3n2 needs n >= 3 and k >= 0, got n={n}, k={k}")
    p = [0, *range(n, n + k), *range(n + k + 1, n + k + n)]
    q = range(n + k)
    return _rep(3**n - 2, p, q)


def quotient_3n2(n: int) -> IntPoly:
    return TwoPowerGap(n, 1).quotient()


QUOTIENT_100 = IntPoly.parse("x^4 + x^3 - x^2 + 1")


def gen_100(j: int) -> Representation:
    """Representation of 100 that steps up from 12 to 37 exactly ``j`` times."""
    if j < 0:
        raise ValueError(f"gen_100 needs j >= 0, got {j}")
    p = [0, 3, *range(4, 4 + 2 * j), 4 + 2 * j + 1, 4 + 2 * j + 2]
    q = [0, 2, *(2 + 2 * i for i in range(1, j + 1))]
    return _rep(100, p, q)
