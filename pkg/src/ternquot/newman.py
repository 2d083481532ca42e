"""Newman polynomials and exact integer polynomial arithmetic.

A Newman polynomial has 0/1 coefficients and constant term 1.  It is kept as
its sorted exponent list; general integer polynomials (quotients, remainders)
are dense coefficient tuples, lowest degree first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple, Union

from .numeric import TernaryString


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped, so the zero polynomial is ``coeffs == ()``
    and has degree -1.
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = list(self.coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPoly":
        exps = list(exponents)
        cs = [0] * (max(exps) + 1 if exps else 0)
        for e in exps:
            cs[e] += 1
        return cls(tuple(cs))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        return parse_poly(text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def shift(self, k: int) -> "IntPoly":
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(tuple(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return multiply(self, other)

    def __divmod__(self, other: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        return divrem(self, other)

    def __str__(self) -> str:
        return format_poly(self)


@dataclass(frozen=True)
class NewmanPoly:
    """0/1 polynomial with constant term 1, stored by exponents."""

    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        if not exps or exps[0] != 0:
            raise ValueError(f"Newman polynomial needs constant term 1: {exps!r}")
        if any(b <= a for a, b in zip(exps, exps[1:])):
            raise ValueError(f"exponents must strictly increase: {exps!r}")

    @classmethod
    def from_intpoly(cls, p: IntPoly) -> "NewmanPoly":
        if any(c not in (0, 1) for c in p.coeffs) or not p.coeffs or p.coeffs[0] != 1:
            raise ValueError(f"not a Newman polynomial: {p}")
        return cls(tuple(i for i, c in enumerate(p.coeffs) if c))

    @property
    def degree(self) -> int:
        return self.exponents[-1]

    def to_intpoly(self) -> IntPoly:
        return IntPoly.from_exponents(self.exponents)

    def __call__(self, x: int) -> int:
        return sum(x**e for e in self.exponents)

    def __str__(self) -> str:
        return format_poly(self.to_intpoly())


AnyPoly = Union[IntPoly, NewmanPoly]


def _as_int(p: AnyPoly) -> IntPoly:
    return p.to_intpoly() if isinstance(p, NewmanPoly) else p


@dataclass(frozen=True)
class Universal:
    quotient: IntPoly
    label = "universal"


@dataclass(frozen=True)
class Local:
    label = "local"


Classification = Union[Universal, Local]


def gap_set(p: NewmanPoly) -> FrozenSet[int]:
    """All positive differences between exponents of ``p``."""
    e = p.exponents
    return frozenset(e[i] - e[j] for i in range(len(e)) for j in range(i))


def product_is_newman(s: NewmanPoly, t: NewmanPoly) -> bool:
    """Whether ``s*t`` still has 0/1 coefficients (disjoint gap sets)."""
    return gap_set(s).isdisjoint(gap_set(t))


def multiply(a: AnyPoly, b: AnyPoly) -> IntPoly:
    a, b = _as_int(a), _as_int(b)
    if a.is_zero() or b.is_zero():
        return IntPoly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPoly(tuple(out))


def divrem(p: AnyPoly, q: AnyPoly) -> Tuple[IntPoly, IntPoly]:
    """Long division by a monic divisor, exact over the integers."""
    p, q = _as_int(p), _as_int(q)
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if q.leading != 1:
        raise ValueError(f"divisor must be monic, got leading coefficient {q.leading}")
    if p.is_zero():
        return IntPoly(), IntPoly()
    rem = list(p.coeffs)
    dq = q.degree
    quot = [0] * max(len(rem) - dq, 0)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            quot[i - dq] = c
            for j, qc in enumerate(q.coeffs):
                rem[i - dq + j] -= c * qc
    return IntPoly(tuple(quot)), IntPoly(tuple(rem[:dq]))


def classify_pair(p: AnyPoly, q: AnyPoly) -> Classification:
    quotient, remainder = divrem(p, q)
    if remainder.is_zero():
        return Universal(quotient)
    return Local()


def eval_at(p: AnyPoly, b: int) -> int:
    return _as_int(p)(b)


def newman_from_ternary(t: TernaryString) -> NewmanPoly:
    return NewmanPoly(tuple(i for i, d in enumerate(t.digits) if d))


def ternary_from_newman(p: NewmanPoly) -> TernaryString:
    digits = [0] * (p.degree + 1)
    for e in p.exponents:
        digits[e] = 1
    return TernaryString(tuple(digits))


def format_poly(p: AnyPoly) -> str:
    """Render as e.g. ``x^4 - x^3 + x^2 + 1``, highest degree first."""
    p = _as_int(p)
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "x" if e == 1 else f"x^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)(\d*)\*?(x(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPoly:
    """Inverse of :func:`format_poly`; also accepts ``3*x^2`` and no spaces."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, var, exp = m.groups()
        if m.end() == pos or (not num and not var):
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        if pos > 0 and not sign:
            raise ValueError(f"missing operator in {text!r} at {s[pos:]!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if var else 0
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
    top = max(coeffs)
    return IntPoly(tuple(coeffs.get(i, 0) for i in range(top + 1)))

