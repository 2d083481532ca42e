"""Base-3 digit strings, feasibility intervals and mod-3 normalization.

Plain Python ints serve as the arbitrary-precision naturals throughout the
package.  Digit sequences are stored least-significant first; anything shown
to a human is rendered most-significant first, the way ``[1101]_3`` reads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

GeneralTernary = Tuple[int, ...]


@dataclass(frozen=True)
class TernaryString:
    """A {0,1} digit string with first and last digit 1 (an element of A)."""

    digits: Tuple[int, ...]

    def __post_init__(self) -> None:
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise ValueError("ternary string must be nonempty")
        if any(d not in (0, 1) for d in digits):
            raise ValueError(f"digits must be 0 or 1, got {digits!r}")
        if digits[0] != 1 or digits[-1] != 1:
            raise ValueError(f"first and last digit must be 1, got {digits!r}")

    @classmethod
    def from_digits(cls, digits: Iterable[int]) -> "TernaryString":
        """Build from LSB-first digits, dropping trailing zeros."""
        ds = list(digits)
        while ds and ds[-1] == 0:
            ds.pop()
        return cls(tuple(ds))

    @classmethod
    def from_msb(cls, text: str) -> "TernaryString":
        text = text.strip()
        if text.startswith("[") and text.endswith("]_3"):
            text = text[1:-3]
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"not a 0/1 ternary string: {text!r}")
        return cls.from_digits(int(c) for c in reversed(text))

    @classmethod
    def from_int(cls, n: int) -> "TernaryString":
        if not is_in_A(n):
            raise ValueError(f"{n} is not a sum of distinct powers of 3")
        return cls(to_ternary(n))

    @property
    def value(self) -> int:
        return eval_ternary(self.digits)

    @property
    def degree(self) -> int:
        return len(self.digits) - 1

    def msb(self) -> str:
        return "".join(str(d) for d in reversed(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return self.msb()


def eval_ternary(t: Union[TernaryString, Sequence[int]]) -> int:
    """Value of an LSB-first digit sequence at base 3."""
    digits = t.digits if isinstance(t, TernaryString) else t
    n = 0
    for d in reversed(digits):
        n = 3 * n + d
    return n


def to_ternary(n: int) -> GeneralTernary:
    if n < 0:
        raise ValueError("negative integers have no base-3 expansion here")
    digits = []
    while n:
        n, d = divmod(n, 3)
        digits.append(d)
    return tuple(digits)


def is_sum_distinct_powers(n: int) -> bool:
    """True iff every base-3 digit of ``n`` is 0 or 1 (so 0 counts)."""
    if n < 0:
        return False
    while n:
        n, d = divmod(n, 3)
        if d == 2:
            return False
    return True


def is_in_A(n: int) -> bool:
    return n >= 1 and is_sum_distinct_powers(n)


def normalize(m: int) -> Tuple[int, int]:
    """Split ``m = 3**k * m1`` with ``m1`` prime to 3."""
    if m <= 0:
        raise ValueError(f"normalize needs m >= 1, got {m}")
    k = 0
    while m % 3 == 0:
        m //= 3
        k += 1
    return k, m


def feasible_interval(m: int) -> Optional[int]:
    """The r with 2*3**r/3 < m < 3*3**r/2, or None when m falls in a gap."""
    if m <= 0:
        raise ValueError(f"feasible_interval needs m >= 1, got {m}")
    r, p = 0, 1
    # 2*3^r < 3m  <=>  the interval's left end lies below m
    while 2 * p < 3 * m:
        if 2 * m < 3 * p:
            return r
        r += 1
        p *= 3
    return None
