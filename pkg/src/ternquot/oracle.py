"""Brute-force search over Newman polynomials, independent of the transducer.

Tabulate ``p(3)`` for every Newman polynomial of degree at most D, keep the
multiples of m, and accept those whose cofactor ``p(3)/m`` has only 0/1
ternary digits.  Values stay below ``1.5 * 3**24 < 2**63`` under the degree
guard, so the table is an exact int64 array.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from .newman import (
    Classification,
    NewmanPoly,
    Universal,
    classify_pair,
    format_poly,
    ternary_from_newman,
)
from .numeric import to_ternary
from .representations import Representation, enumerate_representations

MAX_DEGREE = 24


@dataclass(frozen=True)
class OracleHit:
    p: NewmanPoly
    q: NewmanPoly
    classification: Classification

    @property
    def key(self) -> Tuple[str, str]:
        return _msb(self.p), _msb(self.q)

    def to_record(self, m: int) -> Dict[str, Optional[str]]:
        c = self.classification
        p_val, q_val = self.p(3), self.q(3)
        return {
            "m": str(m),
            "p_ternary": _msb(self.p),
            "q_ternary": _msb(self.q),
            "p": str(p_val),
            "q": str(q_val),
            "class": c.label,
            "quotient": format_poly(c.quotient) if isinstance(c, Universal) else None,
            "source": "oracle",
        }

    def representation(self, m: int) -> Representation:
        return Representation(m, ternary_from_newman(self.p), ternary_from_newman(self.q))


def _msb(p: NewmanPoly) -> str:
    return ternary_from_newman(p).msb()


def newman_count(max_degree: int) -> int:
    return 1 + sum(2 ** (r - 1) for r in range(1, max_degree + 1))


@lru_cache(maxsize=4)
def value_table(max_degree: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(values, degrees, masks)`` for every Newman polynomial up to the degree.

    Bit ``i - 1`` of a mask is the coefficient of ``x**i`` for ``0 < i < degree``;
    rows are ordered by degree, then by mask.
    """
    if not 0 <= max_degree <= MAX_DEGREE:
        raise ValueError(f"oracle degree must be in [0, {MAX_DEGREE}], got {max_degree}")
    values = [np.array([1], dtype=np.int64)]
    degrees = [np.zeros(1, dtype=np.int64)]
    masks = [np.zeros(1, dtype=np.int64)]
    middle = np.zeros(1, dtype=np.int64)  # subset sums of 3^1 .. 3^(r-1)
    for r in range(1, max_degree + 1):
        if r >= 2:
            middle = np.concatenate([middle, middle + 3 ** (r - 1)])
        values.append(1 + middle + 3**r)
        degrees.append(np.full(middle.size, r, dtype=np.int64))
        masks.append(np.arange(middle.size, dtype=np.int64))
    return np.concatenate(values), np.concatenate(degrees), np.concatenate(masks)


def _newman(degree: int, mask: int) -> NewmanPoly:
    if degree == 0:
        return NewmanPoly((0,))
    mid = [i + 1 for i in range(degree - 1) if mask >> i & 1]
    return NewmanPoly((0, *mid, degree))


def brute_force(m: int, max_degree: int, limit: Optional[int] = None) -> List[OracleHit]:
    """All ``(p, q)`` with ``deg p <= max_degree`` and ``p(3) = m * q(3)``.

    ``limit`` keeps only the first hits in table order.
    """
    if m < 1 or m % 3 != 1:
        raise ValueError(f"oracle needs m = 1 (mod 3), got {m}")
    values, degrees, masks = value_table(max_degree)
    idx = np.nonzero(values % m == 0)[0]
    cof = values[idx] // m
    ok = np.ones(cof.size, dtype=bool)
    rest = cof.copy()
    while rest.any():
        ok &= rest % 3 != 2
        rest //= 3
    hits = []
    for i, c in zip(idx[ok][:limit], cof[ok][:limit]):
        p = _newman(int(degrees[i]), int(masks[i]))
        digits = to_ternary(int(c))
        q = NewmanPoly(tuple(e for e, d in enumerate(digits) if d))
        hits.append(OracleHit(p, q, classify_pair(p, q)))
    return hits


@dataclass
class CrossCheckReport:
    m: int
    max_degree: int
    max_len: int
    oracle_count: int = 0
    transducer_count: int = 0
    missing_from_transducer: List[Tuple[str, str]] = field(default_factory=list)
    missing_from_oracle: List[Tuple[str, str]] = field(default_factory=list)
    class_mismatches: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing_from_transducer or self.missing_from_oracle or self.class_mismatches)

    def to_record(self) -> dict:
        return {
            "m": str(self.m),
            "max_degree": self.max_degree,
            "max_len": self.max_len,
            "oracle_count": self.oracle_count,
            "transducer_count": self.transducer_count,
            "missing_from_transducer": [list(k) for k in self.missing_from_transducer],
            "missing_from_oracle": [list(k) for k in self.missing_from_oracle],
            "class_mismatches": [list(k) for k in self.class_mismatches],
            "ok": self.ok,
        }


def cross_check(m: int, max_degree: int, max_len: int) -> CrossCheckReport:
    """Compare oracle hits with walk-derived representations as digit strings.

    The transducer side is every indecomposable walk of length at most
    ``max_len`` plus every concatenation of them, restricted to the oracle's
    range ``deg p <= max_degree``.
    """
    report = CrossCheckReport(m, max_degree, max_len)
    oracle = {h.key: h for h in brute_force(m, max_degree)}
    reps = enumerate_representations(m, min(max_len, max_degree + 1))
    walk = {r.key: r for r in reps if r.p.degree <= max_degree}
    report.oracle_count = len(oracle)
    report.transducer_count = len(walk)
    report.missing_from_transducer = sorted(set(oracle) - set(walk))
    report.missing_from_oracle = sorted(set(walk) - set(oracle))
    for key in sorted(set(oracle) & set(walk)):
        if oracle[key].classification != walk[key].classification:
            report.class_mismatches.append(key)
    return report
