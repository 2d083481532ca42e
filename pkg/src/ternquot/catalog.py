"""Universal/local catalog of small integers and the non-representability scan.

A missing witness is always "not found within the search bounds"; bounded
search never proves that a representation type does not exist.
"""
from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .numeric import feasible_interval
from .oracle import brute_force
from .representations import Representation, enumerate_indecomposable, is_indecomposable
from .transducer import is_representable

log = logging.getLogger(__name__)

DEFAULT_MAX_LEN = 24
DEFAULT_ORACLE_DEGREE = 18
FOUND = "★"


class CatalogIOError(OSError):
    pass


@dataclass(frozen=True)
class CatalogRow:
    m: int
    universal: Optional[Representation]
    local: Optional[Representation]
    search_len: int
    oracle_degree: int

    def __post_init__(self) -> None:
        if self.universal is not None and not self.universal.is_universal:
            raise ValueError(f"universal witness for {self.m} is local")
        if self.local is not None and self.local.is_universal:
            raise ValueError(f"local witness for {self.m} is universal")

    @property
    def key(self) -> Tuple[int, int, int]:
        return self.m, self.search_len, self.oracle_degree

    def to_record(self) -> dict:
        def wit(r: Optional[Representation]) -> Optional[Dict[str, str]]:
            return None if r is None else {"p": r.p.msb(), "q": r.q.msb()}

        return {
            "m": str(self.m),
            "universal": wit(self.universal),
            "local": wit(self.local),
            "search_len": self.search_len,
            "oracle_degree": self.oracle_degree,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "CatalogRow":
        m = int(rec["m"])

        def wit(w: Optional[dict]) -> Optional[Representation]:
            return None if w is None else Representation.from_msb(m, w["p"], w["q"])

        return cls(m, wit(rec["universal"]), wit(rec["local"]), rec["search_len"], rec["oracle_degree"])


def feasible_candidates(max_m: int) -> List[int]:
    """m = 1 (mod 3), m <= max_m, inside some feasible interval."""
    return [m for m in range(1, max_m + 1, 3) if feasible_interval(m) is not None]


def classify_integer(
    m: int, max_len: int = DEFAULT_MAX_LEN, oracle_degree: int = DEFAULT_ORACLE_DEGREE
) -> CatalogRow:
    """Look for one universal and one local indecomposable representation.

    Walks are tried first, in enumeration order; the oracle's indecomposable
    hits fill any type still missing.
    """
    if m % 3 != 1 or feasible_interval(m) is None:
        raise ValueError(f"{m} is not a feasible integer = 1 (mod 3)")
    universal = local = None
    for rep in enumerate_indecomposable(m, max_len):
        if rep.is_universal:
            universal = universal or rep
        else:
            local = local or rep
        if universal and local:
            break
    # for m = 1 every hit is p = q, hence universal; skip the 2^D-row scan
    if oracle_degree >= 0 and m > 1 and not (universal and local):
        for hit in brute_force(m, oracle_degree):
            rep = hit.representation(m)
            if not is_indecomposable(rep):
                continue
            if rep.is_universal:
                universal = universal or rep
            else:
                local = local or rep
    return CatalogRow(m, universal, local, max_len, oracle_degree)


def _classify_args(args: Tuple[int, int, int]) -> CatalogRow:
    return classify_integer(*args)


def load_cache(path: Union[str, Path]) -> Dict[Tuple[int, int, int], CatalogRow]:
    path = Path(path)
    if not path.exists():
        return {}
    try:
        records = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise CatalogIOError(f"cannot read catalog cache {path}: {exc}") from exc
    rows = (CatalogRow.from_record(r) for r in records)
    return {r.key: r for r in rows}


def save_rows(rows: Iterable[CatalogRow], path: Union[str, Path]) -> None:
    path = Path(path)
    ordered = sorted(rows, key=lambda r: r.key)
    text = json.dumps([r.to_record() for r in ordered], indent=1) + "\n"
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CatalogIOError(f"cannot write catalog cache {path}: {exc}") from exc


def load_rows(path: Union[str, Path]) -> List[CatalogRow]:
    return sorted(load_cache(path).values(), key=lambda r: r.key)


def build_catalog(
    max_m: int,
    max_len: int = DEFAULT_MAX_LEN,
    oracle_degree: int = DEFAULT_ORACLE_DEGREE,
    cache: Optional[Union[str, Path]] = None,
    workers: int = 1,
) -> List[CatalogRow]:
    """One row per feasible m = 1 (mod 3) up to ``max_m``, increasing.

    With ``cache``, rows already stored under the same bounds are reused and
    new rows are merged into the file; rows for other bounds are kept.
    """
    cached = load_cache(cache) if cache else {}
    todo = [m for m in feasible_candidates(max_m) if (m, max_len, oracle_degree) not in cached]
    args = [(m, max_len, oracle_degree) for m in todo]
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            fresh = list(pool.map(_classify_args, args, chunksize=4))
    else:
        fresh = [_classify_args(a) for a in args]
    log.debug("catalog: %d cached, %d computed", len(cached), len(fresh))
    merged = dict(cached)
    merged.update((r.key, r) for r in fresh)
    if cache:
        save_rows(merged.values(), cache)
    wanted = set(feasible_candidates(max_m))
    return sorted(
        (r for r in merged.values() if r.m in wanted and r.search_len == max_len and r.oracle_degree == oracle_degree),
        key=lambda r: r.m,
    )


def _scan_chunk(ms: Sequence[int]) -> List[int]:
    return [m for m in ms if not is_representable(m)]


def scan_exceptions(max_m: int, workers: int = 1, chunk: int = 20000) -> List[int]:
    """Feasible m = 1 (mod 3) up to ``max_m`` with no representation at all."""
    ms = feasible_candidates(max_m)
    if workers <= 1:
        return _scan_chunk(ms)
    chunks = [ms[i : i + chunk] for i in range(0, len(ms), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [m for part in pool.map(_scan_chunk, chunks) for m in part]


def render(rows: Sequence[CatalogRow], fmt: str = "md") -> str:
    if fmt in ("md", "markdown"):
        lines = ["| m | universal | local |", "|---:|:---:|:---:|"]
        for r in rows:
            u = FOUND if r.universal else ""
            loc = FOUND if r.local else ""
            lines.append(f"| {r.m} | {u} | {loc} |")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            [
                "m", "universal", "local",
                "universal_witness_p", "universal_witness_q",
                "local_witness_p", "local_witness_q",
                "search_len", "oracle_degree",
            ]
        )
        for r in rows:
            u, loc = r.universal, r.local
            w.writerow(
                [
                    r.m,
                    "found" if u else "not_found_within_bound",
                    "found" if loc else "not_found_within_bound",
                    u.p.msb() if u else "", u.q.msb() if u else "",
                    loc.p.msb() if loc else "", loc.q.msb() if loc else "",
                    r.search_len, r.oracle_degree,
                ]
            )
        return buf.getvalue()
    raise ValueError(f"unknown catalog format {fmt!r}")
