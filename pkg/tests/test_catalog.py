import csv
import io
import json

import pytest

from ternquot.catalog import (
    CatalogIOError,
    CatalogRow,
    build_catalog,
    classify_integer,
    feasible_candidates,
    load_rows,
    render,
    save_rows,
    scan_exceptions,
)
from ternquot.representations import Representation, enumerate_indecomposable, is_indecomposable
from ternquot.transducer import build_digraph


@pytest.fixture(scope="module")
def catalog_364():
    return build_catalog(364, 24, 18)


def test_classify_31():
    row = classify_integer(31)
    assert row.universal is not None and row.universal.q.value == 1
    assert row.local is not None


def test_classify_22():
    row = classify_integer(22)
    assert row.universal is None
    assert (row.local.p.value, row.local.q.value) == (814, 37)


def test_classify_289_local_not_found():
    row = classify_integer(289)
    assert row.universal is not None
    assert row.local is None


def test_classify_rejects_infeasible():
    with pytest.raises(ValueError):
        classify_integer(16)


def test_row_count_and_gaps(catalog_364):
    assert [r.m for r in catalog_364] == feasible_candidates(364)
    assert len(catalog_364) == 104
    assert not {16, 43, 46, 49, 52} & {r.m for r in catalog_364}


def test_catalog_of_one():
    [row] = build_catalog(1)
    assert row.m == 1
    assert (row.universal.p.msb(), row.universal.q.msb()) == ("1", "1")


def test_witnesses_are_indecomposable_and_correct(catalog_364):
    for row in catalog_364:
        for rep in (row.universal, row.local):
            if rep is not None:
                assert rep.p.value == row.m * rep.q.value
                assert is_indecomposable(rep)


def test_render_md_row_22(catalog_364):
    text = render([r for r in catalog_364 if r.m == 22])
    assert text.splitlines()[-1] == "| 22 |  | ★ |"


def test_render_empty():
    assert render([]) == "| m | universal | local |\n|---:|:---:|:---:|\n"
    assert render([], "csv").count("\n") == 1


def test_render_csv(catalog_364):
    rows = list(csv.DictReader(io.StringIO(render(catalog_364, "csv"))))
    by_m = {int(r["m"]): r for r in rows}
    assert by_m[22]["universal"] == "not_found_within_bound"
    assert (by_m[22]["local_witness_p"], by_m[22]["local_witness_q"]) == ("1010011", "1101")
    assert by_m[289]["local"] == "not_found_within_bound"
    assert by_m[289]["search_len"] == "24"


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render([], "xml")


def test_save_load_round_trip(tmp_path, catalog_364):
    path = tmp_path / "c.json"
    save_rows(catalog_364, path)
    assert load_rows(path) == catalog_364
    rec = json.loads(path.read_text())[0]
    assert set(rec) == {"m", "universal", "local", "search_len", "oracle_degree"}


def test_cache_reuses_and_merges(tmp_path):
    path = tmp_path / "sub" / "c.json"
    first = build_catalog(40, 12, 8, cache=path)
    fake = CatalogRow(22, None, None, 12, 8)
    save_rows([fake if r.m == 22 else r for r in first], path)
    again = build_catalog(40, 12, 8, cache=path)
    # cached rows are trusted, so the planted row comes back unchanged
    assert [r for r in again if r.m == 22] == [fake]
    build_catalog(40, 14, 8, cache=path)
    keys = {(r.search_len, r.oracle_degree) for r in load_rows(path)}
    assert keys == {(12, 8), (14, 8)}


def test_corrupt_cache(tmp_path):
    path = tmp_path / "c.json"
    path.write_text("{not json")
    with pytest.raises(CatalogIOError):
        build_catalog(10, cache=path)


def test_row_validates_witness_class():
    local = Representation.from_msb(22, "1010011", "1101")
    with pytest.raises(ValueError):
        CatalogRow(22, local, None, 24, 18)


def test_monotone_in_bounds():
    shallow = {r.m: r for r in build_catalog(200, 10, 8)}
    deep = {r.m: r for r in build_catalog(200, 16, 12)}
    for m, row in shallow.items():
        if row.universal:
            assert deep[m].universal
        if row.local:
            assert deep[m].local


@pytest.mark.parametrize(
    "max_m, expected",
    [(500, []), (1000, [529, 592, 601, 616]), (6000, [529, 592, 601, 616, 5368])],
)
def test_scan(max_m, expected):
    assert scan_exceptions(max_m) == expected


def test_scan_parallel_matches_serial():
    assert scan_exceptions(6000, workers=2, chunk=500) == scan_exceptions(6000)


def test_scanner_soundness():
    exceptions = set(scan_exceptions(1000))
    for m in feasible_candidates(1000):
        if m in exceptions:
            assert enumerate_indecomposable(m, 40) == []
        else:
            g = build_digraph(m)
            rep = enumerate_indecomposable(m, g.dist_to_zero[g.t] + 1)[0]
            assert rep.p.value == m * rep.q.value
    for m in (529, 616):
        assert enumerate_indecomposable(m, 60) == []
