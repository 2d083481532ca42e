import re

import pytest
from hypothesis import given, strategies as st

from ternquot.numeric import is_sum_distinct_powers, to_ternary
from ternquot.oracle import brute_force
from ternquot.transducer import (
    EdgeKind,
    VertexBoundError,
    build_digraph,
    export_dot,
    forward_closure,
    is_representable,
    out_edges,
    step,
)


@pytest.mark.parametrize(
    "m, carry, choice, expected",
    [
        (22, 0, EdgeKind.STEP_UP, (7, 1, 1)),
        (22, 7, None, (2, 1, 0)),
        (22, 8, None, (10, 0, 1)),
        (22, 3, EdgeKind.STEP_UP, (8, 1, 1)),
        (22, 3, EdgeKind.STEP_DOWN, (1, 0, 0)),
    ],
)
def test_step(m, carry, choice, expected):
    assert step(m, carry, choice) == expected


def test_step_rejects_bad_choices():
    with pytest.raises(ValueError):
        step(22, 3)
    with pytest.raises(ValueError):
        step(22, 7, EdgeKind.STEP_UP)
    with pytest.raises(ValueError):
        step(23, 0, EdgeKind.STEP_UP)


def test_digraph_22():
    g = build_digraph(22)
    assert g.vertices == {0, 1, 2, 3, 7, 8, 10}
    assert g.t == 7
    assert g.representable()


def test_digraph_7_terminating_path():
    assert {0, 3, 1} <= build_digraph(7).vertices


def test_digraph_4():
    g = build_digraph(4)
    assert (EdgeKind.STEP_UP, 1) in [(e.kind, e.target) for e in g.edges[0]]
    assert [(e.kind, e.target) for e in g.edges[1]] == [(EdgeKind.FORCED1, 0)]


@pytest.mark.parametrize("m, expected", [(529, False), (22, True), (2, False), (1, True), (66, True), (1587, False)])
def test_is_representable(m, expected):
    assert is_representable(m) is expected


def test_is_representable_agrees_with_oracle():
    for m in range(1, 122, 3):
        assert is_representable(m) == bool(brute_force(m, 18, limit=1)), m


def test_dot_22_pruned():
    text = export_dot(build_digraph(22), pruned=True)
    nodes = re.findall(r"^  (\d+);$", text, re.M)
    assert len(nodes) == 7
    assert '  3 -> 8 [label="1/1"];' in text


def test_dot_100_pruned_excludes_dead_branch():
    g = build_digraph(100)
    assert 44 in g.vertices
    assert 44 not in g.coreachable
    pruned = export_dot(g, pruned=True)
    assert not re.search(r"\b44\b", pruned)
    assert re.search(r"\b44\b", export_dot(g))


DOT_LINE = re.compile(r'^(digraph \w+ \{|  node \[shape=circle\];|  \d+;|  \d+ -> \d+ \[label="[01]/[01]"\];|\})$')


@pytest.mark.parametrize("m", [4, 22, 100, 529])
def test_dot_well_formed(m):
    text = export_dot(build_digraph(m))
    assert text.endswith("}\n")
    lines = text.splitlines()
    assert all(DOT_LINE.match(line) for line in lines)
    assert lines[0] == f"digraph Dm_{m} {{"
    declared = {int(x) for x in re.findall(r"^  (\d+);$", text, re.M)}
    used = {int(x) for pair in re.findall(r"^  (\d+) -> (\d+)", text, re.M) for x in pair}
    assert used <= declared


def test_dot_deterministic():
    assert export_dot(build_digraph(100)) == export_dot(build_digraph(100))


ms = st.integers(0, 30000).map(lambda k: 3 * k + 1)


@given(ms)
def test_out_degree_and_step_consistency(m):
    g = build_digraph(m)
    t = (m - 1) // 3
    assert [(e.kind, e.target) for e in g.edges[0]] == [(EdgeKind.STEP_DOWN, 0), (EdgeKind.STEP_UP, t)]
    for v, es in g.edges.items():
        assert len(es) == (2 if v % 3 == 0 else 1)
        for e in es:
            choice = e.kind if e.kind.is_choice else None
            new, p, q = step(m, v, choice)
            assert (new, p, q) == (e.target, e.kind.p, e.kind.q)
            assert e.target in g.vertices
        assert es == out_edges(m, v)
        assert v <= m // 2


@given(ms)
def test_coreachable_and_distances(m):
    g = build_digraph(m)
    assert g.dist_to_zero[0] == 0
    for v, d in g.dist_to_zero.items():
        if v:
            assert any(g.dist_to_zero.get(e.target) == d - 1 for e in g.edges[v])
    assert g.representable() == is_representable(m)


sums_of_powers = st.sets(st.integers(0, 20), min_size=1).map(lambda es: sum(3**e for e in es))


@given(ms, sums_of_powers)
def test_shortcut_appends_digits_of_w(m, w):
    # from a carry w in A, stepping down at every choice spells out w in base 3
    assert is_sum_distinct_powers(w)
    digits, v = [], w
    while v:
        choice = EdgeKind.STEP_DOWN if v % 3 == 0 else None
        v, p, q = step(m, v, choice)
        digits.append(p)
        assert q == 0
    assert tuple(digits) == to_ternary(w)


def test_vertex_bound_error_is_an_assertion():
    assert max(forward_closure(22)) <= 11
    assert issubclass(VertexBoundError, AssertionError)


@pytest.mark.slow
def test_vertex_bound_small_sweep():
    for m in range(1, 20001, 3):
        assert max(forward_closure(m)) <= m // 2
