import itertools

import pytest
from hypothesis import given, strategies as st

from ternquot.numeric import (
    TernaryString,
    eval_ternary,
    feasible_interval,
    is_in_A,
    is_sum_distinct_powers,
    normalize,
    to_ternary,
)


@pytest.mark.parametrize(
    "digits, value",
    [((1, 1), 4), ((1,), 1), ((1, 0, 1, 1), 37)],
)
def test_eval_ternary(digits, value):
    assert eval_ternary(digits) == value
    assert TernaryString(digits).value == value


@pytest.mark.parametrize("n, msb", [(7, "21"), (37, "1101"), (1, "1")])
def test_to_ternary(n, msb):
    assert "".join(map(str, reversed(to_ternary(n)))) == msb


def test_to_ternary_zero_is_empty():
    assert to_ternary(0) == ()


@pytest.mark.parametrize("n, expected", [(10, True), (7, False), (0, True), (4, True), (2, False)])
def test_is_sum_distinct_powers(n, expected):
    assert is_sum_distinct_powers(n) is expected


def test_zero_not_in_A():
    assert not is_in_A(0)
    assert is_in_A(1) and is_in_A(28)


@pytest.mark.parametrize("m, expected", [(21, (1, 7)), (22, (0, 22)), (9, (2, 1)), (1, (0, 1))])
def test_normalize(m, expected):
    assert normalize(m) == expected


def test_normalize_rejects_nonpositive():
    with pytest.raises(ValueError):
        normalize(0)


@pytest.mark.parametrize("m, r", [(22, 3), (16, None), (1, 0), (7, 2), (100, 4), (43, None), (52, None)])
def test_feasible_interval(m, r):
    assert feasible_interval(m) == r


def _interval_by_definition(m):
    hits = [r for r in range(0, m.bit_length() + 2) if 2 * 3**r < 3 * m and 2 * m < 3 ** (r + 1)]
    assert len(hits) <= 1
    return hits[0] if hits else None


def test_feasible_interval_matches_definition():
    for m in range(1, 5000):
        assert feasible_interval(m) == _interval_by_definition(m)


def test_feasible_interval_boundaries_large_r():
    for r in range(1, 60):
        lo, hi = 2 * 3**r, 3 ** (r + 1)
        for m in (lo // 3, lo // 3 + 1, (hi - 1) // 2, (hi + 1) // 2):
            assert feasible_interval(m) == _interval_by_definition(m)


def test_ternary_string_canonical_form():
    t = TernaryString.from_msb("[1101]_3")
    assert t.digits == (1, 0, 1, 1)
    assert t.msb() == "1101"
    assert t.degree == 3
    assert TernaryString.from_digits([1, 1, 0, 0]).digits == (1, 1)
    assert TernaryString.from_int(28).msb() == "1001"
    for bad in [(), (0, 1), (1, 0), (1, 2, 1)]:
        with pytest.raises(ValueError):
            TernaryString(bad)
    with pytest.raises(ValueError):
        TernaryString.from_int(7)


def test_round_trip_to_million():
    for n in range(0, 10**6 + 1, 7):
        assert eval_ternary(to_ternary(n)) == n


@given(st.integers(min_value=0, max_value=10**40))
def test_round_trip_property(n):
    assert eval_ternary(to_ternary(n)) == n


def _injective(alphabet, max_len):
    seen = {}
    for length in range(1, max_len + 1):
        for digits in itertools.product(alphabet, repeat=length):
            if digits[-1] == 0:
                continue
            v = sum(d * 3**i for i, d in enumerate(digits))
            if v in seen:
                return digits, seen[v]
            seen[v] = digits
    return None


def test_injective_over_0_1_2():
    assert _injective((0, 1, 2), 12) is None


def test_injective_between_0_1_and_minus1_to_2():
    # {0,1} against {-1,0,1,2}; two {-1,..,2} strings can collide, e.g. 2 = -1 + 3
    newman = {}
    for length in range(1, 9):
        for digits in itertools.product((0, 1), repeat=length):
            if digits[-1]:
                newman[sum(d * 3**i for i, d in enumerate(digits))] = digits
    for length in range(1, 9):
        for digits in itertools.product((-1, 0, 1, 2), repeat=length):
            if digits[-1] == 0:
                continue
            v = sum(d * 3**i for i, d in enumerate(digits))
            if v in newman:
                assert newman[v] == digits
    assert _injective((-1, 0, 1, 2), 2) is not None


def test_injective_over_shifted_alphabet():
    assert _injective((-1, 0, 1), 10) is None
