import pytest
from hypothesis import given, strategies as st

from tricircle.calculus import (
    BI_KEYS,
    MONO_KEYS,
    X_PAIRS,
    Y_PAIRS,
    CrossingBreakdown,
    DrawingLabels,
    InputError,
    LabelVector,
    TripartiteSpec,
    bi_count,
    binom,
    cyclic_distance,
    f,
    f_min,
    mono_count,
    total_count,
)
from oracles import f_direct


def test_cyclic_distance_examples():
    assert cyclic_distance(5, 1, 4) == 3
    assert cyclic_distance(5, 4, 1) == 2
    assert cyclic_distance(7, 3, 3) == 0


@pytest.mark.parametrize("args", [(5, 0, 1), (5, 1, 6), (0, 1, 1)])
def test_cyclic_distance_rejects_bad_labels(args):
    with pytest.raises(InputError):
        cyclic_distance(*args)


def test_binom_rejects_negative():
    with pytest.raises(InputError):
        binom(-1, 2)
    assert binom(6, 2) == 15


@given(st.integers(2, 60).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n), st.integers(1, n))))
def test_f_symmetric_and_matches_direct(nuv):
    n, u, v = nuv
    assert f(n, u, v) == f(n, v, u) == f_direct(n, u, v)
    assert f(n, u, v) >= f_min(n).value


@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 40), st.integers(0, 39))
def test_f_depends_only_on_difference(n, u, v, shift):
    u, v = (u - 1) % n + 1, (v - 1) % n + 1
    su, sv = (u + shift - 1) % n + 1, (v + shift - 1) % n + 1
    assert f(n, u, v) == f(n, su, sv)


@pytest.mark.parametrize("n,value,gap", [(2, 0, 1), (3, 1, 2), (6, 6, 1), (7, 9, 2)])
def test_f_min_examples(n, value, gap):
    r = f_min(n)
    assert (r.value, r.gap) == (value, gap)
    assert r.optimal_offsets == {n // 2, (n + 1) // 2}


def test_f_min_rejects_one():
    with pytest.raises(InputError):
        f_min(1)


def test_spec_validation():
    with pytest.raises(InputError):
        TripartiteSpec(0, 1, 1)
    with pytest.raises(InputError):
        TripartiteSpec(1, True, 1)
    s = TripartiteSpec(2, 3, 4)
    assert s.rotations() == [(2, 3, 4), (3, 4, 2), (4, 2, 3)]


def _labels(spec, fill):
    x = {(a, b): LabelVector(a, b, (fill(b),) * spec.size(a)) for a, b in X_PAIRS}
    y = {(a, b): LabelVector(a, b, (fill(b),) * spec.size(a)) for a, b in Y_PAIRS}
    return DrawingLabels(spec, x, y)


def test_drawing_labels_validates_lengths_and_range():
    spec = TripartiteSpec(2, 3, 4)
    ok = _labels(spec, lambda b: 1)
    with pytest.raises(InputError):
        DrawingLabels(spec, {**ok.x, ("M", "N"): LabelVector("M", "N", (1,))}, ok.y)
    with pytest.raises(InputError):
        DrawingLabels(spec, {**ok.x, ("M", "N"): LabelVector("M", "N", (1, 4))}, ok.y)
    with pytest.raises(InputError):
        DrawingLabels(spec, {k: v for k, v in ok.x.items() if k != ("M", "N")}, ok.y)


def test_bi_count_requires_common_target():
    with pytest.raises(InputError):
        bi_count(3, LabelVector("M", "P", (1,)), LabelVector("N", "M", (1,)))


def test_mono_count_example():
    # two labels half a circle apart on a 4-circle: each pair costs f_min
    assert mono_count(4, LabelVector("M", "N", (1, 3))) == 2
    # equal labels cost C(4,2) per pair
    assert mono_count(4, LabelVector("M", "N", (1, 1, 1))) == 3 * 6


def test_total_count_all_same_labels():
    spec = TripartiteSpec(3, 3, 3)
    b = total_count(_labels(spec, lambda c: 1))
    # every pair of equal labels on a 3-circle costs C(3,2) = 3
    assert dict(b.mono) == dict.fromkeys(MONO_KEYS, 3 * 3)
    assert dict(b.bi) == dict.fromkeys(BI_KEYS, 9 * 3)
    assert b.total == 108
    assert set(b.mono) == set(MONO_KEYS) and set(b.bi) == set(BI_KEYS)


def test_breakdown_checks_sum_and_keys():
    mono = dict.fromkeys(MONO_KEYS, 1)
    bi = dict.fromkeys(BI_KEYS, 2)
    b = CrossingBreakdown.from_parts(mono, bi)
    assert b.total == 9
    assert b.to_dict()["total"] == 9
    with pytest.raises(InputError):
        CrossingBreakdown(mono, bi, 10)
    with pytest.raises(InputError):
        CrossingBreakdown({"MN": 1}, bi, 7)
    with pytest.raises(InputError):
        CrossingBreakdown.from_parts({**mono, "MN": -1}, bi)
