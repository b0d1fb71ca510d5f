import json

import numpy as np
import pytest

from tricircle.calculus import InputError, cyclic_distance, f, f_min
from tricircle.closed_forms import k22n_exact
from tricircle.constructions import k22n_construction
from tricircle.verifiers import (
    REFERENCE_TABLE,
    VerificationReport,
    distance_table,
    f_table,
    hh_equality_window,
    table_row,
    verify_bichromatic_min,
    verify_construction,
    verify_fmin,
    verify_hh,
    verify_k22n_lower,
    verify_mixed,
    verify_three_terms,
    verify_ys,
)
from oracles import k22n_scalar_min


def test_tables_match_scalar_functions():
    for n in (2, 5, 8):
        d, ft = distance_table(n), f_table(n)
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                assert d[u - 1, v - 1] == cyclic_distance(n, u, v)
                assert ft[u - 1, v - 1] == f(n, u, v)


@pytest.mark.parametrize("n_max,gap", [(7, 2), (6, 1)])
def test_fmin(n_max, gap):
    r = verify_fmin(n_max)
    assert r.passed and r.details["gap_at_n_max"] == gap
    assert r.checked_count == sum(n * n for n in range(2, n_max + 1))


def test_fmin_smallest():
    assert verify_fmin(2).checked_count == 4
    with pytest.raises(InputError):
        verify_fmin(1)


def test_three_terms_examples():
    n = 5
    d = lambda a, b: cyclic_distance(n, a, b)  # noqa: E731
    assert d(1, 2) + d(2, 3) + d(3, 4) - d(1, 4) == 0
    assert d(1, 4) + d(4, 3) + d(3, 2) - d(1, 2) == 2 * n
    r = verify_three_terms(12)
    assert r.passed and r.checked_count == 12 * 11 * 10 * 9
    counts = r.details["residue_counts"]
    # one ordering in six gives 0 and one gives 2n
    assert counts["0"] == counts["24"] == r.checked_count // 6


def test_mixed():
    assert verify_mixed(3).checked_count == 81
    r = verify_mixed(20)
    assert r.passed and r.checked_count == 160000
    n, M = 5, f_min(5).value
    lhs = 2 * cyclic_distance(n, 1, 1) + 2 * cyclic_distance(n, 2, 2) + f(n, 1, 2)
    z = cyclic_distance(n, 2, 1)
    assert (lhs, M + n - 1 - 2 * z) == (6, 0)


def test_ys():
    r = verify_ys(3)
    assert r.passed and r.checked_count == 81
    n = 4
    s = f(n, 1, 2) + f(n, 1, 4) + f(n, 3, 2) + f(n, 3, 4) - 4 * f_min(n).value
    assert s == 4
    assert verify_ys(4).passed
    assert verify_ys(11).passed


@pytest.mark.parametrize("abc,low", [((1, 1, 5), 4), ((2, 2, 4), 8), ((1, 1, 2), 0), ((3, 2, 7), 54)])
def test_bichromatic_min(abc, low):
    r = verify_bichromatic_min(*abc)
    assert r.passed and r.details["minimum"] == low
    assert r.checked_count == abc[2] ** (abc[0] + abc[1])


@pytest.mark.parametrize("abc", [(4, 1, 3), (1, 1, 9), (0, 1, 3)])
def test_bichromatic_guard(abc):
    with pytest.raises(InputError):
        verify_bichromatic_min(*abc)


def test_k22n_lower_matches_scalar_search_at_3():
    r = verify_k22n_lower(3)
    value, kind, tup = k22n_scalar_min(3)
    assert r.details["minimum"] == value == 9
    assert r.details["witness"] == [kind, *tup]
    assert r.checked_count == 4 * 3**8


@pytest.mark.parametrize("n,low", [(4, 17), (5, 31), (6, 45)])
def test_k22n_lower(n, low):
    r = verify_k22n_lower(n)
    assert r.passed and r.details["minimum"] == low == k22n_exact(n)
    assert r.details["construction_is_minimizer"]
    assert r.details["construction"] == list(k22n_construction(n).x + k22n_construction(n).y)


def test_k22n_lower_deterministic_across_workers():
    a = verify_k22n_lower(5, workers=1).to_dict()
    b = verify_k22n_lower(5, workers=3).to_dict()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_k22n_cap():
    with pytest.raises(InputError):
        verify_k22n_lower(11)
    with pytest.raises(InputError):
        verify_k22n_lower(2)


def test_table_rows():
    assert table_row(4) == (146, 147, 175, 204)
    assert table_row(9) == (6158, None, 7296, 7776)
    assert table_row(2) == (None, 3, 3, None)
    for n, row in REFERENCE_TABLE.items():
        assert table_row(n) == row


def test_hh():
    assert verify_hh(9).details["value"] == 38
    r = verify_hh(15)
    assert r.passed and r.details["harary_hill"] == 441
    for bad in (8, 11, 12):
        with pytest.raises(InputError):
            verify_hh(bad)


def test_hh_equality_window():
    assert hh_equality_window(60) == [8, 9, 10, 11]


def test_construction_report():
    assert verify_construction(30).passed


def test_report_invariants_and_json_roundtrip():
    r = verify_mixed(6)
    text = json.dumps(r.to_dict(), sort_keys=True, indent=2)
    assert json.dumps(json.loads(text), sort_keys=True, indent=2) == text
    with pytest.raises(ValueError):
        VerificationReport("mixed", {}, "fail", None)
    with pytest.raises(ValueError):
        VerificationReport("mixed", {}, "pass", [1])
    with pytest.raises(InputError):
        VerificationReport("nope", {}, "pass")


def test_reports_are_plain_ints():
    r = verify_k22n_lower(4).to_dict()
    assert all(type(v) is int for v in r["details"]["witness"])
    assert not any(isinstance(v, np.generic) for v in r["details"]["per_type_minimum"].values())
