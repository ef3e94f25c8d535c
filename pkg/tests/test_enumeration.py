"""Closed-form z, pruning bounds and the exhaustive searches."""

from fractions import Fraction

import pytest

from brute import brute_force_super_perfect
from ramid import (
    Classification,
    IdentityTuple,
    appendix_distinct,
    classify,
    enumerate_super_perfect,
    load_appendix,
    prime_filter,
    solve_z,
    verify_tuple,
)
from ramid.enumeration import (
    SUPER_PERFECT_T_VALUES,
    _super_perfect_cells,
    super_x_interval,
    super_y_interval,
)

F = Fraction


def test_solve_z_notebook():
    assert solve_z(2, 3, 7, 11) == 19


def test_solve_z_appendix_entry():
    assert solve_z(2, 3, 4, 61) == 63


def test_solve_z_non_integer():
    assert solve_z(2, 3, 4, 38) is None


def test_solve_z_rational_t():
    # z completing (15/16, 2, 9, 17) is -3 < 0: no positive solution here
    assert solve_z(F(15, 16), 2, 9, 17) is None
    assert solve_z(2, 2, 6, 14) == 27  # (2,2,6,14,27) solves the equation


def test_solve_z_round_trips_with_verifier():
    for A in range(2, 12):
        for x in range(2, 30):
            for y in range(x, 40):
                z = solve_z(2, A, x, y)
                if z is not None:
                    assert verify_tuple(
                        IdentityTuple(F(2), F(A), F(x), F(y), F(z))
                    ), (A, x, y, z)


def test_x_interval_invariants():
    # every admissible (t, A, x) satisfies F_A * F_x^3 >= t and F_A * F_x < t
    for t, A in _super_perfect_cells():
        interval = super_x_interval(t, A)
        if interval is None:
            continue
        fa = F(A * A, A * A - 1)
        for x in range(interval[0], interval[1] + 1):
            fx = F(x + 1, x - 1)
            assert fa * fx**3 >= t
            assert fa * fx < t
            assert x > A


def test_x_interval_t2_a3():
    assert super_x_interval(2, 3) == (4, 10)


def test_y_interval_t2_a3_x4():
    assert super_y_interval(2, 3, 4) == (32, 61)


def test_y_interval_bounds_are_sharp():
    for t, A in _super_perfect_cells():
        xs = super_x_interval(t, A)
        if xs is None:
            continue
        for x in range(xs[0], xs[1] + 1):
            ys = super_y_interval(t, A, x)
            if ys is None:
                continue
            lo, hi = ys
            m = F(t) * (A * A - 1) * (x - 1) / (A * A * (x + 1))
            f = lambda y: F(y + 1, y - 1)
            assert f(lo) < m <= f(lo - 1) if lo > x + 1 else f(lo) < m
            assert f(hi) ** 2 > m >= f(hi + 1) ** 2


def test_super_perfect_matches_appendix(super_perfect_report):
    assert set(super_perfect_report.identities) == appendix_distinct()
    assert len(super_perfect_report.identities) == 39


def test_appendix_file_has_one_repeat():
    printed = load_appendix()
    assert len(printed) == 40
    assert len(set(printed)) == 39
    dup = IdentityTuple(F(2), F(3), F(4), F(46), F(95))
    assert printed.count(dup) == 2


def test_appendix_all_verify_and_classify_super_perfect():
    for identity in appendix_distinct():
        assert verify_tuple(identity)
        assert classify(identity).at_least(Classification.SUPER_PERFECT)


def test_super_perfect_all_have_t_2(super_perfect_report):
    assert all(identity.t == 2 for identity in super_perfect_report.identities)


def test_super_perfect_sweep_above_2_is_empty():
    report = enumerate_super_perfect(t_values=range(3, 7))
    assert report.identities == ()
    assert report.candidates_examined > 0


def test_super_perfect_report_counts(super_perfect_report):
    assert super_perfect_report.candidates_examined > 0
    assert super_perfect_report.wall_time >= 0


def test_super_perfect_sorted_deduplicated(super_perfect_report):
    ids = super_perfect_report.identities
    assert list(ids) == sorted(set(ids))


def test_super_perfect_worker_count_irrelevant(super_perfect_report):
    parallel = enumerate_super_perfect(max_workers=4)
    assert parallel.identities == super_perfect_report.identities


def test_prime_filter(super_perfect_report):
    primes = prime_filter(super_perfect_report).identities
    expected = {
        IdentityTuple(F(2), F(3), F(5), F(13), F(127)),
        IdentityTuple(F(2), F(3), F(5), F(19), F(31)),
        IdentityTuple(F(2), F(3), F(7), F(11), F(19)),
    }
    assert set(primes) == expected


def test_prime_filter_empty_report():
    from ramid import EnumerationReport

    empty = EnumerationReport((), 0, 0.0)
    assert prime_filter(empty).identities == ()


def test_prime_filter_drops_composites(super_perfect_report):
    composite = IdentityTuple(F(2), F(6), F(7), F(9), F(13))
    assert composite in set(super_perfect_report.identities)
    assert composite not in set(prime_filter(super_perfect_report).identities)


def test_perfect_superset_of_super_perfect(super_perfect_report, perfect_report):
    assert set(super_perfect_report.identities) <= set(perfect_report.identities)


def test_perfect_all_verify_and_are_perfect(perfect_report):
    assert perfect_report.identities  # nonempty and finite by construction
    for identity in perfect_report.identities:
        assert verify_tuple(identity)
        assert classify(identity).at_least(Classification.PERFECT)
        assert identity.x <= identity.y <= identity.z


def test_perfect_finds_unordered_cases(perfect_report):
    found = set(perfect_report.identities)
    # A far above x, reachable only through the uniform A cap
    assert IdentityTuple(F(4), F(28), F(2), F(8), F(57)) in found
    # extreme corner: every variable at minimum, t at its maximum 36
    assert IdentityTuple(F(36), F(2), F(2), F(2), F(2)) in found


def test_perfect_worker_count_irrelevant(perfect_report):
    parallel = __import__("ramid").enumerate_perfect(max_workers=3)
    assert parallel.identities == perfect_report.identities


def test_bounds_equal_brute_force_at_small_scale(super_perfect_report):
    # Desk-scale soundness: the appendix maximum y is 61, so a 150 cap
    # already covers everything the pruned search reports.
    assert brute_force_super_perfect(150) == set(super_perfect_report.identities)


def test_report_jsonl_round_trip(tmp_path, super_perfect_report):
    path = tmp_path / "out.jsonl"
    with open(path, "w") as fh:
        super_perfect_report.write_jsonl(fh)
    lines = path.read_text().splitlines()
    assert len(lines) == 39
    parsed = [IdentityTuple.from_json(line) for line in lines]
    assert parsed == list(super_perfect_report.identities)
    assert all('"class"' in line for line in lines)
