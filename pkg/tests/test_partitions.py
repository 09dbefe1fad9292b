import pytest

from quiverdt import partitions as P
from quiverdt.qseries import Mono, Substitution, coefficients_in_single_var, compare, substitute

import oracles


def coeffs(series):
    return coefficients_in_single_var(series)


# -- linear partitions ----------------------------------------------------------


def test_partition_series_values():
    assert coeffs(P.partition_series(6)) == [1, 1, 2, 3, 5, 7, 11]


def test_partition_counts_match_recurrence():
    for n in range(12):
        assert P.partition_count(n) == oracles.partition_count_dp(n)


def test_tuple_series_rank_two():
    assert coeffs(P.tuple_series(2, 3)) == [1, 2, 5, 10]


def test_tuple_series_rank_zero_and_one():
    assert coeffs(P.tuple_series(0, 3)) == [1, 0, 0, 0]
    assert coeffs(P.tuple_series(1, 4)) == coeffs(P.partition_series(4))


def test_nested_series_example():
    assert coeffs(P.nested_series(2, 2)) == [1, 1, 3]


def test_nested_series_values_match_filter_oracle():
    for r in (1, 2, 3):
        assert coeffs(P.nested_series(r, 6)) == oracles.nested_counts_by_filter(r, 6)


def test_nested_monotone_in_rank():
    low = coeffs(P.nested_series(2, 8))
    high = coeffs(P.nested_series(3, 8))
    assert all(a <= b for a, b in zip(low, high))


# -- plane partitions --------------------------------------------------------------


def test_plane_partition_series_values():
    assert coeffs(P.plane_partition_series(6)) == [1, 1, 3, 6, 13, 24, 48]


def test_plane_partitions_match_box_pile_oracle():
    assert coeffs(P.plane_partition_series(8)) == oracles.plane_partition_counts_by_boxes(8)


def test_colored_plane_partitions_match_box_pile_oracle():
    got = P.plane_partition_series(6, colors=2)
    want = oracles.colored_plane_partition_counts_by_boxes(6, 2)
    assert got.coeffs == {k: v for k, v in want.items() if v}


def test_pit_row_bound_equals_nested():
    for r in (1, 2, 3):
        pit = P.plane_partition_series(8, pit=(r, 0))
        nested = P.nested_series(r, 8)
        assert compare(pit, nested) is None


def test_pit_beyond_order_is_unconstrained():
    assert compare(
        P.plane_partition_series(6, pit=(10, 10)), P.plane_partition_series(6)
    ) is None


def test_pit_transpose_symmetry():
    # (0, N) bounds columns: the transpose convention of (N, 0)
    assert compare(
        P.plane_partition_series(7, pit=(0, 2)), P.plane_partition_series(7, pit=(2, 0))
    ) is None


def test_pit_general_counts_are_between():
    unconstrained = coeffs(P.plane_partition_series(6))
    rows2 = coeffs(P.plane_partition_series(6, pit=(2, 0)))
    pit21 = coeffs(P.plane_partition_series(6, pit=(2, 1)))
    assert all(a <= b <= c for a, b, c in zip(rows2, pit21, unconstrained))


def test_colored_collapse_to_uncolored():
    colored = P.plane_partition_series(8, colors=3)
    sub = Substitution(
        ("q0", "q1", "q2"), ("q",), {f"q{c}": Mono(1, (1,)) for c in range(3)}
    )
    assert compare(substitute(sub, colored), P.plane_partition_series(8)) is None


def test_order_envelope_enforced():
    with pytest.raises(P.OrderTooLarge):
        P.plane_partition_series(15)
    with pytest.raises(P.OrderTooLarge):
        P.pyramid_series(13)


# -- pyramids ------------------------------------------------------------------------


def test_pyramid_small_configurations():
    s = P.pyramid_series(3)
    assert s.coefficient((0, 0)) == 1
    assert s.coefficient((1, 0)) == 1  # single apex stone, color 0
    assert s.coefficient((0, 1)) == 0  # color-1 stones need the apex
    assert s.coefficient((1, 1)) == 2
    assert s.coefficient((1, 2)) == 1
    assert s.coefficient((2, 1)) == 4


def test_pyramid_specialization_q1_zero():
    s = P.pyramid_series(5)
    only_q0 = {e: c for e, c in s.coeffs.items() if e[1] == 0}
    assert only_q0 == {(0, 0): 1, (1, 0): 1}


def test_pyramid_supports_need_both_stones():
    # two color-0 stones cannot appear without at least one color-1 stone
    s = P.pyramid_series(4)
    assert s.coefficient((2, 0)) == 0


def test_pyramid_matches_bfs_oracle():
    got = P.pyramid_series(6)
    want = oracles.pyramid_weights_by_bfs(6)
    assert got.coeffs == {k: v for k, v in want.items() if v}


# -- blowup --------------------------------------------------------------------------


def test_blowup_constant_and_half_power():
    s = P.blowup_series(4)
    assert s.coefficient((0,)) == 1  # q^0: k = 0, empty pair
    assert s.coefficient((1,)) == 2  # q^(1/2): k = +-1
    assert s.coefficient((2,)) == 2  # q^1: k = 0 with one box, two slots


def test_blowup_matches_direct_term_count():
    s = P.blowup_series(3)
    # q^(3/2): k = +-1 with one extra box in either partition slot
    assert s.coefficient((3,)) == 2 * 2


def test_blowup_k_range_restriction():
    zero_sector = P.blowup_series(4, k_max=0)
    assert all(e[0] % 2 == 0 for e in zero_sector.coeffs)
    assert zero_sector.coefficient((2,)) == 2  # two single-box pairs at k = 0
