"""Engine correctness: brute-force oracle vs transfer-matrix sweep."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from aztec_tilings import (
    Cell,
    DefectSpec,
    DualGraph,
    Region,
    build_dual,
    count_matchings_brute,
    count_matchings_weighted,
    count_tilings_dp,
    make_aztec_diamond,
    make_aztec_rectangle,
    remove_defects,
    with_edge_weights,
)
from aztec_tilings.errors import InvalidParameterError


def test_empty_graph_counts_one():
    assert count_matchings_brute(build_dual(Region.from_cells([]))) == 1
    assert count_tilings_dp(Region.from_cells([])) == 1


def test_brute_diamond_of_order_two():
    assert count_matchings_brute(build_dual(make_aztec_diamond(2))) == 8


def test_two_by_three_block():
    # 2x3 block of cells has the classic three brick tilings
    cells = [Cell(x + y + 1, x - y) for x in range(3) for y in range(2)]
    assert len(set(cells)) == 6
    region = Region.from_cells(cells)
    assert count_matchings_brute(build_dual(region)) == 3
    assert count_tilings_dp(region) == 3


def test_dp_anchors():
    assert count_tilings_dp(make_aztec_diamond(4)) == 1024
    region = remove_defects(make_aztec_rectangle(2, 3), [DefectSpec("SE", 2)])
    assert count_tilings_dp(region) == 16
    region = remove_defects(make_aztec_rectangle(1, 2), [DefectSpec("SE", 2)])
    assert count_tilings_dp(region) == 2


def test_gamma_string_forces_diamond_count():
    from aztec_tilings import add_gamma_squares

    region = add_gamma_squares(make_aztec_rectangle(5, 10), 5, 1)
    assert count_tilings_dp(region) == 2 ** 15


def test_odd_cell_count_is_zero():
    region = Region.from_cells([Cell(0, 1)])
    assert count_tilings_dp(region) == 0
    assert count_matchings_brute(build_dual(region)) == 0


def test_color_imbalance_is_zero():
    region = make_aztec_rectangle(2, 4)
    assert count_tilings_dp(region) == 0
    assert count_matchings_brute(build_dual(region)) == 0


@settings(max_examples=60, deadline=None)
@given(st.sets(st.sampled_from(sorted(make_aztec_rectangle(3, 5).cells)), max_size=18))
def test_engines_agree_on_random_subregions(cells):
    region = Region.from_cells(cells)
    assert count_tilings_dp(region) == count_matchings_brute(build_dual(region))


@settings(max_examples=25, deadline=None)
@given(
    st.sets(st.sampled_from(sorted(make_aztec_rectangle(2, 4).cells)), min_size=2, max_size=6)
)
def test_no_negative_counts_after_deletion(cells):
    base = make_aztec_rectangle(2, 4).cells
    region = Region.from_cells(base - cells)
    value = count_tilings_dp(region)
    assert value >= 0
    assert count_matchings_brute(build_dual(region)) == value


def _cycle4() -> DualGraph:
    return build_dual(make_aztec_diamond(1))


def test_weighted_single_edge():
    graph = build_dual(Region.from_cells([Cell(0, 1), Cell(1, 2)]))
    weighted = with_edge_weights(graph, {frozenset({Cell(0, 1), Cell(1, 2)}): Fraction(3, 2)})
    assert count_matchings_weighted(weighted) == Fraction(3, 2)


def test_weighted_four_cycle():
    graph = _cycle4()
    assert count_matchings_weighted(graph) == 2
    # weights 1,2,3,4 in cyclic order: the two matchings weigh 1*3 and 2*4
    cyc = [Cell(0, 1), Cell(1, 2), Cell(2, 1), Cell(1, 0)]
    weights = {
        frozenset({cyc[i], cyc[(i + 1) % 4]}): Fraction(i + 1) for i in range(4)
    }
    weighted = with_edge_weights(graph, weights)
    assert count_matchings_weighted(weighted) == 11


def test_weighted_rejects_nonpositive():
    graph = _cycle4()
    weighted = with_edge_weights(graph, {frozenset({Cell(0, 1), Cell(1, 2)}): Fraction(-1)})
    with pytest.raises(InvalidParameterError):
        count_matchings_weighted(weighted)
