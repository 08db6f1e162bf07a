"""Condensation identities and the Pfaffian defect counters."""

import random
from fractions import Fraction

import pytest

from aztec_tilings import (
    Cell,
    DefectConfiguration,
    DefectSpec,
    Region,
    add_gamma_squares,
    boundary_cycle,
    build_dual,
    check_face_alternating_identity,
    check_kuo_identity,
    condensation_count,
    condensation_count_symdiff,
    count_defects_four_sided,
    count_defects_three_sided,
    count_diamond_defects,
    count_matchings_weighted,
    count_tilings_dp,
    delete_vertices,
    is_white,
    make_aztec_diamond,
    make_aztec_rectangle,
    remove_defects,
    with_edge_weights,
)
from aztec_tilings.errors import (
    CondensationInapplicableError,
    InvalidConfigurationError,
    InvalidOrderError,
    OutOfScopeConfigurationError,
)


def direct_count(region, gone):
    return count_tilings_dp(Region.from_cells(region.cells - set(gone)))


def test_condensation_two_vertices_is_direct_count():
    region = make_aztec_diamond(2)
    graph = build_dual(region)
    cycle = boundary_cycle(region)
    verts = [cycle[0], cycle[3]]
    assert condensation_count(graph, verts) == direct_count(region, verts)


def test_condensation_four_vertices_diamond():
    region = make_aztec_diamond(2)
    graph = build_dual(region)
    cycle = boundary_cycle(region)
    verts = [cycle[i] for i in (0, 2, 5, 9)]
    assert condensation_count(graph, verts) == direct_count(region, verts)


def test_condensation_orientation_and_rotation_invariance():
    region = make_aztec_diamond(3)
    graph = build_dual(region)
    cycle = boundary_cycle(region)
    verts = [cycle[i] for i in (1, 4, 8, 11)]
    want = direct_count(region, verts)
    assert condensation_count(graph, verts) == want
    assert condensation_count(graph, verts[2:] + verts[:2]) == want
    assert condensation_count(graph, verts[::-1]) == want


def test_condensation_rejects_bad_order():
    region = make_aztec_diamond(3)
    graph = build_dual(region)
    cycle = boundary_cycle(region)
    verts = [cycle[i] for i in (0, 8, 4, 11)]
    with pytest.raises(InvalidOrderError):
        condensation_count(graph, verts)


def test_condensation_rejects_zero_base():
    region = make_aztec_rectangle(1, 2)  # unbalanced, M = 0
    graph = build_dual(region)
    cycle = boundary_cycle(region)
    with pytest.raises(CondensationInapplicableError):
        condensation_count(graph, [cycle[0], cycle[1]])


def test_condensation_weighted_graph():
    region = make_aztec_diamond(2)
    graph = build_dual(region)
    weights = {}
    for i, j in sorted(graph.edges)[:5]:
        weights[frozenset({graph.cells[i], graph.cells[j]})] = Fraction(2)
    weighted = with_edge_weights(graph, weights)
    cycle = boundary_cycle(region)
    verts = [cycle[i] for i in (0, 2, 5, 9)]
    direct = count_matchings_weighted(delete_vertices(weighted, verts))
    assert condensation_count(weighted, verts) == direct


def test_symdiff_reduces_to_deletion():
    region = make_aztec_diamond(2)
    graph = build_dual(region)
    cycle = boundary_cycle(region)
    verts = [cycle[i] for i in (0, 2, 5, 9)]
    cells = set(graph.cells)
    assert condensation_count_symdiff(graph, cells, verts) == condensation_count(graph, verts)


def test_symdiff_adds_gamma_cells_back():
    # base = host minus a forced domino; toggling that pair back restores the host
    host = add_gamma_squares(make_aztec_rectangle(2, 3), 1, 1)
    hgraph = build_dual(host)
    gamma, se1 = Cell(0, 5), Cell(1, 4)
    base_cells = set(host.cells) - {gamma, se1}
    cycle = boundary_cycle(host)
    verts = [c for c in cycle if c in (gamma, se1)]
    got = condensation_count_symdiff(hgraph, base_cells, verts)
    assert got == count_tilings_dp(host) == 8
    # and a mixed toggle: put the gamma pair back while deleting a white cell pair
    extra = [c for c in cycle if c in (Cell(5, 4), Cell(6, 3))]
    verts = [c for c in cycle if c in (gamma, se1, *extra)]
    got = condensation_count_symdiff(hgraph, base_cells, verts)
    assert got == count_tilings_dp(Region.from_cells(base_cells ^ set(verts)))


def test_alternating_identity_trivial_and_random():
    region = make_aztec_diamond(2)
    graph = build_dual(region)
    cycle = boundary_cycle(region)
    assert check_face_alternating_identity(graph, set(graph.cells), [cycle[0], cycle[4]])
    rng = random.Random(5)
    for _ in range(30):
        k = rng.randint(1, 3)
        verts = [cycle[i] for i in sorted(rng.sample(range(len(cycle)), 2 * k))]
        off = set(rng.sample(sorted(region.cells), rng.randint(0, 2)))
        assert check_face_alternating_identity(graph, set(region.cells) - off, verts)


def _quad_of_pattern(region, pattern, rng):
    cycle = boundary_cycle(region)
    first_white_options = (True, False)
    for _ in range(4000):
        quad = [cycle[i] for i in sorted(rng.sample(range(len(cycle)), 4))]
        for base_white in first_white_options:
            got = "".join("A" if is_white(c) == base_white else "B" for c in quad)
            if got == pattern and is_white(quad[0]) == base_white:
                n_a = sum(1 for c in region.cells if is_white(c) == base_white)
                n_b = len(region.cells) - n_a
                need = {"AABB": 0, "ABAB": 0, "AAAB": 1, "AAAA": 2}[pattern]
                if n_a == n_b + need:
                    return quad
    return None


@pytest.mark.parametrize("pattern", ["AABB", "ABAB"])
def test_kuo_balanced_patterns(pattern):
    rng = random.Random(17)
    region = make_aztec_diamond(3)
    graph = build_dual(region)
    for _ in range(25):
        quad = _quad_of_pattern(region, pattern, rng)
        assert quad is not None
        assert check_kuo_identity(pattern, graph, *quad)


def test_kuo_surplus_patterns():
    rng = random.Random(23)
    diamond = make_aztec_diamond(3)
    blacks = sorted(c for c in diamond.cells if not is_white(c))
    one_off = Region.from_cells(diamond.cells - {blacks[0]})
    two_off = Region.from_cells(diamond.cells - {blacks[0], blacks[-1]})
    for region, pattern in ((one_off, "AAAB"), (two_off, "AAAA")):
        graph = build_dual(region)
        for _ in range(15):
            quad = _quad_of_pattern(region, pattern, rng)
            assert quad is not None
            assert check_kuo_identity(pattern, graph, *quad)


def test_kuo_rejects_wrong_hypotheses():
    region = make_aztec_diamond(2)
    graph = build_dual(region)
    cycle = boundary_cycle(region)
    quad = [cycle[i] for i in (0, 1, 2, 3)]
    actual = "".join("A" if is_white(c) == is_white(quad[0]) else "B" for c in quad)
    wrong = next(p for p in ("AAAA", "AABB", "ABAB", "AAAB") if p != actual)
    with pytest.raises(InvalidConfigurationError):
        check_kuo_identity(wrong, graph, *quad)


def _config(a, b, betas, alphas):
    return DefectConfiguration(
        make_aztec_rectangle(a, b),
        tuple(DefectSpec(s, p) for s, p in betas),
        tuple(DefectSpec(s, p) for s, p in alphas),
    )


def test_three_sided_no_defects_is_diamond_count():
    cfg = _config(3, 3, [], [])
    assert count_defects_three_sided(cfg) == 64


def test_three_sided_matches_engine_anchor():
    cfg = _config(2, 3, [("SE", 3), ("NW", 1)], [("NE", 2)])
    want = count_tilings_dp(cfg.target_region())
    assert count_defects_three_sided(cfg) == want
    assert count_defects_three_sided(cfg, entry_source="engine") == want


def test_three_sided_accepts_augmented_region():
    region = add_gamma_squares(make_aztec_rectangle(2, 3), 1, 1)
    cfg = DefectConfiguration(
        region, (DefectSpec("SE", 3), DefectSpec("NW", 2)), (DefectSpec("NE", 1),)
    )
    assert count_defects_three_sided(cfg) == count_tilings_dp(cfg.target_region())


def test_three_sided_rejects_sw_alpha():
    cfg = _config(2, 3, [("SE", 1), ("NW", 2)], [("SW", 1)])
    with pytest.raises(OutOfScopeConfigurationError):
        count_defects_three_sided(cfg)


def test_three_sided_rejects_unbalanced():
    with pytest.raises(InvalidConfigurationError):
        count_defects_three_sided(_config(2, 3, [("SE", 1)], [("NE", 1)]))


def test_three_sided_agrees_with_diamond_counter():
    rng = random.Random(31)
    a = 3
    for _ in range(10):
        betas = [("SE", p) for p in rng.sample(range(1, a + 1), 2)]
        alphas = [("NE", p) for p in rng.sample(range(1, a + 1), 2)]
        cfg = _config(a, a, betas, alphas)
        assert count_defects_three_sided(cfg) == count_diamond_defects(
            a,
            tuple(DefectSpec(s, p) for s, p in betas),
            tuple(DefectSpec(s, p) for s, p in alphas),
        )


def test_four_sided_degenerate_equals_three_sided():
    cfg = _config(2, 3, [("SE", 3), ("NW", 1)], [("NE", 2)])
    assert count_defects_four_sided(cfg) == count_defects_three_sided(cfg)


def test_four_sided_single_alpha_outer_is_single_entry():
    cfg = _config(2, 3, [("SE", 2), ("NW", 3)], [("SW", 2)])
    assert count_defects_four_sided(cfg) == count_tilings_dp(cfg.target_region())


def test_four_sided_all_sides_anchor():
    cfg = _config(2, 3, [("SE", 1), ("NW", 2), ("SE", 3)], [("NE", 1), ("SW", 2)])
    assert count_defects_four_sided(cfg) == count_tilings_dp(cfg.target_region())


def test_diamond_counter_single_pair_is_formula():
    from aztec_tilings import count_ad_adjacent_defects

    got = count_diamond_defects(2, (DefectSpec("SE", 2),), (DefectSpec("NE", 2),))
    assert got == count_ad_adjacent_defects(2, 2, 2) == 6


def test_diamond_counter_same_type_pairs_vanish():
    # two betas on the same side force a zero entry; the count is still exact
    betas = (DefectSpec("SE", 1), DefectSpec("SE", 2))
    alphas = (DefectSpec("NE", 1), DefectSpec("NE", 2))
    got = count_diamond_defects(3, betas, alphas)
    region = remove_defects(make_aztec_diamond(3), betas + alphas)
    assert got == count_tilings_dp(region)


def test_diamond_counter_rotation_invariance():
    """Counts agree across the color-preserving symmetries of the diamond."""
    a = 3
    betas = (DefectSpec("SE", 1), DefectSpec("NW", 2))
    alphas = (DefectSpec("NE", 2), DefectSpec("SW", 3))

    def rot(side, p, mapping):
        s2, flip = mapping[side]
        return (s2, a - p + 1 if flip else p)

    # reflection swapping NW and SE, reversing NE
    m1 = {"NW": ("SE", False), "SE": ("NW", False), "NE": ("NE", True), "SW": ("SW", True)}
    # half turn
    m2 = {"NW": ("SE", True), "SE": ("NW", True), "NE": ("SW", False), "SW": ("NE", False)}
    base = count_diamond_defects(a, betas, alphas)
    for mapping in (m1, m2):
        bet = tuple(DefectSpec(*rot(d.side, d.position, mapping)) for d in betas)
        alp = tuple(DefectSpec(*rot(d.side, d.position, mapping)) for d in alphas)
        assert count_diamond_defects(a, bet, alp) == base
