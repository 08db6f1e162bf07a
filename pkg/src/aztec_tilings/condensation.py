"""Pfaffian graphical condensation and the boundary-defect counters.

``condensation_count`` implements the classical identity: for vertices
a_1..a_2k in cyclic order on a face of a planar graph G with M(G) != 0,

    M(G - {a_1..a_2k}) = Pf[(M(G - {a_i, a_j}))] / M(G)^(k-1).

``condensation_count_symdiff`` is the symmetric-difference generalization to
an induced subgraph G of a host H (entries M(G + {a_i, a_j}) with + meaning
toggle against H), and ``check_face_alternating_identity`` verifies the
alternating-product identity that drives its induction.

The three defect-counting routines specialize condensation to Aztec
rectangles: the host is the gamma-augmented rectangle whose tiling count is
the pure power of two, and every Pfaffian entry collapses to a closed form
from the formulas module (entries can alternatively be sourced from the DP
engine to separate formula bugs from condensation bugs).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .counting import CountValue, count_matchings_brute, count_tilings_dp
from .dualgraph import (
    DualGraph,
    boundary_cycle,
    induced_subgraph,
    symmetric_difference,
)
from .errors import (
    CondensationInapplicableError,
    InternalInconsistencyError,
    InvalidConfigurationError,
    InvalidOrderError,
    OutOfScopeConfigurationError,
)
from .exactalg import pfaffian
from .formulas import (
    count_ad_adjacent_defects,
    count_ar_gamma_nw_defect,
    count_ar_gamma_se_defect,
)
from .geometry import (
    Cell,
    DefectSpec,
    Region,
    add_gamma_squares,
    boundary_cell,
    is_white,
    make_aztec_rectangle,
    remove_defects,
)

KUO_PATTERNS = ("AABB", "AAAA", "ABAB", "AAAB")


def _graph_count(graph: DualGraph) -> CountValue:
    if graph.weights:
        return count_matchings_brute(graph)
    return count_tilings_dp(Region.from_cells(graph.cells))


def _validate_cyclic(cycle: Sequence[Cell], chosen: Sequence[Cell]) -> None:
    pos = {c: i for i, c in enumerate(cycle)}
    try:
        idx = [pos[c] for c in chosen]
    except KeyError as exc:
        raise InvalidOrderError(f"{exc.args[0]} is not on the outer face") from None
    if len(set(idx)) != len(idx):
        raise InvalidOrderError("face vertices must be distinct")
    n = len(idx)
    if n <= 2:
        return
    descents = sum(1 for t in range(n) if idx[t] > idx[(t + 1) % n])
    ascents = n - descents
    if descents > 1 and ascents > 1:
        raise InvalidOrderError(f"{chosen} is not in cyclic order on the outer face")


def _pfaffian_of_counts(entries: list[list[CountValue]]) -> Fraction:
    return abs(pfaffian(entries))


def _exact_quotient(pf: Fraction, divisor: CountValue, power: int, what: str) -> CountValue:
    value = Fraction(pf) / Fraction(divisor) ** power
    if value.denominator != 1:
        raise InternalInconsistencyError(f"{what}: Pfaffian {pf} not divisible by {divisor}^{power}")
    return int(value)


def condensation_count(graph: DualGraph, face_vertices: Sequence[Cell]) -> CountValue:
    """Count M(G minus the 2k face vertices) through the Pfaffian quotient."""
    if len(face_vertices) % 2 == 1:
        raise InvalidOrderError("need an even number of face vertices")
    _validate_cyclic(boundary_cycle(graph.cells), face_vertices)
    base = _graph_count(graph)
    if base == 0:
        raise CondensationInapplicableError("M(G) = 0")
    cells = set(graph.cells)
    m = len(face_vertices)
    entries: list[list[CountValue]] = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            sub = induced_subgraph(graph, cells - {face_vertices[i], face_vertices[j]})
            entries[i][j] = _graph_count(sub)
            entries[j][i] = -entries[i][j]
    pf = _pfaffian_of_counts(entries)
    if graph.weights:
        return pf / Fraction(base) ** (m // 2 - 1)
    return _exact_quotient(pf, base, m // 2 - 1, "condensation")


def condensation_count_symdiff(
    host: DualGraph, base_vertices: Iterable[Cell], face_vertices: Sequence[Cell]
) -> CountValue:
    """Count M(G + {a_1..a_2k}) where G is induced on base_vertices and + toggles."""
    if len(face_vertices) % 2 == 1:
        raise InvalidOrderError("need an even number of face vertices")
    base_set = set(base_vertices)
    _validate_cyclic(boundary_cycle(host.cells), face_vertices)
    base_graph = induced_subgraph(host, base_set)
    base_count = _graph_count(base_graph)
    if base_count == 0:
        raise CondensationInapplicableError("M(G) = 0")
    m = len(face_vertices)
    entries: list[list[CountValue]] = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            sub = symmetric_difference(host, base_set, {face_vertices[i], face_vertices[j]})
            entries[i][j] = _graph_count(sub)
            entries[j][i] = -entries[i][j]
    pf = _pfaffian_of_counts(entries)
    if host.weights:
        return pf / Fraction(base_count) ** (m // 2 - 1)
    return _exact_quotient(pf, base_count, m // 2 - 1, "symdiff condensation")


def check_face_alternating_identity(
    host: DualGraph, base_vertices: Iterable[Cell], face_vertices: Sequence[Cell]
) -> bool:
    """Alternating-product identity behind the symdiff condensation induction.

    With a_1..a_2k in cyclic order on a host face and G induced on
    base_vertices, checks

        M(G) M(G + all) + sum_{l=2..k} M(G + {a_1, a_{2l-1}}) M(G + rest)
            == sum_{l=1..k} M(G + {a_1, a_2l}) M(G + rest)

    where rest is the complement of the pair within {a_1..a_2k}.
    """
    verts = list(face_vertices)
    if len(verts) % 2 == 1 or not verts:
        raise InvalidOrderError("need a nonempty even vertex list")
    base_set = set(base_vertices)
    _validate_cyclic(boundary_cycle(host.cells), verts)
    all_set = set(verts)

    def m_of(toggle: set[Cell]) -> CountValue:
        return _graph_count(symmetric_difference(host, base_set, toggle))

    k = len(verts) // 2
    lhs = m_of(set()) * m_of(all_set)
    for l in range(2, k + 1):
        pair = {verts[0], verts[2 * l - 2]}
        lhs += m_of(pair) * m_of(all_set - pair)
    rhs: CountValue = 0
    for l in range(1, k + 1):
        pair = {verts[0], verts[2 * l - 1]}
        rhs += m_of(pair) * m_of(all_set - pair)
    return lhs == rhs


def check_kuo_identity(
    pattern: str, graph: DualGraph, w: Cell, x: Cell, y: Cell, z: Cell
) -> bool:
    """Check one of the four local condensation identities on engine counts.

    ``pattern`` gives the color classes of (w, x, y, z) in cyclic face order,
    with A the class of w: "AABB", "AAAA" (needs #A = #B + 2), "ABAB", and
    "AAAB" (needs #A = #B + 1).  The balanced patterns need #A = #B.
    """
    if pattern not in KUO_PATTERNS:
        raise InvalidConfigurationError(f"unknown pattern {pattern!r}")
    quad = (w, x, y, z)
    if len(set(quad)) != 4:
        raise InvalidConfigurationError("w, x, y, z must be distinct")
    _validate_cyclic(boundary_cycle(graph.cells), quad)
    a_class = is_white(w)
    actual = "".join("A" if is_white(c) == a_class else "B" for c in quad)
    if actual != pattern:
        raise InvalidConfigurationError(f"cells have pattern {actual}, expected {pattern}")
    n_a = sum(1 for c in graph.cells if is_white(c) == a_class)
    n_b = len(graph.cells) - n_a
    surplus = {"AABB": 0, "ABAB": 0, "AAAB": 1, "AAAA": 2}[pattern]
    if n_a != n_b + surplus:
        raise InvalidConfigurationError(
            f"pattern {pattern} needs #A = #B + {surplus}, graph has {n_a} and {n_b}"
        )
    cells = set(graph.cells)

    def m_minus(*gone: Cell) -> CountValue:
        return _graph_count(induced_subgraph(graph, cells - set(gone)))

    if pattern == "AABB":
        return m_minus(w, z) * m_minus(x, y) == m_minus() * m_minus(w, x, y, z) + m_minus(
            w, y
        ) * m_minus(x, z)
    if pattern == "AAAA":
        return m_minus(w, y) * m_minus(x, z) == m_minus(w, x) * m_minus(y, z) + m_minus(
            w, z
        ) * m_minus(x, y)
    if pattern == "ABAB":
        return m_minus() * m_minus(w, x, y, z) == m_minus(w, x) * m_minus(y, z) + m_minus(
            w, z
        ) * m_minus(x, y)
    return m_minus(w) * m_minus(x, y, z) + m_minus(y) * m_minus(w, x, z) == m_minus(
        x
    ) * m_minus(w, y, z) + m_minus(z) * m_minus(w, x, y)


@dataclass(frozen=True)
class DefectConfiguration:
    """A rectangle (possibly gamma-augmented) with beta and alpha removals."""

    region: Region
    betas: tuple[DefectSpec, ...]
    alphas: tuple[DefectSpec, ...]

    def sizes(self) -> tuple[int, int, int]:
        """Return (a, b, k)."""
        meta = self.region.meta
        if meta.kind not in ("AD", "AR") or meta.a is None or meta.b is None:
            raise InvalidConfigurationError("configuration needs an AD/AR region")
        return meta.a, meta.b, meta.b - meta.a

    def base_region(self) -> Region:
        """The canonical rectangle without gamma squares or removals."""
        a, b, _ = self.sizes()
        return make_aztec_rectangle(a, b)

    def target_region(self) -> Region:
        """The counted region: rectangle minus all beta and alpha cells."""
        return remove_defects(self.base_region(), self.betas + self.alphas)

    def validate(self) -> None:
        a, b, k = self.sizes()
        meta = self.region.meta
        if meta.gammas and meta.gammas != tuple(range(1, k + 1)):
            raise InvalidConfigurationError(
                f"gamma squares must occupy positions 1..{k}, got {meta.gammas}"
            )
        if meta.removed:
            raise InvalidConfigurationError("configuration region must carry no removals")
        if any(d.kind != "beta" for d in self.betas):
            raise InvalidConfigurationError("betas must be beta-class defects")
        if any(d.kind != "alpha" for d in self.alphas):
            raise InvalidConfigurationError("alphas must be alpha-class defects")
        if len(self.betas) - len(self.alphas) != k:
            raise InvalidConfigurationError(
                f"need #betas - #alphas = b - a = {k}, got "
                f"{len(self.betas)} - {len(self.alphas)}"
            )
        self.target_region()  # raises on duplicate or out-of-range defects


def _mirror_spec(spec: DefectSpec, a: int, b: int) -> DefectSpec:
    """Reflect u -> 2b - u, swapping the NE and SW sides."""
    if spec.side in ("NW", "SE"):
        return DefectSpec(spec.side, b - spec.position + 1, spec.kind)
    side = "NE" if spec.side == "SW" else "SW"
    return DefectSpec(side, a - spec.position + 1, spec.kind)


def mirror_configuration(config: DefectConfiguration) -> DefectConfiguration:
    """The congruent configuration with the NE and SW sides exchanged."""
    a, b, _ = config.sizes()
    return DefectConfiguration(
        config.region,
        tuple(_mirror_spec(d, a, b) for d in config.betas),
        tuple(_mirror_spec(d, a, b) for d in config.alphas),
    )


def _gamma_cell(a: int, position: int) -> Cell:
    return Cell(2 * position - 2, 2 * a + 1)


def _three_sided_entry(
    a: int, k: int, d1: tuple[str, str, int], d2: tuple[str, str, int]
) -> int:
    """Closed-form count of the gamma-augmented rectangle minus two defect cells.

    Defects are (class, side, position) with class beta/alpha/gamma; alphas sit
    on the NE side.  Same-color pairs vanish; mixed pairs reduce, after the
    forced staircase strips, to the two-defect diamond and one-defect
    rectangle families.
    """
    base = 2 ** (a * (a + 1) // 2)
    if (d1[0] == "beta") == (d2[0] == "beta"):
        return 0
    if d1[0] != "beta":
        d1, d2 = d2, d1
    _, side, pos = d1
    if d2[0] == "alpha":
        j = d2[2]
        if pos <= k:
            return 0
        if side == "SE":
            return count_ad_adjacent_defects(a, pos - k, j)
        return count_ad_adjacent_defects(a, pos - k, a - j + 1)
    p = d2[2]
    if pos < p:
        return 0
    if side == "SE":
        if pos <= k:
            return base
        return count_ar_gamma_se_defect(a, k - p + 1, pos - p + 1)
    return count_ar_gamma_nw_defect(a, k - p + 1, pos - p + 1)


def _three_sided_count(config: DefectConfiguration, entry_source: str) -> int:
    """Pfaffian count assuming alphas confined to the NE side."""
    a, _, k = config.sizes()
    n = len(config.alphas)
    base_region = config.base_region()
    host = add_gamma_squares(base_region, k, 1) if k else base_region
    deltas = (
        [("beta", d.side, d.position) for d in config.betas]
        + [("alpha", "NE", d.position) for d in config.alphas]
        + [("gamma", "SE", p) for p in range(1, k + 1)]
    )
    cell_of = {
        d: _gamma_cell(a, d[2]) if d[0] == "gamma" else boundary_cell(base_region, DefectSpec(d[1], d[2]))
        for d in deltas
    }
    order = {c: i for i, c in enumerate(boundary_cycle(host))}
    deltas.sort(key=lambda d: order[cell_of[d]])
    m = len(deltas)
    entries: list[list[int]] = [[0] * m for _ in range(m)]
    host_cells = host.cells
    for i in range(m):
        for j in range(i + 1, m):
            if entry_source == "engine":
                residue = Region.from_cells(host_cells - {cell_of[deltas[i]], cell_of[deltas[j]]})
                entries[i][j] = count_tilings_dp(residue)
            else:
                entries[i][j] = _three_sided_entry(a, k, deltas[i], deltas[j])
            entries[j][i] = -entries[i][j]
    pf = _pfaffian_of_counts(entries)
    return _exact_quotient(pf, 2 ** (a * (a + 1) // 2), n + k - 1, "three-sided count")


def count_defects_three_sided(
    config: DefectConfiguration, entry_source: str = "formula"
) -> int:
    """Tilings of AR(a, b) minus its beta and alpha defects, no alpha on SW.

    Assembles the (2n+2k) x (2n+2k) Pfaffian over betas, alphas and the k
    gamma squares in boundary-cyclic order, with closed-form entries, and
    divides by the augmented rectangle's count to the power n + k - 1.
    """
    if entry_source not in ("formula", "engine"):
        raise InvalidConfigurationError(f"unknown entry source {entry_source!r}")
    config.validate()
    if any(d.side == "SW" for d in config.alphas):
        raise OutOfScopeConfigurationError("alpha defects on the SW side are not supported")
    return _three_sided_count(config, entry_source)


def count_defects_four_sided(
    config: DefectConfiguration, entry_source: str = "formula"
) -> int:
    """Tilings of AR(a, b) minus defects on arbitrary sides (nested Pfaffians).

    Splits off k of the betas to form a balanced sub-rectangle G, then runs
    condensation over the remaining n betas and n alphas; every entry is
    itself a three-sided Pfaffian count.  Alphas on the SW side are handled
    by reflecting the configuration into the NE-canonical frame.
    """
    config.validate()
    _, _, k = config.sizes()
    n = len(config.alphas)
    base_region = config.base_region()
    cell_of = {d: boundary_cell(base_region, d) for d in config.betas + config.alphas}
    order = {c: i for i, c in enumerate(boundary_cycle(base_region))}
    betas_sorted = sorted(config.betas, key=lambda d: order[cell_of[d]])

    def three_sided(betas: tuple[DefectSpec, ...], alphas: tuple[DefectSpec, ...]) -> int:
        sub = DefectConfiguration(base_region, betas, alphas)
        if any(d.side == "SW" for d in alphas):
            sub = mirror_configuration(sub)
        return _three_sided_count(sub, entry_source)

    chosen = None
    for s in itertools.combinations(betas_sorted, k):
        m_g = three_sided(tuple(s), ())
        if m_g:
            chosen, m_base = s, m_g
            break
    if chosen is None:
        raise CondensationInapplicableError("every balanced beta subset has count 0")
    rest = [d for d in betas_sorted if d not in chosen]
    outer = sorted(rest + list(config.alphas), key=lambda d: order[cell_of[d]])
    m = len(outer)
    entries: list[list[int]] = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            di, dj = outer[i], outer[j]
            if (di.kind == "beta") != (dj.kind == "beta"):
                extra_beta = di if di.kind == "beta" else dj
                one_alpha = dj if di.kind == "beta" else di
                entries[i][j] = three_sided(tuple(chosen) + (extra_beta,), (one_alpha,))
            entries[j][i] = -entries[i][j]
    pf = _pfaffian_of_counts(entries)
    return _exact_quotient(pf, m_base, n - 1, "four-sided count")


def count_diamond_defects(
    a: int, betas: Sequence[DefectSpec], alphas: Sequence[DefectSpec],
    entry_source: str = "formula",
) -> int:
    """Tilings of AD(a) minus n beta and n alpha boundary defects.

    The 2n x 2n Pfaffian uses the adjacent-sides diamond formula for every
    mixed pair (after rotating the pair into the SE/NE frame by the dihedral
    symmetry that preserves colors) and 0 for same-color pairs, divided by
    the defect-free diamond count to the power n - 1.
    """
    if entry_source not in ("formula", "engine"):
        raise InvalidConfigurationError(f"unknown entry source {entry_source!r}")
    if len(betas) != len(alphas):
        raise InvalidConfigurationError("need equally many beta and alpha defects")
    region = make_aztec_rectangle(a, a)
    config = DefectConfiguration(region, tuple(betas), tuple(alphas))
    config.validate()
    n = len(betas)
    cell_of = {d: boundary_cell(region, d) for d in config.betas + config.alphas}
    order = {c: i for i, c in enumerate(boundary_cycle(region))}
    deltas = sorted(config.betas + config.alphas, key=lambda d: order[cell_of[d]])
    m = len(deltas)
    entries: list[list[int]] = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            di, dj = deltas[i], deltas[j]
            if di.kind != dj.kind:
                white = cell_of[di] if di.kind == "beta" else cell_of[dj]
                black = cell_of[dj] if di.kind == "beta" else cell_of[di]
                if entry_source == "engine":
                    residue = Region.from_cells(region.cells - {white, black})
                    entries[i][j] = count_tilings_dp(residue)
                else:
                    se_pos, ne_pos = diamond_normal_form(a, white, black)
                    entries[i][j] = count_ad_adjacent_defects(a, se_pos, ne_pos)
            entries[j][i] = -entries[i][j]
    pf = _pfaffian_of_counts(entries)
    return _exact_quotient(pf, 2 ** (a * (a + 1) // 2), n - 1, "diamond count")


def diamond_normal_form(a: int, white: Cell, black: Cell) -> tuple[int, int]:
    """Positions after the color-preserving symmetry taking white to SE, black to NE."""
    transforms = (
        lambda c: c,
        lambda c: Cell(c.u, 2 * a - c.v),
        lambda c: Cell(2 * a - c.u, c.v),
        lambda c: Cell(2 * a - c.u, 2 * a - c.v),
    )
    for f in transforms:
        w, b = f(white), f(black)
        if w.v == 2 * a and b.u == 2 * a:
            return (w.u + 1) // 2, (b.v + 1) // 2
    raise InternalInconsistencyError(f"no symmetry maps {white}, {black} to the SE/NE sides")
