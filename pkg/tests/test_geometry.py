from fractions import Fraction

import pytest

from bhmirror.errors import NonIntegralLatticeError, PatternMismatchError
from bhmirror.geometry import (
    SectorGrid,
    check_prime_divisibility,
    fit_k3_pattern,
    k3_invariants,
    lattice_invariants,
    lattice_mirror_verdict,
    sector_grid,
)

F = Fraction

ELLIPTIC_ROWS = [
    [2, 1, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 1],
    [0, 1, 0, 2, 0, 1],
    [0, 1, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 1],
]

# Fermat quartic, invariance trivial: every cell as a (p, q) -> dim diamond.
# Rows are the slices d_s = b/4, columns d_j = a/4.
QUARTIC_CELLS = {
    (0, 0): {(2, 0): 1, (1, 1): 19, (0, 2): 1},
    (0, 1): {(0, 0): 1},
    (0, 2): {(1, 1): 1},
    (0, 3): {(2, 2): 1},
    (1, 0): {(1, 0): 3, (0, 1): 3},
    (1, 1): {(0, 0): 1},
    (1, 2): {(1, 1): 1},
    (1, 3): {},
    (2, 0): {(1, 0): 3, (0, 1): 3},
    (2, 1): {(0, 0): 1},
    (2, 2): {},
    (2, 3): {(1, 1): 1},
    (3, 0): {(1, 0): 3, (0, 1): 3},
    (3, 1): {},
    (3, 2): {(0, 0): 1},
    (3, 3): {(1, 1): 1},
}

# Mirror quartic (invariance group of order 16): the dual parameter table.
QUARTIC_MIRROR_CELLS = {
    (0, 0): {(2, 0): 1, (1, 1): 1, (0, 2): 1},
    (0, 1): {(0, 0): 1, (1, 1): 6},
    (0, 2): {(1, 1): 7},
    (0, 3): {(1, 1): 6, (2, 2): 1},
    (1, 0): {(0, 0): 3, (1, 1): 3},
    (1, 1): {(0, 0): 1, (1, 1): 6},
    (1, 2): {(1, 1): 7},
    (1, 3): {},
    (2, 0): {(0, 0): 3, (1, 1): 3},
    (2, 1): {(0, 0): 1, (1, 1): 6},
    (2, 2): {},
    (2, 3): {(0, 0): 6, (1, 1): 1},
    (3, 0): {(0, 0): 3, (1, 1): 3},
    (3, 1): {},
    (3, 2): {(0, 0): 7},
    (3, 3): {(0, 0): 6, (1, 1): 1},
}


class TestSectorGrid:
    def test_elliptic_rows(self, pair_cache):
        grid = sector_grid(pair_cache("elliptic-sextic").source_table)
        assert grid.row_totals() == ELLIPTIC_ROWS

    def test_quartic_cells(self, pair_cache):
        grid = sector_grid(pair_cache("fermat-quartic").source_table)
        for (b, a), cell in QUARTIC_CELLS.items():
            assert grid.cell(b, a) == cell, (b, a)

    def test_quartic_mirror_cells(self, pair_cache):
        grid = sector_grid(pair_cache("fermat-quartic").target_table)
        for (b, a), cell in QUARTIC_MIRROR_CELLS.items():
            assert grid.cell(b, a) == cell, (b, a)

    def test_quartic_weight_split(self, pair_cache):
        grid = sector_grid(pair_cache("fermat-quartic").source_table)
        assert grid.weighted_cell(0, 0) == {
            (2, 0, 1): 1, (1, 1, 1): 6, (1, 1, 2): 7, (1, 1, 3): 6, (0, 2, 3): 1}

    def test_quartic_curve_slice_total(self, pair_cache):
        grid = sector_grid(pair_cache("fermat-quartic").source_table)
        assert sum(grid.total(1, a) for a in range(4)) == 8

    def test_non_calabi_yau_keeps_raw_bidegrees(self, pair_cache):
        grid = sector_grid(pair_cache("k2-6squares").source_table)
        assert not grid.calabi_yau
        assert any(isinstance(p, Fraction) and p.denominator == 1
                   for cell in grid.diamonds.values() for (p, _) in cell)


class TestGridInvariants:
    @pytest.mark.parametrize("name,total", [
        ("elliptic-sextic", 4), ("elliptic-cubic", 4), ("elliptic-loop", 4),
        ("fermat-quartic", 24), ("k3-loop-order4", 24), ("k3-order6", 24),
        ("k3-p3", 24), ("k3-p13", 24), ("k3-quartic-z2z2", 24),
        ("k3-order4-mixed", 24),
    ])
    def test_row_zero_is_the_orbifold_total(self, pair_cache, name, total):
        grid = sector_grid(pair_cache(name).source_table)
        assert sum(grid.row_totals()[0]) == total

    @pytest.mark.parametrize("name", ["elliptic-sextic", "fermat-quartic",
                                      "k3-p5", "k3-order4-mixed"])
    def test_row_zero_weight_mirror(self, pair_cache, name):
        # invariant cells of row 0 match the moving cells of the mirror's
        # row 0 with p flipped across the geometric dimension
        pair = pair_cache(name)
        grid = sector_grid(pair.source_table)
        mirror = sector_grid(pair_cache(name).target_table)
        dim = grid.num_vars - 2
        k = grid.k
        lhs: dict = {}
        rhs: dict = {}
        for a in range(k):
            for (p, q, w), v in grid.weighted_cell(0, a).items():
                if w == 0:
                    lhs[(p, q)] = lhs.get((p, q), 0) + v
            for (p, q, w), v in mirror.weighted_cell(0, a).items():
                if w != 0:
                    cell = (dim - p, q)
                    rhs[cell] = rhs.get(cell, 0) + v
        assert lhs == rhs


class TestK3Fit:
    def test_quartic_parameters(self, pair_cache):
        rep = fit_k3_pattern(sector_grid(pair_cache("fermat-quartic").source_table))
        assert rep.kind == "order4"
        assert rep.params == {"a": 7, "b": 7, "c": 0, "g": 3,
                              "a_dual": 1, "b_dual": 1, "c_dual": 0, "g_dual": 0}

    def test_mirror_parameters_are_swapped(self, pair_cache):
        pair = pair_cache("fermat-quartic")
        rep = fit_k3_pattern(sector_grid(pair.source_table))
        mrep = fit_k3_pattern(sector_grid(pair.target_table))
        assert mrep.params == rep.dual().params

    @pytest.mark.parametrize("name,a,a_dual,g,g_dual", [
        ("k3-p3", 9, 3, 3, 0),
        ("k3-p5", 5, 1, 2, 0),
        ("k3-p7", 3, 1, 1, 0),
        ("k3-p13", 1, 1, 0, 0),
    ])
    def test_prime_parameters(self, pair_cache, name, a, a_dual, g, g_dual):
        rep = fit_k3_pattern(sector_grid(pair_cache(name).source_table))
        assert rep.kind == "prime"
        assert rep.params == {"a": a, "a_dual": a_dual, "g": g, "g_dual": g_dual}
        assert (rep.order - 1) * (a + a_dual) == 24

    def test_wrong_dimension_rejected(self, pair_cache):
        grid = sector_grid(pair_cache("elliptic-sextic").source_table)
        with pytest.raises(PatternMismatchError):
            fit_k3_pattern(grid)

    def test_unsupported_order_rejected(self, pair_cache):
        grid = sector_grid(pair_cache("k3-order6").source_table)
        with pytest.raises(PatternMismatchError):
            fit_k3_pattern(grid)

    def test_prime_divisibility_gates_eleven(self):
        fake = SectorGrid(11, 4, True, {}, {})
        with pytest.raises(PatternMismatchError, match="divide 24"):
            fit_k3_pattern(fake)


class TestInvariants:
    def test_quartic_fixed_locus(self, pair_cache):
        pair = pair_cache("fermat-quartic")
        inv = k3_invariants(fit_k3_pattern(sector_grid(pair.source_table)))
        assert (inv.f1, inv.N1, inv.g1, inv.N2, inv.g2) == (0, 1, 3, 1, 3)
        minv = k3_invariants(fit_k3_pattern(sector_grid(pair.target_table)))
        assert (minv.f1, minv.N1, minv.g1, minv.N2, minv.g2) == (12, 4, 0, 10, 0)

    def test_mirror_of_report_is_report_of_mirror(self, pair_cache):
        pair = pair_cache("k3-p7")
        rep = fit_k3_pattern(sector_grid(pair.source_table))
        mrep = fit_k3_pattern(sector_grid(pair.target_table))
        assert k3_invariants(rep.dual()) == k3_invariants(mrep)

    @pytest.mark.parametrize("name", ["k3-p3", "k3-p3-loop", "k3-p5",
                                      "k3-p5-fermat", "k3-p7", "k3-p13"])
    def test_prime_corollary(self, pair_cache, name):
        pair = pair_cache(name)
        rep = fit_k3_pattern(sector_grid(pair.source_table))
        mrep = fit_k3_pattern(sector_grid(pair.target_table))
        inv, minv = k3_invariants(rep), k3_invariants(mrep)
        p = rep.order
        assert inv.N1 == minv.g1 + 1
        assert minv.N1 == inv.g1 + 1
        assert inv.f1 + minv.f1 + 4 == 24 * (p - 2) // (p - 1)


class TestLattice:
    def test_p3_values(self):
        assert lattice_invariants(3, 3, 1) == (4, 3)
        assert lattice_invariants(3, 0, 4) == (16, 3)

    def test_invalid_inputs(self):
        with pytest.raises(NonIntegralLatticeError):
            lattice_invariants(11, 1, 1)
        with pytest.raises(NonIntegralLatticeError):
            lattice_invariants(13, 1, 1)

    @pytest.mark.parametrize("name", ["k3-p3", "k3-p3-loop", "k3-p5",
                                      "k3-p5-fermat", "k3-p7", "k3-p13"])
    def test_mirror_verdict(self, pair_cache, name):
        pair = pair_cache(name)
        rep = fit_k3_pattern(sector_grid(pair.source_table))
        mrep = fit_k3_pattern(sector_grid(pair.target_table))
        verdict = lattice_mirror_verdict(rep, mrep)
        assert verdict["mirror_ok"]
        assert verdict["r"] + verdict["r_mirror"] == 20
        assert verdict["a"] == verdict["a_mirror"] >= 0
        assert (22 - verdict["r"]) % (rep.order - 1) == 0

    def test_divisibility(self):
        assert check_prime_divisibility(13)
        assert not check_prime_divisibility(11)
        assert check_prime_divisibility(7)
