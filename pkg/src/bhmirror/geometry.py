"""Geometric presentation: sector grids, K3 table patterns, lattice mirrors.

A sector grid arranges the Q_j = 0 part of a state table into a k x k
array: row b collects the cosets with d_s = b/k, column a those with
d_j = a/k.  In the Calabi-Yau case bidegrees are reindexed by (-1, -1)
and then shifted down by (b/k, b/k) per row, which lands every cell on
integer positions (the cohomology of the corresponding fixed locus).

For K3 setups (four variables, Calabi-Yau) with cyclic order 4 or an odd
prime, the whole grid is a closed-form pattern in a handful of integer
parameters; fitting is strict, any residual cell mismatch is an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import (
    DualityViolationError,
    NonIntegralLatticeError,
    PatternMismatchError,
)
from .poly import is_calabi_yau
from .statespace import StateTable

Diamond = dict[tuple, int]
WeightedDiamond = dict[tuple, int]   # (p, q, weight) -> dim


@dataclass(frozen=True)
class SectorGrid:
    k: int
    num_vars: int
    calabi_yau: bool
    diamonds: dict[tuple[int, int], Diamond]
    weighted: dict[tuple[int, int], WeightedDiamond]

    def total(self, b: int, a: int) -> int:
        return sum(self.diamonds.get((b, a), {}).values())

    def row_totals(self) -> list[list[int]]:
        return [[self.total(b, a) for a in range(self.k)] for b in range(self.k)]

    def cell(self, b: int, a: int) -> Diamond:
        return dict(self.diamonds.get((b, a), {}))

    def weighted_cell(self, b: int, a: int) -> WeightedDiamond:
        return dict(self.weighted.get((b, a), {}))


def sector_grid(table: StateTable) -> SectorGrid:
    """Arrange the Q_j = 0 part by (d_s, d_j); reindex when Calabi-Yau."""
    setup = table.setup
    k = setup.k
    cy = is_calabi_yau(setup.W)
    diamonds: dict[tuple[int, int], Diamond] = {}
    weighted: dict[tuple[int, int], WeightedDiamond] = {}
    for lab, dim in table.entries.items():
        if lab.qj != 0:
            continue
        b = int(lab.ds * k)
        a = int(lab.dj * k)
        if cy:
            p = lab.p - 1 - lab.ds
            q = lab.q - 1 - lab.ds
            if p.denominator != 1 or q.denominator != 1:
                raise DualityViolationError(
                    f"non-integral display bidegree ({p}, {q}) in cell ({b}, {a})")
            p, q = int(p), int(q)
        else:
            p, q = lab.p, lab.q
        cell = diamonds.setdefault((b, a), {})
        cell[(p, q)] = cell.get((p, q), 0) + dim
        wcell = weighted.setdefault((b, a), {})
        wcell[(p, q, lab.weight)] = wcell.get((p, q, lab.weight), 0) + dim
    return SectorGrid(k, setup.W.num_vars, cy, diamonds, weighted)


# ---------------------------------------------------------------------------
# K3 pattern fitting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class K3Report:
    order: int
    kind: str                    # "order4" | "prime"
    params: dict[str, int]       # a, g (+ b, c for order 4) and their duals

    def dual(self) -> "K3Report":
        swapped = {}
        for name, value in self.params.items():
            other = name[:-5] if name.endswith("_dual") else name + "_dual"
            swapped[other] = value
        return K3Report(self.order, self.kind, swapped)


def check_prime_divisibility(k: int) -> bool:
    """Pre-screen for prime-order K3 setups: k - 1 must divide 24."""
    return k > 1 and 24 % (k - 1) == 0


def _is_prime(k: int) -> bool:
    return k > 1 and all(k % i for i in range(2, int(k**0.5) + 1))


def _expected_order4(a: int, b: int, c: int, g: int,
                     ad: int, bd: int, cd: int, gd: int) -> dict:
    """Weighted diamonds of the generic order-4 grid, display coordinates."""
    f0 = {(0, 0, 0): gd, (1, 0, 0): g, (0, 1, 0): g, (1, 1, 0): gd}
    f1 = {(0, 0, 0): 1, (1, 1, 0): ad - 1}
    f2 = {(1, 1, 0): bd}
    f3 = {(1, 1, 0): ad - 1, (2, 2, 0): 1}
    m0 = {(2, 0, 1): 1, (1, 1, 1): a - 1, (1, 1, 2): b, (1, 1, 3): a - 1, (0, 2, 3): 1}
    m2 = {(0, 0, 2): c, (1, 0, 2): cd, (0, 1, 2): cd, (1, 1, 2): c}
    drop = lambda cell: {(p - 1, q - 1, w): v for (p, q, w), v in cell.items()}
    grid = {
        (0, 0): m0, (0, 1): f1, (0, 2): f2, (0, 3): f3,
        (1, 0): f0, (1, 1): f1, (1, 2): f2, (1, 3): {},
        (2, 0): f0, (2, 1): f1, (2, 2): m2, (2, 3): drop(f3),
        (3, 0): f0, (3, 1): {}, (3, 2): drop(f2), (3, 3): drop(f3),
    }
    return {cell: {pos: v for pos, v in diamond.items() if v != 0}
            for cell, diamond in grid.items()}


def _expected_prime(p: int, a: int, g: int, ad: int, gd: int) -> dict:
    """Weighted diamonds of the generic prime-order grid.  The weight split
    of the untwisted middle is not prescribed (recorded as weight -1,
    meaning compare at total level)."""
    f0 = {(0, 0, 0): gd, (1, 0, 0): g, (0, 1, 0): g, (1, 1, 0): gd}
    f = {1: {(0, 0, 0): 1, (1, 1, 0): ad - 1}}
    for t in range(2, p - 1):
        f[t] = {(1, 1, 0): ad}
    f[p - 1] = {(1, 1, 0): ad - 1, (2, 2, 0): 1}
    m0 = {(2, 0, 1): 1, (1, 1, -1): (p - 1) * a - 2, (0, 2, p - 1): 1}
    grid: dict = {(0, 0): m0}
    for t in range(1, p):
        grid[(0, t)] = dict(f[t])
    for b in range(1, p):
        grid[(b, 0)] = dict(f0)
        for t in range(1, p):
            if (t + b) % p == 0:
                grid[(b, t)] = {}
            elif t + b < p:
                grid[(b, t)] = dict(f[t])
            else:
                grid[(b, t)] = {(pp - 1, qq - 1, w): v
                                for (pp, qq, w), v in f[t].items()}
    return {cell: {pos: v for pos, v in diamond.items() if v != 0}
            for cell, diamond in grid.items()}


def _match_weighted(actual: WeightedDiamond, expected: WeightedDiamond) -> bool:
    """Compare weighted diamonds; expected weight -1 entries match the
    total dimension at that (p, q) across all weights."""
    exp_exact = {pos: v for pos, v in expected.items() if pos[2] != -1}
    exp_total = {(p, q): v for (p, q, w), v in expected.items() if w == -1}
    act_rest: dict[tuple, int] = {}
    for (p, q, w), v in actual.items():
        if (p, q, w) in exp_exact:
            continue
        act_rest[(p, q)] = act_rest.get((p, q), 0) + v
    if any(actual.get(pos, 0) != v for pos, v in exp_exact.items()):
        return False
    extra = {pos: v for pos, v in act_rest.items() if v != 0}
    return extra == exp_total


def fit_k3_pattern(grid: SectorGrid) -> K3Report:
    """Solve the closed-form table parameters from designated cells, then
    verify every cell of the grid against the rebuilt pattern."""
    if not grid.calabi_yau or grid.num_vars != 4:
        raise PatternMismatchError(
            "pattern fitting applies to Calabi-Yau setups in four variables")
    k = grid.k
    if k == 4:
        return _fit_order4(grid)
    if not _is_prime(k) or k == 2:
        raise PatternMismatchError(f"unsupported cyclic order {k} (need 4 or an odd prime)")
    if not check_prime_divisibility(k):
        raise PatternMismatchError(f"no K3 setup exists for prime order {k}: "
                                   f"{k - 1} does not divide 24")
    return _fit_prime(grid)


def _fit_order4(grid: SectorGrid) -> K3Report:
    c00 = grid.weighted_cell(0, 0)
    a = c00.get((1, 1, 1), 0) + 1
    b = c00.get((1, 1, 2), 0)
    g = grid.cell(1, 0).get((1, 0), 0)
    gd = grid.cell(1, 0).get((0, 0), 0)
    ad = grid.cell(0, 1).get((1, 1), 0) + 1
    bd = grid.cell(0, 2).get((1, 1), 0)
    c = grid.weighted_cell(2, 2).get((0, 0, 2), 0)
    cd = grid.weighted_cell(2, 2).get((1, 0, 2), 0)
    params = {"a": a, "b": b, "c": c, "g": g,
              "a_dual": ad, "b_dual": bd, "c_dual": cd, "g_dual": gd}
    expected = _expected_order4(a, b, c, g, ad, bd, cd, gd)
    _verify_pattern(grid, expected)
    if 2 * a + b + 2 * ad + bd != 24:
        raise PatternMismatchError(
            f"2a+b+2a'+b' = {2 * a + b + 2 * ad + bd} differs from 24")
    return K3Report(4, "order4", params)


def _fit_prime(grid: SectorGrid) -> K3Report:
    p = grid.k
    middle = grid.cell(0, 0).get((1, 1), 0)
    if (middle + 2) % (p - 1) != 0:
        raise PatternMismatchError(
            f"untwisted middle dimension {middle} is not (p-1)a - 2")
    a = (middle + 2) // (p - 1)
    ad = grid.cell(0, 2).get((1, 1), 0) if p >= 5 else grid.cell(0, 1).get((1, 1), 0) + 1
    g = grid.cell(1, 0).get((1, 0), 0)
    gd = grid.cell(1, 0).get((0, 0), 0)
    params = {"a": a, "g": g, "a_dual": ad, "g_dual": gd}
    expected = _expected_prime(p, a, g, ad, gd)
    _verify_pattern(grid, expected)
    if (p - 1) * (a + ad) != 24:
        raise PatternMismatchError(
            f"(p-1)(a+a') = {(p - 1) * (a + ad)} differs from 24")
    return K3Report(p, "prime", params)


def _verify_pattern(grid: SectorGrid, expected: dict) -> None:
    for cell_index in sorted(expected):
        actual = grid.weighted_cell(*cell_index)
        if not _match_weighted(actual, expected[cell_index]):
            raise PatternMismatchError(
                f"cell {cell_index}: computed {sorted(actual.items())} does not "
                f"match pattern {sorted(expected[cell_index].items())}")
    stray = set(grid.diamonds) - set(expected)
    stray = {cell for cell in stray if grid.total(*cell)}
    if stray:
        raise PatternMismatchError(f"unexpected nonzero cells {sorted(stray)}")


# ---------------------------------------------------------------------------
# fixed-locus and lattice invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class K3Invariants:
    f1: int    # isolated fixed points of the automorphism
    N1: int    # fixed curves
    g1: int    # total genus of the fixed curves
    N2: int | None = None   # square of the automorphism (order 4 only)
    g2: int | None = None


def k3_invariants(report: K3Report) -> K3Invariants:
    """Read the fixed-locus invariants off the fitted parameters."""
    P = report.params
    N1 = P["g_dual"] + 1
    g1 = P["g"]
    if report.kind == "order4":
        f1 = P["a_dual"] + P["b_dual"] - 2
        N2 = P["g_dual"] + P["c"] + P["a_dual"]
        g2 = P["g"] + P["c_dual"]
        return K3Invariants(f1, N1, g1, N2, g2)
    f1 = (report.order - 2) * P["a_dual"] - 2
    return K3Invariants(f1, N1, g1)


def lattice_invariants(p: int, g: int, N: int) -> tuple[int, int]:
    """Rank and discriminant-group rank of the invariant lattice of a
    non-symplectic prime-order automorphism with a fixed curve.

    r comes from the fixed-locus count via -g + N = (r - 11 + p)/(p - 1);
    a from m = 2g + a with m = (22 - r)/(p - 1).  Both must come out as
    integers, and a nonnegative, for a valid p-elementary lattice.
    """
    if p not in (3, 5, 7, 13):
        raise NonIntegralLatticeError(f"no lattice classification for order {p}")
    r = (N - g) * (p - 1) + (11 - p)
    if (22 - r) % (p - 1) != 0:
        raise NonIntegralLatticeError(f"(22 - r)/(p - 1) is not integral for r = {r}")
    m = (22 - r) // (p - 1)
    a_lat = m - 2 * g
    if a_lat < 0 or not 1 <= r <= 21:
        raise NonIntegralLatticeError(
            f"invariants (r, a) = ({r}, {a_lat}) are not a valid lattice")
    return r, a_lat


def lattice_mirror_verdict(report: K3Report, mirror_report: K3Report) -> dict:
    """Lattice invariants of both sides and whether they are mirror:
    (r', a') = (20 - r, a)."""
    inv = k3_invariants(report)
    inv_m = k3_invariants(mirror_report)
    r, a_lat = lattice_invariants(report.order, inv.g1, inv.N1)
    rm, am = lattice_invariants(mirror_report.order, inv_m.g1, inv_m.N1)
    return {
        "r": r, "a": a_lat, "r_mirror": rm, "a_mirror": am,
        "mirror_ok": rm == 20 - r and am == a_lat,
    }
