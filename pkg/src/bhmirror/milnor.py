"""Equivariant graded Milnor algebras of restricted polynomials.

The general engine is a truncated power series in one variable t with
coefficients in the monoid ring over the dual symmetry group: the factor
contributed by a fixed variable x_i of weight w is

    chi_i t^w * (1 - chi_i^{-1} t^{d-w}) / (1 - chi_i t^w),

where chi_i is row i of the inverse exponent matrix of the parent (the
dual-group character of x_i).  The leading chi_i t^w accounts for the
volume-form factor dx_i, so a basis form prod x^{b-1} dx carries the key
prod chi_i^{b_i} at degree sum b_i w_i.  Division is truncated geometric
expansion; the truncation bound is the socle degree, above which the
algebra provably vanishes.

Fermat-supported restrictions admit direct monomial enumeration, kept as
an independent oracle against the series engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotFermatError
from .poly import InvertiblePolynomial, RestrictedPolynomial, exponent_inverse, restrict
from .symmetry import Symmetry, add, age, identity, pairing, scale, symmetry

SeriesCoefficients = dict[int, dict[Symmetry, int]]


@dataclass(frozen=True)
class GroupRingSeries:
    """Finite map degree -> (dual-group key -> positive multiplicity)."""

    coefficients: SeriesCoefficients
    truncation_bound: int

    def specialize(self) -> dict[int, int]:
        """Forget the keys: the ordinary Hilbert function."""
        return {m: sum(keys.values()) for m, keys in sorted(self.coefficients.items())}

    @property
    def total_dimension(self) -> int:
        return sum(sum(keys.values()) for keys in self.coefficients.values())


def _multiply(A: SeriesCoefficients, B: SeriesCoefficients, bound: int) -> SeriesCoefficients:
    out: SeriesCoefficients = {}
    for ma, keys_a in A.items():
        for mb, keys_b in B.items():
            m = ma + mb
            if m > bound:
                continue
            bucket = out.setdefault(m, {})
            for ka, ca in keys_a.items():
                for kb, cb in keys_b.items():
                    key = add(ka, kb)
                    c = bucket.get(key, 0) + ca * cb
                    if c == 0:
                        bucket.pop(key, None)
                    else:
                        bucket[key] = c
    return {m: keys for m, keys in out.items() if keys}


def _variable_factor(char: Symmetry, w: int, d: int, bound: int) -> SeriesCoefficients:
    """chi t^w (1 - chi^{-1} t^{d-w}) / (1 - chi t^w), expanded to the bound."""
    out: SeriesCoefficients = {}
    r = 0
    while (r + 1) * w <= bound:
        bucket = out.setdefault((r + 1) * w, {})
        key = scale(char, r + 1)
        bucket[key] = bucket.get(key, 0) + 1
        r += 1
    r = 0
    while d + r * w <= bound:
        bucket = out.setdefault(d + r * w, {})
        key = scale(char, r)
        c = bucket.get(key, 0) - 1
        if c == 0:
            del bucket[key]
        else:
            bucket[key] = c
        r += 1
    return {m: keys for m, keys in out.items() if keys}


def _is_dual_symmetry(P: InvertiblePolynomial, key: Symmetry) -> bool:
    n = P.num_vars
    for j in range(n):
        phase = sum(Fraction(P.exponents[i][j]) * key[i] for i in range(n))
        if phase % 1 != 0:
            return False
    return True


def equivariant_hilbert(R: RestrictedPolynomial) -> GroupRingSeries:
    """Dual-group-graded Hilbert series of the Milnor algebra of R.

    Exact for every non-degenerate restriction: the partial derivatives of
    the restriction are simultaneous eigenvectors of the dual grading, so
    the Koszul closed form holds with characters attached.
    """
    P = R.parent
    inv = exponent_inverse(P)
    bound = R.top_degree
    series: SeriesCoefficients = {0: {identity(P.num_vars): 1}}
    for i in R.fixed_vars:
        char = symmetry(inv[i])
        factor = _variable_factor(char, P.weights[i], P.degree, bound)
        series = _multiply(series, factor, bound)
    for m, keys in series.items():
        for key, mult in keys.items():
            assert mult > 0, f"negative multiplicity {mult} at degree {m}"
            assert _is_dual_symmetry(P, key), f"key {key} is not a dual symmetry"
    result = GroupRingSeries(series, bound)
    assert result.total_dimension == R.milnor_dimension
    return result


def fermat_monomial_basis(R: RestrictedPolynomial) -> list[tuple[tuple[int, ...], Symmetry, int]]:
    """Monomial basis (b, key, degree) for Fermat-supported restrictions.

    Valid when every atom of the parent meeting the fixed set is a Fermat
    x_i^{k_i}; the basis is all b with 1 <= b_i <= k_i - 1 on the fixed
    variables.  Serves as the independent oracle for the series engine.
    """
    P = R.parent
    fixed = set(R.fixed_vars)
    tops: dict[int, int] = {}
    for atom in P.atoms:
        touching = [v for v in atom.variables if v in fixed]
        if not touching:
            continue
        if atom.kind != "fermat":
            raise NotFermatError(
                f"variables {touching} lie in a {atom.kind} atom")
        tops[atom.variables[0]] = atom.exponents[0]
    inv = exponent_inverse(P)
    chars = {i: symmetry(inv[i]) for i in R.fixed_vars}

    basis: list[tuple[tuple[int, ...], Symmetry, int]] = []

    def rec(pos: int, b: list[int], key: Symmetry, degree: int) -> None:
        if pos == len(R.fixed_vars):
            basis.append((tuple(b), key, degree))
            return
        i = R.fixed_vars[pos]
        for bi in range(1, tops[i]):
            rec(pos + 1, b + [bi], add(key, scale(chars[i], bi)),
                degree + bi * P.weights[i])

    rec(0, [], identity(P.num_vars), 0)
    return basis


@dataclass(frozen=True)
class SectorAlgebra:
    """Bigraded, dual-group-labelled Milnor algebra of one sector.

    table maps (key, p, q) to a dimension, with
    q = age(h) + degree/d and p = age(h) + #fixed - degree/d,
    so p + q - 2 age(h) = #fixed on every entry.
    """

    sector: Symmetry
    fixed_vars: tuple[int, ...]
    table: dict[tuple[Symmetry, Fraction, Fraction], int]

    @property
    def total_dimension(self) -> int:
        return sum(self.table.values())


def sector_algebra(P: InvertiblePolynomial, h: Sequence[Fraction],
                   invariance: Iterable[Symmetry] = ()) -> SectorAlgebra:
    """Age-shifted sector algebra, keeping only keys annihilating `invariance`.

    Invariance under a subgroup K is equivalent to the key pairing to zero
    with every generator of K, i.e. the key lying in the dual of K.
    """
    h = symmetry(h)
    R = restrict(P, h)
    series = equivariant_hilbert(R)
    shift = age(h)
    gens = tuple(invariance)
    d = P.degree
    nfix = len(R.fixed_vars)
    table: dict[tuple[Symmetry, Fraction, Fraction], int] = {}
    for m, keys in series.coefficients.items():
        charge = Fraction(m, d)
        q = shift + charge
        p = shift + nfix - charge
        for key, mult in keys.items():
            if all(pairing(P, g, key) == 0 for g in gens):
                label = (key, p, q)
                table[label] = table.get(label, 0) + mult
    return SectorAlgebra(h, R.fixed_vars, table)
