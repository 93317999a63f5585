"""Diagonal symmetry groups of invertible polynomials.

A diagonal symmetry is a vector [a_0, ..., a_n] of rationals mod 1, acting
on variables by x_i -> exp(2*pi*i*a_i) x_i.  Groups are enumerated
explicitly as sorted element lists; the duality pairing between symmetries
of P and of its transpose is the closed form (E*g) . h mod 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    GradingCollisionError,
    GroupTooLargeError,
    NotAdmissibleError,
    NotInGroupError,
)
from .poly import (
    InvertiblePolynomial,
    exponent_determinant,
    exponent_inverse,
    split_cyclic,
    transpose,
)

Symmetry = tuple[Fraction, ...]

DEFAULT_GROUP_CAP = 10**6


def symmetry(entries: Iterable) -> Symmetry:
    """Normalize a rational vector to entries in [0, 1)."""
    return tuple(Fraction(a) % 1 for a in entries)


def identity(num_vars: int) -> Symmetry:
    return (Fraction(0),) * num_vars


def add(g: Symmetry, h: Symmetry) -> Symmetry:
    return tuple((a + b) % 1 for a, b in zip(g, h))


def neg(g: Symmetry) -> Symmetry:
    return tuple((-a) % 1 for a in g)


def scale(g: Symmetry, m: int) -> Symmetry:
    return tuple((m * a) % 1 for a in g)


def age(g: Symmetry) -> Fraction:
    """Sum of the entries, taken with representatives in [0, 1)."""
    return sum((a % 1 for a in g), Fraction(0))


def in_sl(g: Symmetry) -> bool:
    """True iff the symmetry has determinant 1, i.e. integral age."""
    return age(g) % 1 == 0


def fixed_variables(g: Symmetry) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(g) if a % 1 == 0)


def is_symmetry_of(P: InvertiblePolynomial, g: Sequence[Fraction]) -> bool:
    if len(g) != P.num_vars:
        return False
    return all(sum(Fraction(e) * a for e, a in zip(row, g)) % 1 == 0
               for row in P.exponents)


@dataclass(frozen=True)
class SymmetryGroup:
    polynomial: InvertiblePolynomial
    generators: tuple[Symmetry, ...]
    elements: tuple[Symmetry, ...]  # closure, sorted lexicographically

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return symmetry(g) in set(self.elements)

    def __iter__(self):
        return iter(self.elements)


def enumerate_group(P: InvertiblePolynomial, generators: Iterable[Sequence[Fraction]],
                    cap: int = DEFAULT_GROUP_CAP) -> SymmetryGroup:
    """Breadth-first closure of the generators inside (Q/Z)^N."""
    gens = tuple(symmetry(g) for g in generators)
    for g in gens:
        if not is_symmetry_of(P, g):
            raise NotInGroupError(f"{g} does not fix the polynomial")
    elements = {identity(P.num_vars)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                candidate = add(e, g)
                if candidate not in elements:
                    elements.add(candidate)
                    nxt.append(candidate)
                    if len(elements) > cap:
                        raise GroupTooLargeError(
                            f"group exceeds the enumeration cap of {cap}")
        frontier = nxt
    return SymmetryGroup(P, gens, tuple(sorted(elements)))


def aut_generators(P: InvertiblePolynomial) -> tuple[Symmetry, ...]:
    """Columns of the inverse exponent matrix, reduced mod 1."""
    inv = exponent_inverse(P)
    n = P.num_vars
    return tuple(symmetry(inv[i][j] for i in range(n)) for j in range(n))


def dual_generators(P: InvertiblePolynomial) -> tuple[Symmetry, ...]:
    """Rows of the inverse exponent matrix: the generators dual to the
    columns, spanning the symmetry group of the transposed polynomial."""
    inv = exponent_inverse(P)
    return tuple(symmetry(row) for row in inv)


def aut_group(P: InvertiblePolynomial, cap: int = DEFAULT_GROUP_CAP) -> SymmetryGroup:
    """The full diagonal symmetry group; its order equals |det E|."""
    group = enumerate_group(P, aut_generators(P), cap)
    assert group.order == exponent_determinant(P)
    return group


def sl_subgroup(P: InvertiblePolynomial, cap: int = DEFAULT_GROUP_CAP) -> SymmetryGroup:
    elements = tuple(g for g in aut_group(P, cap) if in_sl(g))
    return SymmetryGroup(P, elements, elements)


def j_element(P: InvertiblePolynomial) -> Symmetry:
    """The grading symmetry [w_0/d, ..., w_n/d]."""
    return symmetry(Fraction(w, P.degree) for w in P.weights)


def s_element(W: InvertiblePolynomial) -> Symmetry:
    """[1/k, 0, ..., 0] for W = x0^k + f."""
    k, _ = split_cyclic(W)
    return (Fraction(1, k),) + (Fraction(0),) * (W.num_vars - 1)


def pairing(P: InvertiblePolynomial, g: Sequence[Fraction], h: Sequence[Fraction]) -> Fraction:
    """Duality pairing of g in Aut_P with h in Aut of the transpose.

    Computed as (E*g) . h mod 1.  On the generator rho_i (column i of the
    inverse matrix) this evaluates to h_i, which pins the identification of
    the dual group with the character group.
    """
    n = P.num_vars
    if len(g) != n or len(h) != n:
        raise NotInGroupError("pairing applied to vectors of the wrong length")
    total = Fraction(0)
    for i, row in enumerate(P.exponents):
        entry = sum(Fraction(e) * Fraction(a) for e, a in zip(row, g))
        if entry % 1 != 0:
            raise NotInGroupError(f"left argument does not fix monomial {i}")
        total += entry * Fraction(h[i])
    return total % 1


def dual_group(H: SymmetryGroup, cap: int = DEFAULT_GROUP_CAP) -> SymmetryGroup:
    """Annihilator of H inside the symmetry group of the transpose.

    The orders multiply to |det E|, so this is a perfect duality; that is
    asserted on every call.
    """
    P = H.polynomial
    Pv = transpose(P)
    full = aut_group(Pv, cap)
    gens = H.generators if H.generators else H.elements
    elements = tuple(h for h in full
                     if all(pairing(P, g, h) == 0 for g in gens))
    assert len(elements) * H.order == full.order
    return SymmetryGroup(Pv, elements, elements)


# ---------------------------------------------------------------------------
# cyclic-automorphism setups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibleSetup:
    """The groups attached to W = x0^k + f and K with j_f^k in K within SL_f.

    G is the union of the k*k cosets j^a s^b K; the label map records the
    single-valued gradings (a/k, b/k) of every element.  H is the b = 0
    part, the group generated by K and the grading symmetry of W.
    """

    W: InvertiblePolynomial
    k: int
    f: InvertiblePolynomial
    K_inner: SymmetryGroup            # subgroup of Aut_f, in f coordinates
    K_embedded: tuple[Symmetry, ...]  # same elements, with a leading zero
    j: Symmetry
    s: Symmetry
    labels: dict[Symmetry, tuple[int, int]]
    cosets: dict[tuple[int, int], tuple[Symmetry, ...]]

    @property
    def H_elements(self) -> tuple[Symmetry, ...]:
        return tuple(sorted(g for g, (a, b) in self.labels.items() if b == 0))

    @property
    def G_elements(self) -> tuple[Symmetry, ...]:
        return tuple(sorted(self.labels))

    @property
    def group_order(self) -> int:
        return len(self.labels)


def embed_inner(g: Sequence[Fraction]) -> Symmetry:
    """View a symmetry of f as a symmetry of W = x0^k + f fixing x0."""
    return (Fraction(0),) + symmetry(g)


def admissible_setup(W: InvertiblePolynomial, K_generators: Iterable[Sequence[Fraction]] = (),
                     cap: int = DEFAULT_GROUP_CAP) -> AdmissibleSetup:
    """Validate j_f^k in K within SL_f and label the k^2 cosets j^a s^b K.

    Raises GradingCollision if two labels name the same coset: the
    (a/k, b/k)-gradings would not be single-valued, and no convention is
    guessed.
    """
    k, f = split_cyclic(W)
    K_inner = enumerate_group(f, tuple(symmetry(g) for g in K_generators), cap)
    jf_k = scale(j_element(f), k)
    if jf_k not in K_inner:
        raise NotAdmissibleError(
            f"j_f^{k} = {jf_k} is not in K (add it as a generator)")
    for g in K_inner:
        if not in_sl(g):
            raise NotAdmissibleError(f"K contains {g}, which is outside SL_f")

    j = j_element(W)
    s = s_element(W)
    K_embedded = tuple(embed_inner(g) for g in K_inner)
    labels: dict[Symmetry, tuple[int, int]] = {}
    cosets: dict[tuple[int, int], tuple[Symmetry, ...]] = {}
    for a in range(k):
        for b in range(k):
            shift = add(scale(j, a), scale(s, b))
            coset = tuple(sorted(add(shift, g) for g in K_embedded))
            for element in coset:
                if element in labels:
                    raise GradingCollisionError(
                        f"cosets {labels[element]} and {(a, b)} coincide; "
                        "the (d_j, d_s) grading is not single-valued")
                labels[element] = (a, b)
            cosets[(a, b)] = coset
    return AdmissibleSetup(W, k, f, K_inner, K_embedded, j, s, labels, cosets)
