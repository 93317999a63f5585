"""Invertible quasi-homogeneous polynomials.

A polynomial with as many monomials as variables is encoded by its square
exponent matrix E (row i = exponent vector of monomial i).  All arithmetic
is exact: weights solve E*q = 1 over the rationals and are scaled to the
least integer degree.  Every polynomial decomposes into Fermat, chain and
loop atoms; inputs for which no such decomposition exists are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import (
    DegenerateRestrictionError,
    DegenerateShapeError,
    NonPositiveWeightError,
    NonSquareError,
    NotCyclicSplitError,
    NotInGroupError,
    PolynomialSyntaxError,
    SingularExponentMatrixError,
    TooManyVariablesError,
)

MAX_VARIABLES = 12

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Atom:
    """One block of the Fermat/chain/loop decomposition.

    variables are original variable indices in atom order; exponents[l] is
    the self-exponent of variables[l]; rows[l] is the original row index of
    the monomial headed by variables[l].
    """

    kind: str  # "fermat" | "chain" | "loop"
    variables: tuple[int, ...]
    exponents: tuple[int, ...]
    rows: tuple[int, ...]

    def block_rows(self, num_vars: int) -> list[tuple[int, tuple[int, ...]]]:
        """Reassemble the atom's monomial rows in ambient coordinates."""
        out = []
        m = len(self.variables)
        for l, (v, e, r) in enumerate(zip(self.variables, self.exponents, self.rows)):
            row = [0] * num_vars
            row[v] = e
            if self.kind == "chain" and l < m - 1:
                row[self.variables[l + 1]] += 1
            elif self.kind == "loop":
                row[self.variables[(l + 1) % m]] += 1
            out.append((r, tuple(row)))
        return out


@dataclass(frozen=True)
class InvertiblePolynomial:
    num_vars: int
    exponents: Matrix
    weights: tuple[int, ...]
    degree: int
    atoms: tuple[Atom, ...]
    var_names: tuple[str, ...]

    @property
    def charges(self) -> tuple[Fraction, ...]:
        """Normalized weights q_i = w_i/d."""
        return tuple(Fraction(w, self.degree) for w in self.weights)

    def __str__(self) -> str:
        return format_polynomial(self)


@dataclass(frozen=True)
class RestrictedPolynomial:
    """Restriction of a polynomial to a subset of variables.

    Holds the rows of the parent exponent matrix supported entirely on the
    fixed variables; weights and degree are inherited from the parent (the
    grading is never re-normalized).
    """

    parent: InvertiblePolynomial
    fixed_vars: tuple[int, ...]
    row_indices: tuple[int, ...]

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(self.parent.weights[i] for i in self.fixed_vars)

    @property
    def degree(self) -> int:
        return self.parent.degree

    @property
    def milnor_dimension(self) -> int:
        d = self.parent.degree
        total = Fraction(1)
        for i in self.fixed_vars:
            total *= Fraction(d - self.parent.weights[i], self.parent.weights[i])
        assert total.denominator == 1 and total > 0
        return int(total)

    @property
    def top_degree(self) -> int:
        """Socle degree of the Milnor algebra including the volume form."""
        d = self.parent.degree
        return sum(d - self.parent.weights[i] for i in self.fixed_vars)


# ---------------------------------------------------------------------------
# exact linear algebra (tiny fixed-size systems, Fraction entries)
# ---------------------------------------------------------------------------

def invert_matrix(rows: Sequence[Sequence[int]]) -> tuple[tuple[tuple[Fraction, ...], ...], Fraction]:
    """Exact inverse and determinant via Gauss-Jordan elimination."""
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularExponentMatrixError("exponent matrix is singular")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
            det = -det
        det *= aug[col][col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    inverse = tuple(tuple(row[n:]) for row in aug)
    return inverse, det


def exponent_inverse(P: InvertiblePolynomial) -> tuple[tuple[Fraction, ...], ...]:
    inverse, _ = invert_matrix(P.exponents)
    return inverse


def exponent_determinant(P: InvertiblePolynomial) -> int:
    _, det = invert_matrix(P.exponents)
    assert det.denominator == 1
    return abs(int(det))


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def solve_weights(exponents: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Solve E*q = 1 exactly and scale to integer weights and degree.

    The degree is the least positive integer d such that all w_i = d*q_i are
    integral; that keeps every later charge denominator minimal.
    """
    n = len(exponents)
    if any(len(row) != n for row in exponents):
        raise NonSquareError("exponent matrix must be square")
    inverse, _ = invert_matrix(exponents)
    q = [sum(row) for row in inverse]
    if any(qi <= 0 for qi in q):
        raise NonPositiveWeightError(f"weight vector {q} has a non-positive entry")
    degree = lcm(*(qi.denominator for qi in q)) if q else 1
    weights = tuple(int(qi * degree) for qi in q)
    return weights, degree


# ---------------------------------------------------------------------------
# atom classification
# ---------------------------------------------------------------------------

def _row_candidates(row: Sequence[int], row_index: int) -> list[tuple[int, int | None]]:
    """Ways to read one monomial: (head variable, successor variable or None).

    A monomial can only be a pure power x_i^a (a >= 2) or a link x_i^a * x_j;
    anything else admits no Fermat/chain/loop decomposition.
    """
    support = [(j, e) for j, e in enumerate(row) if e > 0]
    if len(support) == 1:
        j, e = support[0]
        if e < 2:
            raise DegenerateShapeError(
                f"monomial {row_index} is a bare variable; tail exponents must be >= 2")
        return [(j, None)]
    if len(support) == 2:
        (i, ei), (j, ej) = support
        cands = []
        if ej == 1:
            cands.append((i, j))
        if ei == 1:
            cands.append((j, i))
        if not cands:
            raise DegenerateShapeError(
                f"monomial {row_index} is not of the form x^a or x^a*y")
        return sorted(cands)
    raise DegenerateShapeError(
        f"monomial {row_index} involves {len(support)} variables; at most 2 allowed")


def _atoms_from_matching(exponents: Matrix, head: list[int], succ: list[int | None],
                         head_row: list[int]) -> tuple[Atom, ...] | None:
    """Turn a monomial/variable matching into atoms, or None if invalid."""
    n = len(head)
    indegree = [0] * n
    for v in range(n):
        if succ[v] is not None:
            indegree[succ[v]] += 1
            if indegree[succ[v]] > 1:
                return None
    pred: list[int | None] = [None] * n
    for v in range(n):
        if succ[v] is not None:
            pred[succ[v]] = v

    atoms = []
    seen = [False] * n
    for t in range(n):
        if succ[t] is not None:
            continue
        chain = [t]
        while pred[chain[0]] is not None:
            chain.insert(0, pred[chain[0]])
        for v in chain:
            seen[v] = True
        exps = tuple(exponents[head_row[v]][v] for v in chain)
        rows = tuple(head_row[v] for v in chain)
        kind = "fermat" if len(chain) == 1 else "chain"
        atoms.append(Atom(kind, tuple(chain), exps, rows))
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        v = succ[start]
        while v is not None and v != start:
            if seen[v]:
                return None
            cycle.append(v)
            seen[v] = True
            v = succ[v]
        exps = tuple(exponents[head_row[v]][v] for v in cycle)
        rows = tuple(head_row[v] for v in cycle)
        atoms.append(Atom("loop", tuple(cycle), exps, rows))
    atoms.sort(key=lambda a: a.variables[0])
    return tuple(atoms)


def classify_atoms(exponents: Sequence[Sequence[int]]) -> tuple[Atom, ...]:
    """Decompose the exponent matrix into Fermat/chain/loop atoms.

    Searches for a perfect matching between monomials and their head
    variables (each monomial has at most two readings), taking the first
    valid matching in lowest-head-index order, so the result is
    deterministic.
    """
    n = len(exponents)
    if n > MAX_VARIABLES:
        raise TooManyVariablesError(
            f"{n} variables exceed the supported maximum of {MAX_VARIABLES}")
    E = tuple(tuple(int(e) for e in row) for row in exponents)
    for j in range(n):
        if all(E[i][j] == 0 for i in range(n)):
            raise DegenerateShapeError(f"variable {j} appears in no monomial")
    candidates = [_row_candidates(E[i], i) for i in range(n)]

    head = [-1] * n          # head variable of each row
    head_row = [-1] * n      # row matched to each variable
    succ: list[int | None] = [None] * n

    def search(row: int) -> tuple[Atom, ...] | None:
        if row == n:
            return _atoms_from_matching(E, head, succ, head_row)
        for h, s in candidates[row]:
            if head_row[h] != -1:
                continue
            head[row], head_row[h], succ[h] = h, row, s
            result = search(row + 1)
            if result is not None:
                return result
            head[row], head_row[h], succ[h] = -1, -1, None
        return None

    atoms = search(0)
    if atoms is None:
        raise DegenerateShapeError("no Fermat/chain/loop decomposition exists")
    return atoms


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def from_exponents(exponents: Sequence[Sequence[int]],
                   var_names: Sequence[str] | None = None) -> InvertiblePolynomial:
    """Build and validate a polynomial from its exponent matrix."""
    n = len(exponents)
    if any(len(row) != n for row in exponents):
        raise NonSquareError(
            f"{n} monomials on {len(exponents[0]) if exponents else 0} variables")
    E = tuple(tuple(int(e) for e in row) for row in exponents)
    if any(e < 0 for row in E for e in row):
        raise DegenerateShapeError("negative exponent")
    weights, degree = solve_weights(E)
    atoms = classify_atoms(E)
    names = tuple(var_names) if var_names is not None else tuple(f"x{i}" for i in range(n))
    return InvertiblePolynomial(n, E, weights, degree, atoms, names)


_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<num>\d+)|(?P<op>[+*^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise PolynomialSyntaxError(f"unexpected character {text[pos:].strip()[0]!r}",
                                        len(text) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def parse_polynomial(text: str) -> InvertiblePolynomial:
    """Parse `mono (+ mono)*`, each mono `factor (* factor)*`,
    each factor `ident (^ uint)?`; whitespace is insignificant.

    Coefficients other than a literal 1 are rejected: the theory normalizes
    all coefficients to 1 by rescaling variables.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial", 0)

    var_order: list[str] = []
    monomials: list[dict[str, int]] = []
    i = 0

    def expect_factor(mono: dict[str, int]) -> None:
        nonlocal i
        if i >= len(tokens):
            raise PolynomialSyntaxError("expected a variable", len(text))
        kind, value, pos = tokens[i]
        if kind == "num":
            if value != "1":
                raise PolynomialSyntaxError(f"coefficient {value} not allowed (must be 1)", pos)
            i += 1
            return
        if kind != "ident":
            raise PolynomialSyntaxError(f"expected a variable, found {value!r}", pos)
        name = value
        i += 1
        exp = 1
        if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
            i += 1
            if i >= len(tokens) or tokens[i][0] != "num":
                raise PolynomialSyntaxError("expected an integer exponent",
                                            tokens[i][2] if i < len(tokens) else len(text))
            exp = int(tokens[i][1])
            if exp < 1:
                raise PolynomialSyntaxError("exponent must be a positive integer", tokens[i][2])
            i += 1
        if name not in var_order:
            var_order.append(name)
        mono[name] = mono.get(name, 0) + exp

    while True:
        mono: dict[str, int] = {}
        expect_factor(mono)
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "*":
            i += 1
            expect_factor(mono)
        if not mono:
            raise PolynomialSyntaxError("monomial has no variables", tokens[i - 1][2])
        monomials.append(mono)
        if i >= len(tokens):
            break
        kind, value, pos = tokens[i]
        if kind != "op" or value != "+":
            raise PolynomialSyntaxError(f"expected '+', found {value!r}", pos)
        i += 1

    if len(monomials) != len(var_order):
        raise NonSquareError(
            f"{len(monomials)} monomials on {len(var_order)} variables")
    E = tuple(tuple(mono.get(name, 0) for name in var_order) for mono in monomials)
    return from_exponents(E, var_order)


def format_polynomial(P: InvertiblePolynomial) -> str:
    """Render back to the input grammar (deterministic)."""
    monos = []
    for row in P.exponents:
        factors = []
        for name, e in zip(P.var_names, row):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        monos.append("*".join(factors))
    return " + ".join(monos)


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

def transpose(P: InvertiblePolynomial) -> InvertiblePolynomial:
    """Transpose the exponent matrix; variable order is preserved."""
    E = tuple(tuple(P.exponents[i][j] for i in range(P.num_vars)) for j in range(P.num_vars))
    return from_exponents(E, P.var_names)


def direct_sum(P: InvertiblePolynomial, Q: InvertiblePolynomial) -> InvertiblePolynomial:
    """Sum of two polynomials in disjoint variables (block-diagonal matrix)."""
    if set(P.var_names) & set(Q.var_names):
        raise NonSquareError("direct sum requires disjoint variable names")
    n, m = P.num_vars, Q.num_vars
    E = [row + (0,) * m for row in P.exponents]
    E += [(0,) * n + row for row in Q.exponents]
    return from_exponents(E, P.var_names + Q.var_names)


def is_calabi_yau(P: InvertiblePolynomial) -> bool:
    return sum(P.weights) == P.degree


def is_fermat_diagonal(P: InvertiblePolynomial) -> bool:
    return all(a.kind == "fermat" for a in P.atoms)


def split_cyclic(P: InvertiblePolynomial) -> tuple[int, InvertiblePolynomial]:
    """Split W = x0^k + f(x1..xn): x0 must occur exactly once, as a pure power."""
    rows_with_x0 = [i for i in range(P.num_vars) if P.exponents[i][0] > 0]
    if len(rows_with_x0) != 1:
        raise NotCyclicSplitError(
            f"first variable {P.var_names[0]} occurs in {len(rows_with_x0)} monomials")
    r0 = rows_with_x0[0]
    row = P.exponents[r0]
    if any(e > 0 for j, e in enumerate(row) if j != 0):
        raise NotCyclicSplitError(
            f"the monomial containing {P.var_names[0]} is not a pure power")
    if P.num_vars < 2:
        raise NotCyclicSplitError("no remaining variables for the inner polynomial")
    k = row[0]
    sub_rows = [tuple(P.exponents[i][1:]) for i in range(P.num_vars) if i != r0]
    f = from_exponents(sub_rows, P.var_names[1:])
    return k, f


def restrict(P: InvertiblePolynomial, symmetry: Sequence[Fraction]) -> RestrictedPolynomial:
    """Restriction of P to the variables fixed by a diagonal symmetry.

    Keeps the rows supported entirely on the fixed set and verifies the
    result is non-degenerate (square with a valid atom decomposition);
    a failure is an error, never silent.
    """
    if len(symmetry) != P.num_vars:
        raise NotInGroupError("symmetry has the wrong number of entries")
    for i, row in enumerate(P.exponents):
        phase = sum(Fraction(e) * a for e, a in zip(row, symmetry))
        if phase % 1 != 0:
            raise NotInGroupError(f"symmetry does not fix monomial {i}")
    fixed = tuple(i for i, a in enumerate(symmetry) if a % 1 == 0)
    fixed_set = set(fixed)
    rows = tuple(i for i, row in enumerate(P.exponents)
                 if all(e == 0 for j, e in enumerate(row) if j not in fixed_set))
    if len(rows) != len(fixed):
        raise DegenerateRestrictionError(
            f"{len(rows)} monomials survive on {len(fixed)} fixed variables")
    if fixed:
        sub = [tuple(P.exponents[r][j] for j in fixed) for r in rows]
        try:
            classify_atoms(sub)
        except DegenerateShapeError as exc:
            raise DegenerateRestrictionError(f"restriction is degenerate: {exc}") from exc
    return RestrictedPolynomial(P, fixed, rows)
