from fractions import Fraction

import pytest

from bhmirror.catalog import KRAWITZ_POLYNOMIALS
from bhmirror.errors import (
    DegenerateShapeError,
    NonPositiveWeightError,
    NonSquareError,
    NotCyclicSplitError,
    PolynomialSyntaxError,
    SingularExponentMatrixError,
    TooManyVariablesError,
)
from bhmirror.poly import (
    classify_atoms,
    direct_sum,
    format_polynomial,
    from_exponents,
    is_calabi_yau,
    parse_polynomial,
    restrict,
    solve_weights,
    split_cyclic,
    transpose,
)


class TestParse:
    def test_elliptic_sextic(self):
        P = parse_polynomial("x0^6 + x1^3 + x2^2")
        assert P.weights == (1, 2, 3)
        assert P.degree == 6
        assert P.var_names == ("x0", "x1", "x2")

    def test_single_fermat(self):
        P = parse_polynomial("x^2")
        assert P.weights == (1,) and P.degree == 2
        assert [a.kind for a in P.atoms] == ["fermat"]

    def test_loop_weights_solved_by_hand(self):
        # 2q0 + q1 = 1 and q0 + 2q1 = 1 give q = (1/3, 1/3)
        P = parse_polynomial("x^2*y + y^2*x")
        assert P.weights == (1, 1) and P.degree == 3
        assert [a.kind for a in P.atoms] == ["loop"]

    def test_whitespace_and_repeat_factors(self):
        assert parse_polynomial(" x ^2*  y+y^ 3 ").exponents == ((2, 1), (0, 3))
        assert parse_polynomial("x*x^2 + y^2").exponents == ((3, 0), (0, 2))

    def test_unit_coefficient_tolerated(self):
        assert parse_polynomial("1*x^2 + y^2").exponents == ((2, 0), (0, 2))

    def test_variable_order_is_first_appearance(self):
        P = parse_polynomial("b^2*a + a^2*b")
        assert P.var_names == ("b", "a")

    @pytest.mark.parametrize("text,pos", [
        ("x^2+@", 4), ("x^", 2), ("x^2 # y", 4), ("", 0),
    ])
    def test_syntax_error_positions(self, text, pos):
        with pytest.raises(PolynomialSyntaxError) as err:
            parse_polynomial(text)
        assert err.value.position == pos

    def test_nonunit_coefficient_rejected(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("2*x^2 + y^2")

    def test_zero_exponent_rejected(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("x^0 + y^2")

    def test_non_square(self):
        with pytest.raises(NonSquareError):
            parse_polynomial("x^2 + y^2 + x*y")

    def test_singular_matrix(self):
        with pytest.raises(SingularExponentMatrixError):
            parse_polynomial("x^2*y^2 + x*y")

    def test_duplicate_monomials_are_nonsquare(self):
        with pytest.raises(NonSquareError):
            parse_polynomial("x^2 + x^2")

    def test_non_positive_weight(self):
        # q0 + q1 = 1 and 2q0 + q1 = 1 force q0 = 0
        with pytest.raises(NonPositiveWeightError):
            parse_polynomial("x*y + x^2*y")

    def test_degenerate_shape_three_variable_monomial(self):
        with pytest.raises(DegenerateShapeError):
            parse_polynomial("x^3*y*z + y^2*z + y*z^2")

    def test_degenerate_bare_variable(self):
        with pytest.raises(DegenerateShapeError):
            parse_polynomial("x + y^2")

    def test_too_many_variables(self):
        text = "+".join(f"v{i}^2" for i in range(13))
        with pytest.raises(TooManyVariablesError):
            parse_polynomial(text)


class TestSolveWeights:
    def test_fermat_quartic(self):
        weights, degree = solve_weights([[4, 0, 0, 0], [0, 4, 0, 0],
                                         [0, 0, 4, 0], [0, 0, 0, 4]])
        assert weights == (1, 1, 1, 1) and degree == 4

    def test_one_variable(self):
        assert solve_weights([[7]]) == ((1,), 7)

    def test_chain_by_back_substitution(self):
        # 4q1 = 1 then 3q0 + q1 = 1: q = (1/4, 1/4)
        assert solve_weights([[3, 1], [0, 4]]) == ((1, 1), 4)

    def test_charge_identity(self):
        for text in KRAWITZ_POLYNOMIALS:
            P = parse_polynomial(text)
            for row in P.exponents:
                assert sum(Fraction(e * w, P.degree) for e, w in zip(row, P.weights)) == 1


class TestAtoms:
    def test_diagonal(self):
        P = parse_polynomial("x^6 + y^3 + z^2")
        assert [(a.kind, a.exponents) for a in P.atoms] == [
            ("fermat", (6,)), ("fermat", (3,)), ("fermat", (2,))]

    def test_loop(self):
        P = parse_polynomial("x^2*y + y^2*x")
        assert [(a.kind, a.variables, a.exponents) for a in P.atoms] == [
            ("loop", (0, 1), (2, 2))]

    def test_chain(self):
        P = parse_polynomial("x^3*y + y^4")
        assert [(a.kind, a.variables, a.exponents) for a in P.atoms] == [
            ("chain", (0, 1), (3, 4))]

    def test_reassembly_reproduces_matrix(self):
        for text in KRAWITZ_POLYNOMIALS:
            P = parse_polynomial(text)
            seen_rows = {}
            for atom in P.atoms:
                for r, row in atom.block_rows(P.num_vars):
                    seen_rows[r] = row
            assert seen_rows == {i: row for i, row in enumerate(P.exponents)}


class TestTranspose:
    def test_fermat_fixed(self):
        P = parse_polynomial("x^4+y^4")
        assert transpose(P).exponents == P.exponents

    def test_chain(self):
        P = parse_polynomial("x^3*y + y^4")
        assert format_polynomial(transpose(P)) == "x^3 + x*y^4"

    def test_symmetric_loop_fixed(self):
        P = parse_polynomial("x^2*y + y^2*x")
        assert transpose(P).exponents == P.exponents

    def test_involution(self):
        for text in KRAWITZ_POLYNOMIALS:
            P = parse_polynomial(text)
            assert transpose(transpose(P)).exponents == P.exponents

    def test_degenerate_transpose_propagates(self):
        # x*y + y^2 is itself fine, but its transpose x + x*y^2 has a
        # weight-zero variable; the solver error propagates
        P = parse_polynomial("x*y + y^2")
        assert P.weights == (1, 1)
        with pytest.raises(NonPositiveWeightError):
            transpose(P)

    def test_calabi_yau_preserved_in_catalog(self):
        # the charge total is matrix-transpose invariant, so the flag agrees
        for text in KRAWITZ_POLYNOMIALS:
            P = parse_polynomial(text)
            assert is_calabi_yau(P) == is_calabi_yau(transpose(P))


class TestCalabiYau:
    @pytest.mark.parametrize("text,expect", [
        ("x0^6+x1^3+x2^2", True),
        ("x0^4+x1^4+x2^4+x3^4", True),
        ("x^5+y^5", False),
    ])
    def test_flag(self, text, expect):
        assert is_calabi_yau(parse_polynomial(text)) is expect


class TestSplitCyclic:
    def test_elliptic(self):
        k, f = split_cyclic(parse_polynomial("x0^6+x1^3+x2^2"))
        assert k == 6 and format_polynomial(f) == "x1^3 + x2^2"

    def test_order_two(self):
        k, f = split_cyclic(parse_polynomial("x0^2+x1^4+x2^4"))
        assert k == 2 and f.num_vars == 2

    def test_not_split(self):
        with pytest.raises(NotCyclicSplitError):
            split_cyclic(parse_polynomial("x0^3*x1 + x1^2"))


class TestRestrict:
    def test_identity_keeps_everything(self):
        P = parse_polynomial("x^7")
        R = restrict(P, (Fraction(0),))
        assert R.fixed_vars == (0,) and R.row_indices == (0,)

    def test_free_sector_is_empty(self):
        P = parse_polynomial("x^7")
        R = restrict(P, (Fraction(3, 7),))
        assert R.fixed_vars == () and R.milnor_dimension == 1

    def test_quartic_partial_fix(self):
        P = parse_polynomial("x0^4+x1^4+x2^4+x3^4")
        h = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))
        R = restrict(P, h)
        assert R.fixed_vars == (0,) and R.row_indices == (0,)
        assert R.milnor_dimension == 3

    def test_identity_restriction_full(self):
        for text in ("x^2*y+y^2*x", "x^3*y+y^4", "x0^6+x1^3+x2^2"):
            P = parse_polynomial(text)
            R = restrict(P, (Fraction(0),) * P.num_vars)
            assert R.fixed_vars == tuple(range(P.num_vars))
            assert R.row_indices == tuple(range(P.num_vars))


class TestDirectSum:
    def test_block_matrix(self):
        P = direct_sum(parse_polynomial("x^3"), parse_polynomial("y^2*z+z^2*y"))
        assert P.num_vars == 3
        assert {a.kind for a in P.atoms} == {"fermat", "loop"}

    def test_name_clash_rejected(self):
        with pytest.raises(NonSquareError):
            direct_sum(parse_polynomial("x^3"), parse_polynomial("x^2"))
