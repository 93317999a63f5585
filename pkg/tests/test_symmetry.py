from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bhmirror.errors import (
    GradingCollisionError,
    GroupTooLargeError,
    NotAdmissibleError,
    NotInGroupError,
)
from bhmirror.poly import exponent_determinant, parse_polynomial, transpose
from bhmirror.symmetry import (
    add,
    admissible_setup,
    age,
    aut_generators,
    aut_group,
    dual_group,
    enumerate_group,
    identity,
    in_sl,
    j_element,
    neg,
    pairing,
    s_element,
    scale,
    sl_subgroup,
    symmetry,
)

F = Fraction

ELLIPTIC = parse_polynomial("x0^6+x1^3+x2^2")
QUARTIC = parse_polynomial("x0^4+x1^4+x2^4+x3^4")
LOOP = parse_polynomial("x^2*y + y^2*x")


class TestGenerators:
    def test_one_variable(self):
        assert aut_generators(parse_polynomial("x^5")) == ((F(1, 5),),)

    def test_quartic_group_order(self):
        gens = aut_generators(QUARTIC)
        assert len(gens) == 4
        assert aut_group(QUARTIC).order == 256

    def test_loop_span_order_equals_determinant(self):
        group = enumerate_group(LOOP, aut_generators(LOOP))
        assert group.order == exponent_determinant(LOOP) == 3

    def test_dual_generators_fix_transpose(self):
        from bhmirror.symmetry import dual_generators, is_symmetry_of
        for P in (ELLIPTIC, LOOP, parse_polynomial("x^3*y+y^4")):
            Pv = transpose(P)
            for rho in dual_generators(P):
                assert is_symmetry_of(Pv, rho)


class TestEnumeration:
    def test_cyclic_span(self):
        group = enumerate_group(ELLIPTIC, [(F(1, 6), F(1, 3), F(1, 2))])
        assert group.order == 6

    def test_empty_span(self):
        assert enumerate_group(ELLIPTIC, []).order == 1

    def test_cap(self):
        with pytest.raises(GroupTooLargeError):
            enumerate_group(QUARTIC, aut_generators(QUARTIC), cap=10)

    def test_non_symmetry_rejected(self):
        with pytest.raises(NotInGroupError):
            enumerate_group(ELLIPTIC, [(F(1, 5), F(0), F(0))])


class TestAge:
    def test_values(self):
        assert age((F(1, 6), F(1, 3), F(1, 2))) == 1
        assert age(identity(3)) == 0
        assert age((F(5, 6), F(4, 6), F(3, 6))) == 2

    def test_age_plus_age_of_inverse(self):
        for g in aut_group(ELLIPTIC):
            nonzero = sum(1 for a in g if a != 0)
            assert age(g) + age(neg(g)) == nonzero


class TestDistinguishedElements:
    def test_j(self):
        assert j_element(ELLIPTIC) == (F(1, 6), F(1, 3), F(1, 2))
        assert j_element(QUARTIC) == (F(1, 4),) * 4
        assert j_element(parse_polynomial("x^9")) == (F(1, 9),)

    def test_s(self):
        assert s_element(ELLIPTIC) == (F(1, 6), F(0), F(0))
        assert s_element(QUARTIC) == (F(1, 4), F(0), F(0), F(0))
        assert s_element(parse_polynomial("x0^2+x1^4+x2^4")) == (F(1, 2), F(0), F(0))

    def test_in_sl(self):
        assert in_sl((F(1, 6), F(1, 3), F(1, 2)))
        assert not in_sl((F(1, 4), F(0), F(0), F(0)))
        assert in_sl(identity(4))


class TestPairing:
    @pytest.mark.parametrize("P", [ELLIPTIC, QUARTIC, LOOP,
                                   parse_polynomial("x^3*y+y^4")])
    def test_generator_identity(self, P):
        # pairing with the i-th column generator reads off the i-th entry
        gens = aut_generators(P)
        for h in aut_group(transpose(P)):
            for i, rho in enumerate(gens):
                assert pairing(P, rho, h) == h[i]

    def test_identity_pairs_to_zero(self):
        for h in aut_group(transpose(QUARTIC)).elements[:20]:
            assert pairing(QUARTIC, identity(4), h) == 0

    def test_quartic_value(self):
        g = (F(1, 4), F(0), F(0), F(0))
        assert pairing(QUARTIC, g, g) == F(1, 4)

    def test_bilinear(self):
        elements = aut_group(QUARTIC).elements
        duals = aut_group(transpose(QUARTIC)).elements
        for g1, g2, h in [(elements[3], elements[77], duals[5]),
                          (elements[10], elements[200], duals[255])]:
            assert pairing(QUARTIC, add(g1, g2), h) == \
                (pairing(QUARTIC, g1, h) + pairing(QUARTIC, g2, h)) % 1

    def test_nondegenerate(self):
        for P in (LOOP, parse_polynomial("x^3*y+y^4")):
            Pv = transpose(P)
            duals = aut_group(Pv).elements
            for g in aut_group(P):
                if all(pairing(P, g, h) == 0 for h in duals):
                    assert g == identity(P.num_vars)

    def test_dimension_mismatch(self):
        with pytest.raises(NotInGroupError):
            pairing(QUARTIC, (F(1, 4),), (F(0),) * 4)


class TestDualGroup:
    def test_j_dual_is_sl(self):
        H = enumerate_group(QUARTIC, [j_element(QUARTIC)])
        Hv = dual_group(H)
        assert Hv.order == 64
        assert set(Hv.elements) == set(sl_subgroup(transpose(QUARTIC)).elements)

    def test_full_group_dual_trivial(self):
        assert dual_group(aut_group(QUARTIC)).order == 1

    def test_order_product(self):
        H = enumerate_group(QUARTIC, [(F(1, 4), F(3, 4), F(0), F(0))])
        assert H.order * dual_group(H).order == 256

    def test_double_dual(self):
        for gens in ([(F(1, 6), F(1, 3), F(1, 2))], [(F(1, 2), F(0), F(1, 2))]):
            H = enumerate_group(ELLIPTIC, gens)
            back = dual_group(dual_group(H))
            assert set(back.elements) == set(H.elements)

    def test_inclusion_reversing(self):
        small = enumerate_group(QUARTIC, [j_element(QUARTIC)])
        big = enumerate_group(QUARTIC, [j_element(QUARTIC), (F(1, 2), F(1, 2), F(0), F(0))])
        assert set(dual_group(big).elements) <= set(dual_group(small).elements)

    @settings(deadline=None, max_examples=20)
    @given(st.lists(st.integers(0, 255), min_size=0, max_size=3))
    def test_double_dual_random_subgroups(self, picks):
        elements = aut_group(QUARTIC).elements
        H = enumerate_group(QUARTIC, [elements[i] for i in picks])
        assert set(dual_group(dual_group(H)).elements) == set(H.elements)


class TestAdmissibleSetup:
    def test_elliptic_trivial_K(self):
        setup = admissible_setup(ELLIPTIC)
        assert setup.k == 6
        assert setup.group_order == 36
        assert len(setup.cosets) == 36
        assert len(setup.H_elements) == 6

    def test_quartic_trivial_K(self):
        setup = admissible_setup(QUARTIC)
        assert setup.k == 4 and setup.group_order == 16
        assert setup.labels[symmetry((F(1, 2), F(1, 4), F(1, 4), F(1, 4)))] == (1, 1)

    def test_K_outside_sl_rejected(self):
        with pytest.raises(NotAdmissibleError):
            admissible_setup(QUARTIC, [(F(1, 4), F(0), F(0))])

    def test_missing_power_of_jf_rejected(self):
        with pytest.raises(NotAdmissibleError):
            admissible_setup(parse_polynomial("x0^3+x1^3+x2^4+x3^12"))

    def test_grading_collision(self):
        # K contains the inner grading symmetry itself, so the coset labelled
        # (1, 1) coincides with K and the gradings would be two-valued
        W = parse_polynomial("x0^2+x1^3+x2^3+x3^3")
        with pytest.raises(GradingCollisionError):
            admissible_setup(W, [(F(1, 3), F(1, 3), F(1, 3))])

    def test_labels_cover_group(self):
        setup = admissible_setup(ELLIPTIC)
        for g, (a, b) in setup.labels.items():
            expected = add(add(scale(setup.j, a), scale(setup.s, b)), identity(3))
            assert g == expected  # trivial K: the coset is a single element
