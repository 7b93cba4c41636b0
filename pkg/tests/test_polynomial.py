"""Dense rational polynomial algebra and the T -> n substitution."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powersums.polynomial import (
    T_AS_N_POLY,
    Polynomial,
    constant,
    monomial,
    poly_arith,
    poly_compose,
    poly_eval,
    poly_scale,
    t_to_n,
)

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def polys(var: str, max_degree: int = 5):
    return st.lists(small_rationals, max_size=max_degree + 1).map(
        lambda cs: Polynomial(tuple(cs), var)
    )


def brute_power_sum(m: int, n: int) -> int:
    return sum(k**m for k in range(1, n + 1))


class TestRepresentation:
    def test_trailing_zeros_stripped(self):
        p = Polynomial((1, 2, 0, 0), "n")
        assert p.coeffs == (Fraction(1), Fraction(2))
        assert p.degree == 1

    def test_zero_polynomial_is_empty(self):
        assert Polynomial((0, 0), "n").coeffs == ()
        assert Polynomial((), "n").degree == -1

    def test_unknown_variable_tag_rejected(self):
        with pytest.raises(ValueError):
            Polynomial((1,), "x")

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            Polynomial((0.5,), "n")

    def test_structural_equality_includes_tag(self):
        assert Polynomial((1, 2), "n") == Polynomial((1, 2), "n")
        assert Polynomial((1, 2), "n") != Polynomial((1, 2), "T")

    def test_coefficient_beyond_degree_is_zero(self):
        assert Polynomial((1,), "n").coefficient(10) == 0


class TestArithmetic:
    def test_t_times_t(self):
        t = monomial(1, 1, "T")
        assert poly_arith(t, t, "mul") == monomial(1, 2, "T")

    def test_additive_identity(self):
        p = Polynomial((3, 0, 7), "n")
        assert poly_arith(p, Polynomial((), "n"), "add") == p

    def test_n_times_n_plus_one(self):
        n = monomial(1, 1, "n")
        n_plus_1 = Polynomial((1, 1), "n")
        assert poly_arith(n, n_plus_1, "mul") == Polynomial((0, 1, 1), "n")

    def test_mixed_tags_are_a_domain_error(self):
        with pytest.raises(ValueError):
            poly_arith(Polynomial((1,), "n"), Polynomial((1,), "T"), "add")
        with pytest.raises(ValueError):
            Polynomial((1, 1), "n") * Polynomial((1, 1), "T")

    def test_unknown_op_rejected(self):
        with pytest.raises(ValueError):
            poly_arith(Polynomial((1,), "n"), Polynomial((1,), "n"), "div")

    def test_mul_degree_law(self):
        a = Polynomial((1, 2, 3), "n")
        b = Polynomial((0, 0, 0, 5), "n")
        assert (a * b).degree == a.degree + b.degree

    @given(polys("n"), polys("n"))
    def test_add_commutes_and_normalizes(self, a, b):
        s = a + b
        assert s == b + a
        assert not s.coeffs or s.coeffs[-1] != 0

    @given(polys("T"), polys("T"), polys("T"))
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(polys("n"), polys("n"), small_rationals)
    def test_evaluation_homomorphism(self, a, b, x):
        assert poly_eval(a + b, x) == poly_eval(a, x) + poly_eval(b, x)
        assert poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x)

    @given(polys("n"), small_rationals)
    def test_scale_matches_eval(self, p, c):
        assert poly_eval(poly_scale(c, p), 3) == c * poly_eval(p, 3)


class TestScale:
    def test_third_of_four_t_minus_one(self):
        p = Polynomial((-1, 4), "T")
        assert poly_scale(Fraction(1, 3), p) == Polynomial((Fraction(-1, 3), Fraction(4, 3)), "T")

    def test_scale_by_zero(self):
        assert poly_scale(0, Polynomial((1, 2, 3), "n")) == Polynomial((), "n")

    def test_scale_by_minus_one(self):
        p = Polynomial((1, -2), "n")
        assert poly_scale(-1, p) == -p
        assert poly_scale(-1, p) + p == Polynomial((), "n")


class TestEval:
    def test_t_squared_at_six(self):
        assert poly_eval(monomial(1, 2, "T"), 6) == 36

    def test_zero_polynomial(self):
        assert poly_eval(Polynomial((), "n"), Fraction(7, 3)) == 0

    def test_cube_sum_polynomial_at_two(self):
        s3 = Polynomial((0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)), "n")
        assert poly_eval(s3, 2) == 9


class TestCompose:
    def test_square_of_arbitrary(self):
        q = Polynomial((1, 2, 1), "n")
        square = Polynomial((0, 0, 1), "T")
        assert poly_compose(square, q) == q * q

    def test_identity_monomial(self):
        p = Polynomial((5, 0, Fraction(2, 3)), "n")
        assert poly_compose(p, monomial(1, 1, "n")) == p

    def test_t_squared_under_substitution(self):
        expected = Polynomial((0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)), "n")
        assert poly_compose(monomial(1, 2, "T"), T_AS_N_POLY) == expected

    def test_result_carries_inner_tag(self):
        p = Polynomial((1, 1), "T")
        assert poly_compose(p, Polynomial((0, 1), "n")).var == "n"

    @given(polys("T", 4), polys("n", 3), small_rationals)
    def test_compose_eval_compatibility(self, p, q, x):
        assert poly_eval(poly_compose(p, q), x) == poly_eval(p, poly_eval(q, x))

    def test_degree_multiplies(self):
        p = Polynomial((1, 0, 0, 2), "T")
        q = Polynomial((3, 1, 1), "n")
        assert poly_compose(p, q).degree == p.degree * q.degree


class TestTtoN:
    def test_t_itself(self):
        assert t_to_n(monomial(1, 1, "T")) == T_AS_N_POLY
        assert T_AS_N_POLY == Polynomial((0, Fraction(1, 2), Fraction(1, 2)), "n")

    def test_t_squared(self):
        expected = Polynomial((0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)), "n")
        assert t_to_n(monomial(1, 2, "T")) == expected

    def test_degree_six_expansion(self):
        # (4/3)T^3 - (1/3)T^2 expands to (2n^6+6n^5+5n^4-n^2)/12, which is
        # the closed form of 1^5+...+n^5; cross-checked by brute force.
        p = Polynomial((0, 0, Fraction(-1, 3), Fraction(4, 3)), "T")
        expected = Polynomial(
            (0, 0, Fraction(-1, 12), 0, Fraction(5, 12), Fraction(1, 2), Fraction(1, 6)), "n"
        )
        image = t_to_n(p)
        assert image == expected
        for n in range(1, 8):
            assert poly_eval(image, n) == brute_power_sum(5, n)

    def test_wrong_tag_is_a_domain_error(self):
        with pytest.raises(ValueError):
            t_to_n(Polynomial((1, 1), "n"))

    def test_injective_on_corpus(self):
        rng = random.Random(20240811)
        corpus = set()
        while len(corpus) < 30:
            degree = rng.randrange(0, 6)
            coeffs = tuple(
                Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)) for _ in range(degree + 1)
            )
            corpus.add(Polynomial(coeffs, "T"))
        corpus = sorted(corpus, key=str)
        images = [t_to_n(p) for p in corpus]
        for i in range(len(corpus)):
            for j in range(i + 1, len(corpus)):
                assert images[i] != images[j]


class TestRendering:
    @pytest.mark.parametrize(
        "poly, text",
        [
            (Polynomial((0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)), "n"),
             "1/4*n^4 + 1/2*n^3 + 1/4*n^2"),
            (Polynomial((Fraction(-1, 3), Fraction(4, 3)), "T"), "4/3*T - 1/3"),
            (Polynomial((Fraction(1, 3), Fraction(-4, 3), 2), "T"), "2*T^2 - 4/3*T + 1/3"),
            (Polynomial((), "n"), "0"),
            (Polynomial((1,), "T"), "1"),
            (Polynomial((0, 0, 1), "T"), "T^2"),
            (Polynomial((0, -1), "n"), "-n"),
            (Polynomial((5, 0, -1), "n"), "-n^2 + 5"),
            (Polynomial((0, Fraction(1, 2), Fraction(1, 2)), "n"), "1/2*n^2 + 1/2*n"),
        ],
    )
    def test_display_grammar(self, poly, text):
        assert str(poly) == text
