"""Pinned behavior of contexts, polynomials, rational functions, parsing."""

from __future__ import annotations

from fractions import Fraction

import pytest

from qmi import (
    QQ,
    Context,
    DivisionByZero,
    NotDivisible,
    ParseError,
    Poly,
    PrimeField,
    RatFunc,
    SubstitutionPole,
    UnknownRoot,
    UnknownSymbol,
    exact_div,
    parse,
    poly_gcd,
)


@pytest.fixture()
def ctx():
    return Context(QQ, variables=["x1", "x2", "x3"], parameters=["a", "b"], roots=["a"])


def P(ctx, text):
    f = parse(ctx, text)
    assert f.is_polynomial()
    return f.num


class TestContext:
    def test_symbol_order_roots_then_params_then_vars(self, ctx):
        assert ctx.symbols == ("sqrt(a)", "a", "b", "x1", "x2", "x3")

    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            Context(QQ, variables=["x1"], parameters=["x1"])

    def test_root_requires_declared_parameter(self):
        with pytest.raises(ValueError):
            Context(QQ, variables=["x1"], roots=["a"])

    def test_char2_rejected(self):
        with pytest.raises(ValueError):
            PrimeField(2)

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            PrimeField(6)

    def test_specialized_parameter_is_constant(self):
        c = Context(QQ, variables=["u"], parameters=["e"], specialize={"e": 5})
        assert parse(c, "e") == parse(c, "5")
        assert "e" not in c.index

    def test_rooted_parameter_cannot_specialize_to_zero_mod_p(self):
        with pytest.raises(ValueError):
            Context(PrimeField(3), parameters=["m"], roots=["m"], specialize={"m": -3})


class TestArithmetic:
    def test_add_zero_is_identity(self, ctx):
        x1 = P(ctx, "x1")
        assert x1 + Poly.const(ctx, 0) == x1

    def test_root_squares_to_parameter(self, ctx):
        r = P(ctx, "sqrt(a)")
        assert r * r == P(ctx, "a")

    def test_root_fourth_power(self, ctx):
        r = P(ctx, "sqrt(a)")
        assert r**4 == P(ctx, "a^2")
        assert r**5 == P(ctx, "a^2*sqrt(a)")

    def test_constant_root_squares_to_value(self):
        c = Context(QQ, parameters=["e"], roots=["e"], specialize={"e": 5})
        r = P(c, "sqrt(e)")
        assert r * r == Poly.const(c, 5)

    def test_exact_division(self, ctx):
        assert exact_div(P(ctx, "x1^2-1"), P(ctx, "x1-1")) == P(ctx, "x1+1")

    def test_exact_division_with_root(self, ctx):
        assert exact_div(P(ctx, "x1^2-a"), P(ctx, "x1-sqrt(a)")) == P(ctx, "x1+sqrt(a)")

    def test_inexact_division_raises(self, ctx):
        with pytest.raises(NotDivisible):
            exact_div(P(ctx, "x1^2+1"), P(ctx, "x1-1"))

    def test_division_by_zero_poly(self, ctx):
        with pytest.raises(DivisionByZero):
            exact_div(P(ctx, "x1"), Poly.const(ctx, 0))

    def test_gcd_with_root_factor(self, ctx):
        g = poly_gcd(P(ctx, "x1^2-a"), P(ctx, "x1-sqrt(a)"))
        assert g == P(ctx, "x1-sqrt(a)")

    def test_gcd_plain(self, ctx):
        assert poly_gcd(P(ctx, "x1*x2+x2"), P(ctx, "x1*x3+x3")) == P(ctx, "x1+1")

    def test_gcd_with_zero_normalizes(self, ctx):
        assert poly_gcd(P(ctx, "2*x1+2"), Poly.const(ctx, 0)) == P(ctx, "x1+1")

    def test_gcd_of_constants_is_one(self, ctx):
        assert poly_gcd(Poly.const(ctx, 6), Poly.const(ctx, 4)).is_one()

    def test_mod3_arithmetic(self):
        c = Context(PrimeField(3), variables=["s"])
        assert parse(c, "s^3+s^3") == parse(c, "2*s^3")
        assert parse(c, "3*s").is_zero()
        assert parse(c, "(s+1)^3") == parse(c, "s^3+1")


class TestRatFunc:
    def test_reduction_to_canonical_form(self, ctx):
        f = parse(ctx, "(x1^2-1)/(x1-1)")
        assert f.is_polynomial()
        assert f == parse(ctx, "x1+1")

    def test_denominator_made_monic(self, ctx):
        f = parse(ctx, "x1/(2*x2-2)")
        assert str(f) == "(1/2*x1)/(x2 - 1)"

    def test_zero_denominator(self, ctx):
        with pytest.raises(DivisionByZero):
            parse(ctx, "x1/(x2-x2)")

    def test_negative_exponent(self, ctx):
        assert parse(ctx, "x1^-1") == parse(ctx, "1/x1")

    def test_pow_negative(self, ctx):
        f = parse(ctx, "(x1+1)/x2")
        assert f**-2 == parse(ctx, "x2^2/(x1+1)^2")

    def test_equality_by_cross_multiplication(self, ctx):
        assert parse(ctx, "(x1^2-1)/(x1+1)") == parse(ctx, "x1-1")

    def test_substitute_identity_fixed_point(self, ctx):
        t1 = parse(ctx, "(x1*x2+1)/(x1+x2)")
        flip = {"x1": parse(ctx, "1/x1"), "x2": parse(ctx, "1/x2")}
        assert t1.substitute(flip) == t1

    def test_substitute_pole(self, ctx):
        with pytest.raises(SubstitutionPole):
            parse(ctx, "1/(x1-1)").substitute({"x1": parse(ctx, "1")})

    def test_substitute_into_other_context(self, ctx):
        tgt = Context(QQ, variables=["y1"], parameters=["a", "b"], roots=["a"])
        f = parse(ctx, "sqrt(a)*x1+b")
        g = f.substitute({"x1": parse(tgt, "y1^2"), "x2": parse(tgt, "1"), "x3": parse(tgt, "1")}, tgt)
        assert g == parse(tgt, "sqrt(a)*y1^2+b")

    def test_substitute_missing_target_symbol(self, ctx):
        tgt = Context(QQ, variables=["y1"])
        with pytest.raises(UnknownSymbol):
            parse(ctx, "a*x1").substitute({"x1": parse(tgt, "y1")}, tgt)

    def test_binding_non_variable_rejected(self, ctx):
        with pytest.raises(ValueError):
            parse(ctx, "x1").substitute({"a": parse(ctx, "1")})


class TestRootSigns:
    def test_flip_moves_sign_onto_root_terms(self, ctx):
        f = parse(ctx, "sqrt(a)*x1")
        assert f.apply_root_signs({"a": -1}) == parse(ctx, "-sqrt(a)*x1")

    def test_parameter_itself_fixed(self, ctx):
        f = parse(ctx, "a*x1")
        assert f.apply_root_signs({"a": -1}) == f

    def test_double_flip_product_fixed(self):
        c = Context(QQ, parameters=["a", "b"], roots=["a", "b"])
        f = parse(c, "sqrt(a)*sqrt(b)")
        assert f.apply_root_signs({"a": -1, "b": -1}) == f

    def test_flip_is_involution(self, ctx):
        f = parse(ctx, "(sqrt(a)*x1+1)/(x2-sqrt(a))")
        flipped = f.apply_root_signs({"a": -1})
        assert flipped != f
        assert flipped.apply_root_signs({"a": -1}) == f

    def test_unknown_root_rejected(self, ctx):
        with pytest.raises(UnknownRoot):
            parse(ctx, "x1").apply_root_signs({"b": -1})

    def test_sqrt_key_spellings(self, ctx):
        f = parse(ctx, "sqrt(a)")
        assert f.apply_root_signs({"sqrt(a)": -1}) == -f
        assert f.apply_root_signs({"sqrt_a": -1}) == -f


class TestParsing:
    def test_position_in_errors(self, ctx):
        with pytest.raises(ParseError) as err:
            parse(ctx, "x1 + @")
        assert err.value.position == 5

    def test_unexpected_end(self, ctx):
        with pytest.raises(ParseError):
            parse(ctx, "x1 + ")

    def test_juxtaposition_is_rejected(self, ctx):
        with pytest.raises(ParseError):
            parse(ctx, "2 x1")

    def test_unknown_symbol(self, ctx):
        with pytest.raises(UnknownSymbol):
            parse(ctx, "x9")

    def test_sqrt_of_rootless_parameter(self, ctx):
        with pytest.raises(UnknownSymbol):
            parse(ctx, "sqrt(b)")

    def test_unary_minus_binds_looser_than_pow(self, ctx):
        assert parse(ctx, "-x1^2") == -parse(ctx, "x1^2")

    def test_whitespace_insignificant(self, ctx):
        assert parse(ctx, " ( x1 + 1 ) / x2 ") == parse(ctx, "(x1+1)/x2")

    def test_integer_exponent_required(self, ctx):
        with pytest.raises(ParseError):
            parse(ctx, "x1^x2")

    @pytest.mark.parametrize(
        "text",
        [
            "(x1*x2+1)/(x1+x2)",
            "sqrt(a)*(x3-1)/(x3+1)",
            "-x1^2 + 2/3*x2 - 1",
            "(a*x1+sqrt(a))/(b*x3^4-x2)",
            "1/x1/x2",
        ],
    )
    def test_print_parse_roundtrip(self, ctx, text):
        f = parse(ctx, text)
        again = parse(ctx, str(f))
        assert again.num == f.num and again.den == f.den
