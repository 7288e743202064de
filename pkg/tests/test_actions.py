"""Automorphism semantics and the generic verification checks."""

from __future__ import annotations

import pytest

from qmi import QQ, Context, RatFunc, parse
from qmi.actions import (
    Automorphism,
    check_identity,
    check_induced_action,
    check_invariance,
    check_inverse_pair,
    close_action,
)
from qmi.matgroup import close_group, mat, mat_mul

CTX3 = Context(QQ, variables=["x1", "x2", "x3"])

CAA = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]
CB = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
NEG_BETA3 = [[-1, 0, 1], [0, -1, 1], [0, 0, 1]]


class TestMonomial:
    def test_columns_are_image_exponents(self):
        sigma = Automorphism.monomial(CTX3, CAA)
        assert sigma.bindings[0] == parse(CTX3, "x2")
        assert sigma.bindings[1] == parse(CTX3, "1/x1")
        assert sigma.bindings[2] == parse(CTX3, "x3")

    def test_order_four_twist(self):
        sigma = Automorphism.monomial(CTX3, CAA)
        t = parse(CTX3, "(x1*x2-1)/(x1-x2)")
        assert sigma.apply(t) == -(t**-1)

    def test_compose_matches_matrix_product(self):
        a = Automorphism.monomial(CTX3, CAA)
        b = Automorphism.monomial(CTX3, CB)
        ab = Automorphism.monomial(CTX3, mat_mul(mat(CAA), mat(CB)))
        assert a.compose(b) == ab

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            Automorphism.monomial(CTX3, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_multiplier_must_be_constant(self):
        ctx = Context(QQ, variables=["x1"], parameters=["c"])
        Automorphism.monomial(ctx, [[1]], multipliers=[parse(ctx, "c")])
        with pytest.raises(ValueError):
            Automorphism.monomial(ctx, [[1]], multipliers=[parse(ctx, "x1")])
        with pytest.raises(ValueError):
            Automorphism.monomial(ctx, [[1]], multipliers=[parse(ctx, "0")])


class TestSignsFirst:
    CTX = Context(QQ, variables=["x1"], parameters=["a"], roots=["a"])

    def sigma(self):
        return Automorphism(
            self.CTX,
            {"x1": parse(self.CTX, "sqrt(a)*x1")},
            {"a": -1},
        )

    def test_signs_apply_to_argument_not_bindings(self):
        s = self.sigma()
        assert s.apply(parse(self.CTX, "sqrt(a)")) == parse(self.CTX, "-sqrt(a)")
        assert s.apply(parse(self.CTX, "x1")) == parse(self.CTX, "sqrt(a)*x1")
        # flip happens before substitution: sqrt(a)*x1 -> -sqrt(a)*(sqrt(a)*x1)
        assert s.apply(parse(self.CTX, "sqrt(a)*x1")) == parse(self.CTX, "-a*x1")

    def test_square_has_trivial_signs(self):
        s = self.sigma()
        sq = s.compose(s)
        assert sq.signs == (1,)
        assert sq.apply(parse(self.CTX, "x1")) == parse(self.CTX, "-a*x1")


class TestClosure:
    def test_action_closure_matches_matrix_closure(self):
        gens_m = [mat(CB), mat(NEG_BETA3)]
        expected = close_group(gens_m).order
        auts = [Automorphism.monomial(CTX3, g) for g in gens_m]
        got = close_action(auts)
        assert len(got) == expected
        assert got[0].is_identity()

    def test_identity_alone(self):
        assert len(close_action([Automorphism.identity(CTX3)])) == 1


class TestChecks:
    def test_invariance_pass_and_fail(self):
        sigma = Automorphism.monomial(CTX3, CAA)
        t = parse(CTX3, "(x1*x2-1)/(x1-x2)")
        fixed = t * sigma.apply(t)  # t maps to -1/t, so the product is fixed
        assert check_invariance({"s": sigma}, {"c": fixed}) == []
        failures = check_invariance({"s": sigma}, {"t": t})
        assert len(failures) == 1 and failures[0]["witness"]

    def test_induced_action(self):
        ctx = Context(QQ, variables=["x1"])
        new = Context(QQ, variables=["u"])
        sigma = Automorphism.monomial(ctx, [[-1]])  # x -> 1/x
        forward = {"u": parse(ctx, "x1+1/x1")}
        claimed_ok = {"u": parse(new, "u")}
        claimed_bad = {"u": parse(new, "u+1")}
        assert check_induced_action(sigma, forward, claimed_ok) == []
        assert check_induced_action(sigma, forward, claimed_bad)

    def test_inverse_pair(self):
        src = Context(QQ, variables=["x1"])
        tgt = Context(QQ, variables=["u"])
        forward = {"u": parse(src, "(1+x1)/(1-x1)")}
        backward = {"x1": parse(tgt, "(u-1)/(u+1)")}
        assert check_inverse_pair(forward, backward, src, tgt) == []
        broken = {"x1": parse(tgt, "(u+1)/(u-1)")}
        fails = check_inverse_pair(forward, broken, src, tgt)
        assert fails and all(f["witness"] for f in fails)

    def test_identity_check_with_bindings(self):
        ctx = Context(QQ, variables=["x1", "x2"])
        lhs = parse(ctx, "(x1+x2)^2")
        rhs = parse(ctx, "x1^2+2*x1*x2+x2^2")
        assert check_identity(lhs, rhs) == []
        binds = {"x2": parse(ctx, "1/x1")}
        lhs2 = parse(ctx, "(x1+x2)^2-x1^2-x2^2")
        rhs2 = parse(ctx, "2")
        assert check_identity(lhs2, rhs2, bindings=binds) == []
        assert check_identity(lhs2, rhs2) != []
