"""Randomized cross-checks of the arithmetic core against sympy.

sympy is used strictly as an independent oracle; the package itself never
imports it. Random inputs are generated from a fixed seed so failures
reproduce. Contexts here are root-free (sympy has no native analogue of
the formal-root rewrite; rooted behavior is covered by identity-based
tests elsewhere).
"""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from qmi import QQ, Context, Poly, exact_div, poly_gcd

NAMES = ["a", "x1", "x2", "x3"]
SYMS = sympy.symbols("a x1 x2 x3")


def make_ctx() -> Context:
    return Context(QQ, variables=["x1", "x2", "x3"], parameters=["a"])


def random_poly(ctx: Context, rng: random.Random, nterms: int = 5, maxdeg: int = 3) -> Poly:
    terms = {}
    for _ in range(rng.randint(0, nterms)):
        exps = tuple(rng.randint(0, maxdeg) for _ in range(ctx.nsym))
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if coeff:
            terms[exps] = coeff
    p = Poly(ctx, {})
    for exps, coeff in terms.items():
        p = p + Poly(ctx, {exps: coeff})
    return p


def to_sympy(p: Poly):
    total = sympy.Integer(0)
    for exps, coeff in p.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for s, k in zip(SYMS, exps):
            term *= s**k
        total += term
    return sympy.expand(total)


def from_sympy(ctx: Context, expr) -> Poly:
    sp = sympy.Poly(expr, *SYMS)
    out = Poly(ctx, {})
    for exps, coeff in sp.terms():
        q = sympy.Rational(coeff)
        out = out + Poly(ctx, {tuple(exps): Fraction(int(q.p), int(q.q))})
    return out


def test_ring_ops_match_sympy():
    ctx = make_ctx()
    rng = random.Random(20240817)
    for _ in range(60):
        p = random_poly(ctx, rng)
        q = random_poly(ctx, rng)
        assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))
        assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
        assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))
    p = random_poly(ctx, rng)
    assert to_sympy(p**3) == sympy.expand(to_sympy(p) ** 3)


def test_gcd_matches_sympy_up_to_scalar():
    ctx = make_ctx()
    rng = random.Random(77)
    hits = 0
    for _ in range(40):
        # Build inputs with a planted common factor so gcds are nontrivial.
        def nonzero(min_deg=0):
            while True:
                cand = random_poly(ctx, rng, nterms=3, maxdeg=2)
                if not cand.is_zero() and cand.degree() >= min_deg:
                    return cand

        f = nonzero(min_deg=1)
        p = nonzero() * f
        q = nonzero() * f
        mine = poly_gcd(p, q)
        theirs = sympy.gcd(to_sympy(p), to_sympy(q))
        theirs_poly = from_sympy(ctx, theirs)
        # Both results are defined up to a rational scalar; compare monic forms.
        _, lc = theirs_poly.leading()
        theirs_monic = theirs_poly.scale(QQ.inv(lc))
        assert mine == theirs_monic
        if not mine.is_one():
            hits += 1
    assert hits > 20  # the planted factors must actually be exercised


def test_exact_div_matches_sympy_quotient():
    ctx = make_ctx()
    rng = random.Random(99)
    for _ in range(30):
        f = random_poly(ctx, rng, nterms=3, maxdeg=2)
        g = random_poly(ctx, rng, nterms=3, maxdeg=2)
        if f.is_zero() or g.is_zero():
            continue
        prod = f * g
        assert exact_div(prod, f) == g
        quo = sympy.div(to_sympy(prod), to_sympy(f), *SYMS)[0]
        assert from_sympy(ctx, sympy.expand(quo)) == g
