"""Field automorphisms acting on rational function fields.

An Automorphism is a pair (root signs, variable bindings): it first flips
the declared roots by the signs, then substitutes each variable by its
binding. Flipping happens to the *argument*, never to the bindings
themselves, so composition reads (sigma tau)(f) = sigma(tau(f)) and the
matrix of a composed quasi-monomial action is the product of matrices.

Quasi-monomial actions come from an integer matrix whose column j is the
exponent vector of the image of variable j, an optional sign per root,
and an optional constant multiplier per variable.

The check_* functions are the verification primitives. They work on raw
(num, den) pairs and decide everything by cross-multiplied zero tests;
nothing on these paths computes a gcd. Each returns a list of failure
records (empty means verified) whose witnesses are nonzero differences.
"""

from __future__ import annotations

from typing import Any, Mapping, Sequence

from .context import Context
from .errors import InconsistentAction, OrderCapExceeded
from .poly import Poly
from .ratfunc import Pair, RatFunc, apply_root_signs_poly, substitute_raw


class Automorphism:
    __slots__ = ("ctx", "signs", "bindings")

    def __init__(
        self,
        ctx: Context,
        bindings: Mapping[str, RatFunc] | Sequence[RatFunc],
        signs: Mapping[str, int] | Sequence[int] | None = None,
    ) -> None:
        if isinstance(bindings, Mapping):
            missing = [v for v in ctx.variables if v not in bindings]
            if missing:
                raise ValueError(f"no binding for variables {missing}")
            seq = [bindings[v] for v in ctx.variables]
        else:
            seq = list(bindings)
            if len(seq) != len(ctx.variables):
                raise ValueError("one binding per variable required")
        for b in seq:
            if b.ctx != ctx:
                raise ValueError("bindings must live in the same context")
            if b.is_zero():
                raise ValueError("a variable cannot map to 0")
        self.ctx = ctx
        self.bindings = tuple(seq)
        if signs is None:
            self.signs = (1,) * len(ctx.rooted)
        elif isinstance(signs, Mapping):
            from .ratfunc import _resolve_sign_keys

            flips = set(_resolve_sign_keys(ctx, signs))
            self.signs = tuple(-1 if i in flips else 1 for i in range(len(ctx.rooted)))
        else:
            if len(signs) != len(ctx.rooted) or any(s not in (1, -1) for s in signs):
                raise ValueError("signs must be one +-1 per declared root")
            self.signs = tuple(signs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, ctx: Context) -> "Automorphism":
        return cls(ctx, [RatFunc.named(ctx, v) for v in ctx.variables])

    @classmethod
    def monomial(
        cls,
        ctx: Context,
        matrix: Sequence[Sequence[int]],
        signs: Mapping[str, int] | Sequence[int] | None = None,
        multipliers: Sequence[RatFunc] | None = None,
    ) -> "Automorphism":
        """Quasi-monomial action; column j is the image exponents of var j."""
        from .matgroup import mat_det

        n = len(ctx.variables)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"matrix must be {n}x{n}")
        if mat_det(tuple(tuple(r) for r in matrix)) not in (1, -1):
            raise ValueError("exponent matrix must lie in GL_n(Z)")
        if multipliers is not None:
            if len(multipliers) != n:
                raise ValueError("one multiplier per variable required")
            for m in multipliers:
                if m.is_zero():
                    raise ValueError("multipliers must be nonzero")
                if any(m.ctx.is_variable(i) for i in m.num.uses() | m.den.uses()):
                    raise ValueError("multipliers must be constants")
        bindings = []
        for j in range(n):
            image = RatFunc.const(ctx, 1) if multipliers is None else multipliers[j]
            for i in range(n):
                e = matrix[i][j]
                if e:
                    image = image * RatFunc.named(ctx, ctx.variables[i]) ** e
            bindings.append(image)
        return cls(ctx, bindings, signs)

    # -- application and composition ----------------------------------------

    def _sign_map(self) -> dict[str, int]:
        return {p: s for p, s in zip(self.ctx.rooted, self.signs)}

    def apply_raw(self, f: Pair) -> Pair:
        num, den = f
        if any(s < 0 for s in self.signs):
            smap = self._sign_map()
            num = apply_root_signs_poly(num, smap)
            den = apply_root_signs_poly(den, smap)
        binds = {v: b for v, b in zip(self.ctx.variables, self.bindings)}
        return substitute_raw((num, den), binds)

    def apply(self, f: RatFunc) -> RatFunc:
        num, den = self.apply_raw((f.num, f.den))
        return RatFunc(num, den)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self.compose(other))(f) = self(other(f))."""
        if self.ctx != other.ctx:
            raise ValueError("mixed contexts")
        new_bindings = [self.apply(b) for b in other.bindings]
        new_signs = tuple(a * b for a, b in zip(self.signs, other.signs))
        return Automorphism(self.ctx, new_bindings, new_signs)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return self.compose(other)

    def is_identity(self) -> bool:
        if any(s < 0 for s in self.signs):
            return False
        return all(
            b == RatFunc.named(self.ctx, v)
            for v, b in zip(self.ctx.variables, self.bindings)
        )

    def _key(self):
        return (
            self.signs,
            tuple(
                (frozenset(b.num.terms.items()), frozenset(b.den.terms.items()))
                for b in self.bindings
            ),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.signs == other.signs
            and all(a == b for a, b in zip(self.bindings, other.bindings))
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self._key()))

    def __repr__(self) -> str:
        parts = [f"{v} -> {b}" for v, b in zip(self.ctx.variables, self.bindings)]
        for p, s in zip(self.ctx.rooted, self.signs):
            if s < 0:
                parts.append(f"sqrt({p}) -> -sqrt({p})")
        return "Automorphism(" + "; ".join(parts) + ")"


def close_action(
    generators: Sequence[Automorphism], cap: int = 10000
) -> list[Automorphism]:
    """Closure under composition, identity first, breadth-first order.

    Raises OrderCapExceeded past the cap and InconsistentAction if the
    closure is not a group (some element without a two-sided inverse).
    """
    if not generators:
        raise ValueError("no generators")
    ctx = generators[0].ctx
    ident = Automorphism.identity(ctx)
    seen: dict[Any, Automorphism] = {ident._key(): ident}
    order: list[Automorphism] = [ident]
    queue = [ident]
    while queue:
        nxt = []
        for a in queue:
            for g in generators:
                b = a.compose(g)
                k = b._key()
                if k not in seen:
                    seen[k] = b
                    order.append(b)
                    nxt.append(b)
                    if len(order) > cap:
                        raise OrderCapExceeded(f"closure exceeded cap of {cap}")
        queue = nxt
    keys = set(seen)
    for a in order:
        if not any((a.compose(b))._key() == ident._key() and (b.compose(a))._key() == ident._key() for b in order):
            raise InconsistentAction("closure contains an element with no inverse")
    return order


# -- verification primitives ----------------------------------------------


def _witness(num: Poly, limit: int = 400) -> str:
    text = str(num)
    return text if len(text) <= limit else text[: limit - 3] + "..."


def _raw_difference(a: Pair, b: Pair) -> Poly:
    return a[0] * b[1] - b[0] * a[1]


def check_invariance(
    actions: Mapping[str, Automorphism],
    exprs: Mapping[str, RatFunc],
) -> list[dict]:
    """Is every expression fixed by every action?"""
    failures = []
    for aname, sigma in actions.items():
        for ename, f in exprs.items():
            image = sigma.apply_raw((f.num, f.den))
            diff = _raw_difference(image, (f.num, f.den))
            if not diff.is_zero():
                failures.append(
                    {
                        "action": aname,
                        "expr": ename,
                        "witness": _witness(diff),
                    }
                )
    return failures


def check_induced_action(
    sigma: Automorphism,
    forward: Mapping[str, RatFunc],
    claimed: Mapping[str, RatFunc],
) -> list[dict]:
    """Does sigma induce the claimed action on the image generators?

    forward: new generator name -> expression over the source context.
    claimed: new generator name -> expression over the *new* context (its
    variables are the new generator names).

    Verified relation, for each name u: sigma(forward[u]) equals
    claimed[u] with every new variable replaced by its forward expression.
    """
    failures = []
    src = sigma.ctx
    fw_pairs = {u: (f.num, f.den) for u, f in forward.items()}
    for u, f in forward.items():
        lhs = sigma.apply_raw((f.num, f.den))
        claim = claimed[u]
        rhs = substitute_raw((claim.num, claim.den), fw_pairs, target=src)
        diff = _raw_difference(lhs, rhs)
        if not diff.is_zero():
            failures.append({"generator": u, "witness": _witness(diff)})
    return failures


def check_inverse_pair(
    forward: Mapping[str, RatFunc],
    backward: Mapping[str, RatFunc],
    source: Context,
    target: Context,
) -> list[dict]:
    """Are the two substitution families mutually inverse?

    forward: target variable name -> expression over `source`.
    backward: source variable name -> expression over `target`.
    Checks backward-then-forward on every source variable and
    forward-then-backward on every target variable.
    """
    failures = []
    fw_pairs = {u: (f.num, f.den) for u, f in forward.items()}
    bw_pairs = {x: (f.num, f.den) for x, f in backward.items()}
    for x, expr in backward.items():
        back = substitute_raw((expr.num, expr.den), fw_pairs, target=source)
        var = Poly.named(source, x)
        diff = _raw_difference(back, (var, Poly.const(source, 1)))
        if not diff.is_zero():
            failures.append({"variable": x, "direction": "backward-after-forward", "witness": _witness(diff)})
    for u, expr in forward.items():
        forth = substitute_raw((expr.num, expr.den), bw_pairs, target=target)
        var = Poly.named(target, u)
        diff = _raw_difference(forth, (var, Poly.const(target, 1)))
        if not diff.is_zero():
            failures.append({"variable": u, "direction": "forward-after-backward", "witness": _witness(diff)})
    return failures


def check_identity(
    lhs: RatFunc,
    rhs: RatFunc,
    bindings: Mapping[str, RatFunc] | None = None,
    target: Context | None = None,
) -> list[dict]:
    """Is lhs equal to rhs, optionally after substituting bindings in both?"""
    a: Pair = (lhs.num, lhs.den)
    b: Pair = (rhs.num, rhs.den)
    if bindings:
        a = substitute_raw(a, bindings, target=target)
        b = substitute_raw(b, bindings, target=target)
    diff = _raw_difference(a, b)
    if diff.is_zero():
        return []
    return [{"witness": _witness(diff)}]
