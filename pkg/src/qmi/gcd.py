"""Polynomial gcd and exact division.

The stored form keeps a rooted parameter and its root as separate symbols
with the rewrite (root)^2 -> parameter. That form is not a UFD presentation
(the rewrite hides common factors from naive term-by-term division), so
both gcd and exact division first pass to the *eliminated form*: the
parameter slot is folded into the root slot via

    exponent(root) := 2 * exponent(parameter) + exponent(root),

realizing the isomorphism k[p, r]/(r^2 - p) ~ k[r]. In eliminated form the
root behaves as a free symbol and ordinary primitive-PRS gcd applies.
Roots of *specialized* parameters (square roots of explicit constants)
cannot be eliminated; they keep exponent 0/1 with the constant rewrite, are
never chosen as PRS main symbols, and make gcd canonical only up to units
of the corresponding quadratic extension. Every consumer that needs exact
equality uses cross-multiplied zero tests, which are unaffected.

Over Q without constant roots the gcd runs in an integer model (clear
denominators once, primitive PRS over Z); other coefficient setups stay
in the base field throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from .context import Context
from .errors import DivisionByZero, NotDivisible
from .poly import Poly

EDict = dict[tuple[int, ...], Any]


class _ElimInfo:
    """Per-context tables for the eliminated form."""

    __slots__ = (
        "ctx", "keep", "nslots", "root_pairs", "const_roots", "eligible",
        "croot_slots",
    )

    def __init__(self, ctx: Context) -> None:
        self.ctx = ctx
        dropped = set()
        root_pairs = []  # (root slot, original parameter index)
        const_roots = []  # (root slot, constant value)
        for r, (pidx, value) in enumerate(ctx.rewrite):
            if pidx is None:
                const_roots.append((r, value))
            else:
                root_pairs.append((r, pidx))
                dropped.add(pidx)
        self.keep = tuple(i for i in range(ctx.nsym) if i not in dropped)
        self.nslots = len(self.keep)
        pos = {orig: new for new, orig in enumerate(self.keep)}
        self.root_pairs = [(pos[r], orig_p) for r, orig_p in root_pairs]
        self.const_roots = [(pos[r], v) for r, v in const_roots]
        self.croot_slots = tuple(slot for slot, _ in self.const_roots)
        ineligible = set(self.croot_slots)
        self.eligible = tuple(i for i in range(self.nslots) if i not in ineligible)


_ELIM_CACHE: dict[Context, _ElimInfo] = {}


def _elim_info(ctx: Context) -> _ElimInfo:
    info = _ELIM_CACHE.get(ctx)
    if info is None:
        info = _ElimInfo(ctx)
        _ELIM_CACHE[ctx] = info
    return info


def _to_elim(E: _ElimInfo, p: Poly) -> EDict:
    out: EDict = {}
    for e, c in p.terms.items():
        new = [e[i] for i in E.keep]
        for slot, orig_p in E.root_pairs:
            new[slot] += 2 * e[orig_p]
        out[tuple(new)] = c
    return out


def _from_elim(E: _ElimInfo, d: EDict) -> Poly:
    ctx = E.ctx
    out: dict[tuple[int, ...], Any] = {}
    for e, c in d.items():
        full = [0] * ctx.nsym
        for new, orig in enumerate(E.keep):
            full[orig] = e[new]
        for slot, orig_p in E.root_pairs:
            u = e[slot]
            full[E.keep[slot]] = u & 1
            full[orig_p] = u >> 1
        out[tuple(full)] = c
    return Poly(ctx, out)


# -- arithmetic on eliminated dicts --------------------------------------


def _ekey(e: tuple[int, ...]):
    return (sum(e), e[::-1])


def _elead(d: EDict) -> tuple[tuple[int, ...], Any]:
    e = max(d, key=_ekey)
    return e, d[e]


def _eadd_into(E: _ElimInfo, out: EDict, key: tuple[int, ...], c: Any) -> None:
    add = E.ctx.field.add
    if key in out:
        s = add(out[key], c)
        if s:
            out[key] = s
        else:
            del out[key]
    elif c:
        out[key] = c


def _emul(E: _ElimInfo, a: EDict, b: EDict) -> EDict:
    f = E.ctx.field
    mulc, powc = f.mul, f.pow
    const_roots = E.const_roots
    out: EDict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            c = mulc(c1, c2)
            merged = [x + y for x, y in zip(e1, e2)]
            for slot, value in const_roots:
                if merged[slot] > 1:
                    k, merged[slot] = divmod(merged[slot], 2)
                    c = mulc(c, powc(value, k))
            _eadd_into(E, out, tuple(merged), c)
    return out


def _escale(E: _ElimInfo, a: EDict, c: Any) -> EDict:
    mul = E.ctx.field.mul
    return {e: mul(v, c) for e, v in a.items()}


def _esub(E: _ElimInfo, a: EDict, b: EDict) -> EDict:
    neg = E.ctx.field.neg
    out = dict(a)
    for e, c in b.items():
        _eadd_into(E, out, e, neg(c))
    return out


def _edeg_in(d: EDict, m: int) -> int:
    if not d:
        return -1
    return max(e[m] for e in d)


def _ecoeff_of(d: EDict, m: int, k: int) -> EDict:
    """Coefficient of m^k, with slot m zeroed (same width)."""
    out: EDict = {}
    for e, c in d.items():
        if e[m] == k:
            z = list(e)
            z[m] = 0
            out[tuple(z)] = c
    return out


def _eshift(d: EDict, m: int, k: int) -> EDict:
    out: EDict = {}
    for e, c in d.items():
        z = list(e)
        z[m] += k
        out[tuple(z)] = c
    return out


def _kinv(E: _ElimInfo, d: EDict) -> EDict:
    """Invert an element supported on the constant-root slots only.

    Works by conjugation: for d = u + v*r with r^2 a known constant,
    d^-1 = (u - v*r) / (u^2 - r^2 v^2), recursing on the remaining
    root slots.  A vanishing norm means the extension has zero
    divisors, which no valid context should produce.
    """
    if not d:
        raise DivisionByZero("inverting zero in a root extension")
    f = E.ctx.field
    for slot, value in E.const_roots:
        if not any(e[slot] for e in d):
            continue
        u = _ecoeff_of(d, slot, 0)
        v = _ecoeff_of(d, slot, 1)
        norm = _esub(E, _emul(E, u, u), _escale(E, _emul(E, v, v), value))
        ninv = _kinv(E, norm)
        conj = dict(u)
        for e, c in v.items():
            z = list(e)
            z[slot] = 1
            _eadd_into(E, conj, tuple(z), f.neg(c))
        return _emul(E, conj, ninv)
    (e, c), = d.items()
    return {e: f.inv(c)}


def _mono_groups(E: _ElimInfo, d: EDict) -> dict[tuple[int, ...], EDict]:
    """Split terms by exponents outside the constant-root slots.

    Maps each bare monomial to its coefficient in the root extension,
    the latter kept as a same-width dict supported on root slots.
    """
    groups: dict[tuple[int, ...], EDict] = {}
    for e, c in d.items():
        z = list(e)
        root = [0] * len(e)
        for s in E.croot_slots:
            root[s] = z[s]
            z[s] = 0
        groups.setdefault(tuple(z), {})[tuple(root)] = c
    return groups


def _exact_div_rooted(E: _ElimInfo, num: EDict, den: EDict) -> EDict:
    """Division when the divisor involves roots of constants.

    Those symbols square to constants, so they are coefficient-field
    elements rather than true monomial slots; the leading coefficient
    is a whole element of the quadratic extension and has to be
    inverted as such, or exact quotients get missed.
    """
    dgroups = _mono_groups(E, den)
    lm = max(dgroups, key=_ekey)
    linv = _kinv(E, dgroups[lm])
    quot: EDict = {}
    rem = dict(num)
    while rem:
        rgroups = _mono_groups(E, rem)
        rm = max(rgroups, key=_ekey)
        qe = [a - b for a, b in zip(rm, lm)]
        if any(x < 0 for x in qe):
            raise NotDivisible("leading monomial not divisible")
        step = _emul(E, rgroups[rm], linv)
        step = {tuple(a + b for a, b in zip(qe, e)): c for e, c in step.items()}
        for key, c in step.items():
            _eadd_into(E, quot, key, c)
        rem = _esub(E, rem, _emul(E, step, den))
    return quot


def _exact_div_elim(E: _ElimInfo, num: EDict, den: EDict) -> EDict:
    """Exact long division in eliminated form; raises NotDivisible."""
    if not den:
        raise DivisionByZero("division by the zero polynomial")
    if E.croot_slots and any(e[s] for e in den for s in E.croot_slots):
        return _exact_div_rooted(E, num, den)
    f = E.ctx.field
    le, lc = _elead(den)
    lc_inv = f.inv(lc)
    quot: EDict = {}
    rem = dict(num)
    while rem:
        re, rc = _elead(rem)
        qe = [a - b for a, b in zip(re, le)]
        if any(x < 0 for x in qe):
            raise NotDivisible("leading monomial not divisible")
        qc = f.mul(rc, lc_inv)
        qkey = tuple(qe)
        _eadd_into(E, quot, qkey, qc)
        rem = _esub(E, rem, _emul(E, {qkey: qc}, den))
    return quot


def _is_unit(E: _ElimInfo, d: EDict) -> bool:
    return len(d) == 1 and not any(next(iter(d)))


def _eone(E: _ElimInfo) -> EDict:
    return {(0,) * E.nslots: E.ctx.field.one}


def _prim_monic(E: _ElimInfo, d: EDict, m: int) -> EDict:
    """Divide out the content w.r.t. m, then scale to leading coefficient 1."""
    coeffs = [_ecoeff_of(d, m, k) for k in range(_edeg_in(d, m) + 1)]
    cont = _egcd_list(E, [c for c in coeffs if c])
    out = d if _is_unit(E, cont) else _exact_div_elim(E, d, cont)
    _, lc = _elead(out)
    if lc != E.ctx.field.one:
        out = _escale(E, out, E.ctx.field.inv(lc))
    return out


def _pseudo_rem(E: _ElimInfo, f: EDict, g: EDict, m: int) -> EDict:
    dg = _edeg_in(g, m)
    lcg = _ecoeff_of(g, m, dg)
    r = f
    while r:
        dr = _edeg_in(r, m)
        if dr < dg:
            break
        lcr = _ecoeff_of(r, m, dr)
        r = _esub(E, _emul(E, lcg, r), _emul(E, lcr, _eshift(g, m, dr - dg)))
    return r


# -- integer-model PRS ------------------------------------------------------
#
# Over Q with no constant-root slots the whole computation embeds in Z:
# clear denominators once, run a primitive PRS on integer coefficients,
# and let the caller rescale.  This avoids per-operation Fraction
# normalization, which otherwise dominates large reductions.  Contents
# over Z include the integer gcd of the coefficients, so the no-slots
# base case returns that gcd rather than 1.


def _imul(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    get = out.get
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = get(key, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _isub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _icontent(d: dict) -> int:
    g = 0
    for c in d.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _idiv_exact(d: dict, den: dict) -> dict:
    """Long division over Z, assuming exactness (used for contents)."""
    le = max(den, key=_ekey)
    lc = den[le]
    quot: dict[tuple[int, ...], int] = {}
    rem = dict(d)
    while rem:
        re = max(rem, key=_ekey)
        rc = rem[re]
        qe = tuple(x - y for x, y in zip(re, le))
        if any(x < 0 for x in qe) or rc % lc:
            raise NotDivisible("integer content division left a remainder")
        qc = rc // lc
        quot[qe] = qc
        rem = _isub(rem, _imul({qe: qc}, den))
    return quot


def _iprim(E: _ElimInfo, d: dict, m: int) -> dict:
    """Primitive part w.r.t. m over Z, sign-normalized."""
    coeffs = [c for k in range(_edeg_in(d, m) + 1) if (c := _ecoeff_of(d, m, k))]
    cont = _igcd_list(E, coeffs)
    out = d if cont == {(0,) * E.nslots: 1} else _idiv_exact(d, cont)
    if out[max(out, key=_ekey)] < 0:
        out = {e: -c for e, c in out.items()}
    return out


def _ipseudo_rem(E: _ElimInfo, f: dict, g: dict, m: int) -> dict:
    dg = _edeg_in(g, m)
    lcg = _ecoeff_of(g, m, dg)
    r = f
    while r:
        dr = _edeg_in(r, m)
        if dr < dg:
            break
        lcr = _ecoeff_of(r, m, dr)
        r = _isub(_imul(lcg, r), _imul(lcr, _eshift(g, m, dr - dg)))
    return r


def _igcd(E: _ElimInfo, a: dict, b: dict) -> dict:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    used: set[int] = set()
    for d in (a, b):
        for e in d:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
    slots = [m for m in E.eligible if m in used]
    if not slots:
        return {(0,) * E.nslots: math.gcd(_icontent(a), _icontent(b))}
    m = min(slots, key=lambda s: (max(_edeg_in(a, s), _edeg_in(b, s)), s))

    ca = _igcd_list(E, [c for k in range(_edeg_in(a, m) + 1) if (c := _ecoeff_of(a, m, k))])
    cb = _igcd_list(E, [c for k in range(_edeg_in(b, m) + 1) if (c := _ecoeff_of(b, m, k))])
    one = {(0,) * E.nslots: 1}
    pa = a if ca == one else _idiv_exact(a, ca)
    pb = b if cb == one else _idiv_exact(b, cb)
    cont = _igcd(E, ca, cb)

    if _edeg_in(pa, m) < _edeg_in(pb, m):
        pa, pb = pb, pa
    f, g = pa, pb
    while True:
        r = _ipseudo_rem(E, f, g, m)
        if not r:
            main = _iprim(E, g, m)
            break
        if _edeg_in(r, m) == 0:
            main = one
            break
        f, g = g, _iprim(E, r, m)
    if main == one:
        return cont
    if cont == one:
        return main
    return _imul(cont, main)


def _igcd_list(E: _ElimInfo, items: list[dict]) -> dict:
    one = {(0,) * E.nslots: 1}
    if not items:
        return one
    acc = items[0]
    for d in items[1:]:
        if acc == one:
            return acc
        acc = _igcd(E, acc, d)
    return acc


def _int_lift_elim(d: EDict) -> dict:
    """Clear Fraction denominators; the scale is irrelevant for a gcd."""
    L = 1
    for c in d.values():
        q = c.denominator
        if q != 1:
            L = L * q // math.gcd(L, q)
    return {e: c.numerator * (L // c.denominator) for e, c in d.items()}


# -- field-model PRS ---------------------------------------------------------


def _egcd(E: _ElimInfo, a: EDict, b: EDict) -> EDict:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    if E.ctx.field.char == 0 and not E.croot_slots:
        g = _igcd(E, _int_lift_elim(a), _int_lift_elim(b))
        return {e: Fraction(c) for e, c in g.items()}
    used: set[int] = set()
    for d in (a, b):
        for e in d:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
    slots = [m for m in E.eligible if m in used]
    if not slots:
        return _eone(E)
    m = min(slots, key=lambda s: (max(_edeg_in(a, s), _edeg_in(b, s)), s))

    ca = _egcd_list(E, [c for k in range(_edeg_in(a, m) + 1) if (c := _ecoeff_of(a, m, k))])
    cb = _egcd_list(E, [c for k in range(_edeg_in(b, m) + 1) if (c := _ecoeff_of(b, m, k))])
    pa = a if _is_unit(E, ca) else _exact_div_elim(E, a, ca)
    pb = b if _is_unit(E, cb) else _exact_div_elim(E, b, cb)
    cont = _egcd(E, ca, cb)

    if _edeg_in(pa, m) < _edeg_in(pb, m):
        pa, pb = pb, pa
    f, g = pa, pb
    while True:
        r = _pseudo_rem(E, f, g, m)
        if not r:
            main = _prim_monic(E, g, m)
            break
        if _edeg_in(r, m) == 0:
            main = _eone(E)
            break
        f, g = g, _prim_monic(E, r, m)
    if _is_unit(E, main):
        return cont
    return _emul(E, cont, main)


def _egcd_list(E: _ElimInfo, items: list[EDict]) -> EDict:
    if not items:
        return _eone(E)
    acc = items[0]
    for d in items[1:]:
        if _is_unit(E, acc):
            return acc
        acc = _egcd(E, acc, d)
    return acc


# -- public entry points --------------------------------------------------


def monic(p: Poly) -> Poly:
    """Scale so the leading coefficient (graded order) is 1."""
    if p.is_zero():
        return p
    _, lc = p.leading()
    if lc == p.ctx.field.one:
        return p
    return p.scale(p.ctx.field.inv(lc))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; see the module docstring for the constant-root caveat."""
    if a.ctx != b.ctx:
        raise ValueError("mixed contexts")
    if a.is_zero():
        return monic(b)
    if b.is_zero():
        return monic(a)
    E = _elim_info(a.ctx)
    g = _egcd(E, _to_elim(E, a), _to_elim(E, b))
    return monic(_from_elim(E, g))


def exact_div(num: Poly, den: Poly) -> Poly:
    """Exact division; raises NotDivisible if a remainder is left."""
    if num.ctx != den.ctx:
        raise ValueError("mixed contexts")
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if num.is_zero():
        return num
    E = _elim_info(num.ctx)
    q = _exact_div_elim(E, _to_elim(E, num), _to_elim(E, den))
    return _from_elim(E, q)
