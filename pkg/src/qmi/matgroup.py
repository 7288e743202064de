"""Finite subgroups of GL_n(Z): closure, structure, and recognition.

Matrices are immutable tuples of tuples of ints (Fractions appear only
transiently, e.g. in conjugation by a non-unimodular matrix). Group
closure is breadth-first, so every element carries a shortest word in the
generators. Element ordering inside a group is lexicographic on the
flattened entries, which keeps every downstream listing deterministic.

Isomorphism-type recognition is deliberately unsophisticated: each
candidate label owns a small built-in model group, and a group is
recognized by comparing a structural fingerprint (order, element-order
multiset, abelianness, center and derived-subgroup sizes). The model
table is validated once per process: all fingerprints must be pairwise
distinct, otherwise recognition would be ambiguous and we refuse to run.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd as int_gcd
from typing import Any, Iterable, Sequence

from .errors import NotFiniteOrder, OrderCapExceeded, UnknownFingerprint

Matrix = tuple[tuple[Any, ...], ...]


def mat(rows: Iterable[Iterable[Any]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    k = len(b)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(row[t] * col[t] for t in range(k)) for col in bt) for row in a
    )


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_det(a: Matrix) -> Fraction:
    n = len(a)
    rows = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                for c in range(col, n):
                    rows[r][c] -= f * rows[col][c]
    return det


def mat_inv(a: Matrix) -> Matrix:
    """Inverse with Fraction entries; raises ValueError if singular."""
    n = len(a)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[n:]) for row in rows)


def intify(a: Matrix) -> Matrix | None:
    """Matrix with int entries, or None if any entry is non-integral."""
    out = []
    for row in a:
        new = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    return None
                x = int(x)
            new.append(x)
        out.append(tuple(new))
    return tuple(out)


def element_order(m: Matrix, guard: int = 12) -> int:
    """Multiplicative order; NotFiniteOrder if it exceeds the guard.

    Finite-order integer matrices in dimension 3 have order in
    {1,2,3,4,6}, so the default guard leaves slack without looping long
    on an infinite-order generator.
    """
    e = identity(len(m))
    acc = m
    for k in range(1, guard + 1):
        if acc == e:
            return k
        acc = mat_mul(acc, m)
    raise NotFiniteOrder(f"no finite order within guard {guard}")


class MatrixGroup:
    """A finite matrix group produced by close_group."""

    def __init__(
        self,
        generators: Sequence[Matrix],
        gen_names: Sequence[str],
        elements: Sequence[Matrix],
        words: dict[Matrix, tuple[int, ...]],
    ) -> None:
        self.generators = tuple(generators)
        self.gen_names = tuple(gen_names)
        self.elements = tuple(sorted(elements))
        self.order = len(self.elements)
        self.words = words
        self.dim = len(self.elements[0])
        self._index = {m: i for i, m in enumerate(self.elements)}
        self._inv: dict[Matrix, Matrix] | None = None
        self._classes: tuple[tuple[Matrix, ...], ...] | None = None

    def __contains__(self, m: Matrix) -> bool:
        return m in self._index

    def __len__(self) -> int:
        return self.order

    def word_for(self, m: Matrix) -> str:
        """Shortest generator word reaching m; "1" for the identity."""
        letters = self.words[m]
        if not letters:
            return "1"
        parts: list[str] = []
        run_letter, run_len = letters[0], 1
        for x in letters[1:]:
            if x == run_letter:
                run_len += 1
            else:
                parts.append(self._fmt(run_letter, run_len))
                run_letter, run_len = x, 1
        parts.append(self._fmt(run_letter, run_len))
        return "*".join(parts)

    def _fmt(self, letter: int, k: int) -> str:
        name = self.gen_names[letter]
        return name if k == 1 else f"{name}^{k}"

    # -- structure -------------------------------------------------------

    def inverse(self, m: Matrix) -> Matrix:
        if self._inv is None:
            self._inv = {}
            for g in self.elements:
                h = intify(mat_inv(g))
                assert h is not None and h in self._index
                self._inv[g] = h
        return self._inv[m]

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            mat_mul(a, b) == mat_mul(b, a) for a, b in combinations(gens, 2)
        )

    def center(self) -> tuple[Matrix, ...]:
        return tuple(
            z
            for z in self.elements
            if all(mat_mul(z, g) == mat_mul(g, z) for g in self.generators)
        )

    def derived_order(self) -> int:
        comms = []
        for a in self.elements:
            for b in self.elements:
                c = mat_mul(mat_mul(a, b), mat_mul(self.inverse(a), self.inverse(b)))
                comms.append(c)
        sub = close_group(sorted(set(comms)), cap=self.order)
        return sub.order

    def element_orders(self) -> dict[int, int]:
        """Map order -> how many elements have it."""
        out: dict[int, int] = {}
        for m in self.elements:
            k = element_order(m, guard=self.order)
            out[k] = out.get(k, 0) + 1
        return dict(sorted(out.items()))

    def conjugacy_classes(self) -> tuple[tuple[Matrix, ...], ...]:
        if self._classes is None:
            seen: set[Matrix] = set()
            classes: list[tuple[Matrix, ...]] = []
            for m in self.elements:
                if m in seen:
                    continue
                orbit = {
                    mat_mul(mat_mul(g, m), self.inverse(g)) for g in self.elements
                }
                seen |= orbit
                classes.append(tuple(sorted(orbit)))
            self._classes = tuple(classes)
        return self._classes

    def cayley(self) -> list[list[int]]:
        idx = self._index
        return [
            [idx[mat_mul(a, b)] for b in self.elements] for a in self.elements
        ]

    def fingerprint(self) -> tuple:
        return (
            self.order,
            tuple(self.element_orders().items()),
            self.is_abelian(),
            len(self.center()),
            self.derived_order(),
        )

    def normal_subgroups(self) -> list[tuple[Matrix, ...]]:
        """All normal subgroups (trivial and full group included).

        A normal subgroup is a union of conjugacy classes containing the
        identity whose size divides the group order and which is closed
        under multiplication; with at most ~2^16 candidate unions this is
        a plain filter.
        """
        classes = self.conjugacy_classes()
        e = identity(self.dim)
        rest = [c for c in classes if e not in c]
        if len(rest) > 16:
            raise OrderCapExceeded(
                f"too many conjugacy classes ({len(classes)}) for subset enumeration"
            )
        idx = self._index
        table = self.cayley()
        found: list[tuple[Matrix, ...]] = []
        for r in range(len(rest) + 1):
            for combo in combinations(rest, r):
                size = 1 + sum(len(c) for c in combo)
                if self.order % size:
                    continue
                members = {idx[e]}
                for c in combo:
                    members.update(idx[m] for m in c)
                if all(table[a][b] in members for a in members for b in members):
                    found.append(tuple(sorted(self.elements[i] for i in members)))
        found.sort(key=lambda s: (len(s), s))
        return found


def close_group(
    generators: Sequence[Matrix],
    gen_names: Sequence[str] | None = None,
    cap: int = 10000,
) -> MatrixGroup:
    """Breadth-first closure of integer generators under multiplication.

    Raises OrderCapExceeded past `cap` elements and NotFiniteOrder if a
    generator alone fails to have finite order.
    """
    gens = []
    for g in generators:
        gi = intify(mat(g))
        if gi is None:
            raise ValueError("generators must have integer entries")
        gens.append(gi)
    if not gens:
        raise ValueError("no generators")
    n = len(gens[0])
    if any(len(g) != n or any(len(row) != n for row in g) for g in gens):
        raise ValueError("generators must be square matrices of equal size")
    for g in gens:
        if mat_det(g) not in (1, -1):
            raise ValueError("generator is not invertible over the integers")
        element_order(g)
    names = list(gen_names) if gen_names is not None else [f"g{i}" for i in range(len(gens))]
    if len(names) != len(gens):
        raise ValueError("one name per generator required")

    e = identity(n)
    words: dict[Matrix, tuple[int, ...]] = {e: ()}
    queue = [e]
    while queue:
        nxt: list[Matrix] = []
        for m in queue:
            w = words[m]
            for i, g in enumerate(gens):
                prod_m = mat_mul(m, g)
                if prod_m not in words:
                    words[prod_m] = w + (i,)
                    nxt.append(prod_m)
                    if len(words) > cap:
                        raise OrderCapExceeded(
                            f"closure exceeded cap of {cap} elements"
                        )
        queue = nxt
    return MatrixGroup(gens, names, list(words), words)


# -- rational reducibility -------------------------------------------------


def _kernel_basis(rows: list[list[Fraction]], width: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel of the stacked row matrix."""
    m = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * width
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(tuple(v))
    return basis


def _primitive_int_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    from math import lcm

    denoms = [x.denominator for x in v]
    scale = 1
    for d in denoms:
        scale = lcm(scale, d)
    ints = [int(x * scale) for x in v]
    g = 0
    for x in ints:
        g = int_gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def q_reducible(generators: Sequence[Matrix]) -> tuple[bool, dict | None]:
    """Decide reducibility of the rational representation.

    Searches a common eigenvector with eigenvalues +-1 per generator (a
    1-dimensional invariant subspace; rational eigenvalues of
    finite-order matrices are +-1), then the same for the transposes,
    whose eigenvectors are normals of 2-dimensional invariant subspaces.
    Returns (True, witness) or (False, None).
    """
    gens = [mat(g) for g in generators]
    n = len(gens[0])

    def search(ms: list[Matrix]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        for signs in product((1, -1), repeat=len(ms)):
            rows: list[list[Fraction]] = []
            for s, g in zip(signs, ms):
                for i in range(n):
                    rows.append(
                        [Fraction(g[i][j] - (s if i == j else 0)) for j in range(n)]
                    )
            basis = _kernel_basis(rows, n)
            if basis:
                return signs, _primitive_int_vector(basis[0])
        return None

    hit = search(gens)
    if hit is not None:
        signs, vec = hit
        return True, {"dim": 1, "vector": vec, "signs": signs}
    hit = search([tuple(zip(*g)) for g in gens])
    if hit is not None:
        signs, vec = hit
        return True, {"dim": 2, "normal": vec, "signs": signs}
    return False, None


def verify_conjugation(
    left: MatrixGroup, right: MatrixGroup, p: Matrix
) -> bool:
    """Does P^-1 * left * P equal right as a set?

    A non-integral conjugate makes the answer False (not an error): the
    conjugating matrix simply fails to carry one lattice group onto the
    other.
    """
    p = mat(p)
    try:
        pinv = mat_inv(p)
    except ValueError:
        return False
    out = set()
    for g in left.elements:
        h = intify(mat_mul(mat_mul(pinv, g), p))
        if h is None:
            return False
        out.add(h)
    return out == set(right.elements)


# -- isomorphism-type recognition ------------------------------------------

_C1 = [identity(1)]
_C2 = [mat([[-1]])]
_C3 = [mat([[0, -1], [1, -1]])]
_C4 = [mat([[0, -1], [1, 0]])]
_C6 = [mat([[1, -1], [1, 0]])]
_S3 = [mat([[0, -1], [1, -1]]), mat([[0, 1], [1, 0]])]
_D4 = [mat([[0, -1], [1, 0]]), mat([[1, 0], [0, -1]])]
_A4 = [
    mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
    mat([[1, 0, 0], [0, -1, 0], [0, 0, -1]]),
]
_S4 = [
    mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
    mat([[0, -1, 0], [1, 0, 0], [0, 0, 1]]),
]


def _direct(*factor_gens: list[Matrix]) -> list[Matrix]:
    """Generators of a direct product as block-diagonal extensions."""
    dims = [len(f[0]) for f in factor_gens]
    total = sum(dims)
    out: list[Matrix] = []
    offset = 0
    for f, d in zip(factor_gens, dims):
        for g in f:
            rows = [[1 if i == j else 0 for j in range(total)] for i in range(total)]
            for i in range(d):
                for j in range(d):
                    rows[offset + i][offset + j] = g[i][j]
            out.append(mat(rows))
        offset += d
    return out


_MODEL_GENERATORS: dict[str, list[Matrix]] = {
    "C1": _C1,
    "C2": _C2,
    "C3": _C3,
    "C4": _C4,
    "C6": _C6,
    "C2xC2": _direct(_C2, _C2),
    "C4xC2": _direct(_C4, _C2),
    "C6xC2": _direct(_C6, _C2),
    "C2xC2xC2": _direct(_C2, _C2, _C2),
    "S3": _S3,
    "D4": _D4,
    "D6": _direct(_S3, _C2),
    "A4": _A4,
    "S4": _S4,
    "D4xC2": _direct(_D4, _C2),
    "D6xC2": _direct(_S3, _C2, _C2),
    "A4xC2": _direct(_A4, _C2),
    "S4xC2": _direct(_S4, _C2),
}

_FINGERPRINTS: dict[tuple, str] | None = None


def _model_fingerprints() -> dict[tuple, str]:
    global _FINGERPRINTS
    if _FINGERPRINTS is None:
        table: dict[tuple, str] = {}
        for label, gens in _MODEL_GENERATORS.items():
            fp = close_group(gens, cap=200).fingerprint()
            if fp in table and table[fp] != label:
                raise AssertionError(
                    f"model fingerprints collide: {table[fp]} vs {label}"
                )
            table[fp] = label
        _FINGERPRINTS = table
    return _FINGERPRINTS


def identify_iso_type(group: MatrixGroup) -> str:
    """Label of the built-in model with the same fingerprint."""
    fp = group.fingerprint()
    table = _model_fingerprints()
    if fp not in table:
        raise UnknownFingerprint(f"no built-in model matches fingerprint {fp}")
    return table[fp]
