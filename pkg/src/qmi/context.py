"""Symbol contexts.

A Context fixes, once, everything a polynomial needs to interpret its
exponent tuples: the coefficient field, the declared variables and
parameters, which parameters carry a formal square root, and which
parameters are specialized to explicit constants.

Symbol order (used by the monomial order and the printer):

    roots < parameters < variables,

each class in declaration order, later-declared symbols being larger.
Monomials are compared by total degree first, ties broken reading
exponents from the largest symbol down.

A specialized parameter is not a symbol: occurrences of its name parse to
the constant. Its declared root, however, stays a formal symbol whose
square rewrites to the constant, so e.g. a root of 5 squares to 5 while
remaining exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .errors import UnknownSymbol
from .field import BaseField

_NAME_RE = re.compile(r"[a-z][a-z0-9]*\Z")


class Context:
    __slots__ = (
        "field",
        "variables",
        "parameters",
        "rooted",
        "specializations",
        "symbols",
        "nsym",
        "index",
        "root_index",
        "constants",
        "rewrite",
        "var_start",
        "_key",
    )

    def __init__(
        self,
        field: BaseField,
        variables: Sequence[str] = (),
        parameters: Sequence[str] = (),
        roots: Sequence[str] = (),
        specialize: Mapping[str, Any] | None = None,
    ) -> None:
        spec = {name: Fraction(v) for name, v in (specialize or {}).items()}
        for name in list(variables) + list(parameters):
            if not _NAME_RE.match(name):
                raise ValueError(f"bad symbol name {name!r}")
        seen: set[str] = set()
        for name in list(variables) + list(parameters):
            if name in seen:
                raise ValueError(f"duplicate symbol name {name!r}")
            seen.add(name)
        for name in roots:
            if name not in parameters:
                raise ValueError(f"root declared for unknown parameter {name!r}")
        for name in spec:
            if name not in parameters:
                raise ValueError(f"specialization of unknown parameter {name!r}")

        self.field = field
        self.variables = tuple(variables)
        self.parameters = tuple(parameters)
        self.rooted = tuple(name for name in parameters if name in set(roots))
        self.specializations = dict(spec)

        live_params = tuple(p for p in parameters if p not in spec)
        names: list[str] = [f"sqrt({p})" for p in self.rooted]
        names += list(live_params)
        self.var_start = len(names)
        names += list(self.variables)
        self.symbols = tuple(names)
        self.nsym = len(names)

        self.index = {name: i for i, name in enumerate(names)}
        self.root_index = {p: i for i, p in enumerate(self.rooted)}
        # Bare names of specialized parameters resolve to field constants.
        self.constants = {name: field.of(v) for name, v in spec.items()}

        # rewrite[i] for a root symbol i: where its square goes.
        # Either (param_index, None) or (None, constant).
        self.rewrite: list[tuple[int | None, Any]] = []
        for p in self.rooted:
            if p in spec:
                value = field.of(spec[p])
                if value == field.zero:
                    raise ValueError(
                        f"rooted parameter {p!r} specialized to 0 in {field.name}"
                    )
                self.rewrite.append((None, value))
            else:
                self.rewrite.append((self.index[p], None))

        self._key = (
            field.name,
            self.variables,
            self.parameters,
            self.rooted,
            tuple(sorted(spec.items())),
        )

    # -- lookups ---------------------------------------------------------

    def symbol_index(self, name: str) -> int:
        """Index of a live symbol; root symbols are named "sqrt(p)"."""
        try:
            return self.index[name]
        except KeyError:
            raise UnknownSymbol(f"{name!r} is not declared in this context") from None

    def root_symbol_index(self, param: str) -> int:
        if param not in self.root_index:
            raise UnknownSymbol(f"no root declared for {param!r}")
        return self.root_index[param]

    def is_variable(self, idx: int) -> bool:
        return idx >= self.var_start

    def mono_key(self, exps: tuple[int, ...]):
        """Sort key realizing the graded order described in the module doc."""
        return (sum(exps), exps[::-1])

    # -- compatibility ---------------------------------------------------

    def constant_map_into(self, other: "Context") -> dict[int, int]:
        """Map this context's non-variable symbol indices into `other`.

        Used when substituting across contexts: every root and live
        parameter here must exist in `other` under the same name (roots
        keep their underlying parameter name).
        """
        mapping: dict[int, int] = {}
        for i, p in enumerate(self.rooted):
            mapping[i] = other.root_symbol_index(p)
        for i in range(len(self.rooted), self.var_start):
            mapping[i] = other.symbol_index(self.symbols[i])
        return mapping

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Context) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        parts = [self.field.name]
        if self.parameters:
            parts.append("params=" + ",".join(self.parameters))
        if self.variables:
            parts.append("vars=" + ",".join(self.variables))
        return f"Context({'; '.join(parts)})"
