"""Claim catalog: verification targets stored as data.

A Catalog holds two things. First, a table of named integer matrix
groups (generators given as words over a fixed alphabet of named 3x3
matrices) with their expected structure labels. Second, an ordered list
of CaseRecords, each a self-contained verifiable claim: an invariance
statement, an induced-action table, a mutually-inverse substitution
pair, a plain identity, a group fact, or a rationality-criterion
instance.

Expressions are stored as strings in the toolkit grammar rather than as
trees, so a catalog file can be audited line by line against its source
material. Every case carries a `source` string saying, in words, which
displayed claim it encodes.

Payload shapes per kind are documented in docs/catalog-schema.md and
enforced here by validate_catalog, which reports a JSON-pointer-ish
path with every complaint.
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from .context import Context
from .errors import SchemaError, UnknownCase
from .field import QQ, PrimeField, BaseField
from .matgroup import Matrix, identity, mat, mat_mul, mat_neg

KINDS = (
    "Invariance",
    "InducedAction",
    "InversePair",
    "Identity",
    "GroupOrder",
    "IsoType",
    "NormalSubgroups",
    "Conjugacy",
    "QReducibility",
    "RationalityCriterion",
)

_FILTER_KEYS = ("kind", "section", "group", "id", "prefix")


class CaseRecord:
    """One verifiable claim."""

    __slots__ = ("id", "kind", "section", "source", "payload")

    def __init__(self, id: str, kind: str, section: str, source: str, payload: dict) -> None:
        self.id = id
        self.kind = kind
        self.section = section
        self.source = source
        self.payload = payload

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "section": self.section,
            "source": self.source,
            "payload": self.payload,
        }

    def groups_used(self) -> list[str]:
        p = self.payload
        if self.kind in ("GroupOrder", "IsoType", "NormalSubgroups", "QReducibility"):
            return [p["group"]]
        if self.kind == "Conjugacy":
            return [p["left"], p["right"]]
        return []

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CaseRecord) and self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"CaseRecord({self.id!r}, {self.kind})"


class Catalog:
    """Immutable bundle of groups and cases."""

    def __init__(self, groups: Mapping[str, dict], cases: Sequence[CaseRecord]) -> None:
        self.groups = dict(groups)
        self.cases = list(cases)
        self.by_id = {c.id: c for c in self.cases}

    def case(self, case_id: str) -> CaseRecord:
        try:
            return self.by_id[case_id]
        except KeyError:
            raise UnknownCase(f"no case named {case_id!r}") from None

    def group(self, group_id: str) -> dict:
        try:
            return self.groups[group_id]
        except KeyError:
            raise UnknownCase(f"no group named {group_id!r}") from None

    def select(self, filters: Mapping[str, str] | None = None) -> list[CaseRecord]:
        """Cases matching every given filter, in catalog order.

        Keys: kind, section, group (any group the case references),
        id (exact), prefix (id prefix).
        """
        if not filters:
            return list(self.cases)
        for key in filters:
            if key not in _FILTER_KEYS:
                raise ValueError(
                    f"unknown filter key {key!r}; known keys: {', '.join(_FILTER_KEYS)}"
                )
        out = []
        for c in self.cases:
            ok = True
            for key, want in filters.items():
                if key == "kind":
                    ok = c.kind == want
                elif key == "section":
                    ok = c.section == want
                elif key == "group":
                    ok = want in c.groups_used()
                elif key == "id":
                    ok = c.id == want
                elif key == "prefix":
                    ok = c.id.startswith(want)
                if not ok:
                    break
            if ok:
                out.append(c)
        return out

    def __len__(self) -> int:
        return len(self.cases)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Catalog)
            and self.groups == other.groups
            and self.cases == other.cases
        )


# -- matrix words ------------------------------------------------------------


def word_matrix(word: str, alphabet: Mapping[str, Matrix]) -> Matrix:
    """Evaluate a generator word over named matrices.

    Grammar: factors joined by '*'; each factor is [-]name[^k] with k a
    positive integer; the whole word "1" (or "-1") is the (negated)
    identity. The leading '-' negates the powered factor, so "-x^2"
    means -(x^2), not (-x)^2.
    """
    word = word.strip()
    if not word:
        raise ValueError("empty word")
    acc: Matrix | None = None
    for factor in word.split("*"):
        factor = factor.strip()
        neg = factor.startswith("-")
        if neg:
            factor = factor[1:]
        if "^" in factor:
            base, _, exp = factor.partition("^")
            k = int(exp)
            if k < 1:
                raise ValueError(f"bad exponent in word factor {factor!r}")
        else:
            base, k = factor, 1
        if base == "1":
            m = identity(3)
        elif base in alphabet:
            m = mat(alphabet[base])
        else:
            raise ValueError(f"unknown matrix name {base!r}")
        step = m
        for _ in range(k - 1):
            step = mat_mul(step, m)
        if neg:
            step = mat_neg(step)
        acc = step if acc is None else mat_mul(acc, step)
    return acc


# -- construction helpers (used by the runner) --------------------------------


def build_field(name: str) -> BaseField:
    if name == "Q":
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise SchemaError(f"unknown field {name!r}")


def build_context(spec: Mapping[str, Any]) -> Context:
    return Context(
        build_field(spec.get("field", "Q")),
        variables=spec.get("variables", ()),
        parameters=spec.get("parameters", ()),
        roots=spec.get("roots", ()),
        specialize=spec.get("specialize"),
    )


def build_env(ctx: Context, where: Sequence[Sequence[str]] | None) -> dict:
    """Evaluate a where-list (ordered [name, expr] pairs) into an env."""
    from .parser import parse

    env: dict = {}
    for name, text in where or ():
        env[name] = parse(ctx, text, env)
    return env


def build_action(ctx: Context, spec: Mapping[str, Any], alphabet: Mapping[str, Matrix]):
    """An actionspec is either {"word": w} or {"bindings": {var: expr}},
    optionally with {"signs": {rooted param: -1}}."""
    from .actions import Automorphism
    from .parser import parse

    signs = spec.get("signs")
    if "word" in spec:
        return Automorphism.monomial(ctx, word_matrix(spec["word"], alphabet), signs=signs)
    bindings = {v: parse(ctx, text) for v, text in spec["bindings"].items()}
    return Automorphism(ctx, bindings, signs=signs)


# -- schema validation --------------------------------------------------------


def _need(obj: Mapping, key: str, path: str) -> Any:
    if key not in obj:
        raise SchemaError(f"missing key {key!r}", path)
    return obj[key]


def _check_str(value: Any, path: str, allow_empty: bool = False) -> None:
    if not isinstance(value, str) or (not allow_empty and not value):
        raise SchemaError("expected a nonempty string", path)


def _check_keys(obj: Mapping, allowed: set[str], path: str) -> None:
    extra = set(obj) - allowed
    if extra:
        raise SchemaError(f"unexpected keys {sorted(extra)}", path)


def _check_context(spec: Any, path: str) -> None:
    if not isinstance(spec, dict):
        raise SchemaError("context must be an object", path)
    _check_keys(spec, {"field", "variables", "parameters", "roots", "specialize"}, path)
    field = spec.get("field", "Q")
    _check_str(field, path + "/field")
    if field != "Q" and not (field.startswith("F") and field[1:].isdigit()):
        raise SchemaError(f"unknown field {field!r}", path + "/field")
    for key in ("variables", "parameters", "roots"):
        if key in spec:
            if not isinstance(spec[key], list) or not all(
                isinstance(s, str) and s for s in spec[key]
            ):
                raise SchemaError("expected a list of names", f"{path}/{key}")
    if "specialize" in spec:
        if not isinstance(spec["specialize"], dict):
            raise SchemaError("specialize must map parameter to value", path + "/specialize")
        for k, v in spec["specialize"].items():
            if not isinstance(v, (int, str)):
                raise SchemaError("specialized value must be int or string", f"{path}/specialize/{k}")


def _check_exprmap(value: Any, path: str) -> None:
    if not isinstance(value, dict) or not value:
        raise SchemaError("expected a nonempty object of expressions", path)
    for k, v in value.items():
        _check_str(v, f"{path}/{k}")


def _check_where(value: Any, path: str) -> None:
    if not isinstance(value, list):
        raise SchemaError("where must be a list of [name, expr] pairs", path)
    seen = set()
    for i, item in enumerate(value):
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(s, str) for s in item)):
            raise SchemaError("where entry must be [name, expr]", f"{path}/{i}")
        if item[0] in seen:
            raise SchemaError(f"duplicate where name {item[0]!r}", f"{path}/{i}")
        seen.add(item[0])


def _check_actionspec(spec: Any, path: str) -> None:
    if not isinstance(spec, dict):
        raise SchemaError("action must be an object", path)
    _check_keys(spec, {"word", "bindings", "signs"}, path)
    if ("word" in spec) == ("bindings" in spec):
        raise SchemaError("action needs exactly one of word/bindings", path)
    if "word" in spec:
        _check_str(spec["word"], path + "/word")
    else:
        _check_exprmap(spec["bindings"], path + "/bindings")
    if "signs" in spec:
        if not isinstance(spec["signs"], dict) or not all(
            v in (1, -1) for v in spec["signs"].values()
        ):
            raise SchemaError("signs must map rooted parameter to +-1", path + "/signs")


def _check_word_list(value: Any, path: str) -> None:
    if not isinstance(value, list) or not value or not all(isinstance(w, str) and w for w in value):
        raise SchemaError("expected a nonempty list of words", path)


_PAYLOAD_KEYS = {
    "Invariance": {"context", "actions", "exprs", "where"},
    "InducedAction": {"context", "actions", "forward", "claimed", "claimed_context", "where"},
    "InversePair": {"source", "target", "forward", "backward", "where_forward", "where_backward"},
    "Identity": {"context", "lhs", "rhs", "where"},
    "GroupOrder": {"group", "order"},
    "IsoType": {"group", "label"},
    "NormalSubgroups": {"group", "subgroups"},
    "Conjugacy": {"left", "right", "via"},
    "QReducibility": {"group", "reducible"},
    "RationalityCriterion": {"case", "a", "b", "coeffs", "expect_rational"},
}


def _check_payload(kind: str, p: Any, path: str, group_ids: set[str]) -> None:
    if not isinstance(p, dict):
        raise SchemaError("payload must be an object", path)
    _check_keys(p, _PAYLOAD_KEYS[kind], path)

    def group_ref(key: str) -> None:
        gid = _need(p, key, path)
        _check_str(gid, f"{path}/{key}")
        if gid not in group_ids:
            raise SchemaError(f"unknown group {gid!r}", f"{path}/{key}")

    if kind == "Invariance":
        _check_context(_need(p, "context", path), path + "/context")
        actions = _need(p, "actions", path)
        if not isinstance(actions, dict) or not actions:
            raise SchemaError("actions must be a nonempty object", path + "/actions")
        for name, spec in actions.items():
            _check_actionspec(spec, f"{path}/actions/{name}")
        _check_exprmap(_need(p, "exprs", path), path + "/exprs")
        if "where" in p:
            _check_where(p["where"], path + "/where")

    elif kind == "InducedAction":
        _check_context(_need(p, "context", path), path + "/context")
        _check_context(_need(p, "claimed_context", path), path + "/claimed_context")
        actions = _need(p, "actions", path)
        if not isinstance(actions, dict) or not actions:
            raise SchemaError("actions must be a nonempty object", path + "/actions")
        for name, spec in actions.items():
            _check_actionspec(spec, f"{path}/actions/{name}")
        fw = _need(p, "forward", path)
        if fw is not None:
            if not isinstance(fw, dict) or not fw:
                raise SchemaError("forward must be null or a nonempty object", path + "/forward")
            for k, v in fw.items():
                fpath = f"{path}/forward/{k}"
                if isinstance(v, str):
                    _check_str(v, fpath)
                elif isinstance(v, dict):
                    _check_keys(v, {"orbit_sum"}, fpath)
                    os_spec = _need(v, "orbit_sum", fpath)
                    if not isinstance(os_spec, dict):
                        raise SchemaError("orbit_sum must be an object", fpath + "/orbit_sum")
                    _check_keys(os_spec, {"of", "group"}, fpath + "/orbit_sum")
                    _check_str(_need(os_spec, "of", fpath + "/orbit_sum"), fpath + "/orbit_sum/of")
                    names = _need(os_spec, "group", fpath + "/orbit_sum")
                    _check_word_list(names, fpath + "/orbit_sum/group")
                    for n in names:
                        if n not in actions:
                            raise SchemaError(
                                f"orbit_sum generator {n!r} is not a declared action",
                                fpath + "/orbit_sum/group",
                            )
                else:
                    raise SchemaError("forward entry must be an expression or orbit_sum", fpath)
        claimed = _need(p, "claimed", path)
        if not isinstance(claimed, dict) or not claimed:
            raise SchemaError("claimed must be a nonempty object", path + "/claimed")
        for name, table in claimed.items():
            cpath = f"{path}/claimed/{name}"
            if name not in actions:
                raise SchemaError(f"claimed table for undeclared action {name!r}", cpath)
            _check_exprmap(table, cpath)
            if fw is not None and set(table) != set(fw):
                raise SchemaError("claimed table must cover exactly the forward generators", cpath)
        if "where" in p:
            _check_where(p["where"], path + "/where")

    elif kind == "InversePair":
        _check_context(_need(p, "source", path), path + "/source")
        _check_context(_need(p, "target", path), path + "/target")
        _check_exprmap(_need(p, "forward", path), path + "/forward")
        _check_exprmap(_need(p, "backward", path), path + "/backward")
        src_vars = set(p["source"].get("variables", ()))
        tgt_vars = set(p["target"].get("variables", ()))
        if set(p["forward"]) != tgt_vars:
            raise SchemaError("forward must bind exactly the target variables", path + "/forward")
        if set(p["backward"]) != src_vars:
            raise SchemaError("backward must bind exactly the source variables", path + "/backward")
        for key in ("where_forward", "where_backward"):
            if key in p:
                _check_where(p[key], f"{path}/{key}")

    elif kind == "Identity":
        _check_context(_need(p, "context", path), path + "/context")
        _check_str(_need(p, "lhs", path), path + "/lhs")
        _check_str(_need(p, "rhs", path), path + "/rhs")
        if "where" in p:
            _check_where(p["where"], path + "/where")

    elif kind == "GroupOrder":
        group_ref("group")
        order = _need(p, "order", path)
        if not isinstance(order, int) or order < 1:
            raise SchemaError("order must be a positive integer", path + "/order")

    elif kind == "IsoType":
        group_ref("group")
        _check_str(_need(p, "label", path), path + "/label")

    elif kind == "NormalSubgroups":
        group_ref("group")
        subs = _need(p, "subgroups", path)
        if not isinstance(subs, list):
            raise SchemaError("subgroups must be a list of word lists", path + "/subgroups")
        for i, gens in enumerate(subs):
            _check_word_list(gens, f"{path}/subgroups/{i}")

    elif kind == "Conjugacy":
        group_ref("left")
        group_ref("right")
        via = _need(p, "via", path)
        if isinstance(via, str):
            _check_str(via, path + "/via")
        elif not (
            isinstance(via, list)
            and len(via) == 3
            and all(isinstance(r, list) and len(r) == 3 and all(isinstance(x, int) for x in r) for r in via)
        ):
            raise SchemaError("via must be a matrix name or a 3x3 integer matrix", path + "/via")

    elif kind == "QReducibility":
        group_ref("group")
        if not isinstance(_need(p, "reducible", path), bool):
            raise SchemaError("reducible must be a boolean", path + "/reducible")

    elif kind == "RationalityCriterion":
        case = _need(p, "case", path)
        if case not in ("c4", "d4", "quadric"):
            raise SchemaError(f"unknown criterion case {case!r}", path + "/case")
        if not isinstance(_need(p, "expect_rational", path), bool):
            raise SchemaError("expect_rational must be a boolean", path + "/expect_rational")
        if case == "quadric":
            coeffs = _need(p, "coeffs", path)
            if not isinstance(coeffs, list) or not all(isinstance(c, (int, str)) for c in coeffs):
                raise SchemaError("coeffs must be a list of rationals", path + "/coeffs")
        else:
            a = _need(p, "a", path)
            if not isinstance(a, (int, str)):
                raise SchemaError("a must be a rational", path + "/a")
            if case == "d4" and not isinstance(_need(p, "b", path), (int, str)):
                raise SchemaError("b must be a rational", path + "/b")


def validate_catalog(data: Any, known_group_ids: set[str] | None = None) -> None:
    """Validate raw {groups, cases} data; raises SchemaError with a path."""
    if not isinstance(data, dict):
        raise SchemaError("catalog must be an object", "")
    _check_keys(data, {"groups", "cases"}, "")
    groups = data.get("groups", {})
    if not isinstance(groups, dict):
        raise SchemaError("groups must map id to group record", "/groups")
    for gid, g in groups.items():
        path = f"/groups/{gid}"
        if not isinstance(g, dict):
            raise SchemaError("group record must be an object", path)
        _check_keys(g, {"generators", "label", "system", "star"}, path)
        _check_word_list(_need(g, "generators", path), path + "/generators")
        _check_str(_need(g, "label", path), path + "/label")
        _check_str(_need(g, "system", path), path + "/system")
        if not isinstance(_need(g, "star", path), bool):
            raise SchemaError("star must be a boolean", path + "/star")
    cases = data.get("cases", [])
    if not isinstance(cases, list):
        raise SchemaError("cases must be a list", "/cases")
    group_ids = set(groups) | (known_group_ids or set())
    seen: set[str] = set()
    for i, c in enumerate(cases):
        path = f"/cases/{i}"
        if not isinstance(c, dict):
            raise SchemaError("case must be an object", path)
        _check_keys(c, {"id", "kind", "section", "source", "payload"}, path)
        cid = _need(c, "id", path)
        _check_str(cid, path + "/id")
        if cid in seen:
            raise SchemaError(f"duplicate case id {cid!r}", path + "/id")
        seen.add(cid)
        kind = _need(c, "kind", path)
        if kind not in KINDS:
            raise SchemaError(f"unknown kind {kind!r}", path + "/kind")
        _check_str(_need(c, "section", path), path + "/section")
        _check_str(_need(c, "source", path), path + "/source")
        _check_payload(kind, _need(c, "payload", path), path + "/payload", group_ids)


# -- building, loading, serializing -------------------------------------------


def _catalog_from_data(data: Mapping[str, Any], base: "Catalog | None" = None) -> Catalog:
    validate_catalog(data, known_group_ids=set(base.groups) if base else None)
    groups = dict(base.groups) if base else {}
    cases = list(base.cases) if base else []
    for gid, g in data.get("groups", {}).items():
        if gid in groups:
            raise SchemaError(f"duplicate group id {gid!r}", f"/groups/{gid}")
        groups[gid] = g
    existing = {c.id for c in cases}
    for c in data.get("cases", []):
        if c["id"] in existing:
            raise SchemaError(f"duplicate case id {c['id']!r}", "/cases")
        cases.append(CaseRecord(c["id"], c["kind"], c["section"], c["source"], c["payload"]))
    return Catalog(groups, cases)


def builtin_catalog() -> Catalog:
    """The embedded catalog; validated on construction."""
    from . import catalog_data

    return _catalog_from_data({"groups": catalog_data.GROUPS, "cases": catalog_data.CASES})


def load_catalog(path: str, merge_builtin: bool = False) -> Catalog:
    """Load a JSON catalog file, optionally on top of the builtin one."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}", "") from None
    return _catalog_from_data(data, base=builtin_catalog() if merge_builtin else None)


def serialize_catalog(catalog: Catalog) -> str:
    """Stable JSON text; parses back to an equal Catalog."""
    data = {
        "groups": catalog.groups,
        "cases": [c.to_dict() for c in catalog.cases],
    }
    return json.dumps(data, indent=1, sort_keys=True)


def parse_catalog_text(text: str) -> Catalog:
    return _catalog_from_data(json.loads(text))
