"""Case execution: run catalog entries and report outcomes.

A report's status is one of Pass, Fail, Skipped, Error. Fail means the
mathematical check ran and produced a nonzero witness; Error means the
case never got to a verdict (bad data, a resource cap, a timeout).
Nothing in the builtin catalog is skipped; the status exists for
callers that add cases guarded by features this build lacks.

Reports keep wall-clock time for humans, but the machine-readable form
omits it so that identical runs serialize to identical bytes no matter
how many workers produced them.
"""

from __future__ import annotations

import json
import signal
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .actions import (
    check_identity,
    check_induced_action,
    check_invariance,
    check_inverse_pair,
    close_action,
)
from .catalog import (
    Catalog,
    build_action,
    build_context,
    build_env,
    parse_catalog_text,
    serialize_catalog,
    word_matrix,
)
from .catalog_data import MATRICES
from .errors import UnknownCase
from .hilbert import decide_rationality
from .matgroup import (
    close_group,
    identify_iso_type,
    mat,
    q_reducible,
    verify_conjugation,
)
from .parser import parse
from .ratfunc import RatFunc

DEFAULT_TIMEOUT = 60.0

STATUSES = ("Pass", "Fail", "Skipped", "Error")


class VerificationReport:
    """Outcome of running one case."""

    def __init__(
        self,
        case_id: str,
        status: str,
        witness: str | None = None,
        elapsed: float = 0.0,
        source: str = "",
    ) -> None:
        if status not in STATUSES:
            raise ValueError(f"bad status {status!r}")
        if status == "Fail" and not witness:
            raise ValueError("a Fail report must carry a witness")
        self.case_id = case_id
        self.status = status
        self.witness = witness
        self.elapsed = elapsed
        self.source = source

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "case_id": self.case_id,
            "source": self.source,
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def __repr__(self) -> str:
        return f"VerificationReport({self.case_id!r}, {self.status!r})"


# -- shared construction helpers ---------------------------------------------


def build_group(catalog: Catalog, gid: str):
    """Close the named generator words into a MatrixGroup, cached per catalog."""
    cache = getattr(catalog, "_group_cache", None)
    if cache is None:
        cache = {}
        catalog._group_cache = cache
    if gid not in cache:
        rec = catalog.group(gid)
        words = rec["generators"]
        mats = [word_matrix(w, MATRICES) for w in words]
        cache[gid] = close_group(mats, gen_names=words)
    return cache[gid]


def _fraction(x: Any) -> Fraction:
    return Fraction(x)


def _mismatch(text: str) -> list[dict]:
    return [{"witness": text}]


# -- per-kind checks -----------------------------------------------------------


def _run_invariance(catalog: Catalog, p: Mapping) -> list[dict]:
    ctx = build_context(p["context"])
    env = build_env(ctx, p.get("where"))
    actions = {n: build_action(ctx, s, MATRICES) for n, s in p["actions"].items()}
    exprs = {n: parse(ctx, t, env) for n, t in p["exprs"].items()}
    return check_invariance(actions, exprs)


def _orbit_sum(seed: RatFunc, generators) -> RatFunc:
    total = None
    for sigma in close_action(generators):
        image = sigma.apply(seed)
        total = image if total is None else total + image
    return total


def _run_induced_action(catalog: Catalog, p: Mapping) -> list[dict]:
    ctx = build_context(p["context"])
    env = build_env(ctx, p.get("where"))
    actions = {n: build_action(ctx, s, MATRICES) for n, s in p["actions"].items()}
    cctx = build_context(p["claimed_context"])
    fw_spec = p["forward"]
    forward = None
    if fw_spec is not None:
        forward = {}
        for u, entry in fw_spec.items():
            if isinstance(entry, str):
                forward[u] = parse(ctx, entry, env)
            else:
                spec = entry["orbit_sum"]
                seed = parse(ctx, spec["of"], env)
                forward[u] = _orbit_sum(seed, [actions[n] for n in spec["group"]])
    failures = []
    for name, table in p["claimed"].items():
        claimed = {u: parse(cctx, t) for u, t in table.items()}
        if forward is None:
            fw = {u: RatFunc.named(ctx, u) for u in table}
        else:
            fw = forward
        for f in check_induced_action(actions[name], fw, claimed):
            failures.append({"action": name, **f})
    return failures


def _run_inverse_pair(catalog: Catalog, p: Mapping) -> list[dict]:
    src = build_context(p["source"])
    tgt = build_context(p["target"])
    env_f = build_env(src, p.get("where_forward"))
    env_b = build_env(tgt, p.get("where_backward"))
    forward = {u: parse(src, t, env_f) for u, t in p["forward"].items()}
    backward = {x: parse(tgt, t, env_b) for x, t in p["backward"].items()}
    return check_inverse_pair(forward, backward, src, tgt)


def _run_identity(catalog: Catalog, p: Mapping) -> list[dict]:
    ctx = build_context(p["context"])
    env = build_env(ctx, p.get("where"))
    lhs = parse(ctx, p["lhs"], env)
    rhs = parse(ctx, p["rhs"], env)
    return check_identity(lhs, rhs)


def _run_group_order(catalog: Catalog, p: Mapping) -> list[dict]:
    g = build_group(catalog, p["group"])
    if g.order != p["order"]:
        return _mismatch(f"closure has order {g.order}, catalog says {p['order']}")
    return []


def _run_iso_type(catalog: Catalog, p: Mapping) -> list[dict]:
    g = build_group(catalog, p["group"])
    label = identify_iso_type(g)
    if label != p["label"]:
        return _mismatch(f"recognized {label}, catalog says {p['label']}")
    return []


def _run_normal_subgroups(catalog: Catalog, p: Mapping) -> list[dict]:
    g = build_group(catalog, p["group"])
    computed = [s for s in g.normal_subgroups() if 1 < len(s) < g.order]
    expected = []
    for words in p["subgroups"]:
        mats = [word_matrix(w, MATRICES) for w in words]
        expected.append(tuple(close_group(mats, cap=g.order).elements))
    expected.sort(key=lambda s: (len(s), s))
    if computed == expected:
        return []
    comp_orders = [len(s) for s in computed]
    exp_orders = [len(s) for s in expected]
    extra = [len(s) for s in computed if s not in expected]
    missing = [len(s) for s in expected if s not in computed]
    return _mismatch(
        f"proper nontrivial normal subgroups of orders {comp_orders}, "
        f"catalog lists orders {exp_orders}; "
        f"unlisted orders {extra}, unrealized orders {missing}"
    )


def _run_conjugacy(catalog: Catalog, p: Mapping) -> list[dict]:
    left = build_group(catalog, p["left"])
    right = build_group(catalog, p["right"])
    via = p["via"]
    m = mat(via) if isinstance(via, list) else word_matrix(via, MATRICES)
    if not verify_conjugation(left, right, m):
        return _mismatch(
            f"conjugation by {via} does not carry {p['left']} onto {p['right']}"
        )
    return []


def _run_q_reducibility(catalog: Catalog, p: Mapping) -> list[dict]:
    rec = catalog.group(p["group"])
    gens = [word_matrix(w, MATRICES) for w in rec["generators"]]
    got, _ = q_reducible(gens)
    if got != p["reducible"]:
        return _mismatch(
            f"representation is {'' if got else 'ir'}reducible over Q, "
            f"catalog says {'' if p['reducible'] else 'ir'}reducible"
        )
    return []


def _run_rationality(catalog: Catalog, p: Mapping) -> list[dict]:
    kwargs: dict[str, Any] = {}
    if p.get("a") is not None:
        kwargs["a"] = _fraction(p["a"])
    if p.get("b") is not None:
        kwargs["b"] = _fraction(p["b"])
    if p.get("coeffs") is not None:
        kwargs["coeffs"] = [_fraction(c) for c in p["coeffs"]]
    verdict = decide_rationality(p["case"], **kwargs)
    if verdict.rational != p["expect_rational"]:
        return _mismatch(
            f"decided {'rational' if verdict.rational else 'not rational'}, "
            f"catalog expects the opposite; {verdict.criterion}"
        )
    return []


_DISPATCH = {
    "Invariance": _run_invariance,
    "InducedAction": _run_induced_action,
    "InversePair": _run_inverse_pair,
    "Identity": _run_identity,
    "GroupOrder": _run_group_order,
    "IsoType": _run_iso_type,
    "NormalSubgroups": _run_normal_subgroups,
    "Conjugacy": _run_conjugacy,
    "QReducibility": _run_q_reducibility,
    "RationalityCriterion": _run_rationality,
}

_WITNESS_CAP = 2000


def _format_failures(failures: Sequence[Mapping]) -> str:
    parts = []
    for f in failures:
        head = ", ".join(f"{k} {v}" for k, v in f.items() if k != "witness")
        parts.append(f"{head}: {f['witness']}" if head else str(f["witness"]))
    text = " ;; ".join(parts)
    if len(text) > _WITNESS_CAP:
        text = text[: _WITNESS_CAP - 3] + "..."
    return text


# -- running -------------------------------------------------------------------


class _Timeout(Exception):
    pass


def _call_with_timeout(fn, seconds: float | None):
    """Run fn under a real-time alarm. Falls back to no limit when alarms
    are unavailable (non-main thread)."""
    if not seconds or seconds <= 0:
        return fn()

    def on_alarm(signum, frame):
        raise _Timeout()

    try:
        old = signal.signal(signal.SIGALRM, on_alarm)
    except ValueError:
        return fn()
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        return fn()
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def run_case(
    catalog: Catalog, case_id: str, timeout: float | None = DEFAULT_TIMEOUT
) -> VerificationReport:
    """Run one case by id. Raises UnknownCase for an id not in the catalog."""
    case = catalog.case(case_id)
    start = time.perf_counter()
    try:
        failures = _call_with_timeout(
            lambda: _DISPATCH[case.kind](catalog, case.payload), timeout
        )
        status = "Pass" if not failures else "Fail"
        witness = _format_failures(failures) if failures else None
    except _Timeout:
        status = "Error"
        witness = f"timed out after {timeout:g}s"
    except UnknownCase:
        raise
    except Exception as exc:
        status = "Error"
        witness = f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    return VerificationReport(case.id, status, witness, elapsed, case.source)


_WORKER_CATALOG: Catalog | None = None


def _init_worker(text: str) -> None:
    global _WORKER_CATALOG
    _WORKER_CATALOG = parse_catalog_text(text)


def _worker_run(case_id: str, timeout: float | None) -> VerificationReport:
    assert _WORKER_CATALOG is not None
    return run_case(_WORKER_CATALOG, case_id, timeout)


def run_all(
    catalog: Catalog,
    filters: Mapping[str, str] | None = None,
    jobs: int = 1,
    timeout: float | None = DEFAULT_TIMEOUT,
) -> list[VerificationReport]:
    """Run every case matching the filters, reports in catalog order.

    The report list is the same for any jobs value; only wall-clock
    times differ.
    """
    cases = catalog.select(filters)
    if jobs <= 1:
        return [run_case(catalog, c.id, timeout) for c in cases]
    text = serialize_catalog(catalog)
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_init_worker, initargs=(text,)
    ) as pool:
        futures = [pool.submit(_worker_run, c.id, timeout) for c in cases]
        return [f.result() for f in futures]


# -- report serialization --------------------------------------------------------


def summarize(reports: Sequence[VerificationReport]) -> dict[str, int]:
    out = {s: 0 for s in STATUSES}
    for r in reports:
        out[r.status] += 1
    return out


def to_jsonl(reports: Sequence[VerificationReport]) -> str:
    """One JSON object per line, deterministic bytes for a given outcome."""
    return "".join(
        json.dumps(r.to_json(), sort_keys=True) + "\n" for r in reports
    )


def to_text(reports: Sequence[VerificationReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"{r.status.upper():<7} {r.case_id}  [{r.elapsed:.3f}s]")
        if r.status in ("Fail", "Error"):
            lines.append(f"        note: {r.source}")
            lines.append(f"        witness: {r.witness}")
    counts = summarize(reports)
    total = len(reports)
    lines.append(
        f"{total} case(s): "
        + ", ".join(f"{v} {k.lower()}" for k, v in counts.items() if v)
    )
    return "\n".join(lines) + "\n"


def exit_code(reports: Sequence[VerificationReport]) -> int:
    """0 all passed, 1 at least one Fail, 2 at least one Error."""
    counts = summarize(reports)
    if counts["Error"]:
        return 2
    if counts["Fail"]:
        return 1
    return 0
