"""Isomorph-free generation and exhaustive checks of the extremal bounds.

Generation is by canonical augmentation: every representative on ``n - 1``
vertices is extended by a new vertex over all neighbour subsets, and an
extension is kept when the vertex placed last by its canonical labeling can be
deleted to give back the parent's class; duplicates among children of one
parent are dropped by canonical code.  Each class therefore comes from exactly
one parent, which lets parents be processed as independent shards.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from maxindep import _kernels
from maxindep.constructions import build_G, enumerate_family, f_formula, g_formula
from maxindep.counting import count_mis, vertex_in_no_mis
from maxindep.graph import Graph, Graph6Error, decode_graph6, encode_graph6, is_connected, reachable
from maxindep.iso import CanonicalForm, canonical_form, classify_extremal

log = logging.getLogger(__name__)

GENERATE_MAX_ORDER = 10
FAMILY_TABLE_MAX_ORDER = 12
JOBS_ENV = "MAXINDEP_JOBS"

Rep = tuple[tuple[int, ...], int]  # canonical masks, canonical code


def default_jobs() -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# generation -------------------------------------------------------------------


def _relabel_masks(masks: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * len(order)
    for v, m in enumerate(masks):
        nm = 0
        while m:
            low = m & -m
            nm |= 1 << pos[low.bit_length() - 1]
            m ^= low
        out[pos[v]] = nm
    return tuple(out)


def _drop_vertex(masks: Sequence[int], w: int) -> list[int]:
    lo = (1 << w) - 1
    out = []
    for v, m in enumerate(masks):
        if v != w:
            out.append((m & lo) | ((m >> (w + 1)) << w))
    return out


def extend_parent(parent: Rep) -> list[Rep]:
    """Children of one canonical parent, each canonical and in a distinct class."""
    pmasks, pcode = parent
    m = len(pmasks)
    n = m + 1
    seen: set[int] = set()
    out: list[Rep] = []
    for s in range(1 << m):
        masks = [pm | ((s >> v & 1) << m) for v, pm in enumerate(pmasks)]
        masks.append(s)
        order, code = _kernels.canonical_labeling(n, masks)
        if code in seen:
            continue
        w = order[-1]
        if w != m:
            if masks[w].bit_count() != s.bit_count():
                continue
            if _kernels.canonical_labeling(m, _drop_vertex(masks, w))[1] != pcode:
                continue
        seen.add(code)
        out.append((_relabel_masks(masks, order), code))
    return out


@lru_cache(maxsize=None)
def representatives(n: int) -> tuple[Rep, ...]:
    """Canonical representative of every isomorphism class on ``n`` vertices."""
    if not 1 <= n <= GENERATE_MAX_ORDER:
        raise ValueError(f"internal generation supports 1 <= n <= {GENERATE_MAX_ORDER}")
    if n == 1:
        return (((0,), 0),)
    out: list[Rep] = []
    for parent in representatives(n - 1):
        out.extend(extend_parent(parent))
    return tuple(out)


def _connected_masks(masks: Sequence[int]) -> bool:
    full = (1 << len(masks)) - 1
    return reachable(masks, 0, full) == full


def generate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    for masks, _ in representatives(n):
        if connected_only and not _connected_masks(masks):
            continue
        yield Graph(n, masks)


def ingest_graph6(source: Iterable[str], skip_malformed: bool = False) -> Iterator[Graph]:
    """Decode graph6 lines in order; blank lines are ignored."""
    for lineno, line in enumerate(source, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield decode_graph6(line)
        except (Graph6Error, ValueError) as exc:
            if skip_malformed:
                log.warning("skipping line %d: %s", lineno, exc)
                continue
            raise Graph6Error(f"line {lineno}: {exc}") from exc


# stratum statistics -----------------------------------------------------------


@dataclass
class Partial:
    """Per-alpha scan summary; merging is (max, union on ties, sum)."""

    observed_max: int = 0
    forms: frozenset[int] = frozenset()
    examined: int = 0

    def add(self, count: int, code: int) -> None:
        self.examined += 1
        if count > self.observed_max:
            self.observed_max = count
            self.forms = frozenset((code,))
        elif count == self.observed_max:
            self.forms = self.forms | {code}

    def merge(self, other: Partial) -> Partial:
        if self.observed_max > other.observed_max:
            top, forms = self.observed_max, self.forms
        elif self.observed_max < other.observed_max:
            top, forms = other.observed_max, other.forms
        else:
            top, forms = self.observed_max, self.forms | other.forms
        return Partial(top, forms, self.examined + other.examined)


def merge_partials(a: dict[int, Partial], b: dict[int, Partial]) -> dict[int, Partial]:
    out = dict(a)
    for alpha, p in b.items():
        out[alpha] = out[alpha].merge(p) if alpha in out else p
    return out


def _scan_reps(reps: Iterable[Rep], connected_only: bool) -> dict[int, Partial]:
    out: dict[int, Partial] = {}
    for masks, code in reps:
        if connected_only and not _connected_masks(masks):
            continue
        alpha, num = _kernels.mis_count(masks, (1 << len(masks)) - 1)
        out.setdefault(alpha, Partial()).add(num, code)
    return out


def _scan_shard(args: tuple[Rep, bool]) -> dict[int, Partial]:
    parent, connected_only = args
    return _scan_reps(extend_parent(parent), connected_only)


def _scan_ingested(args: tuple[list[tuple[int, ...]], bool]) -> dict[int, Partial]:
    # counts first; canonical codes only for graphs tying or beating the running max
    graphs, connected_only = args
    out: dict[int, Partial] = {}
    for masks in graphs:
        if connected_only and not _connected_masks(masks):
            continue
        n = len(masks)
        alpha, num = _kernels.mis_count(masks, (1 << n) - 1)
        p = out.setdefault(alpha, Partial())
        if num >= p.observed_max:
            p.add(num, _kernels.canonical_labeling(n, masks)[1])
        else:
            p.examined += 1
    return out


def scan(
    n: int,
    connected_only: bool,
    jobs: int = 1,
    source: Iterable[Graph] | None = None,
) -> dict[int, Partial]:
    """Per-alpha maxima of the number of maximum independent sets over order-``n`` graphs."""
    if source is not None:
        graphs = [g.masks for g in source if g.n == n]
        if jobs <= 1 or len(graphs) < 2:
            return _scan_ingested((graphs, connected_only))
        size = -(-len(graphs) // (jobs * 4))
        chunks = [(graphs[i:i + size], connected_only) for i in range(0, len(graphs), size)]
        return _pool_merge(_scan_ingested, chunks, jobs)
    if n == 1:
        return _scan_reps(representatives(1), connected_only)
    parents = [(p, connected_only) for p in representatives(n - 1)]
    if jobs <= 1:
        out: dict[int, Partial] = {}
        for args in parents:
            out = merge_partials(out, _scan_shard(args))
        return out
    return _pool_merge(_scan_shard, parents, jobs)


def _pool_merge(fn, tasks: list, jobs: int) -> dict[int, Partial]:
    out: dict[int, Partial] = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(fn, tasks, chunksize=max(1, len(tasks) // (jobs * 8))):
            out = merge_partials(out, part)
    return out


# reports ------------------------------------------------------------------------


@dataclass
class VerificationReport:
    theorem: str
    n: int
    alpha: int
    predicted: int
    observed_max: int
    extremal_forms: frozenset[CanonicalForm]
    expected_forms: frozenset[CanonicalForm]
    graphs_examined: int
    elapsed: float | None = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return (
            self.graphs_examined > 0
            and self.observed_max == self.predicted
            and self.extremal_forms == self.expected_forms
        )

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "alpha": self.alpha,
            "predicted": self.predicted,
            "observed_max": self.observed_max,
            "extremal_forms": sorted(f.graph6() for f in self.extremal_forms),
            "expected_forms": sorted(f.graph6() for f in self.expected_forms),
            "pass": self.passed,
            "graphs_examined": self.graphs_examined,
            "elapsed": round(self.elapsed, 6) if timing and self.elapsed is not None else None,
        }

    def offending(self) -> list[str]:
        """graph6 of extremal graphs outside the expected family."""
        return sorted(f.graph6() for f in self.extremal_forms - self.expected_forms)


def _report(theorem: str, n: int, alpha: int, part: Partial | None, started: float) -> VerificationReport:
    if theorem == "theorem2":
        predicted = f_formula(n, alpha)
        expected = frozenset(canonical_form(g) for g in enumerate_family(n, alpha))
    else:
        predicted = g_formula(n, alpha)
        expected = frozenset((canonical_form(build_G(n, alpha)),))
    part = part or Partial()
    if part.examined == 0:
        log.warning("%s: empty stratum n=%d alpha=%d", theorem, n, alpha)
    return VerificationReport(
        theorem,
        n,
        alpha,
        predicted,
        part.observed_max,
        frozenset(CanonicalForm(n, c) for c in part.forms),
        expected,
        part.examined,
        time.perf_counter() - started,
    )


def _check_range(n: int, alpha: int | None) -> None:
    if n < 2:
        raise ValueError("need n >= 2 for a stratum with 1 <= alpha < n")
    if alpha is not None and not 1 <= alpha < n:
        raise ValueError(f"need 1 <= alpha < n, got alpha={alpha}, n={n}")


def _verify(theorem, n, alpha, jobs, source) -> list[VerificationReport]:
    _check_range(n, alpha)
    started = time.perf_counter()
    parts = scan(n, connected_only=theorem == "theorem2", jobs=jobs, source=source)
    alphas = [alpha] if alpha is not None else list(range(1, n))
    return [_report(theorem, n, a, parts.get(a), started) for a in alphas]


def verify_theorem2(
    n: int, alpha: int | None = None, source: Iterable[Graph] | None = None, jobs: int = 1
) -> list[VerificationReport]:
    """Connected graphs: maximum count is f(n, alpha), attained exactly on the extremal family."""
    return _verify("theorem2", n, alpha, jobs, source)


def verify_theorem1(
    n: int, alpha: int | None = None, source: Iterable[Graph] | None = None, jobs: int = 1
) -> list[VerificationReport]:
    """All graphs: maximum count is g(n, alpha), attained only by G(n, alpha)."""
    return _verify("theorem1", n, alpha, jobs, source)


def reports_json(reports: Sequence[VerificationReport], timing: bool = False) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2, sort_keys=True) + "\n"


# Lemma-3-type check ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    graph6: str
    reason: str


def check_lemma3(n: int, source: Iterable[Graph] | None = None) -> list[Violation]:
    """Connected graphs with a vertex in no maximum independent set obey the connected bound,
    with equality only inside the extremal family."""
    graphs = source if source is not None else generate_graphs(n, connected_only=True)
    bad = []
    for g in graphs:
        if g.n != n or not is_connected(g):
            continue
        res = count_mis(g)
        if res.alpha >= n or vertex_in_no_mis(g) is None:
            continue
        bound = f_formula(n, res.alpha)
        if res.num_mis > bound:
            bad.append(Violation(encode_graph6(g), f"count {res.num_mis} exceeds f={bound}"))
        elif res.num_mis == bound and not classify_extremal(g, n, res.alpha).in_family:
            bad.append(Violation(encode_graph6(g), "attains f but is not in the extremal family"))
    return bad


# tables --------------------------------------------------------------------------

TABLE_COLUMNS = ["n", "alpha", "g", "f", "family_size", "observed_max", "pass"]


def table_rows(max_n: int, verify_max_n: int = 0, jobs: int = 1) -> list[dict]:
    if not 2 <= max_n <= 62:
        raise ValueError("max_n must lie in 2..62")
    rows = []
    for n in range(2, max_n + 1):
        verified = {}
        if n <= verify_max_n:
            verified = {r.alpha: r for r in verify_theorem2(n, jobs=jobs)}
        for alpha in range(1, n):
            r = verified.get(alpha)
            rows.append(
                {
                    "n": n,
                    "alpha": alpha,
                    "g": g_formula(n, alpha),
                    "f": f_formula(n, alpha),
                    "family_size": len(enumerate_family(n, alpha)) if n <= FAMILY_TABLE_MAX_ORDER else None,
                    "observed_max": r.observed_max if r else None,
                    "pass": r.passed if r else None,
                }
            )
    return rows


def emit_table(max_n: int, fmt: str = "csv", verify_max_n: int = 0, jobs: int = 1) -> str:
    if fmt not in ("csv", "json"):
        raise ValueError(f"unsupported table format {fmt!r}")
    rows = table_rows(max_n, verify_max_n, jobs)
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else str(v).lower() if isinstance(v, bool) else v) for k, v in row.items()})
    return buf.getvalue()


def reports_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for r in reports:
        family = len(r.expected_forms) if r.theorem == "theorem2" else ""
        writer.writerow(
            [r.n, r.alpha, g_formula(r.n, r.alpha), f_formula(r.n, r.alpha), family, r.observed_max, str(r.passed).lower()]
        )
    return buf.getvalue()
