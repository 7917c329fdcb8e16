"""Enumeration driver: shadows -> decorations -> admissible -> hard -> records.

Work is split by shadow.  Each shadow is screened with :mod:`chdiag.fastpath`
and every diagram reported as admissible or hard is confirmed by the scalar
code before it is emitted.  Output order depends only on the data.
"""

from __future__ import annotations

import json
import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from .epd import EPDCode, ShadowLabeling, mirror, parse_epd, switch
from .fastpath import evaluate_shadow
from .invariants import gon_census, writhe
from .moves import MOVES, decorated_code, geometric_move_oracle, is_hard
from .planar_map import PlaneMap, map_from_code
from .resolution import is_admissible
from .shadows import shadow_codes
from .surface import classify

WORKERS_ENV = "CHDIAG_WORKERS"
MAX_N = 12

RECORD_FIELDS = ("epd", "n", "m", "admissible", "hard", "components", "euler",
                 "orientable", "name", "gons", "writhe")


class GuardrailError(ValueError):
    pass


def worker_count(default: Optional[int] = None) -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise GuardrailError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
        return max(1, value)
    return default if default is not None else max(1, os.cpu_count() or 1)


@dataclass
class DiagramRecord:
    epd: str
    n: int
    m: int
    admissible: bool
    hard: bool
    components: int
    euler: int
    orientable: bool
    name: Optional[str]
    gons: list[int]
    writhe: Optional[int] = None
    # sort key, not serialized
    key: bytes = field(default=b"", repr=False, compare=False)

    def to_json(self) -> str:
        data = {f: getattr(self, f) for f in RECORD_FIELDS}
        if data["writhe"] is None:
            del data["writhe"]
        return json.dumps(data, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "DiagramRecord":
        data = json.loads(line)
        unknown = set(data) - set(RECORD_FIELDS)
        if unknown:
            raise ValueError(f"unknown record fields {sorted(unknown)}")
        rec = cls(**{f: data.get(f) for f in RECORD_FIELDS})
        rec.key = decorated_code(parse_epd(rec.epd))
        return rec

    @property
    def code(self) -> EPDCode:
        return parse_epd(self.epd)


def make_record(code: EPDCode, admissible: Optional[bool] = None,
                hard: Optional[bool] = None) -> DiagramRecord:
    """Record with every field computed from ``code``; the name is filled in
    once family indices are known."""
    if admissible is None:
        admissible = is_admissible(code)
    if hard is None:
        hard = admissible and is_hard(code)
    s = classify(code)
    return DiagramRecord(
        epd=code.serialize(), n=code.n, m=code.m, admissible=admissible, hard=hard,
        components=s.components, euler=s.euler, orientable=s.orientable, name=None,
        gons=gon_census(code), writhe=writhe(code) if code.m == 0 else None,
        key=decorated_code(code))


def assign_names(records: list[DiagramRecord]) -> list[DiagramRecord]:
    """Sort by (n, m, canonical code) and name hard records; the family index
    counts hard records of the same (n, m) in that order."""
    records.sort(key=lambda r: (r.n, r.m, r.key, r.epd))
    index: Counter = Counter()
    for r in records:
        if r.hard:
            index[(r.n, r.m)] += 1
            tag = "Ori" if r.orientable else "Non"
            r.name = f"{r.n}^{{{r.components},{r.euler},{tag}}}_{{{r.m},{index[(r.n, r.m)]}}}"
        else:
            r.name = None
    return records


@dataclass(frozen=True)
class RunConfig:
    n: int
    marker_counts: Optional[tuple[int, ...]] = None
    include_all: bool = False
    workers: Optional[int] = None

    def __post_init__(self) -> None:
        if not 2 <= self.n <= MAX_N:
            raise GuardrailError(f"n must lie in 2..{MAX_N}")
        if self.marker_counts is not None:
            bad = [m for m in self.marker_counts if not 0 <= m <= self.n]
            if bad:
                raise GuardrailError(f"marker counts out of range: {bad}")


@dataclass
class ShardResult:
    diagrams: int
    hard_counts: dict[int, int]
    records: list[DiagramRecord]


def _run_shard(args: tuple[bytes, Optional[tuple[int, ...]], bool]) -> ShardResult:
    shadow_code, marker_counts, include_all = args
    pm = map_from_code(shadow_code)
    ev = evaluate_shadow(pm, marker_counts)
    hard_rows = set()
    records = []
    for r in ev.hard_candidates:
        code = ev.code(int(r))
        if is_admissible(code) and is_hard(code):
            hard_rows.add(int(r))
    hard_counts: Counter = Counter(int(ev.m[r]) for r in hard_rows)
    if include_all:
        # the screen is necessary for admissibility, so unscreened rows are not admissible
        for r in range(len(ev.patterns)):
            code = ev.code(r)
            if r in hard_rows:
                records.append(make_record(code, True, True))
            elif ev.screened[r]:
                adm = is_admissible(code)
                records.append(make_record(code, adm, adm and is_hard(code)))
            else:
                records.append(make_record(code, False, False))
    else:
        records = [make_record(ev.code(r), True, True) for r in sorted(hard_rows)]
    return ShardResult(len(ev.patterns), dict(hard_counts), records)


@dataclass
class RunResult:
    n: int
    shadows: int
    diagrams: int
    hard_counts: dict[int, int]
    records: list[DiagramRecord]

    def table_row(self) -> list[int]:
        return [self.hard_counts.get(m, 0) for m in range(self.n + 1)]


def expected_diagram_count(n: int, shadows: int) -> int:
    return shadows * (4 ** (n - 1) + 2 ** (n - 1))


def run_enumeration(config: RunConfig) -> RunResult:
    codes = shadow_codes(config.n)
    tasks = [(c, config.marker_counts, config.include_all) for c in codes]
    workers = config.workers or worker_count()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shards = list(pool.map(_run_shard, tasks, chunksize=1))
    else:
        shards = [_run_shard(t) for t in tasks]
    counts: Counter = Counter()
    records: list[DiagramRecord] = []
    for s in shards:
        counts.update(s.hard_counts)
        records.extend(s.records)
    return RunResult(config.n, len(codes), sum(s.diagrams for s in shards), dict(counts),
                     assign_names(records))


# ---------------------------------------------------------------------------
# verification


def verify_record(rec: DiagramRecord) -> list[str]:
    """Recompute a record from its EPD string; returns the mismatching fields.

    Hard records are also checked against the geometric move oracle and for
    invariance of admissibility, hardness and orientability under mirror and
    switch.
    """
    code = parse_epd(rec.epd)
    fresh = make_record(code)
    bad = [f for f in RECORD_FIELDS if f != "name" and getattr(fresh, f) != getattr(rec, f)]
    if rec.hard:
        if any(geometric_move_oracle(code, mv) is not None for mv in MOVES):
            bad.append("oracle")
        for image in (mirror(code), switch(code)):
            if not (is_admissible(image) and is_hard(image)
                    and classify(image).orientable == rec.orientable):
                bad.append("symmetry")
                break
    return bad


# ---------------------------------------------------------------------------
# dedup


def dedup_spherical_mirror(records: Iterable[DiagramRecord]) -> list[list[DiagramRecord]]:
    """Group records into classes of decorated maps on the sphere: the
    canonical code is minimized over every outer face and both orientations
    of the sphere.  Classes are ordered by that code and list their members
    in input order; the first member is the representative."""
    classes: dict[bytes, list[DiagramRecord]] = defaultdict(list)
    for r in records:
        classes[decorated_code(parse_epd(r.epd))].append(r)
    return [classes[k] for k in sorted(classes)]


# ---------------------------------------------------------------------------
# JSONL


def write_jsonl(records: Iterable[DiagramRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


def read_jsonl(path: str | Path) -> Iterator[DiagramRecord]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                yield DiagramRecord.from_json(line)


# ---------------------------------------------------------------------------
# summary tables


def hard_table(records: Iterable[DiagramRecord]) -> dict[int, list[int]]:
    """Rows ``n -> [M_0, ..., M_n]`` counting hard records."""
    counts: Counter = Counter()
    ns = set()
    for r in records:
        ns.add(r.n)
        if r.hard:
            counts[(r.n, r.m)] += 1
    return {n: [counts[(n, m)] for m in range(n + 1)] for n in sorted(ns)}


def shadow_table(ns: Sequence[int]) -> list[tuple[int, int, int]]:
    """Rows ``(n, S, DG)``."""
    out = []
    for n in ns:
        s = len(shadow_codes(n))
        out.append((n, s, expected_diagram_count(n, s)))
    return out


# ---------------------------------------------------------------------------
# higher genus family


def doubled_cycle_medial(c: int) -> PlaneMap:
    """Medial map of the cycle on ``c`` vertices with every edge doubled.

    Edge ``2i`` (outer) and ``2i+1`` (inner) join vertex ``i`` to ``i+1``;
    the medial vertex of edge ``e`` is vertex ``e`` of the result.
    """
    if c < 2:
        raise ValueError("cycle needs at least two vertices")
    opp = [0] * (8 * c)
    for i in range(c):
        p = (i - 1) % c
        # edge ends counterclockwise around vertex i, tagged with whether i is the tail
        ends = [(2 * i, True), (2 * i + 1, True), (2 * p + 1, False), (2 * p, False)]
        for j, (e, tail) in enumerate(ends):
            f, f_tail = ends[(j + 1) % 4]
            a = 4 * e + (1 if tail else 3)
            b = 4 * f + (2 if f_tail else 0)
            opp[a], opp[b] = b, a
    return PlaneMap(tuple(opp))


def higher_genus_hard_diagram(k: int) -> EPDCode:
    """All-marked diagram with ``4k`` vertices presenting an orientable
    surface of Euler characteristic ``4 - 4k``: the medial of a doubled
    ``2k``-cycle with markers repeating Y, Z, Z, Y."""
    if k < 1:
        raise ValueError("k must be at least 1")
    from .epd import Y, Z
    pm = doubled_cycle_medial(2 * k)
    return ShadowLabeling.of(pm).code([Y, Z, Z, Y] * k)
