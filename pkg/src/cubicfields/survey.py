"""Survey pipeline: classify conductors, persist JSONL records, summarize."""

from __future__ import annotations

import csv
import io
import json
import os
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import IO

from .conductors import Conductor, enumerate_conductors, validate_conductor
from .errors import DegenerateValuationError, InvalidInputError
from .graphs import (
    CATEGORY_III,
    TAME_REPRESENTATIVES,
    build_graph,
    classify,
    format_signature,
    predict_rank_distribution,
)
from .system_matrix import multiplet_rank_profile

__all__ = [
    "SurveyRecord",
    "SummaryStats",
    "TRACKED_CLASSES",
    "classify_conductor",
    "iter_records",
    "run_survey",
    "stats",
    "read_records",
]

TRACKED_CLASSES = ("III.8", "I.2", *TAME_REPRESENTATIVES, "theorem-B")


@dataclass(frozen=True)
class SurveyRecord:
    conductor: int
    factors: tuple[int, ...]
    t: int
    m: int
    graph: str
    signature: str
    theorem_range: str | None
    arrows: tuple[tuple[int, int], ...]
    ranks: tuple[int, ...]
    shapes: tuple[tuple[int, ...] | None, ...]
    provenance: str
    solutions: int
    rho: tuple[int, ...]
    flags: tuple[str, ...] = ()

    def to_json(self) -> str:
        payload = {f.name: getattr(self, f.name) for f in fields(self)}
        return json.dumps(payload, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> SurveyRecord:
        d = json.loads(line)
        return cls(
            conductor=d["conductor"],
            factors=tuple(d["factors"]),
            t=d["t"],
            m=d["m"],
            graph=d["graph"],
            signature=d["signature"],
            theorem_range=d["theorem_range"],
            arrows=tuple(tuple(x) for x in d["arrows"]),
            ranks=tuple(d["ranks"]),
            shapes=tuple(None if s is None else tuple(s) for s in d["shapes"]),
            provenance=d["provenance"],
            solutions=d["solutions"],
            rho=tuple(d["rho"]),
            flags=tuple(d["flags"]),
        )

    @property
    def tracked_classes(self) -> list[str]:
        out = []
        if self.graph in TRACKED_CLASSES:
            out.append(self.graph)
        if self.t == 4 and self.theorem_range == "B":
            out.append("theorem-B")
        return out


def classify_conductor(c: int | Conductor) -> SurveyRecord:
    cond = c if isinstance(c, Conductor) else validate_conductor(c)
    g = build_graph(cond)
    cls = classify(g)
    predicted = predict_rank_distribution(cls, cond.t)
    flags: list[str] = []
    if cond.t >= 5:
        flags.append("experimental-t")
    try:
        profile = multiplet_rank_profile(cond)
        rho = profile.ranks
    except DegenerateValuationError:
        profile, rho = None, ()
        flags.append("degenerate-valuation")
    if profile is not None and len(rho) != cond.m:
        flags.append("solution-count-mismatch")
    if predicted.ranks:
        ranks, shapes, provenance = predicted.ranks, predicted.shapes, predicted.provenance
        if profile is not None and sorted(rho) != sorted(ranks):
            flags.append("profile-mismatch")
    else:
        order = sorted(range(len(rho)), key=lambda k: -rho[k])
        ranks = tuple(rho[k] for k in order)
        shapes = tuple(profile.shapes[k] for k in order) if profile else ()
        provenance = "matrix-computed"
    f = cond.factors
    arrows = tuple(sorted((f[i], f[j]) for i, j in g.arrows))
    return SurveyRecord(
        conductor=cond.value,
        factors=f,
        t=cond.t,
        m=cond.m,
        graph=cls.label,
        signature=format_signature(cls.signature),
        theorem_range=cls.theorem_range,
        arrows=arrows,
        ranks=tuple(ranks),
        shapes=tuple(shapes),
        provenance=provenance,
        solutions=len(rho),
        rho=tuple(rho),
        flags=tuple(flags),
    )


@dataclass
class SummaryStats:
    bound: int
    conductors: int = 0
    total_fields: int = 0
    quartet_fields: int = 0
    catIII_quartet_fields: int = 0
    III8_fields: int = 0
    profile_mismatches: int = 0
    minimal: dict[str, int] = field(default_factory=dict)
    tame_homogeneous_octets: list[int] = field(default_factory=list)

    @property
    def quartet_fraction(self) -> float:
        return self.quartet_fields / self.total_fields if self.total_fields else 0.0

    @property
    def catIII_fraction(self) -> float:
        return self.catIII_quartet_fields / self.quartet_fields if self.quartet_fields else 0.0

    @property
    def III8_fraction(self) -> float:
        if not self.catIII_quartet_fields:
            return 0.0
        return self.III8_fields / self.catIII_quartet_fields

    def add(self, rec: SurveyRecord) -> None:
        self.conductors += 1
        self.total_fields += rec.m
        if rec.t == 3:
            self.quartet_fields += rec.m
            if rec.graph in CATEGORY_III:
                self.catIII_quartet_fields += rec.m
            if rec.graph == "III.8":
                self.III8_fields += rec.m
        if "profile-mismatch" in rec.flags:
            self.profile_mismatches += 1
        for name in rec.tracked_classes:
            prev = self.minimal.get(name)
            if prev is None or rec.conductor < prev:
                self.minimal[name] = rec.conductor
        if rec.t == 4 and rec.graph in TAME_REPRESENTATIVES and set(rec.rho) == {3}:
            self.tame_homogeneous_octets.append(rec.conductor)

    def merge(self, other: SummaryStats) -> SummaryStats:
        out = SummaryStats(max(self.bound, other.bound))
        for name in ("conductors", "total_fields", "quartet_fields",
                     "catIII_quartet_fields", "III8_fields", "profile_mismatches"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        for src in (self.minimal, other.minimal):
            for k, v in src.items():
                out.minimal[k] = min(v, out.minimal.get(k, v))
        out.tame_homogeneous_octets = sorted(
            self.tame_homogeneous_octets + other.tame_homogeneous_octets
        )
        return out

    def rows(self) -> list[tuple[str, str]]:
        rows = [
            ("bound", str(self.bound)),
            ("conductors", str(self.conductors)),
            ("total_fields", str(self.total_fields)),
            ("quartet_fields", str(self.quartet_fields)),
            ("quartet_fraction", f"{self.quartet_fraction:.4f}"),
            ("catIII_quartet_fields", str(self.catIII_quartet_fields)),
            ("catIII_fraction", f"{self.catIII_fraction:.4f}"),
            ("III8_fields", str(self.III8_fields)),
            ("III8_fraction", f"{self.III8_fraction:.4f}"),
            ("profile_mismatches", str(self.profile_mismatches)),
        ]
        for name in TRACKED_CLASSES:
            val = self.minimal.get(name)
            rows.append((f"minimal[{name}]", "" if val is None else str(val)))
        rows.append(
            ("tame_homogeneous_octets", " ".join(map(str, self.tame_homogeneous_octets)))
        )
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("metric", "value"))
        w.writerows(self.rows())
        return buf.getvalue()


def _check_bound(bound: int) -> None:
    if bound < 7:
        raise InvalidInputError(f"bound must be at least 7, got {bound}")


def _classify_value(value: int) -> SurveyRecord:
    return classify_conductor(validate_conductor(value))


def iter_records(
    bound: int,
    t_filter: int | None = None,
    jobs: int = 1,
    start_after: int = 0,
) -> Iterator[SurveyRecord]:
    """Records for all conductors ``start_after < c <= bound``, ascending."""
    conds = [c for c in enumerate_conductors(bound, t_filter) if c.value > start_after]
    if jobs <= 1:
        for c in conds:
            yield classify_conductor(c)
        return
    values = [c.value for c in conds]
    chunk = max(1, len(values) // (jobs * 16))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_classify_value, values, chunksize=chunk)


def read_records(path: str | os.PathLike) -> list[SurveyRecord]:
    with open(path, encoding="utf-8") as fh:
        return [SurveyRecord.from_json(line) for line in fh if line.strip()]


def _recover(path: Path) -> list[SurveyRecord]:
    """Keep the complete records of an interrupted run; drop a torn last line."""
    data = path.read_bytes()
    keep = data[: data.rfind(b"\n") + 1]
    recs = []
    good = 0
    for line in keep.splitlines(keepends=True):
        try:
            recs.append(SurveyRecord.from_json(line.decode("utf-8")))
        except (ValueError, KeyError):
            break
        good += len(line)
    if good != len(data):
        with open(path, "r+b") as fh:
            fh.truncate(good)
    return recs


def _emit(
    recs: Iterable[SurveyRecord], sink: IO[str], summary: SummaryStats, tame_only: bool
) -> None:
    for rec in recs:
        if tame_only and not (rec.t == 4 and rec.graph in TAME_REPRESENTATIVES):
            continue
        sink.write(rec.to_json() + "\n")
        summary.add(rec)


def run_survey(
    bound: int,
    t_filter: int | None = None,
    jobs: int = 1,
    out: str | os.PathLike | IO[str] | None = None,
    tame_only: bool = False,
    resume: bool = False,
) -> SummaryStats:
    """Classify every conductor up to ``bound`` and write one JSONL line each.

    The summary is accumulated over the emitted records only. With
    ``resume`` an existing output file is continued after its last complete
    record. Output is identical for any ``jobs``.
    """
    _check_bound(bound)
    summary = SummaryStats(bound)
    if out is None or hasattr(out, "write"):
        sink = out if out is not None else io.StringIO()
        _emit(iter_records(bound, t_filter, jobs), sink, summary, tame_only)
        return summary
    path = Path(out)
    start_after = 0
    if resume and path.exists():
        for rec in _recover(path):
            summary.add(rec)
            start_after = rec.conductor
        mode = "a"
    else:
        mode = "w"
    with open(path, mode, encoding="utf-8", newline="\n") as fh:
        _emit(iter_records(bound, t_filter, jobs, start_after), fh, summary, tame_only)
    return summary


def stats(bound: int, jobs: int = 1) -> SummaryStats:
    _check_bound(bound)
    summary = SummaryStats(bound)
    for rec in iter_records(bound, jobs=jobs):
        summary.add(rec)
    return summary
