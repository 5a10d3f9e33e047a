"""Exhaustive cross-check of classifier verdicts against the invariant oracle."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

from .classifier import Verdict, lee_unknot_family, unlink_verdict
from .invariants import ConsistencyReport, jones_limit, unlink_consistent
from .ttlink import TwistedTorusParams, block_ownership, twisted_torus_braid

CLASSIFIER_YES_ORACLE_NO = "ClassifierYesOracleNo"
ORACLE_CLEAN_CLASSIFIER_NO = "OracleCleanClassifierNo"
JONES_SKIPPED = "JonesSkipped"
# kinds that make a scan fail; JonesSkipped only flags missing coverage
FAILING = frozenset({CLASSIFIER_YES_ORACLE_NO, ORACLE_CLEAN_CLASSIFIER_NO})


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ScanConfig:
    p_max: int = 8
    s_min: int = -4
    s_max: int = 4
    gcd_min: int = 2
    gcd_max: int | None = None
    r_beyond_p: bool = False
    jones_limit: int = field(default_factory=jones_limit)
    jobs: int = 1

    def __post_init__(self):
        if self.p_max < 2:
            raise ConfigError(f"p_max must be >= 2, got {self.p_max}")
        if self.s_min > self.s_max:
            raise ConfigError(f"empty s range {self.s_min}..{self.s_max}")
        if self.s_min == self.s_max == 0:
            raise ConfigError("s range contains only 0")
        if self.gcd_min < 1:
            raise ConfigError(f"gcd_min must be >= 1, got {self.gcd_min}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")

    def tuples(self) -> Iterator[TwistedTorusParams]:
        """Box members in lexicographic order: q < p, r <= p (or p + q), s != 0."""
        for p in range(2, self.p_max + 1):
            for q in range(1, p):
                d = gcd(p, q)
                if d < self.gcd_min or (self.gcd_max is not None and d > self.gcd_max):
                    continue
                r_top = p + q if self.r_beyond_p else p
                for r in range(2, r_top + 1):
                    for s in range(self.s_min, self.s_max + 1):
                        if s:
                            yield TwistedTorusParams(p, q, r, s)


@dataclass
class ScanFinding:
    params: TwistedTorusParams
    verdict: Verdict
    oracle: ConsistencyReport
    lee_components: list[str | None] = field(default_factory=list)
    discrepancy: str | None = None

    @property
    def obstructions(self) -> list[str]:
        out = self.oracle.obstructions()
        if any(tag is None for tag in self.lee_components):
            out.append("component_knotted")
        return out

    def to_json(self) -> dict:
        d = {
            "tuple": list(self.params.as_tuple()),
            "verdict": self.verdict.to_json(),
            "oracle": self.oracle.to_json(),
            "obstructions": self.obstructions,
            "discrepancy": self.discrepancy,
        }
        if self.lee_components:
            d["lee_components"] = self.lee_components
        return d


def _component_lee_tags(tp: TwistedTorusParams) -> list[str | None]:
    d = tp.d
    p1, q1 = tp.p // d, tp.q // d
    tags = []
    for owned in block_ownership(tp):
        fam = lee_unknot_family(p1, q1, owned, tp.s)
        tags.append(None if fam is None else fam.tag)
    return tags


def check_tuple(tp: TwistedTorusParams, limit: int) -> ScanFinding:
    verdict = unlink_verdict(*tp.as_tuple())
    beyond = tp.r > tp.p
    oracle = unlink_consistent(twisted_torus_braid(tp), limit, components=beyond)
    finding = ScanFinding(tp, verdict, oracle)
    if beyond:
        finding.lee_components = _component_lee_tags(tp)
    obstructed = bool(finding.obstructions)
    if verdict.is_unlink and obstructed:
        finding.discrepancy = CLASSIFIER_YES_ORACLE_NO
    elif not verdict.is_unlink and oracle.fully_clean and not obstructed:
        finding.discrepancy = ORACLE_CLEAN_CLASSIFIER_NO
    elif oracle.jones_skipped and not obstructed:
        finding.discrepancy = JONES_SKIPPED
    return finding


def _check(args) -> ScanFinding:
    return check_tuple(*args)


def run_scan(config: ScanConfig) -> Iterator[ScanFinding]:
    """Results in box order, whatever the number of worker processes."""
    work = ((tp, config.jones_limit) for tp in config.tuples())
    if config.jobs == 1:
        yield from map(_check, work)
        return
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        # map() yields in submission order, which keeps output deterministic
        yield from pool.map(_check, work, chunksize=4)


@dataclass
class ScanSummary:
    tuples: int = 0
    unlink_tuples: list[tuple[int, int, int, int]] = field(default_factory=list)
    oracle_clean: list[tuple[int, int, int, int]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    def add(self, f: ScanFinding) -> None:
        self.tuples += 1
        t = f.params.as_tuple()
        if f.verdict.is_unlink:
            self.unlink_tuples.append(t)
        if f.oracle.fully_clean and not f.obstructions:
            self.oracle_clean.append(t)
        if f.discrepancy:
            self.counts[f.discrepancy] = self.counts.get(f.discrepancy, 0) + 1

    @property
    def failed(self) -> bool:
        return any(self.counts.get(k, 0) for k in FAILING)

    def to_json(self) -> dict:
        return {
            "summary": True,
            "tuples": self.tuples,
            "unlink_tuples": [list(t) for t in self.unlink_tuples],
            "oracle_clean": [list(t) for t in self.oracle_clean],
            "discrepancies": {
                k: self.counts.get(k, 0)
                for k in (CLASSIFIER_YES_ORACLE_NO, ORACLE_CLEAN_CLASSIFIER_NO, JONES_SKIPPED)
            },
            "failed": self.failed,
        }


def summarize(findings) -> ScanSummary:
    summary = ScanSummary()
    for f in findings:
        summary.add(f)
    return summary
