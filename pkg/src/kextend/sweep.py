"""Falsification harness: certify a corpus and cross-check against the exact deciders."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .config import RunConfig
from .errors import KExtendError
from .extendability import deficiency_witness, is_k_extendable_direct
from .graph import Graph
from .graph6 import parse_graph6, to_graph6
from .theorem import Verdict, certify, exact_verdict, valid_ks

EXACT_MODES = ("none", "certified", "all")


def evaluate(graph6: str, k: int, config: RunConfig, exact: str = "certified") -> dict:
    """Certificate (and exact verdict when requested) for one (graph, k) pair."""
    G = parse_graph6(graph6)
    record = {"graph6": graph6, "n": G.n, "k": k, "error": None, "exact": None,
              "agree": None, "counterexample": False}
    cert = certify(G, k, epsilon=config.decision_epsilon, eigen_tol=config.eigen_tolerance,
                   root_tol=config.root_tolerance)
    record.update(cert.to_dict())
    certified = cert.verdict is Verdict.EXTENDABLE_BY_THEOREM
    run = exact == "all" and cert.verdict is not Verdict.PRECONDITION_FAILED or exact != "none" and certified
    if run:
        try:
            ev = exact_verdict(G, k, max_n=config.max_n, budget=config.matching_budget)
        except KExtendError as exc:
            record["error"] = f"{type(exc).__name__}: {exc}"
            return record
        record["exact"] = ev.to_dict()
        if ev.lemma is not None:
            record["agree"] = ev.direct == ev.lemma
        record["counterexample"] = certified and not ev.extendable
    return record


def _evaluate_packed(args: tuple) -> dict:
    return evaluate(*args)


@dataclass
class SweepReport:
    records: list[dict]
    config: dict = field(default_factory=dict)

    @property
    def counterexamples(self) -> list[dict]:
        return [r for r in self.records if r["counterexample"]]

    @property
    def disagreements(self) -> list[dict]:
        return [r for r in self.records if r["agree"] is False]

    def summary(self) -> dict:
        verdicts = Counter(r["verdict"] for r in self.records)
        return {
            "pairs": len(self.records),
            "graphs": len({r["graph6"] for r in self.records}),
            "verdicts": dict(sorted(verdicts.items())),
            "exact_checked": sum(r["exact"] is not None for r in self.records),
            "counterexamples": len(self.counterexamples),
            "disagreements": len(self.disagreements),
            "errors": sum(r["error"] is not None for r in self.records),
        }

    def to_dict(self) -> dict:
        return {"summary": self.summary(), "config": self.config, "records": self.records}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    def to_csv(self) -> str:
        cols = ["graph6", "n", "k", "verdict", "q", "theta", "margin", "counterexample", "agree", "error"]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(self.records)
        return buf.getvalue()


def sweep(
    graphs: Iterable[Graph],
    ks: Sequence[int] | None = None,
    config: RunConfig | None = None,
    exact: str = "certified",
) -> SweepReport:
    """Certify every (graph, k) pair; with ``ks=None`` each graph gets every valid k.

    Pairs are evaluated in parallel when ``config.workers > 1``; records always
    come back in input order.
    """
    if exact not in EXACT_MODES:
        raise ValueError(f"exact must be one of {EXACT_MODES}")
    config = config or RunConfig()
    jobs = []
    for G in graphs:
        g6 = to_graph6(G)
        for k in (ks if ks is not None else valid_ks(G.n)):
            jobs.append((g6, k, config, exact))
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_evaluate_packed, jobs, chunksize=max(1, len(jobs) // (8 * config.workers))))
    else:
        records = [_evaluate_packed(job) for job in jobs]
    return SweepReport(records, config.to_dict())


def compare_deciders(graphs: Iterable[Graph], max_n: int | None = None) -> dict:
    """Run both exact deciders on every graph that has a 1-factor, for every
    1 <= k <= (n-2)/2, and collect the pairs where they disagree."""
    from .matching import has_one_factor

    checked = 0
    graphs_used = 0
    disagreements = []
    kwargs = {} if max_n is None else {"max_n": max_n}
    for G in graphs:
        if G.n % 2 or not has_one_factor(G):
            continue
        graphs_used += 1
        for k in range(1, (G.n - 2) // 2 + 1):
            direct = is_k_extendable_direct(G, k)
            witness = deficiency_witness(G, k, **kwargs)
            checked += 1
            if direct != (witness is None):
                disagreements.append({"graph6": to_graph6(G), "k": k, "direct": direct,
                                      "witness": witness.to_dict() if witness else None})
    return {"graphs": graphs_used, "pairs": checked, "disagreements": disagreements}
