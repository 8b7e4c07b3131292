"""Spectral thresholds for k-extendability, certification and sharpness checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .errors import PreconditionError
from .extendability import (
    EXHAUSTIVE_MAX_N,
    DeficiencyWitness,
    deficiency_witness,
    tutte_witness,
    unextendable_matching,
)
from .graph import Graph, build_family, is_connected
from .graph6 import to_graph6
from .matching import MATCHING_BUDGET, has_one_factor
from .polynomial import ROOT_TOLERANCE, Polynomial, largest_real_root
from .spectral import EIGEN_TOLERANCE, q_spectral_radius

DECISION_EPSILON = 1e-8
SHARPNESS_TOLERANCE = 1e-9


class Case(str, Enum):
    GENERAL = "general"
    N_EQ_2K6 = "n_eq_2k6"
    N_EQ_2K8 = "n_eq_2k8"


class Verdict(str, Enum):
    EXTENDABLE_BY_THEOREM = "ExtendableByTheorem"
    EXCEPTION = "Exception"
    PRECONDITION_FAILED = "PreconditionFailed"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ThresholdSpec:
    k: int
    n: int
    case: Case
    polynomial: Polynomial
    value: float
    # Largest root of the general cubic, reported for every case.
    cubic_root: float

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "case": self.case.value,
            "polynomial": [str(c) for c in self.polynomial.coeffs],
            "polynomial_text": str(self.polynomial),
            "value": self.value,
            "cubic_root": self.cubic_root,
        }


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    k: int
    n: int
    q_value: float | None
    threshold: float | None
    margin: float | None
    reasons: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "k": self.k,
            "n": self.n,
            "q": self.q_value,
            "theta": self.threshold,
            "margin": self.margin,
            "reasons": list(self.reasons),
        }


def _check_kn(k: int, n: int) -> None:
    if k < 0:
        raise PreconditionError(f"k={k} is negative", "k_nonnegative")
    if n % 2:
        raise PreconditionError(f"n={n} is odd", "n_even")
    if n < 2 * k + 4:
        raise PreconditionError(f"n={n} < 2k+4={2 * k + 4}", "n_at_least_2k4")


def threshold_cubic(k: int, n: int) -> Polynomial:
    """x^3 - (3n+2k-7)x^2 + (2n^2+6kn-7n-24k)x - 2(2k+1)(n-3)(n-4), integer coefficients."""
    return Polynomial.from_coeffs(
        [
            1,
            -(3 * n + 2 * k - 7),
            2 * n * n + 6 * k * n - 7 * n - 24 * k,
            -2 * (2 * k + 1) * (n - 3) * (n - 4),
        ]
    )


@lru_cache(maxsize=None)
def _cubic_root(k: int, n: int, tol: float) -> float:
    return largest_real_root(threshold_cubic(k, n), (0.0, 2.0 * (n - 1)), tol=tol)


def theta(k: int, n: int, tol: float = ROOT_TOLERANCE) -> float:
    """Largest root of the threshold cubic, for the general case only."""
    _check_kn(k, n)
    if n in (2 * k + 6, 2 * k + 8):
        raise PreconditionError(f"n={n} is a special case (2k+6 or 2k+8); use threshold()", "n_general")
    return _cubic_root(k, n, tol)


def threshold(k: int, n: int, tol: float = ROOT_TOLERANCE) -> ThresholdSpec:
    _check_kn(k, n)
    cubic = _cubic_root(k, n, tol)
    if n == 2 * k + 6:
        poly = Polynomial.from_coeffs([1, -(6 * k + 8), (2 * k + 2) * (4 * k + 2)])
        value = 3 * k + 4 + math.sqrt(k * k + 12 * k + 12)
        return ThresholdSpec(k, n, Case.N_EQ_2K6, poly, value, cubic)
    if n == 2 * k + 8:
        poly = Polynomial.from_coeffs([1, -(6 * k + 12), (2 * k + 3) * (4 * k + 4)])
        value = 3 * k + 6 + math.sqrt(k * k + 16 * k + 24)
        return ThresholdSpec(k, n, Case.N_EQ_2K8, poly, value, cubic)
    return ThresholdSpec(k, n, Case.GENERAL, threshold_cubic(k, n), cubic, cubic)


def exception_graph(k: int, n: int) -> Graph:
    """K_{2k} joined with (K_{n-2k-1} u K_1), the graph the theorem excludes."""
    _check_kn(k, n)
    if k == 0:
        raise PreconditionError("k=0 gives K_{n-1} u K_1, which is disconnected", "k_positive")
    return build_family(2 * k, [n - 2 * k - 1, 1])


def is_exception(G: Graph, k: int) -> bool:
    """G is isomorphic to K_{2k} v (K_{n-2k-1} u K_1).

    Equivalent structural test: some vertex of degree 2k whose removal leaves a
    complete graph.
    """
    n = G.n
    if k < 0 or n < 2 * k + 2:
        return False
    full = G.vertex_mask
    for v in range(n):
        if G.degree(v) != 2 * k:
            continue
        rest = full & ~(1 << v)
        if all(G.rows[u] & rest == rest & ~(1 << u) for u in range(n) if u != v):
            return True
    return False


def extremal_graph(k: int, n: int) -> Graph:
    """The graph attaining the threshold for (k, n) while failing k-extendability."""
    _check_kn(k, n)
    if n == 2 * k + 6:
        return build_family(2 * k + 2, [1] * 4)
    if n == 2 * k + 8:
        return build_family(2 * k + 3, [1] * 5)
    return build_family(2 * k + 1, [n - 2 * k - 3, 1, 1])


def certify(
    G: Graph,
    k: int,
    epsilon: float = DECISION_EPSILON,
    eigen_tol: float = EIGEN_TOLERANCE,
    root_tol: float = ROOT_TOLERANCE,
) -> Certificate:
    """Apply the spectral sufficient condition to G.

    ``ExtendableByTheorem`` needs q(G) - threshold > epsilon; a margin within
    epsilon of zero, or below it, is ``Inconclusive``.
    """
    n = G.n
    problems = []
    if k < 0:
        problems.append(f"k={k} is negative")
    if n == 0 or not is_connected(G):
        problems.append("G is not connected")
    if n % 2:
        problems.append(f"n={n} is odd")
    if n < 2 * k + 4:
        problems.append(f"n={n} < 2k+4={2 * k + 4}")
    if problems:
        return Certificate(Verdict.PRECONDITION_FAILED, k, n, None, None, None, tuple(problems))

    q = q_spectral_radius(G, tol=eigen_tol).value
    thr = threshold(k, n, tol=root_tol)
    margin = q - thr.value
    if is_exception(G, k):
        return Certificate(
            Verdict.EXCEPTION, k, n, q, thr.value, margin,
            (f"G is K_{{{2 * k}}} v (K_{{{n - 2 * k - 1}}} u K_1)",),
        )
    if margin > epsilon:
        return Certificate(
            Verdict.EXTENDABLE_BY_THEOREM, k, n, q, thr.value, margin,
            (f"q(G) exceeds the {thr.case.value} threshold by {margin:.6g}",),
        )
    if margin >= -epsilon:
        reason = f"|q(G) - threshold| <= {epsilon:g}; the strict inequality cannot be certified"
    else:
        reason = "q(G) is below the threshold; the condition does not apply"
    return Certificate(Verdict.INCONCLUSIVE, k, n, q, thr.value, margin, (reason,))


@dataclass
class SharpnessReport:
    k: int
    n: int
    graph6: str
    q: float
    threshold: float
    case: str
    spectral_match: bool
    direct_not_extendable: bool
    lemma_not_extendable: bool
    witness: DeficiencyWitness | None
    witness_is_core: bool
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "graph6": self.graph6,
            "q": self.q,
            "theta": self.threshold,
            "case": self.case,
            "spectral_match": self.spectral_match,
            "direct_not_extendable": self.direct_not_extendable,
            "lemma_not_extendable": self.lemma_not_extendable,
            "witness": self.witness.to_dict() if self.witness else None,
            "witness_is_core": self.witness_is_core,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def verify_sharpness(
    k: int,
    n: int,
    tol: float = SHARPNESS_TOLERANCE,
    eigen_tol: float = EIGEN_TOLERANCE,
    max_n: int = EXHAUSTIVE_MAX_N,
    budget: int = MATCHING_BUDGET,
) -> SharpnessReport:
    """Check that the extremal graph for (k, n) meets the threshold and is not k-extendable.

    For k = 0 the direct route is the 1-factor test and the subset route looks
    for a set S with o(G - S) > |S|.
    """
    G = extremal_graph(k, n)
    thr = threshold(k, n)
    q = q_spectral_radius(G, tol=eigen_tol).value
    core = G.blocks[0]
    failures = []

    spectral_match = abs(q - thr.value) <= tol
    if not spectral_match:
        failures.append(f"|q - threshold| = {abs(q - thr.value):.3e} > {tol:g}")

    if k == 0:
        direct_fails = not has_one_factor(G)
        witness = tutte_witness(G, max_n=max_n)
    else:
        direct_fails = unextendable_matching(G, k, budget=budget) is not None
        witness = deficiency_witness(G, k, max_n=max_n)
    if not direct_fails:
        failures.append("direct checker found the graph k-extendable")
    if witness is None:
        failures.append("subset scan found no violating set")
    witness_is_core = witness is not None and witness.S == core
    if witness is not None and not witness_is_core:
        failures.append(f"witness S={list(witness.S)} differs from the join core {list(core)}")

    return SharpnessReport(
        k=k, n=n, graph6=to_graph6(G), q=q, threshold=thr.value, case=thr.case.value,
        spectral_match=spectral_match, direct_not_extendable=direct_fails,
        lemma_not_extendable=witness is not None, witness=witness,
        witness_is_core=witness_is_core, failures=failures,
    )


@dataclass
class ExactVerdict:
    has_one_factor: bool
    direct: bool | None
    lemma: bool | None
    failing_matching: tuple | None
    witness: DeficiencyWitness | None

    @property
    def extendable(self) -> bool:
        return self.has_one_factor and bool(self.direct) and self.lemma is not False

    def to_dict(self) -> dict:
        return {
            "has_one_factor": self.has_one_factor,
            "direct": self.direct,
            "lemma": self.lemma,
            "failing_matching": [list(e) for e in self.failing_matching] if self.failing_matching else None,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def exact_verdict(
    G: Graph, k: int, max_n: int = EXHAUSTIVE_MAX_N, budget: int = MATCHING_BUDGET
) -> ExactVerdict:
    """Run both exact deciders; without a 1-factor G is not k-extendable for any k."""
    one = has_one_factor(G)
    if not one:
        witness = tutte_witness(G, max_n=max_n) if G.n % 2 == 0 else None
        return ExactVerdict(False, False if k == 0 else None, None, (), witness)
    failing = unextendable_matching(G, k, budget=budget)
    if k == 0:
        return ExactVerdict(True, True, None, None, None)
    witness = deficiency_witness(G, k, max_n=max_n)
    return ExactVerdict(True, failing is None, witness is None, failing, witness)


def valid_ks(n: int) -> range:
    """Every k for which the theorem speaks about graphs of order n."""
    return range(0, (n - 4) // 2 + 1) if n >= 4 and n % 2 == 0 else range(0)

