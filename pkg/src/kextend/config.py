"""Run configuration shared by the CLI and the sweep harness."""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import asdict, dataclass, fields, replace

from .errors import InputError
from .extendability import EXHAUSTIVE_MAX_N
from .matching import MATCHING_BUDGET
from .polynomial import ROOT_TOLERANCE
from .spectral import EIGEN_TOLERANCE
from .theorem import DECISION_EPSILON

ENV_PREFIX = "KEXTEND_"
FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    eigen_tolerance: float = EIGEN_TOLERANCE
    decision_epsilon: float = DECISION_EPSILON
    root_tolerance: float = ROOT_TOLERANCE
    max_n: int = EXHAUSTIVE_MAX_N
    matching_budget: int = MATCHING_BUDGET
    workers: int = 1
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("eigen_tolerance", "decision_epsilon", "root_tolerance"):
            if not getattr(self, name) > 0:
                raise InputError(f"{name} must be positive")
        for name in ("max_n", "matching_budget", "workers"):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be at least 1")
        if self.output_format not in FORMATS:
            raise InputError(f"output format must be one of {FORMATS}")

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> RunConfig:
        """Defaults overridden by ``KEXTEND_<FIELD>`` variables, e.g. KEXTEND_DECISION_EPSILON."""
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is None:
                continue
            kind = type(f.default)
            try:
                values[f.name] = kind(raw) if kind is not int else int(raw, 0)
            except ValueError as exc:
                raise InputError(f"bad value for {ENV_PREFIX}{f.name.upper()}: {raw!r}") from exc
        return cls(**values)

    def with_overrides(self, **overrides) -> RunConfig:
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> dict:
        return asdict(self)
