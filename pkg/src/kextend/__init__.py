"""Spectral sufficient conditions for k-extendable graphs, with exact checkers."""

from __future__ import annotations

from .errors import BudgetExceeded, ConvergenceError, Graph6Error, InputError, PreconditionError
from .extendability import (
    DeficiencyWitness,
    deficiency_witness,
    is_k_extendable_direct,
    is_k_extendable_lemma,
    tutte_witness,
    unextendable_matching,
)
from .graph import Graph, build_family, complete, is_connected
from .graph6 import parse_graph6, to_graph6
from .matching import enumerate_matchings, extends_to_one_factor, has_one_factor, maximum_matching
from .spectral import (
    char_poly,
    largest_eigenvalue,
    q_spectral_radius,
    quotient_matrix,
    quotient_spectral_radius,
    signless_laplacian,
)
from .theorem import (
    Certificate,
    Verdict,
    certify,
    exception_graph,
    extremal_graph,
    is_exception,
    theta,
    threshold,
    verify_sharpness,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Certificate",
    "ConvergenceError",
    "DeficiencyWitness",
    "Graph",
    "Graph6Error",
    "InputError",
    "PreconditionError",
    "Verdict",
    "build_family",
    "certify",
    "char_poly",
    "complete",
    "deficiency_witness",
    "enumerate_matchings",
    "exception_graph",
    "extends_to_one_factor",
    "extremal_graph",
    "has_one_factor",
    "is_connected",
    "is_exception",
    "is_k_extendable_direct",
    "is_k_extendable_lemma",
    "largest_eigenvalue",
    "maximum_matching",
    "parse_graph6",
    "q_spectral_radius",
    "quotient_matrix",
    "quotient_spectral_radius",
    "signless_laplacian",
    "theta",
    "threshold",
    "to_graph6",
    "tutte_witness",
    "unextendable_matching",
    "verify_sharpness",
]
