"""Exact HH^1 computations for bound quiver algebras and their relation-extensions."""

from .algebra import AlgebraBasis, NotCertifiedError, compute_basis
from .hochschild import PreconditionError, hh1_oracle, hh1_schurian
from .monomial import epsilon_report, hh1_monomial
from .presentation import Presentation, Relation, binomial, monomial
from .quiver import Arrow, Path, Quiver, quiver
from .relext import ExtensionPair, auto_relext_gentle, validate_pair
from .equivalence import verify_theorem

__version__ = "0.1.0"

__all__ = [
    "AlgebraBasis", "NotCertifiedError", "compute_basis", "PreconditionError",
    "hh1_oracle", "hh1_schurian", "hh1_monomial", "epsilon_report",
    "Presentation", "Relation", "binomial", "monomial",
    "Arrow", "Path", "Quiver", "quiver",
    "ExtensionPair", "auto_relext_gentle", "validate_pair", "verify_theorem",
]
