"""Corank-nullity polynomials of ranked sets: irreducibility and Galois certificates."""

from __future__ import annotations

from .brylawski import BrylawskiParams, brylawski_relations, detect_brylawski, factor_params
from .errors import TuttelabError
from .galoiscert import SymmetricGroupCertificate, certify_symmetric, verify_certificate
from .irred import IrredVerdict, irreducibility_verdict, newton_polygon, polygon_indecomposable
from .polycore import BiPoly, FactorPattern, UniPoly, discriminant, parse_bi, resultant
from .rankedset import Graph, RankFunction, corank_nullity, direct_sum, dual, graphic_rank

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BrylawskiParams",
    "FactorPattern",
    "Graph",
    "IrredVerdict",
    "RankFunction",
    "SymmetricGroupCertificate",
    "TuttelabError",
    "UniPoly",
    "brylawski_relations",
    "certify_symmetric",
    "corank_nullity",
    "detect_brylawski",
    "direct_sum",
    "discriminant",
    "dual",
    "factor_params",
    "graphic_rank",
    "irreducibility_verdict",
    "newton_polygon",
    "parse_bi",
    "polygon_indecomposable",
    "resultant",
    "verify_certificate",
]
