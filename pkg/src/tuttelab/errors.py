"""Exception taxonomy shared by every module.

Each exception carries a stable ``kind`` (its class name); the CLI serialises
errors as ``{"error": {"kind": ..., "detail": ...}}``.
"""

from __future__ import annotations


class TuttelabError(Exception):
    @property
    def kind(self) -> str:
        return type(self).__name__

    def to_json(self) -> dict:
        return {"error": {"kind": self.kind, "detail": str(self)}}


# polynomial arithmetic
class ZeroPolynomial(TuttelabError):
    pass


class HyperbolaVanishing(ZeroPolynomial):
    """U(y/(y-1), y) is identically zero, i.e. xy - x - y divides U."""


class ConstantPolynomial(TuttelabError):
    pass


class NotPrime(TuttelabError, ValueError):
    pass


class DivisionInexact(TuttelabError, ArithmeticError):
    pass


# ranked sets
class GroundsetTooLarge(TuttelabError, ValueError):
    pass


class InvalidRankFunction(TuttelabError, ValueError):
    pass


class InvalidParameters(TuttelabError, ValueError):
    pass


# Brylawski polynomials and irreducibility
class NotBrylawski(TuttelabError):
    pass


class ParamMismatch(TuttelabError):
    pass


class NotAFactorization(TuttelabError):
    pass


class InternalInconsistency(TuttelabError):
    pass


class RankOutOfRange(TuttelabError):
    pass


# Galois certificates
class NotSquarefreeOverQy(TuttelabError):
    pass


class DegreeZero(TuttelabError):
    pass


class NotARoot(TuttelabError, ValueError):
    pass


class FactorizationBudgetExceeded(TuttelabError):
    pass


class CertificateInvalid(TuttelabError):
    pass


# sieve experiment
class NotAPartition(TuttelabError, ValueError):
    pass


class DegreeTooSmall(TuttelabError, ValueError):
    pass


class NotCoprime(TuttelabError):
    pass


class NotMonicSameDegree(TuttelabError):
    pass


class DegreeDrop(TuttelabError):
    pass
