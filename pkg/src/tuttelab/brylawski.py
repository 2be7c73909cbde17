"""Brylawski polynomials: detection, coefficient relations, and factor bookkeeping.

U is an (n, r)-Brylawski polynomial when (y-1)^r U(y/(y-1), y) = c y^n for a
nonzero integer c.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (
    HyperbolaVanishing,
    InternalInconsistency,
    NotAFactorization,
    NotBrylawski,
    ParamMismatch,
    ZeroPolynomial,
)
from .polycore import BiPoly, hyperbola_substitute


@dataclass(frozen=True)
class BrylawskiParams:
    n: int
    r: int
    c: int

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "c": str(self.c)}


@dataclass(frozen=True)
class Relation:
    h: int
    lhs: int
    rhs: int
    ok: bool


def detect_brylawski(U: BiPoly) -> BrylawskiParams | None:
    """Parameters (n, r, c), or None when U is not Brylawski."""
    if not U:
        raise ZeroPolynomial("Brylawski detection on the zero polynomial")
    try:
        rho, Q, _ = hyperbola_substitute(U)
    except HyperbolaVanishing:
        return None
    nonzero = [k for k, c in enumerate(Q.coeffs) if c]
    if len(nonzero) != 1:
        return None
    n = nonzero[0]
    return BrylawskiParams(n, rho, Q.coeffs[n])


def require_brylawski(U: BiPoly) -> BrylawskiParams:
    params = detect_brylawski(U)
    if params is None:
        raise NotBrylawski(f"{U} is not a Brylawski polynomial")
    return params


def binom(a: int, b: int) -> int:
    """C(a, b), zero when b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def relation_lhs(U: BiPoly, h: int) -> int:
    total = 0
    for (i, j), u in U.terms.items():
        if i + j <= h:
            total += (-1) ** j * binom(h - i, j) * u
    return total


def relation_rhs(params: BrylawskiParams, h: int) -> int:
    n, r, c = params.n, params.r, params.c
    return c * (-1) ** ((n - r) % 2) * binom(h - r, h - n)


def brylawski_relations(U: BiPoly, params: BrylawskiParams, h_max: int | None = None) -> list[Relation]:
    """Evaluate sum_{i+j<=h} (-1)^j C(h-i, j) u_ij = c (-1)^(n-r) C(h-r, h-n) for h = 0..h_max."""
    found = detect_brylawski(U)
    if found != params:
        raise ParamMismatch(f"expected {params}, polynomial has {found}")
    if h_max is None:
        h_max = params.n + 2
    out = []
    for h in range(h_max + 1):
        lhs, rhs = relation_lhs(U, h), relation_rhs(params, h)
        out.append(Relation(h, lhs, rhs, lhs == rhs))
    return out


def factor_params(T: BiPoly, U: BiPoly, V: BiPoly) -> tuple[tuple[int, int], tuple[int, int]]:
    """Split the parameters of a Brylawski T = U V into those of U and V."""
    if U * V != T:
        raise NotAFactorization("T is not the product U V")
    pt = require_brylawski(T)
    pu, pv = detect_brylawski(U), detect_brylawski(V)
    if pu is None or pv is None:
        raise InternalInconsistency("a factor of a Brylawski polynomial is not Brylawski")
    if (pu.n + pv.n, pu.r + pv.r, pu.c * pv.c) != (pt.n, pt.r, pt.c) or not 0 <= pv.n <= pt.n:
        raise InternalInconsistency(f"parameters {pu}, {pv} do not add up to {pt}")
    return (pu.n, pu.r), (pv.n, pv.r)
