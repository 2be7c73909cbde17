"""Cycle-type densities, the large-sieve bound shape and the coprime-combination experiment."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial

import numpy as np
from sympy.utilities.iterables import partitions as _sympy_partitions

from .errors import (
    DegreeDrop,
    DegreeTooSmall,
    InvalidParameters,
    NotAPartition,
    NotCoprime,
    NotMonicSameDegree,
    NotSquarefreeOverQy,
)
from .galoiscert import FULL_SYMMETRIC, certify_symmetric
from .numtheory import is_prime
from .polycore import BiPoly, _mp_gcd, _trim, discriminant_x, resultant_x

IRR = "Irr"
TRANSPOSITIONS = "Transpositions"
LONG_PRIME_CYCLES = "LongPrimeCycles"
KINDS = (IRR, TRANSPOSITIONS, LONG_PRIME_CYCLES)

ENUMERATION_LIMIT = 24


def partitions(r: int):
    """Partitions of r as tuples (a_1, ..., a_r)."""
    for part in _sympy_partitions(r):
        a = [0] * r
        for i, m in part.items():
            a[i - 1] = m
        yield tuple(a)


def cycle_type_density(lam) -> Fraction:
    """Proportion of S_r with cycle type lam = (a_1, ..., a_r)."""
    lam = tuple(int(a) for a in lam)
    r = len(lam)
    if any(a < 0 for a in lam) or sum((i + 1) * a for i, a in enumerate(lam)) != r:
        raise NotAPartition(f"{lam} is not a partition of {r}")
    denom = 1
    for i, a in enumerate(lam, start=1):
        denom *= i ** a * factorial(a)
    return Fraction(1, denom)


def in_family(kind: str, lam: tuple) -> bool:
    r = len(lam)
    if kind == IRR:
        return lam[-1] == 1
    if kind == TRANSPOSITIONS:
        return r >= 2 and lam[1] == 1 and all(lam[i - 1] == 0 for i in range(4, r + 1, 2))
    if kind == LONG_PRIME_CYCLES:
        return any(lam[q - 1] == 1 for q in range(r // 2 + 1, r + 1) if is_prime(q))
    raise InvalidParameters(f"unknown family {kind}")


def family_members(kind: str, r: int):
    return (lam for lam in partitions(r) if in_family(kind, lam))


def odd_cycle_fractions(m: int) -> list[Fraction]:
    """f_k = proportion of S_k whose cycles are all odd, k = 0..m.

    The exponential generating function sqrt((1+x)/(1-x)) satisfies
    f' = f / (1 - x^2).
    """
    f = [Fraction(1)]
    for k in range(m):
        f.append(sum(f[k - i] for i in range(0, k + 1, 2)) / (k + 1))
    return f


def family_density_closed(kind: str, r: int) -> Fraction:
    if kind == IRR:
        return Fraction(1, r)
    if kind == TRANSPOSITIONS:
        return odd_cycle_fractions(r - 2)[r - 2] / 2
    if kind == LONG_PRIME_CYCLES:
        # a q-cycle with q > r/2 is unique when present, and 1/q of S_r has one
        return sum((Fraction(1, q) for q in range(r // 2 + 1, r + 1) if is_prime(q)), Fraction(0))
    raise InvalidParameters(f"unknown family {kind}")


def family_density(kind: str, r: int, method: str = "auto") -> Fraction:
    if kind not in KINDS:
        raise InvalidParameters(f"unknown family {kind}")
    if r < 2:
        raise DegreeTooSmall(f"need r >= 2, got {r}")
    if method == "closed" or (method == "auto" and r > ENUMERATION_LIMIT):
        return family_density_closed(kind, r)
    total = sum((cycle_type_density(lam) for lam in family_members(kind, r)), Fraction(0))
    if method == "auto":
        assert total == family_density_closed(kind, r)
    return total


def density_table(r: int) -> list[tuple[tuple, Fraction, tuple]]:
    """(partition, density, families it belongs to) for every partition of r."""
    if r < 1:
        raise DegreeTooSmall(f"need r >= 1, got {r}")
    rows = []
    for lam in partitions(r):
        fams = tuple(k for k in KINDS if r >= 2 and in_family(k, lam))
        rows.append((lam, cycle_type_density(lam), fams))
    return rows


# ---------------------------------------------------------------------------
# bound shape

BOUND_DIGITS = 40


def gallagher_bound(r: int, s: int, N: int) -> Fraction:
    """r^2 (1 + 1/log r)^(2s) log N / sqrt N with implied constant 1, to 1e-12 or better."""
    if r < 2 or s < 1 or N < 2:
        raise InvalidParameters(f"need r >= 2, s >= 1, N >= 2, got r={r}, s={s}, N={N}")
    with localcontext() as ctx:
        ctx.prec = BOUND_DIGITS
        lr = Decimal(r).ln()
        value = Decimal(r * r) * (1 + 1 / lr) ** (2 * s) * Decimal(N).ln() / Decimal(N).sqrt()
    return Fraction(value)


# ---------------------------------------------------------------------------
# the (F0, F1, F2) triple


def _is_monic_x(T: BiPoly) -> bool:
    top = T.x_coeffs()[-1]
    return top.degree == 0 and top.lc == 1


def build_F_triple(T1: BiPoly, T2: BiPoly) -> tuple[BiPoly, BiPoly, BiPoly]:
    """F1 = T1, F2 = T1 - T2, F0 = x F2."""
    r = T1.deg_x
    if not (_is_monic_x(T1) and _is_monic_x(T2)) or T2.deg_x != r or r < 2:
        raise NotMonicSameDegree("both polynomials must be monic in x of the same degree >= 2")
    if T1 == T2 or not resultant_x(T1, T2):
        raise NotCoprime("the polynomials share a factor")
    for T in (T1, T2):
        if not discriminant_x(T):
            raise NotSquarefreeOverQy("input is not squarefree in x")
    F1 = T1
    F2 = T1 - T2
    F0 = BiPoly.x() * F2
    return F0, F1, F2


def _spec_mod(F: BiPoly, t: int, p: int) -> list:
    return _trim([c % p for c in F.specialize_y(t).coeffs])


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = max((len(r) for r in m), default=0)
    for r in m:
        r.extend([0] * (cols - len(r)))
    for c in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [v * inv % p for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _sub_scaled(a: list, b: list, beta: int, p: int) -> list:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - beta * y) % p for x, y in zip(a, b)])


def _gcd_deg(a: list, b: list, p: int) -> int:
    if not a and not b:
        return -1
    if not a:
        return len(b) - 1
    if not b:
        return len(a) - 1
    return len(_mp_gcd(a, b, p)) - 1


def check_H1_H2(triple, t: int, p: int, samples: int = 64, seed: int = 0) -> dict:
    if not is_prime(p):
        raise InvalidParameters(f"{p} is not prime")
    F0, F1, F2 = triple
    specs = []
    for name, F in zip(("F0", "F1", "F2"), triple):
        f = _spec_mod(F, t, p)
        if len(f) - 1 != F.deg_x:
            raise DegreeDrop(f"{name} drops degree at t={t} mod {p}")
        specs.append(f)
    f0, f1, f2 = specs
    pair = {
        "F0,F1": _gcd_deg(f0, f1, p),
        "F0,F2": _gcd_deg(f0, f2, p),
        "F1,F2": _gcd_deg(f1, f2, p),
    }
    g = _mp_gcd(_mp_gcd(f0, f1, p), f2, p) if f2 else _mp_gcd(f0, f1, p)
    rank = _rank_mod_p(specs, p)
    h1 = len(g) == 1 and rank == 3
    if p * p <= samples:
        betas = [(b0, b1) for b0 in range(p) for b1 in range(p)]
    else:
        rng = np.random.Generator(np.random.Philox(key=[seed, p]))
        betas = [tuple(int(v) for v in rng.integers(0, p, 2)) for _ in range(samples)]
    degrees = [_gcd_deg(_sub_scaled(f0, f2, b0, p), _sub_scaled(f1, f2, b1, p), p) for b0, b1 in betas]
    return {
        "t": t,
        "p": p,
        "H1": h1,
        "global_gcd_degree": len(g) - 1,
        "pairwise_gcd_degrees": pair,
        "rank": rank,
        "H2_sampled_pairs": len(betas),
        "H2_max_gcd_degree": max(degrees),
        "H2": max(degrees) <= 1,
        "totally_composite": "skipped",
    }


# ---------------------------------------------------------------------------
# Monte-Carlo experiment


@dataclass
class SieveReport:
    N: int
    trials: int
    uncertified_count: int
    seed: int
    r: int
    s: int
    bound_value: Fraction
    mode: str
    budgets: tuple
    degree_distribution: dict = field(default_factory=dict)
    conclusions: dict = field(default_factory=dict)

    @property
    def uncertified_fraction(self) -> Fraction:
        return Fraction(self.uncertified_count, self.trials)

    def binomial_sigma(self) -> float:
        q = float(self.uncertified_fraction)
        return (q * (1 - q) / self.trials) ** 0.5

    def to_json(self) -> dict:
        q = self.uncertified_fraction
        return {
            "N": self.N,
            "trials": self.trials,
            "uncertified_count": self.uncertified_count,
            "uncertified_fraction": f"{q.numerator}/{q.denominator}",
            "bound_value": f"{self.bound_value.numerator}/{self.bound_value.denominator}",
            "bound_float": float(self.bound_value),
            "seed": self.seed,
            "r": self.r,
            "s": self.s,
            "mode": self.mode,
            "t_budget": self.budgets[0],
            "p_budget": self.budgets[1],
            "degree_distribution": {str(k): v for k, v in sorted(self.degree_distribution.items())},
            "conclusions": dict(sorted(self.conclusions.items())),
            "note": "uncertified counts over-count non-maximal instances",
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def trial_pair(seed: int, trial: int, N: int) -> tuple[int, int]:
    """(n1, n2) uniform in [-N, N]^2 from a Philox stream keyed by (seed, trial)."""
    rng = np.random.Generator(np.random.Philox(key=[seed, trial]))
    n1, n2 = rng.integers(-N, N + 1, size=2)
    return int(n1), int(n2)


def combination(T1: BiPoly, T2: BiPoly, n1: int, n2: int) -> BiPoly:
    """(x + n1) T1 - (x + n2) T2, which equals F0 + (n1 - n2) F1 + n2 F2."""
    x = BiPoly.x()
    return (x + n1) * T1 - (x + n2) * T2


def _run_trial(args) -> tuple[int, str]:
    T1, T2, n1, n2, t_budget, p_budget = args
    F = combination(T1, T2, n1, n2)
    if F.deg_x < 1:
        return F.deg_x, "DegreeZero"
    try:
        cert = certify_symmetric(F, t_budget, p_budget)
    except NotSquarefreeOverQy:
        return F.deg_x, "NotSquarefree"
    return F.deg_x, cert.conclusion


def monte_carlo_nonmax(T1: BiPoly, T2: BiPoly, N: int, trials: int, seed: int,
                       t_budget: int = 5, p_budget: int = 100, exhaustive: bool = False,
                       workers: int = 1) -> SieveReport:
    if N < 2:
        raise InvalidParameters("N must be at least 2")
    build_F_triple(T1, T2)
    if exhaustive:
        if N > 50:
            raise InvalidParameters("exhaustive mode needs N <= 50")
        pairs = [(a, b) for a in range(-N, N + 1) for b in range(-N, N + 1)]
    else:
        if not 1 <= trials <= 10**6:
            raise InvalidParameters("trials must be in [1, 10^6]")
        pairs = [trial_pair(seed, k, N) for k in range(trials)]
    jobs = [(T1, T2, a, b, t_budget, p_budget) for a, b in pairs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=64))
    else:
        results = [_run_trial(j) for j in jobs]
    degrees: dict[int, int] = {}
    conclusions: dict[str, int] = {}
    for d, c in results:
        degrees[d] = degrees.get(d, 0) + 1
        conclusions[c] = conclusions.get(c, 0) + 1
    uncertified = len(results) - conclusions.get(FULL_SYMMETRIC, 0)
    r = T1.deg_x
    return SieveReport(
        N=N,
        trials=len(results),
        uncertified_count=uncertified,
        seed=seed,
        r=r,
        s=2,
        bound_value=gallagher_bound(r, 2, N),
        mode="exhaustive" if exhaustive else "sampled",
        budgets=(t_budget, p_budget),
        degree_distribution=degrees,
        conclusions=conclusions,
    )

