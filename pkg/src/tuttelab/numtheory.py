"""Integer helpers: primality, prime ranges, factoring, multiplicative order.

Thin wrappers over sympy so the rest of the package depends on one small
surface.
"""

from __future__ import annotations

from functools import lru_cache

import sympy
from sympy.ntheory import factorint as _factorint
from sympy.ntheory import n_order as _n_order


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


@lru_cache(maxsize=64)
def primes_upto(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    return tuple(int(q) for q in sympy.primerange(2, bound + 1))


def totient(n: int) -> int:
    return int(sympy.totient(n))


def multiplicative_order(a: int, m: int) -> int:
    return int(_n_order(a, m))


def factor_with_budget(n: int, trial_bound: int = 10**6, rho_steps: int = 200_000):
    """Factor ``|n|`` with trial division up to ``trial_bound`` then Pollard rho.

    Returns ``(factors, cofactor)`` where ``factors`` maps primes to
    exponents and ``cofactor`` is the unfactored part (1 on success).
    """
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    small = _factorint(n, limit=trial_bound, use_rho=False, use_pm1=False, use_ecm=False)
    factors: dict[int, int] = {}
    rest = 1
    for q, e in small.items():
        if q <= trial_bound or is_prime(q):
            factors[int(q)] = factors.get(int(q), 0) + e
        else:
            rest *= int(q) ** e
    stack = [rest] if rest > 1 else []
    cofactor = 1
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        power = sympy.perfect_power(m)
        if power:
            stack.extend([int(power[0])] * int(power[1]))
            continue
        d = sympy.pollard_rho(m, retries=3, max_steps=rho_steps)
        if d is None or d in (1, m):
            cofactor *= m
            continue
        stack.extend([int(d), m // int(d)])
    return dict(sorted(factors.items())), cofactor
