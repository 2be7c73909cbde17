"""Certificates that a bivariate polynomial has full symmetric Galois group over Q(y).

The search specializes y = t, reduces mod p and reads off factorization
patterns.  A squarefree, degree-preserving reduction has the cycle type of a
Frobenius element of Gal(T(x, t)/Q), which embeds into Gal over Q(y).  A
transitive group of degree r containing a transposition and a q-cycle with q
prime and q > r/2 is the whole symmetric group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, gcd

from .errors import (
    CertificateInvalid,
    DegreeZero,
    InvalidParameters,
    NotARoot,
    NotBrylawski,
    NotSquarefreeOverQy,
    RankOutOfRange,
)
from .irred import criterion_A, t_order
from .numtheory import factor_with_budget, is_prime, multiplicative_order, primes_upto, totient
from .polycore import (
    BiPoly,
    FactorPattern,
    UniPoly,
    discriminant,
    discriminant_x,
    factor_pattern,
    reduce_mod,
    uni_gcd,
)

FULL_SYMMETRIC = "FullSymmetric"
TRANSITIVE_ONLY = "TransitiveOnly"
INCONCLUSIVE = "Inconclusive"

FULL_CYCLE = "FullCycle"
TRANSPOSITION = "Transposition"
LONG_PRIME_CYCLE = "LongPrimeCycle"

SOUNDNESS_CHAIN = (
    "pattern of a squarefree degree-preserving reduction mod p is the cycle type of a Frobenius in Gal(T(x,t)/Q)",
    "Gal(T(x,t)/Q) embeds in Gal(T/Q(y)) when T(x,t) is separable of full degree",
    "a transitive subgroup of S_r with a transposition and a prime q-cycle, q > r/2, is S_r",
)


def required_kinds(r: int) -> tuple[str, ...]:
    if r <= 2:
        return (FULL_CYCLE,)
    if r == 3:
        return (FULL_CYCLE, TRANSPOSITION)
    return (FULL_CYCLE, TRANSPOSITION, LONG_PRIME_CYCLE)


def long_prime(pattern: FactorPattern, r: int) -> int | None:
    """Smallest prime q > r/2 with a_q >= 1, if any."""
    for d, _ in pattern.degree_counts:
        if 2 * d > r and is_prime(d):
            return d
    return None


def classify(pattern: FactorPattern, r: int) -> list[str]:
    kinds = []
    if pattern.degree_counts == ((r, 1),):
        kinds.append(FULL_CYCLE)
    counts = pattern.as_dict()
    if counts.get(2, 0) == 1 and all(a == 0 for d, a in counts.items() if d % 2 == 0 and d != 2):
        kinds.append(TRANSPOSITION)
    if long_prime(pattern, r) is not None:
        kinds.append(LONG_PRIME_CYCLE)
    return kinds


@dataclass(frozen=True)
class CycleEvidence:
    kind: str
    t: int
    p: int
    pattern: FactorPattern
    q: int | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "t": self.t, "p": self.p, "pattern": self.pattern.to_json()}
        if self.q is not None:
            out["q"] = self.q
        return out

    @classmethod
    def from_json(cls, data: dict) -> CycleEvidence:
        q = data.get("q")
        return cls(str(data["kind"]), int(data["t"]), int(data["p"]),
                   FactorPattern.from_json(data["pattern"]), None if q is None else int(q))


def _lc_x(T: BiPoly) -> UniPoly:
    return T.x_coeffs()[-1]


def reduction_pattern(T: BiPoly, t: int, p: int) -> FactorPattern | None:
    """Pattern of T(x, t) mod p, or None when the reduction drops degree or is not squarefree."""
    f = T.specialize_y(t)
    if f.degree != T.deg_x or f.degree < 1 or f.lc % p == 0:
        return None
    return factor_pattern(reduce_mod(f, p))


def scan_patterns(T: BiPoly, t_budget: int, p_budget: int):
    """Yield (t, p, pattern) over good reductions in deterministic order."""
    r = T.deg_x
    lc = _lc_x(T)
    ts = [0] if T.deg_y <= 0 else t_order(t_budget)
    primes = primes_upto(p_budget)
    for t in ts:
        lct = lc(t)
        if lct == 0:
            continue
        f = T.specialize_y(t)
        disc = discriminant(f) if r >= 2 else 1
        if disc == 0:
            continue
        for p in primes:
            # p | disc with p not dividing lc is exactly a repeated factor mod p
            if lct % p == 0 or disc % p == 0:
                continue
            pattern = factor_pattern(reduce_mod(f, p))
            if pattern is not None:
                yield t, p, pattern


@dataclass
class SymmetricGroupCertificate:
    poly: BiPoly
    r: int
    conclusion: str
    evidence: tuple = ()
    transitivity: str | None = None
    notes: tuple = ()
    budgets: tuple = (0, 0)

    def evidence_of(self, kind: str) -> CycleEvidence | None:
        for e in self.evidence:
            if e.kind == kind:
                return e
        return None

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "conclusion": self.conclusion,
            "transitivity": self.transitivity,
            "evidence": [e.to_json() for e in self.evidence],
            "poly": self.poly.to_json(),
            "t_budget": self.budgets[0],
            "p_budget": self.budgets[1],
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data: dict) -> SymmetricGroupCertificate:
        try:
            return cls(
                poly=BiPoly.from_json(data["poly"]),
                r=int(data["r"]),
                conclusion=str(data["conclusion"]),
                evidence=tuple(CycleEvidence.from_json(e) for e in data.get("evidence", [])),
                transitivity=data.get("transitivity"),
                notes=tuple(data.get("notes", [])),
                budgets=(int(data.get("t_budget", 0)), int(data.get("p_budget", 0))),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CertificateInvalid(f"malformed certificate: {exc}") from exc


def _criterion_a_holds(T: BiPoly) -> bool:
    try:
        return criterion_A(T).is_irreducible
    except (NotBrylawski, RankOutOfRange):
        return False


def certify_symmetric(T: BiPoly, t_budget: int = 50, p_budget: int = 500) -> SymmetricGroupCertificate:
    r = T.deg_x
    if r < 1:
        raise DegreeZero("x-degree must be at least 1")
    budgets = (t_budget, p_budget)
    if r == 1:
        return SymmetricGroupCertificate(T, 1, FULL_SYMMETRIC, notes=("degree 1: S_1",), budgets=budgets)

    need = required_kinds(r)
    found: dict[str, CycleEvidence] = {}
    seen_good = False
    for t, p, pattern in scan_patterns(T, t_budget, p_budget):
        seen_good = True
        for kind in classify(pattern, r):
            if kind not in found:
                q = long_prime(pattern, r) if kind == LONG_PRIME_CYCLE else None
                found[kind] = CycleEvidence(kind, t, p, pattern, q)
        if all(k in found for k in need):
            break
    if not seen_good and not discriminant_x(T):
        raise NotSquarefreeOverQy("disc_x(T) vanishes identically")

    transitivity = None
    if FULL_CYCLE in found:
        transitivity = FULL_CYCLE
    elif _criterion_a_holds(T):
        transitivity = "CriterionA"

    order = [FULL_CYCLE, TRANSPOSITION, LONG_PRIME_CYCLE]
    evidence = tuple(found[k] for k in order if k in found)
    rest = [k for k in need if k != FULL_CYCLE]
    notes = [f"searched |t| <= {t_budget}, p <= {p_budget}"]
    if transitivity is not None and all(k in found for k in rest):
        conclusion = FULL_SYMMETRIC
        notes.extend(SOUNDNESS_CHAIN)
    elif transitivity is not None:
        conclusion = TRANSITIVE_ONLY
        notes.append("missing: " + ", ".join(k for k in rest if k not in found))
    else:
        conclusion = INCONCLUSIVE
        notes.append("no transitivity witness within budget")
    return SymmetricGroupCertificate(T, r, conclusion, evidence, transitivity, tuple(notes), budgets)


def verify_evidence(T: BiPoly, e: CycleEvidence) -> None:
    r = T.deg_x
    if not is_prime(e.p):
        raise CertificateInvalid(f"{e.p} is not prime")
    pattern = reduction_pattern(T, e.t, e.p)
    if pattern is None:
        raise CertificateInvalid(f"reduction at t={e.t}, p={e.p} is not squarefree of full degree")
    if pattern != e.pattern:
        raise CertificateInvalid(f"pattern at t={e.t}, p={e.p} is {pattern}, recorded {e.pattern}")
    if e.kind not in classify(pattern, r):
        raise CertificateInvalid(f"pattern {pattern} is not of kind {e.kind}")
    if e.kind == LONG_PRIME_CYCLE and (e.q is None or not is_prime(e.q) or 2 * e.q <= r or pattern.count(e.q) < 1):
        raise CertificateInvalid(f"q = {e.q} is not a long prime cycle of {pattern}")


def verify_certificate(cert) -> bool:
    """Re-check a certificate from its witnesses; raises CertificateInvalid."""
    if isinstance(cert, dict):
        cert = SymmetricGroupCertificate.from_json(cert)
    T = cert.poly
    r = T.deg_x
    if r != cert.r:
        raise CertificateInvalid(f"recorded degree {cert.r}, polynomial has degree {r}")
    kinds = set()
    for e in cert.evidence:
        verify_evidence(T, e)
        kinds.add(e.kind)
    if cert.conclusion == INCONCLUSIVE:
        return True
    if cert.conclusion not in (FULL_SYMMETRIC, TRANSITIVE_ONLY):
        raise CertificateInvalid(f"unknown conclusion {cert.conclusion}")
    if r == 1:
        return True
    if cert.transitivity == FULL_CYCLE:
        if FULL_CYCLE not in kinds:
            raise CertificateInvalid("transitivity claimed by a missing full cycle")
    elif cert.transitivity == "CriterionA":
        if not _criterion_a_holds(T):
            raise CertificateInvalid("criterion A does not hold")
    else:
        raise CertificateInvalid("no transitivity witness")
    if cert.conclusion == FULL_SYMMETRIC:
        missing = [k for k in required_kinds(r) if k != FULL_CYCLE and k not in kinds]
        if missing:
            raise CertificateInvalid("missing evidence: " + ", ".join(missing))
    return True


# ---------------------------------------------------------------------------
# family analyzers


def two_valued_bound(n: int, r: int) -> dict:
    """Upper bound r*phi(r) on the group order of the two-valued family."""
    if not 1 <= r <= n:
        raise InvalidParameters(f"need 1 <= r <= n, got n={n}, r={r}")
    y = UniPoly((0, 1))
    g = (y - 1) ** n - y ** n
    precondition_ok = uni_gcd(g, g.derivative()).degree == 0
    bound = r * totient(r)
    out = {"n": n, "r": r, "bound": bound, "precondition_ok": precondition_ok}
    if r >= 4:
        out["index_at_least_3"] = 3 * bound <= factorial(r)
    return out


def trinomial_disc(m: int, a: int, k: int, b: int) -> int:
    """Closed-form discriminant of x^m + a x^k + b for gcd(m, k) = 1."""
    if not m > k >= 1 or gcd(m, k) != 1:
        raise InvalidParameters(f"need m > k >= 1 with gcd(m, k) = 1, got m={m}, k={k}")
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    inner = m ** m * b ** (m - k) + (-1) ** (m + 1) * (m - k) ** (m - k) * k ** k * a ** m
    return sign * b ** (k - 1) * inner


def trinomial(m: int, a: int, k: int, b: int) -> UniPoly:
    c = [0] * (m + 1)
    c[m] = 1
    c[k] += a
    c[0] += b
    return UniPoly(c)


def square_quotient_check(g: UniPoly, root: int) -> dict:
    """Split off x - root and compare discriminants."""
    if g(root) != 0:
        raise NotARoot(f"g({root}) = {g(root)}")
    f = g.exact_div(UniPoly((-root, 1)))
    disc_g = discriminant(g)
    disc_f = discriminant(f) if f.degree >= 1 else 1
    f_root = f(root)
    assert disc_g == disc_f * f_root ** 2
    return {
        "f": f,
        "disc_g": disc_g,
        "disc_f": disc_f,
        "f_at_root": f_root,
        "ratio": f_root ** 2 if disc_f else None,
        "quotient_is_square": True,
    }


@dataclass
class DiscEvidence:
    found: bool
    D0: int
    prime_ell: int | None = None
    valuation: int | None = None
    factors: dict = field(default_factory=dict)
    cofactor: int = 1
    checks: dict = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "D0": str(self.D0),
            "prime_ell": self.prime_ell,
            "valuation": self.valuation,
            "factors": {str(p): e for p, e in sorted(self.factors.items())},
            "cofactor": str(self.cofactor),
            "checks": self.checks,
        }


def valuation(n: int, p: int) -> int:
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def thick_cycle_D0(n: int, j: int) -> int:
    return (-j) * n ** n + (-1) ** (n - 1) * (n - 1) ** (n - 1) * (j - 1) ** n


def disc_transposition_evidence(n: int, j: int, trial_bound: int = 10**6,
                                rho_steps: int = 200_000) -> DiscEvidence:
    """Odd prime with odd valuation in the discriminant of x^n + (j-1)x^(n-1) - j."""
    if n < 3 or j < 1:
        raise InvalidParameters(f"need n >= 3 and j >= 1, got n={n}, j={j}")
    D0 = thick_cycle_D0(n, j)
    if D0 == 0:
        return DiscEvidence(False, 0)
    factors, cofactor = factor_with_budget(abs(D0), trial_bound, rho_steps)
    f = trinomial(n, j - 1, n - 1, -j)
    sq = square_quotient_check(f, 1)
    checks = {"square_quotient": sq["quotient_is_square"], "complete_factorization": cofactor == 1}
    for ell in sorted(factors):
        if ell == 2 or (j * (j - 1)) % ell == 0:
            continue
        v = valuation(D0, ell)
        if v % 2:
            checks["ell_coprime_to_ab"] = True
            return DiscEvidence(True, D0, ell, v, dict(factors), cofactor, checks)
    return DiscEvidence(False, D0, None, None, dict(factors), cofactor, checks)


def is_quadratic_nonresidue(a: int, p: int) -> bool:
    a %= p
    return a != 0 and pow(a, (p - 1) // 2, p) == p - 1


def _prime_root(m: int) -> int | None:
    """p when m is p or p^2 for a prime p."""
    if is_prime(m):
        return m
    s = int(round(m ** 0.5))
    for c in (s - 1, s, s + 1):
        if c > 1 and c * c == m and is_prime(c):
            return c
    return None


def thick_cycle_theorem_conditions(n: int, j: int, certify: bool = False,
                                   t_budget: int = 50, p_budget: int = 500) -> dict:
    if n < 3 or j < 1:
        raise InvalidParameters(f"need n >= 3 and j >= 1, got n={n}, j={j}")
    j_odd = j % 2 == 1
    p = _prime_root(n - 1)
    nonsquare = p is not None and p >= 5 and is_quadratic_nonresidue(-j, p)
    coprime = gcd(n, j - 1) == 1
    report = {
        "n": n,
        "j": j,
        "j_odd": j_odd,
        "transposition_and_transitive": j_odd,
        "odd_j_odd_n": j_odd and n % 2 == 1,
        "odd_j_prime_n_minus_1": j_odd and is_prime(n - 1),
        "n_minus_1_prime_or_prime_square": p,
        "minus_j_nonsquare_mod_p": nonsquare,
        "gcd_n_j_minus_1_is_1": coprime,
        "nonsquare_case": p is not None and p >= 5 and nonsquare and coprime,
    }
    symmetric = report["odd_j_odd_n"] or report["odd_j_prime_n_minus_1"] or report["nonsquare_case"]
    report["asserted_group"] = f"S_{n - 1}" if symmetric else None
    if certify:
        from .rankedset import thick_cycle_tutte
        report["certificate"] = certify_symmetric(thick_cycle_tutte(n, j), t_budget, p_budget).to_json()
    return report


def _odd_primes_upto(bound: int) -> list[int]:
    return [p for p in primes_upto(bound) if p > 2]


def p1p2_search(t_max: int) -> list[int]:
    """n = p1 p2 <= t_max, odd primes p1 < p2, ord_{p_i}(2) not dividing p_j - 1 both ways."""
    if t_max > 10**7:
        raise InvalidParameters("t_max must be at most 10^7")
    primes = _odd_primes_upto(t_max // 3)
    out = []
    for i, p1 in enumerate(primes):
        if p1 * p1 >= t_max:
            break
        o1 = multiplicative_order(2, p1)
        for p2 in primes[i + 1:]:
            n = p1 * p2
            if n > t_max:
                break
            if (p2 - 1) % o1 and (p1 - 1) % multiplicative_order(2, p2):
                assert gcd(n, pow(2, n, n) - 2) == 1
                out.append(n)
    return sorted(out)


def uniform_precondition_report(a: int, b: int, t_budget: int = 50, p_budget: int = 500) -> dict:
    if not 2 <= a < b:
        raise InvalidParameters(f"need 2 <= a < b, got a={a}, b={b}")
    from .rankedset import uniform_tutte
    gap = b - a
    prime_gap = is_prime(gap) and gap > a
    report = {
        "a": a,
        "b": b,
        "b_minus_a_prime_above_a": prime_gap,
        "a_composite": a > 3 and not is_prime(a),
        "gcd_a_b_is_1": gcd(a, b) == 1,
    }
    report["asserted_primitive"] = prime_gap
    report["asserted_doubly_transitive"] = prime_gap and report["a_composite"]
    cert = certify_symmetric(uniform_tutte(a, b), t_budget, p_budget)
    report["certificate"] = cert.to_json()
    return report


def selmer_polynomial(n: int) -> UniPoly:
    return UniPoly([-1] + [1] * (n - 1))


def selmer_family_report(n: int, t_budget: int = 50, p_budget: int = 500) -> dict:
    """x^(n-1) + ... + x - 1: odd part of the discriminant and, for odd n, a certificate."""
    if n < 3:
        raise InvalidParameters(f"need n >= 3, got {n}")
    f = selmer_polynomial(n)
    d = discriminant(f)
    v2 = valuation(abs(d), 2)
    odd = abs(d) >> v2
    report = {
        "n": n,
        "disc": str(d),
        "abs_disc": str(abs(d)),
        "power_of_two": v2,
        "odd_part": str(odd),
        "odd_part_above_1": odd > 1,
    }
    if n % 2 == 1:
        report["squarefree_mod_2"] = factor_pattern(reduce_mod(f, 2)) is not None
        cert = certify_symmetric(BiPoly.from_uni(f, "x"), t_budget, p_budget)
        report["certificate"] = cert.to_json()
    return report
