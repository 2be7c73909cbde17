"""Irreducibility verdicts for bivariate integer polynomials.

Every test here is one-sided: a criterion either proves irreducibility or is
inconclusive.  Only an explicit, re-multiplied factorization yields
``Reducible``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .brylawski import detect_brylawski, require_brylawski
from .errors import RankOutOfRange, ZeroPolynomial
from .numtheory import primes_upto
from .polycore import BiPoly, FactorPattern, UniPoly, factor_pattern, reduce_mod, uni_gcd

IRREDUCIBLE = "Irreducible"
REDUCIBLE = "Reducible"
INCONCLUSIVE = "Inconclusive"

DISTINGUISHED = {
    "x": BiPoly({(1, 0): 1}),
    "y": BiPoly({(0, 1): 1}),
    "x-1": BiPoly({(1, 0): 1, (0, 0): -1}),
    "y-1": BiPoly({(0, 1): 1, (0, 0): -1}),
}


@dataclass(frozen=True)
class NewtonPolygon:
    """Counterclockwise hull vertices, no three collinear."""

    vertices: tuple

    def edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        if len(v) < 2:
            return []
        if len(v) == 2:
            (a, b), (c, d) = v
            return [(c - a, d - b), (a - c, b - d)]
        return [(v[(k + 1) % len(v)][0] - v[k][0], v[(k + 1) % len(v)][1] - v[k][1]) for k in range(len(v))]

    def boundary_points(self) -> int:
        if len(self.vertices) == 1:
            return 1
        steps = [gcd(abs(a), abs(b)) for a, b in self.edges()]
        if len(self.vertices) == 2:
            return steps[0] + 1
        return sum(steps)

    def to_json(self) -> list:
        return [list(p) for p in self.vertices]


@dataclass(frozen=True)
class IrredVerdict:
    verdict: str
    method: str | None = None
    witness: tuple = ()
    notes: tuple = ()
    polygon: NewtonPolygon | None = None
    checks: dict = field(default_factory=dict)

    @property
    def is_irreducible(self) -> bool:
        return self.verdict == IRREDUCIBLE

    @property
    def is_reducible(self) -> bool:
        return self.verdict == REDUCIBLE

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "method": self.method, "notes": list(self.notes)}
        if self.witness:
            out["witness"] = [_witness_json(w) for w in self.witness]
        if self.polygon is not None:
            out["polygon"] = self.polygon.to_json()
        if self.checks:
            out["checks"] = self.checks
        return out


def _witness_json(w):
    if isinstance(w, BiPoly):
        return w.to_json()
    return w


# ---------------------------------------------------------------------------
# univariate factors and the two coefficient criteria


def univariate_factor_scan(U: BiPoly) -> frozenset:
    """Which of x, y, x-1, y-1 divide the Brylawski polynomial U."""
    require_brylawski(U)
    return frozenset(name for name, f in DISTINGUISHED.items() if _divides(f, U))


def _divides(f: BiPoly, U: BiPoly) -> bool:
    if f == DISTINGUISHED["x"]:
        return all(i > 0 for i, _ in U.terms)
    if f == DISTINGUISHED["y"]:
        return all(j > 0 for _, j in U.terms)
    if f == DISTINGUISHED["x-1"]:
        return not U.specialize_x(1)
    if f == DISTINGUISHED["y-1"]:
        return not U.specialize_y(1)
    return U.divisible_by(f)


def _criterion_setup(T: BiPoly):
    params = require_brylawski(T)
    if params.r < 1 or params.n - params.r < 1:
        raise RankOutOfRange(f"need r >= 1 and n - r >= 1, got n={params.n}, r={params.r}")
    return params


def criterion_A(T: BiPoly) -> IrredVerdict:
    """x-1, y-1 do not divide; t_10 != 0; deg_x + deg_y <= n + 1; content 1."""
    p = _criterion_setup(T)
    scan = univariate_factor_scan(T)
    degsum = T.deg_x + T.deg_y
    checks = {
        "no_x_minus_1_or_y_minus_1": not ({"x-1", "y-1"} & scan),
        "t10_nonzero": T.coeff(1, 0) != 0,
        "degree_sum_at_most_n_plus_1": degsum <= p.n + 1,
        "content_one": T.content() == 1,
    }
    notes = [f"(n, r) = ({p.n}, {p.r}); deg_x + deg_y = {degsum}"]
    if checks["degree_sum_at_most_n_plus_1"]:
        notes.append("degree sum equals n" if degsum == p.n else
                     "degree sum equals n + 1" if degsum == p.n + 1 else "degree sum below n")
    failed = [k for k, v in checks.items() if not v]
    if failed:
        notes.append("failed: " + ", ".join(failed))
        return IrredVerdict(INCONCLUSIVE, "CriterionA", notes=tuple(notes), checks=checks)
    return IrredVerdict(IRREDUCIBLE, "CriterionA", notes=tuple(notes), checks=checks)


def criterion_B(T: BiPoly) -> IrredVerdict:
    """None of x, y, x-1, y-1 divide; t_11 odd; deg_x + deg_y = n; content 1."""
    p = _criterion_setup(T)
    scan = univariate_factor_scan(T)
    degsum = T.deg_x + T.deg_y
    checks = {
        "no_distinguished_divisor": not scan,
        "t11_odd": T.coeff(1, 1) % 2 == 1,
        "degree_sum_equals_n": degsum == p.n,
        "content_one": T.content() == 1,
    }
    notes = [f"(n, r) = ({p.n}, {p.r}); deg_x + deg_y = {degsum}"]
    failed = [k for k, v in checks.items() if not v]
    if failed:
        notes.append("failed: " + ", ".join(failed))
        return IrredVerdict(INCONCLUSIVE, "CriterionB", notes=tuple(notes), checks=checks)
    return IrredVerdict(IRREDUCIBLE, "CriterionB", notes=tuple(notes), checks=checks)


# ---------------------------------------------------------------------------
# Newton polygons


def convex_hull(points: Iterable[tuple[int, int]]) -> tuple:
    """Andrew's monotone chain; counterclockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for q in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    upper: list = []
    for q in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    hull = lower[:-1] + upper[:-1]
    return tuple(hull)


def newton_polygon(T: BiPoly) -> NewtonPolygon:
    if not T:
        raise ZeroPolynomial("Newton polygon of the zero polynomial")
    return NewtonPolygon(convex_hull(T.terms))


def polygon_indecomposable(P: NewtonPolygon) -> bool:
    """True iff P is not a Minkowski sum of two lattice polygons with >= 2 points each.

    Writing each edge as k * (primitive vector), a summand corresponds to
    multiplicities 0 <= m_i <= k_i with sum m_i u_i = 0 that are neither all
    zero nor all full.  Reachable partial sums are tracked edge by edge.
    """
    edges = P.edges()
    if not edges:
        return True
    prims = []
    for a, b in edges:
        k = gcd(abs(a), abs(b))
        prims.append(((a // k, b // k), k))
    # state: (partial sum, some edge used, every edge so far fully used)
    states = {((0, 0), False, True)}
    for (u, v), k in prims:
        nxt = set()
        for (sx, sy), used, full in states:
            for m in range(k + 1):
                nxt.add(((sx + m * u, sy + m * v), used or m > 0, full and m == k))
        states = nxt
    return not any(s == (0, 0) and used and not full for s, used, full in states)


# ---------------------------------------------------------------------------
# mod-p specialization


def t_order(t_range: int):
    yield 0
    for k in range(1, t_range + 1):
        yield k
        yield -k


def y_content(T: BiPoly) -> UniPoly:
    """gcd in Z[y] of the x-coefficients, positive leading coefficient."""
    g = UniPoly()
    for c in T.x_coeffs():
        g = uni_gcd(g, c)
    return g


def modp_irreducibility_certificate(T: BiPoly, t_range: int = 20, p_range: int = 200) -> IrredVerdict:
    """Search (t, p) with T(x, t) irreducible of full degree mod p."""
    d = T.deg_x
    if d < 1:
        return IrredVerdict(INCONCLUSIVE, "ModPSpecialization", notes=("x-degree 0",))
    lc = T.x_coeffs()[-1]
    full = FactorPattern.from_counts({d: 1})
    for t in t_order(t_range):
        lct = lc(t)
        if lct == 0:
            continue
        f = T.specialize_y(t)
        for p in primes_upto(p_range):
            if lct % p == 0:
                continue
            if factor_pattern(reduce_mod(f, p)) == full:
                return _after_qy_irreducible(T, t, p)
    return IrredVerdict(INCONCLUSIVE, "ModPSpecialization",
                        notes=(f"no irreducible specialization for |t| <= {t_range}, p <= {p_range}",))


def _after_qy_irreducible(T: BiPoly, t: int, p: int) -> IrredVerdict:
    # T is irreducible in Q(y)[x]; in Z[x, y] it remains to rule out a content factor
    note = f"T(x, {t}) is irreducible of degree {T.deg_x} mod {p}, so T is irreducible over Q(y)"
    content = y_content(T)
    if content.degree == 0 and abs(content.lc) == 1:
        return IrredVerdict(IRREDUCIBLE, "ModPSpecialization", witness=({"t": t, "p": p},),
                            notes=(note, "content in Z[y] is 1"))
    c = BiPoly.from_uni(content, var="y")
    return _reducible("ModPSpecialization", T, [c, T.exact_div(c)], note, "nontrivial content in Z[y]")


def _reducible(method: str, T: BiPoly, factors: list[BiPoly], *notes: str) -> IrredVerdict:
    prod = BiPoly.const(1)
    for f in factors:
        prod = prod * f
    assert prod == T, "reducibility witness does not multiply back"
    return IrredVerdict(REDUCIBLE, method, witness=tuple(factors), notes=tuple(notes))


# ---------------------------------------------------------------------------
# combined verdict


def _is_unit(p: BiPoly) -> bool:
    return p in (BiPoly.const(1), BiPoly.const(-1))


def _newton_verdict(T: BiPoly, notes: list) -> IrredVerdict | None:
    """Gao's test in x, y and then in X = x-1, Y = y-1."""
    for label, P in (("x, y", T), ("X = x-1, Y = y-1", T.shift(1, 1))):
        a, b = P.monomial_divisor()
        if a or b:
            notes.append(f"monomial divisor in ({label}) coordinates; polygon test skipped there")
            continue
        poly = newton_polygon(P)
        if len(poly.vertices) >= 2 and polygon_indecomposable(poly):
            return IrredVerdict(IRREDUCIBLE, "NewtonPolygon", polygon=poly,
                                notes=tuple(notes + [f"indecomposable Newton polygon in ({label}) coordinates"]))
        notes.append(f"Newton polygon in ({label}) coordinates is decomposable")
    return None


def irreducibility_verdict(T: BiPoly, methods: Iterable[str] | None = None,
                           t_range: int = 20, p_range: int = 200) -> IrredVerdict:
    """First conclusive verdict among: factor scan, A, B, Newton polygon, mod p."""
    if not T:
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    wanted = set(methods) if methods is not None else {"a", "b", "newton", "modp"}
    notes: list[str] = []
    if T.deg_x <= 0 and T.deg_y <= 0:
        return IrredVerdict(INCONCLUSIVE, None, notes=("constant polynomial",))
    content = T.content()
    if content > 1:
        return _reducible("UnivariateFactor", T, [BiPoly.const(content), _div_const(T, content)],
                          f"integer content {content}")
    params = detect_brylawski(T)
    for name, f in DISTINGUISHED.items():
        if _divides(f, T):
            q = T.exact_div(f)
            if not _is_unit(q):
                return _reducible("UnivariateFactor", T, [f, q], f"{name} divides T")
    if params is None:
        notes.append("not a Brylawski polynomial; coefficient criteria skipped")
    else:
        ok_range = params.r >= 1 and params.n - params.r >= 1
        if not ok_range:
            notes.append(f"(n, r) = ({params.n}, {params.r}) outside the criteria's range")
        else:
            for key, crit in (("a", criterion_A), ("b", criterion_B)):
                if key in wanted:
                    v = crit(T)
                    if v.is_irreducible:
                        return v
                    notes.extend(v.notes)
    if "newton" in wanted:
        v = _newton_verdict(T, notes)
        if v is not None:
            return v
    if "modp" in wanted:
        v = modp_irreducibility_certificate(T, t_range, p_range)
        if v.verdict != INCONCLUSIVE:
            return v
        notes.extend(v.notes)
    return IrredVerdict(INCONCLUSIVE, None, notes=tuple(notes))


def _div_const(T: BiPoly, c: int) -> BiPoly:
    return BiPoly({k: v // c for k, v in T.terms.items()})
