"""Exact polynomial arithmetic over the integers and over prime fields.

``UniPoly`` is a dense univariate polynomial (coefficients lowest degree
first), ``BiPoly`` a sparse bivariate one keyed by exponent pairs ``(i, j)``
for ``x**i * y**j``.  Both are immutable and hashable.  ``ModPoly`` is a
dense polynomial over F_p used for reductions and factorization patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import (
    ConstantPolynomial,
    DivisionInexact,
    HyperbolaVanishing,
    NotPrime,
    ZeroPolynomial,
)
from .numtheory import is_prime

MAX_PRIME = 2**63


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _content(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g


# ---------------------------------------------------------------------------
# univariate over Z


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = tuple(_trim([int(c) for c in coeffs]))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly([other])
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        return format_uni(self)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_uni(other))

    def __rsub__(self, other):
        return _as_uni(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out, base = UniPoly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = _content(self.coeffs)
        return -g if self.lc < 0 else g

    def primitive(self) -> UniPoly:
        if not self.coeffs:
            return self
        g = self.content()
        return UniPoly([c // g for c in self.coeffs])

    def divide_int(self, d: int) -> UniPoly:
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise DivisionInexact(f"{self} is not divisible by {d}")
            out.append(q)
        return UniPoly(out)

    def exact_div(self, other: UniPoly) -> UniPoly:
        """Quotient over Z; raises DivisionInexact if ``other`` does not divide."""
        if not other.coeffs:
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        db, lb = other.degree, other.lc
        q = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            qk, r = divmod(c, lb)
            if r:
                raise DivisionInexact(f"{other} does not divide {self}")
            q[k - db] = qk
            for i, bc in enumerate(other.coeffs):
                rem[k - db + i] -= qk * bc
        if any(rem):
            raise DivisionInexact(f"{other} does not divide {self}")
        return UniPoly(q)

    def divides(self, other: UniPoly) -> bool:
        try:
            other.exact_div(self)
        except DivisionInexact:
            return False
        return True

    def pseudo_rem(self, other: UniPoly) -> UniPoly:
        """Remainder R of lc(B)^(deg A - deg B + 1) * A = Q*B + R."""
        if not other.coeffs:
            raise ZeroPolynomial("pseudo-remainder by zero")
        db, lb = other.degree, other.lc
        delta = self.degree - db
        if delta < 0:
            return self
        rem = list(self.coeffs)
        e = delta + 1
        while len(rem) - 1 >= db and rem:
            k = len(rem) - 1
            c = rem[k]
            rem = [lb * v for v in rem]
            for i, bc in enumerate(other.coeffs):
                rem[k - db + i] -= c * bc
            _trim(rem)
            e -= 1
        return UniPoly(rem) * (lb ** e)

    def shift(self, a: int) -> UniPoly:
        """f(x + a)."""
        out = UniPoly()
        for c in reversed(self.coeffs):
            out = out * UniPoly([a, 1]) + c
        return out

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> UniPoly:
        return cls(int(c) for c in data["coeffs"])


def _as_uni(v) -> UniPoly:
    return v if isinstance(v, UniPoly) else UniPoly([v])


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """gcd in Z[x] via the primitive remainder sequence, positive leading coefficient."""
    if not a or not b:
        nz = a or b
        return nz.primitive() * _content(abs(c) for c in nz.coeffs) if nz else nz
    c = gcd(_content(a.coeffs), _content(b.coeffs))
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if r else r)
    a = a.primitive()
    return a * c


def interpolate(points: list[tuple[int, int]]) -> UniPoly:
    """Exact polynomial through integer points (Newton divided differences).

    The interpolant must have integer coefficients.
    """
    xs = [Fraction(t) for t, _ in points]
    table = [Fraction(v) for _, v in points]
    n = len(points)
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            table[k] = (table[k] - table[k - 1]) / (xs[k] - xs[k - level])
    coeffs = [Fraction(0)]
    for k in range(n - 1, -1, -1):
        # coeffs = coeffs * (x - xs[k]) + table[k]
        shifted = [Fraction(0)] + coeffs
        for i in range(len(coeffs)):
            shifted[i] -= xs[k] * coeffs[i]
        shifted[0] += table[k]
        coeffs = shifted
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise DivisionInexact("interpolant has non-integral coefficients")
        out.append(int(c))
    return UniPoly(out)


# ---------------------------------------------------------------------------
# resultants and discriminants


def resultant(f: UniPoly, g: UniPoly) -> int:
    """Res(f, g) by the subresultant pseudo-remainder sequence."""
    if not f or not g:
        raise ZeroPolynomial("resultant of the zero polynomial")
    a, b = f, g
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -1
    if b.degree == 0:
        return s * b.lc ** a.degree
    ca, cb = a.content(), b.content()
    t = ca ** b.degree * cb ** a.degree
    a, b = a.divide_int(ca), b.divide_int(cb)
    g_, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        r = a.pseudo_rem(b)
        a = b
        b = r.divide_int(g_ * h ** delta) if r else r
        g_ = a.lc
        h = g_ ** delta // h ** (delta - 1) if delta >= 1 else g_ ** delta * h
        if not b:
            return 0
        if b.degree == 0:
            break
    h = b.lc ** a.degree // h ** (a.degree - 1)
    return s * t * h


def discriminant(f: UniPoly) -> int:
    """(-1)^(d(d-1)/2) * Res(f, f') / lc(f)."""
    if not f:
        raise ZeroPolynomial("discriminant of the zero polynomial")
    d = f.degree
    if d < 1:
        raise ConstantPolynomial("discriminant of a constant")
    if d == 1:
        return 1
    res = resultant(f, f.derivative())
    q, r = divmod(res, f.lc)
    if r:
        raise DivisionInexact("Res(f, f') not divisible by lc(f)")
    return -q if (d * (d - 1) // 2) % 2 else q


# ---------------------------------------------------------------------------
# bivariate over Z


class BiPoly:
    """Sparse polynomial in x, y with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = int(c)
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> BiPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def from_uni(cls, f: UniPoly, var: str = "x") -> BiPoly:
        if var == "x":
            return cls({(k, 0): c for k, c in enumerate(f.coeffs)})
        return cls({(0, k): c for k, c in enumerate(f.coeffs)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms sorted by descending (i, j)."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        return isinstance(other, BiPoly) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"BiPoly({format_bi(self)!r})"

    def __str__(self):
        return format_bi(self)

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        other = _as_bi(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_bi(other))

    def __rsub__(self, other):
        return _as_bi(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return BiPoly()
            return BiPoly._raw({k: c * other for k, c in self._terms.items()})
        out: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out, base = BiPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    def content(self) -> int:
        return _content(abs(c) for c in self._terms.values())

    def swap(self) -> BiPoly:
        """P(y, x)."""
        return BiPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def specialize_y(self, t: int) -> UniPoly:
        out = [0] * (self.deg_x + 1)
        for (i, j), c in self._terms.items():
            out[i] += c * t**j
        return UniPoly(out)

    def specialize_x(self, t: int) -> UniPoly:
        return self.swap().specialize_y(t)

    def x_coeffs(self) -> list[UniPoly]:
        """Coefficients of x^0..x^deg_x as polynomials in y."""
        rows: list[list[int]] = [[0] * (self.deg_y + 1) for _ in range(self.deg_x + 1)]
        for (i, j), c in self._terms.items():
            rows[i][j] = c
        return [UniPoly(r) for r in rows]

    @classmethod
    def from_x_coeffs(cls, coeffs: Iterable[UniPoly]) -> BiPoly:
        out = {}
        for i, f in enumerate(coeffs):
            for j, c in enumerate(f.coeffs):
                if c:
                    out[(i, j)] = c
        return cls._raw(out)

    def shift(self, a: int, b: int) -> BiPoly:
        """P(x + a, y + b)."""
        xs = BiPoly({(1, 0): 1, (0, 0): a})
        ys = BiPoly({(0, 1): 1, (0, 0): b})
        xp = [BiPoly.const(1)]
        yp = [BiPoly.const(1)]
        for _ in range(self.deg_x):
            xp.append(xp[-1] * xs)
        for _ in range(self.deg_y):
            yp.append(yp[-1] * ys)
        out = BiPoly()
        for (i, j), c in self._terms.items():
            out = out + (xp[i] * yp[j]) * c
        return out

    def monomial_divisor(self) -> tuple[int, int]:
        """Largest (a, b) with x^a y^b dividing P."""
        if not self._terms:
            return (0, 0)
        return (min(i for i, _ in self._terms), min(j for _, j in self._terms))

    def divide_monomial(self, a: int, b: int) -> BiPoly:
        return BiPoly({(i - a, j - b): c for (i, j), c in self._terms.items()})

    def exact_div(self, other: BiPoly) -> BiPoly:
        """Quotient in Z[x, y]; raises DivisionInexact when ``other`` does not divide."""
        if not other:
            raise ZeroPolynomial("division by the zero polynomial")
        rem = self.x_coeffs()
        b = other.x_coeffs()
        db = len(b) - 1
        q = [UniPoly()] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            if not rem[k]:
                continue
            qk = rem[k].exact_div(b[db])
            q[k - db] = qk
            for i, bc in enumerate(b):
                rem[k - db + i] = rem[k - db + i] - qk * bc
        if any(rem):
            raise DivisionInexact(f"{other} does not divide {self}")
        return BiPoly.from_x_coeffs(q)

    def divisible_by(self, other: BiPoly) -> bool:
        try:
            self.exact_div(other)
        except DivisionInexact:
            return False
        return True

    def to_json(self) -> dict:
        return {"terms": [{"i": i, "j": j, "c": str(c)} for (i, j), c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> BiPoly:
        out: dict = {}
        for t in data["terms"]:
            k = (int(t["i"]), int(t["j"]))
            out[k] = out.get(k, 0) + int(t["c"])
        return cls(out)


def _as_bi(v) -> BiPoly:
    return v if isinstance(v, BiPoly) else BiPoly.const(v)


# ---------------------------------------------------------------------------
# text form


def _term(c: int, mono: str) -> str:
    if not mono:
        return str(abs(c))
    return mono if abs(c) == 1 else f"{abs(c)}*{mono}"


def _join(parts: list[tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for k, (c, mono) in enumerate(parts):
        body = _term(c, mono)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _pow(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def format_bi(p: BiPoly) -> str:
    parts = []
    for (i, j), c in p.items():
        mono = "*".join(s for s in (_pow("x", i), _pow("y", j)) if s)
        parts.append((c, mono))
    return _join(parts)


def format_uni(f: UniPoly, var: str = "x") -> str:
    return _join([(c, _pow(var, k)) for k, c in reversed(list(enumerate(f.coeffs))) if c])


def parse_bi(text: str) -> BiPoly:
    """Parse an integer polynomial in x and y (``^`` or ``**`` for powers)."""
    import sympy

    x, y = sympy.symbols("x y")
    expr = sympy.sympify(text.replace("^", "**"), locals={"x": x, "y": y})
    poly = sympy.Poly(expr, x, y)
    out = {}
    for (i, j), c in poly.terms():
        if not c.is_integer:
            raise ValueError(f"non-integer coefficient {c}")
        out[(int(i), int(j))] = int(c)
    return BiPoly(out)


def parse_uni(text: str, var: str = "x") -> UniPoly:
    p = parse_bi(text.replace(var, "x") if var != "x" else text)
    if p.deg_y > 0:
        raise ValueError("expected a univariate polynomial")
    return p.specialize_y(0)


# ---------------------------------------------------------------------------
# hyperbola substitution


def hyperbola_substitute(u: BiPoly) -> tuple[int, UniPoly, bool]:
    """Return ``(rho, Q, True)`` with (y-1)^rho * U(y/(y-1), y) = Q(y) minimal.

    U(y/(y-1), y) = N(y) / (y-1)^d with d = deg_x U; the maximal power of
    (y-1) dividing N is cancelled, so rho may be negative.
    """
    if not u:
        raise ZeroPolynomial("hyperbola substitution of the zero polynomial")
    d = u.deg_x
    ym1 = [UniPoly([1])]
    for _ in range(d):
        ym1.append(ym1[-1] * UniPoly([-1, 1]))
    acc = [0] * (d + u.deg_y + 1)
    for (i, j), c in u._terms.items():
        # c * y^(i+j) * (y-1)^(d-i)
        for k, v in enumerate(ym1[d - i].coeffs):
            acc[i + j + k] += c * v
    n = UniPoly(acc)
    if not n:
        raise HyperbolaVanishing("U(y/(y-1), y) vanishes identically")
    v = 0
    while n(1) == 0:
        n = _divide_by_linear(n, 1)
        v += 1
    return d - v, n, True


def _divide_by_linear(f: UniPoly, a: int) -> UniPoly:
    """f / (x - a) for f(a) = 0 by synthetic division."""
    out = []
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * a + c
        out.append(acc)
    if out[-1]:
        raise DivisionInexact(f"x - {a} does not divide {f}")
    return UniPoly(reversed(out[:-1]))


# ---------------------------------------------------------------------------
# resultants in x, as polynomials in y


def _sample_points():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _interpolate_in_y(bound: int, lcs: list[UniPoly], value) -> UniPoly:
    # sample only where no leading coefficient vanishes, so degrees are kept
    pts = []
    for t in _sample_points():
        if any(lc(t) == 0 for lc in lcs):
            continue
        pts.append((t, value(t)))
        if len(pts) > bound:
            break
    return interpolate(pts)


def resultant_x(f: BiPoly, g: BiPoly) -> UniPoly:
    """Res_x(f, g) as a polynomial in y."""
    if not f or not g:
        raise ZeroPolynomial("resultant of the zero polynomial")
    bound = f.deg_x * max(g.deg_y, 0) + g.deg_x * max(f.deg_y, 0)
    lcs = [f.x_coeffs()[-1], g.x_coeffs()[-1]]
    return _interpolate_in_y(bound, lcs,
                             lambda t: resultant(f.specialize_y(t), g.specialize_y(t)))


def discriminant_x(f: BiPoly) -> UniPoly:
    """disc_x(f) as a polynomial in y; zero iff f has a repeated factor over Q(y)."""
    if not f:
        raise ZeroPolynomial("discriminant of the zero polynomial")
    d = f.deg_x
    if d < 1:
        raise ConstantPolynomial("discriminant of a polynomial of x-degree 0")
    bound = (2 * d - 1) * max(f.deg_y, 0)
    return _interpolate_in_y(bound, [f.x_coeffs()[-1]],
                             lambda t: discriminant(f.specialize_y(t)))


def specialize_y(T: BiPoly, t: int) -> UniPoly:
    return T.specialize_y(t)


# ---------------------------------------------------------------------------
# prime fields


@dataclass(frozen=True)
class ModPoly:
    p: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_trim([c % self.p for c in self.coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)


def reduce_mod(f: UniPoly, p: int) -> ModPoly:
    if p < 2 or p >= MAX_PRIME or not is_prime(p):
        raise NotPrime(f"{p} is not a prime below 2^63")
    return ModPoly(p, f.coeffs)


@dataclass(frozen=True, order=True)
class FactorPattern:
    """Degrees of the irreducible factors of a squarefree polynomial over F_p.

    ``degree_counts`` holds sorted ``(d, a_d)`` pairs with ``a_d >= 1``.
    """

    degree_counts: tuple
    total: int

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> FactorPattern:
        pairs = tuple(sorted((int(d), int(a)) for d, a in counts.items() if a))
        return cls(pairs, sum(d * a for d, a in pairs))

    def count(self, d: int) -> int:
        return dict(self.degree_counts).get(d, 0)

    def as_dict(self) -> dict:
        return dict(self.degree_counts)

    def partition(self) -> tuple:
        """(a_1, ..., a_r)."""
        return tuple(self.count(d) for d in range(1, self.total + 1))

    def to_json(self) -> dict:
        return {str(d): a for d, a in self.degree_counts}

    @classmethod
    def from_json(cls, data: Mapping) -> FactorPattern:
        return cls.from_counts({int(d): int(a) for d, a in data.items()})

    def __str__(self):
        return "{" + ", ".join(f"{d}:{a}" for d, a in self.degree_counts) + "}"


# list-based F_p kernels; all inputs reduced, outputs trimmed


def _mp_divmod_rem(a: list, b: list, p: int) -> list:
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            off = k - db
            for i in range(db + 1):
                a[off + i] = (a[off + i] - c * b[i]) % p
    return _trim(a[:db] if db >= 0 else a)


def _mp_exquo(a: list, b: list, p: int) -> list:
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        q[k - db] = c
        if c:
            off = k - db
            for i in range(db + 1):
                a[off + i] = (a[off + i] - c * b[i]) % p
    return _trim(q)


def _mp_mulmod(a: list, b: list, f: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _mp_divmod_rem([c % p for c in out], f, p)


def _mp_gcd(a: list, b: list, p: int) -> list:
    while b:
        a, b = b, _mp_divmod_rem(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _mp_monic(a: list, p: int) -> list:
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _frobenius_rows(f: list, p: int) -> list:
    """Rows k = x^(k p) mod f for k < deg f, padded to length deg f."""
    n = len(f) - 1
    xp = [1]
    base = _mp_divmod_rem([0, 1], f, p)
    e = p
    while e:
        if e & 1:
            xp = _mp_mulmod(xp, base, f, p)
        base = _mp_mulmod(base, base, f, p)
        e >>= 1
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _mp_mulmod(cur, xp, f, p)
        rows.append(cur + [0] * (n - len(cur)))
    return rows


def _apply_frobenius(h: list, rows: list, p: int) -> list:
    n = len(rows)
    out = [0] * n
    for k, c in enumerate(h):
        if c:
            row = rows[k]
            for i in range(n):
                out[i] += c * row[i]
    return _trim([v % p for v in out])


def factor_pattern(f: ModPoly) -> FactorPattern | None:
    """Distinct-degree pattern of ``f`` over F_p; None if ``f`` is not squarefree."""
    if not f:
        raise ZeroPolynomial("factor pattern of the zero polynomial")
    if f.degree < 1:
        raise ConstantPolynomial("factor pattern of a constant")
    p = f.p
    g = _mp_monic(list(f.coeffs), p)
    dg = _trim([k * c % p for k, c in enumerate(g)][1:])
    if not dg or len(_mp_gcd(g, dg, p)) > 1:
        return None
    counts: dict[int, int] = {}
    rows = _frobenius_rows(g, p)
    h = _mp_divmod_rem([0, 1], g, p)  # x^(p^d) mod g, starting at d = 0
    rest = g
    d = 0
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = _apply_frobenius(h, rows, p)
        diff = _mp_divmod_rem(h, rest, p)
        diff += [0] * max(0, 2 - len(diff))
        diff[1] = (diff[1] - 1) % p
        common = _mp_gcd(rest, _trim(diff), p)
        if len(common) > 1:
            counts[d] = (len(common) - 1) // d
            rest = _mp_exquo(rest, common, p)
    if len(rest) > 1:
        k = len(rest) - 1
        counts[k] = counts.get(k, 0) + 1
    return FactorPattern.from_counts(counts)


def is_squarefree_mod(f: ModPoly) -> bool:
    if f.degree < 1:
        return True
    g = list(f.coeffs)
    dg = _trim([k * c % f.p for k, c in enumerate(g)][1:])
    return bool(dg) and len(_mp_gcd(g, dg, f.p)) == 1
