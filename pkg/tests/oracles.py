"""Brute-force reference computations used as test oracles.

Nothing here imports the code under test; every routine works on plain
Python lists / dicts so that it stays independent of the fast paths.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

import sympy


# --- resultants -----------------------------------------------------------

def sylvester_resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix.

    ``f`` and ``g`` are coefficient lists, lowest degree first, with nonzero
    leading entries.
    """
    m, n = len(f) - 1, len(g) - 1
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    hf, hg = f[::-1], g[::-1]
    size = m + n
    rows = []
    for k in range(n):
        rows.append([0] * k + hf + [0] * (size - k - m - 1))
    for k in range(m):
        rows.append([0] * k + hg + [0] * (size - k - n - 1))
    return int(sympy.Matrix(rows).det(method="bareiss"))


def sylvester_discriminant(f):
    d = len(f) - 1
    df = [i * f[i] for i in range(1, d + 1)]
    res = sylvester_resultant(f, df)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, f[-1])
    assert r == 0
    return q


# --- Tutte polynomials ----------------------------------------------------

def _padd(a, b, scale=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
        if out[k] == 0:
            del out[k]
    return out


def _pshift(a, di, dj):
    return {(i + di, j + dj): c for (i, j), c in a.items()}


def deletion_contraction_tutte(n_vertices, edges):
    """Tutte polynomial of a multigraph by the deletion-contraction recurrence.

    Returns a dict ``{(i, j): coefficient}``.
    """
    edges = [tuple(e) for e in edges]
    if not edges:
        return {(0, 0): 1}
    (u, v), rest = edges[0], edges[1:]
    if u == v:
        return _pshift(deletion_contraction_tutte(n_vertices, rest), 0, 1)
    if _is_bridge(n_vertices, edges, 0):
        return _pshift(deletion_contraction_tutte(n_vertices, _contract(rest, u, v)), 1, 0)
    return _padd(deletion_contraction_tutte(n_vertices, rest),
                 deletion_contraction_tutte(n_vertices, _contract(rest, u, v)))


def _contract(edges, u, v):
    return [(u if a == v else a, u if b == v else b) for a, b in edges]


def _is_bridge(n_vertices, edges, idx):
    u, v = edges[idx]
    adj = {}
    for k, (a, b) in enumerate(edges):
        if k == idx:
            continue
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen, stack = {u}, [u]
    while stack:
        w = stack.pop()
        for z in adj.get(w, ()):
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return v not in seen


def subset_tutte(n, rank):
    """Corank-nullity polynomial by direct enumeration.

    ``rank`` maps a frozenset of indices in ``range(n)`` to an integer.
    """
    full = frozenset(range(n))
    rE = rank(full)
    out = {}
    for k in range(n + 1):
        for A in itertools.combinations(range(n), k):
            rA = rank(frozenset(A))
            a, b = rE - rA, k - rA
            for i in range(a + 1):
                for j in range(b + 1):
                    c = comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
                    out[(i, j)] = out.get((i, j), 0) + c
    return {key: c for key, c in out.items() if c}


# --- finite fields --------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_p(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - c * bc) % p
    return _trim(q), a


def monic_polys(p, d):
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def is_irreducible_brute(f, p):
    d = len(f) - 1
    for e in range(1, d // 2 + 1):
        for g in monic_polys(p, e):
            if not _divmod_p(f, g, p)[1]:
                return False
    return True


def full_factorization_mod_p(f, p):
    """Factor ``f`` over F_p by trial division with every monic irreducible.

    Returns ``(lc, [monic factors with repetition])``.
    """
    f = _trim([c % p for c in f])
    lc = f[-1]
    inv = pow(lc, -1, p)
    f = [c * inv % p for c in f]
    factors = []
    d = 1
    while len(f) > 1:
        if 2 * d > len(f) - 1:
            factors.append(f)
            break
        for g in monic_polys(p, d):
            if not is_irreducible_brute(g, p):
                continue
            while True:
                q, r = _divmod_p(f, g, p)
                if r:
                    break
                factors.append(g)
                f = q
        d += 1
    return lc, factors


def mul_mod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


# --- polygons -------------------------------------------------------------

def _hull(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for q in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    for q in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    return lower[:-1] + upper[:-1]


def _inside(vertices, q):
    """Closed point-in-convex-polygon test (vertices counterclockwise)."""
    if len(vertices) == 1:
        return q == vertices[0]
    if len(vertices) == 2:
        (ax, ay), (bx, by) = vertices
        cr = (bx - ax) * (q[1] - ay) - (by - ay) * (q[0] - ax)
        return cr == 0 and min(ax, bx) <= q[0] <= max(ax, bx) and min(ay, by) <= q[1] <= max(ay, by)
    n = len(vertices)
    for k in range(n):
        (ax, ay), (bx, by) = vertices[k], vertices[(k + 1) % n]
        if (bx - ax) * (q[1] - ay) - (by - ay) * (q[0] - ax) < 0:
            return False
    return True


def lattice_points(vertices):
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    return [(i, j) for i in range(min(xs), max(xs) + 1)
            for j in range(min(ys), max(ys) + 1) if _inside(vertices, (i, j))]


def brute_decomposable(vertices):
    """Decide whether a lattice polygon is a Minkowski sum of two lattice
    polygons with at least two lattice points each, by trying every summand
    spanned by a subset of its lattice points."""
    P = _hull(vertices)
    pts = lattice_points(P)
    target = sorted(P)
    seen = set()
    for k in range(2, len(pts) + 1):
        for subset in itertools.combinations(pts, k):
            Q = tuple(sorted(_hull(subset)))
            if Q in seen:
                continue
            seen.add(Q)
            # R' = lattice points z with z + Q inside P
            R = []
            for z in pts:
                shift = (z[0] - Q[0][0], z[1] - Q[0][1])
                if all(_inside(P, (a + shift[0], b + shift[1])) for a, b in Q):
                    R.append(shift)
            if len(set(R)) < 2:
                continue
            sums = [(a + c, b + d) for a, b in Q for c, d in R]
            if sorted(_hull(sums)) == target:
                return True
    return False


# --- number theory --------------------------------------------------------

def order_brute(a, p):
    k, x = 1, a % p
    while x != 1:
        x = x * a % p
        k += 1
    return k


def p1p2_brute(t_max):
    primes = [q for q in range(3, t_max + 1) if all(q % d for d in range(2, q))]
    out = []
    for p1 in primes:
        for p2 in primes:
            if p1 < p2 and p1 * p2 <= t_max:
                if (p2 - 1) % order_brute(2, p1) and (p1 - 1) % order_brute(2, p2):
                    out.append(p1 * p2)
    return sorted(out)


def cycle_type_counts_brute(r):
    """Map cycle type (a_1..a_r) -> number of permutations of S_r."""
    counts = {}
    for perm in itertools.permutations(range(r)):
        seen = [False] * r
        a = [0] * r
        for s in range(r):
            if seen[s]:
                continue
            length, w = 0, s
            while not seen[w]:
                seen[w] = True
                w = perm[w]
                length += 1
            a[length - 1] += 1
        counts[tuple(a)] = counts.get(tuple(a), 0) + 1
    return counts


def lagrange_exact(points):
    """Exact interpolating polynomial through ``[(t, value)]`` (low first)."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for k, (tk, vk) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for m, (tm, _) in enumerate(points):
            if m == k:
                continue
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= tm * basis[i + 1]
            denom *= tk - tm
        for i, b in enumerate(basis):
            coeffs[i] += vk * b / denom
    return coeffs


def _canon(h):
    best = None
    for sx in (1, -1):
        for sy in (1, -1):
            for swap in (False, True):
                pts = [(y * sy, x * sx) if swap else (x * sx, y * sy) for x, y in h]
                mx, my = min(p[0] for p in pts), min(p[1] for p in pts)
                key = tuple(sorted((x - mx, y - my) for x, y in pts))
                if best is None or key < best:
                    best = key
    return best


def small_polygons():
    """Lattice polygons up to symmetry with at most 12 lattice points."""
    polys = set()
    for W, H in [(4, 4), (5, 3)]:
        grid = [(i, j) for i in range(W) for j in range(H)]
        for k in range(1, len(grid) + 1):
            for sub in itertools.combinations(grid, k):
                polys.add(_canon(_hull(sub)))
    # width-one polygons: rows [0, a] and [0, b] after a shear
    for a in range(0, 11):
        for b in range(-1, 11 - a):
            pts = [(0, 0), (a, 0)] + ([(0, 1), (b, 1)] if b >= 0 else [])
            polys.add(_canon(_hull(pts)))
    return sorted(p for p in polys if len(lattice_points(_hull(p))) <= 12)
