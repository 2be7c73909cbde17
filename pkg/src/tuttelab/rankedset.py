"""Ranked sets: rank tables on small groundsets and their corank-nullity polynomials.

Subsets of an n-element groundset are bitmasks 0 .. 2^n - 1, so a rank
function is a dense integer table indexed by mask.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .errors import GroundsetTooLarge, InvalidParameters, InvalidRankFunction
from .polycore import BiPoly

MAX_ELEMENTS = 24
MAX_AXIOM_ELEMENTS = 16
EXACT_AXIOM_ELEMENTS = 12


def popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.int64)
    for k in range(n):
        pc[1 << k: 1 << (k + 1)] = pc[: 1 << k] + 1
    return pc


class RankFunction:
    """Validated rank table: r(empty) = 0, r(A) <= r(E), r(A) <= |A|."""

    __slots__ = ("n", "ranks")

    def __init__(self, n: int, ranks: Sequence[int] | np.ndarray):
        if n < 0:
            raise InvalidParameters("negative groundset size")
        if n > MAX_ELEMENTS:
            raise GroundsetTooLarge(f"|E| = {n} exceeds {MAX_ELEMENTS}")
        arr = np.array(ranks, dtype=np.int64)
        if arr.shape != (1 << n,):
            raise InvalidRankFunction(f"expected {1 << n} ranks, got {arr.size}")
        if arr[0] != 0:
            raise InvalidRankFunction("rank of the empty set must be 0")
        bad = np.flatnonzero(arr > arr[-1])
        if bad.size:
            raise InvalidRankFunction(f"r(A) > r(E) at mask {int(bad[0])}")
        bad = np.flatnonzero(arr > popcounts(n))
        if bad.size:
            raise InvalidRankFunction(f"r(A) > |A| at mask {int(bad[0])}")
        arr.setflags(write=False)
        self.n = n
        self.ranks = arr

    @classmethod
    def from_function(cls, n: int, rank) -> RankFunction:
        """Build from a callable on frozensets of element indices."""
        if n > MAX_ELEMENTS:
            raise GroundsetTooLarge(f"|E| = {n} exceeds {MAX_ELEMENTS}")
        return cls(n, [rank(frozenset(k for k in range(n) if m >> k & 1)) for m in range(1 << n)])

    def __call__(self, subset) -> int:
        if isinstance(subset, int):
            return int(self.ranks[subset])
        return int(self.ranks[sum(1 << k for k in subset)])

    @property
    def rank(self) -> int:
        return int(self.ranks[-1])

    def __eq__(self, other):
        return isinstance(other, RankFunction) and self.n == other.n and np.array_equal(self.ranks, other.ranks)

    def __hash__(self):
        return hash((self.n, self.ranks.tobytes()))

    def __repr__(self):
        return f"RankFunction(n={self.n}, r(E)={self.rank})"

    def to_json(self) -> dict:
        return {"n": self.n, "ranks": [int(v) for v in self.ranks]}

    @classmethod
    def from_json(cls, data) -> RankFunction:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), [int(v) for v in data["ranks"]])


def _binomial_rows(m: int) -> list[list[int]]:
    # row k = coefficients of (z - 1)^k, lowest degree first
    rows = [[1]]
    for _ in range(m):
        prev = rows[-1]
        rows.append([(prev[i - 1] if i else 0) - (prev[i] if i < len(prev) else 0)
                     for i in range(len(prev) + 1)])
    return rows


def polynomial_from_counts(counts: dict[tuple[int, int], int]) -> BiPoly:
    """Sum of count * (x-1)^a (y-1)^b over the given (a, b) -> count map."""
    if not counts:
        return BiPoly()
    rows = _binomial_rows(max(max(a for a, _ in counts), max(b for _, b in counts)))
    out: dict = {}
    for (a, b), c in counts.items():
        for i, ca in enumerate(rows[a]):
            for j, cb in enumerate(rows[b]):
                out[(i, j)] = out.get((i, j), 0) + c * ca * cb
    return BiPoly(out)


def corank_nullity(S: RankFunction) -> BiPoly:
    """Sum over subsets A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))."""
    corank = S.rank - S.ranks
    nullity = popcounts(S.n) - S.ranks
    span = int(nullity.max()) + 1
    keys, counts = np.unique(corank * span + nullity, return_counts=True)
    return polynomial_from_counts({(int(k) // span, int(k) % span): int(c) for k, c in zip(keys, counts)})


def dual(S: RankFunction) -> RankFunction:
    """r*(A) = |A| + r(E \\ A) - r(E)."""
    return RankFunction(S.n, popcounts(S.n) + S.ranks[::-1] - S.rank)


def direct_sum(S1: RankFunction, S2: RankFunction) -> RankFunction:
    """Elements of S2 occupy the high bits."""
    if S1.n + S2.n > MAX_ELEMENTS:
        raise GroundsetTooLarge(f"|E| = {S1.n + S2.n} exceeds {MAX_ELEMENTS}")
    return RankFunction(S1.n + S2.n, np.add.outer(S2.ranks, S1.ranks).ravel())


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    edges: tuple = field(default=())

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise InvalidParameters(f"edge ({u}, {v}) out of range")
        object.__setattr__(self, "edges", edges)

    def to_json(self) -> dict:
        return {"vertices": self.n_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> Graph:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))


def graphic_rank(G: Graph) -> RankFunction:
    """r(A) = |V| - c(V, A).

    Masks are filled in blocks by their highest edge: adding edge k to a
    mask below 2^k raises the rank iff its endpoints carry different
    component labels there.  Labels are tracked per mask with numpy.
    """
    m = len(G.edges)
    if m > MAX_ELEMENTS:
        raise GroundsetTooLarge(f"|E| = {m} exceeds {MAX_ELEMENTS}")
    V = max(G.n_vertices, 1)
    dtype = np.uint8 if V < 256 else np.int32
    labels = np.arange(V, dtype=dtype)[None, :]
    ranks = np.zeros(1, dtype=np.int64)
    for u, v in G.edges:
        lu, lv = labels[:, u], labels[:, v]
        joins = lu != lv
        merged = np.where(labels == lv[:, None], lu[:, None], labels)
        labels = np.concatenate([labels, merged])
        ranks = np.concatenate([ranks, ranks + joins])
    return RankFunction(m, ranks)


def cycle_graph(n: int) -> Graph:
    return thick_cycle_graph(n, 1)


def thick_cycle_graph(n: int, j: int) -> Graph:
    """Path 0 - 1 - ... - (n-1) closed by j parallel edges between 0 and n-1."""
    if n < 1 or j < 0 or (n == 1 and j == 0):
        raise InvalidParameters(f"thick cycle needs n >= 1, j >= 0, got ({n}, {j})")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)] * j
    return Graph(n, tuple(edges))


# ---------------------------------------------------------------------------
# closed forms and example families


def uniform_rank(a: int, b: int) -> RankFunction:
    if not 0 <= a <= b:
        raise InvalidParameters(f"uniform rank needs 0 <= a <= b, got ({a}, {b})")
    if b > MAX_ELEMENTS:
        raise GroundsetTooLarge(f"|E| = {b} exceeds {MAX_ELEMENTS}")
    return RankFunction(b, np.minimum(popcounts(b), a))


def _x_minus_1_pow(k: int) -> BiPoly:
    return BiPoly({(i, 0): c for i, c in enumerate(_binomial_rows(k)[k])})


def _y_minus_1_pow(k: int) -> BiPoly:
    return _x_minus_1_pow(k).swap()


def uniform_tutte(a: int, b: int) -> BiPoly:
    """sum_{i<=a} C(b,i)(x-1)^(a-i) + sum_{j>a} C(b,j)(y-1)^(j-a)."""
    if not (0 < a < b <= 64):
        raise InvalidParameters(f"uniform Tutte polynomial needs 0 < a < b <= 64, got ({a}, {b})")
    counts = {}
    for i in range(a + 1):
        counts[(a - i, 0)] = comb(b, i)
    for j in range(a + 1, b + 1):
        counts[(0, j - a)] = comb(b, j)
    return polynomial_from_counts(counts)


def thick_cycle_tutte(n: int, j: int) -> BiPoly:
    """x^(n-1) + (y + x + ... + x^(n-2)) (1 + y + ... + y^(j-1)); y^j when n = 1."""
    if n < 1 or j < 0 or (n == 1 and j == 0):
        raise InvalidParameters(f"thick cycle needs n >= 1, j >= 0, got ({n}, {j})")
    if n == 1:
        return BiPoly({(0, j): 1})
    if j == 0:
        return BiPoly({(n - 1, 0): 1})
    left = BiPoly({(0, 1): 1, **{(i, 0): 1 for i in range(1, n - 1)}})
    right = BiPoly({(0, k): 1 for k in range(j)})
    return BiPoly({(n - 1, 0): 1}) + left * right


def cycle_tutte(n: int) -> BiPoly:
    return thick_cycle_tutte(n, 1)


def _check_table_size(n: int):
    if n > MAX_ELEMENTS:
        raise GroundsetTooLarge(f"|E| = {n} exceeds {MAX_ELEMENTS}")


def two_valued_closed_form(n: int, r: int) -> BiPoly:
    """(y-1)^(n-r) + (y^n - (y-1)^n)(x-1)^r."""
    if not (1 <= r <= n <= 64):
        raise InvalidParameters(f"two-valued example needs 1 <= r <= n <= 64, got ({n}, {r})")
    return _y_minus_1_pow(n - r) + (BiPoly({(0, n): 1}) - _y_minus_1_pow(n)) * _x_minus_1_pow(r)


def two_valued_example(n: int, r: int) -> tuple[RankFunction, BiPoly]:
    """r(E) = r and r(A) = 0 on every proper subset."""
    T = two_valued_closed_form(n, r)
    _check_table_size(n)
    ranks = np.zeros(1 << n, dtype=np.int64)
    ranks[-1] = r
    return RankFunction(n, ranks), T


def three_valued_closed_form(n: int) -> BiPoly:
    """(x-1)^n + (x-1)^(n-1) (y^n - 1 - (y-1)^n)/(y-1) + 1."""
    if not (1 <= n <= 64):
        raise InvalidParameters(f"three-valued example needs 1 <= n <= 64, got {n}")
    num = BiPoly({(0, n): 1}) - 1 - _y_minus_1_pow(n)
    quotient = num.exact_div(BiPoly({(0, 1): 1, (0, 0): -1}))
    return _x_minus_1_pow(n) + _x_minus_1_pow(n - 1) * quotient + 1


def three_valued_example(n: int) -> tuple[RankFunction, BiPoly]:
    """r = 0 on the empty set, 1 on proper nonempty subsets, n on E."""
    T = three_valued_closed_form(n)
    _check_table_size(n)
    ranks = np.ones(1 << n, dtype=np.int64)
    ranks[0] = 0
    ranks[-1] = n
    return RankFunction(n, ranks), T


def offset_rank_example(n: int, a: int, b: int) -> tuple[RankFunction, BiPoly]:
    """r(A) = |A| - a on proper nonempty subsets and r(E) = n - b, for a > b > 0.

    In X = x - 1, Y = y - 1 the polynomial is
    X^(n-b) + X^(a-b) Y^a sum_{0<i<n} C(n,i) X^i + Y^b.
    """
    if not (a > b > 0 and n >= 2 and n >= b):
        raise InvalidParameters(f"offset example needs a > b > 0 and n >= max(2, b), got ({n}, {a}, {b})")
    X = BiPoly({(1, 0): 1, (0, 0): -1})
    Y = BiPoly({(0, 1): 1, (0, 0): -1})
    inner = sum((X ** i * comb(n, i) for i in range(1, n)), BiPoly())
    T = X ** (n - b) + X ** (a - b) * Y ** a * inner + Y ** b
    _check_table_size(n)
    ranks = popcounts(n) - a
    ranks[0] = 0
    ranks[-1] = n - b
    return RankFunction(n, ranks), T


def gordon_greedoid() -> RankFunction:
    """Greedoid on {a, b, c} (bits 0, 1, 2) with feasible sets
    {}, {a}, {b}, {a,c}, {b,c}, {a,b,c}; rank is the largest feasible subset."""
    feasible = [set(), {0}, {1}, {0, 2}, {1, 2}, {0, 1, 2}]
    return RankFunction.from_function(3, lambda A: max(len(F) for F in feasible if F <= A))


def gordon_split() -> tuple[RankFunction, RankFunction]:
    """The two summands of the greedoid: a coloop, and r(a) = 0, r(b) = 1, r(ab) = 2."""
    return RankFunction(1, [0, 1]), RankFunction(2, [0, 0, 1, 2])


def five_element_example() -> RankFunction:
    """|E| = 5, r(A) = min(|A|, 3) except three size-3 subsets of rank 2.

    Seven size-3 subsets have rank 3; the lexicographically first seven are
    chosen.  The polynomial does not depend on that choice.
    """
    triples = list(combinations(range(5), 3))
    high = {sum(1 << k for k in t) for t in triples[:7]}
    ranks = []
    for m in range(32):
        size = bin(m).count("1")
        if size == 3:
            ranks.append(3 if m in high else 2)
        else:
            ranks.append(min(size, 3))
    return RankFunction(5, ranks)


# ---------------------------------------------------------------------------
# axiom checks


@dataclass(frozen=True)
class MatroidFlags:
    is_matroid: bool
    is_monotone: bool
    unit_increase: bool
    submodular: bool
    method: str


def verify_rank_axioms(S: RankFunction) -> MatroidFlags:
    """Recompute monotonicity, unit increase and submodularity.

    Up to 12 elements submodularity is checked over all pairs (A, B).  From
    13 to 16 elements the equivalent local form
    r(A+e) + r(A+f) >= r(A+e+f) + r(A) is checked for all A, e, f, which is
    also exact and needs only n^2 2^n comparisons.
    """
    n = S.n
    if n > MAX_AXIOM_ELEMENTS:
        raise GroundsetTooLarge(f"axiom check is limited to {MAX_AXIOM_ELEMENTS} elements")
    r = S.ranks
    masks = np.arange(1 << n)
    monotone = True
    unit = True
    for e in range(n):
        base = masks[(masks >> e & 1) == 0]
        step = r[base | (1 << e)] - r[base]
        monotone &= bool((step >= 0).all())
        unit &= bool(((step == 0) | (step == 1)).all())
    if n <= EXACT_AXIOM_ELEMENTS:
        method = "pairwise"
        submodular = True
        for A in range(1 << n):
            if not (r[A] + r >= r[A | masks] + r[A & masks]).all():
                submodular = False
                break
    else:
        method = "local"
        submodular = True
        for e in range(n):
            for f in range(e + 1, n):
                base = masks[((masks >> e & 1) == 0) & ((masks >> f & 1) == 0)]
                lhs = r[base | (1 << e)] + r[base | (1 << f)]
                rhs = r[base | (1 << e) | (1 << f)] + r[base]
                if not (lhs >= rhs).all():
                    submodular = False
                    break
            if not submodular:
                break
    return MatroidFlags(
        is_matroid=monotone and unit and submodular,
        is_monotone=monotone,
        unit_increase=unit,
        submodular=submodular,
        method=method,
    )


def degree_formulas(S: RankFunction) -> tuple[int, int]:
    """(r(E) - min r, r*(E) - min r*), the x- and y-degrees of T_S."""
    Sd = dual(S)
    return S.rank - int(S.ranks.min()), Sd.rank - int(Sd.ranks.min())


def random_rank_function(n: int, rng) -> RankFunction:
    """Uniform-ish random valid table (values may be negative)."""
    pc = popcounts(n)
    rE = int(rng.integers(0, n + 1)) if n else 0
    lo = -n
    hi = np.minimum(pc, rE)
    ranks = rng.integers(lo, hi + 1)
    ranks[0] = 0
    ranks[-1] = rE
    return RankFunction(n, ranks)


def random_matroid_like(n: int, rng) -> RankFunction:
    """Random graphic rank function on n edges over a few vertices."""
    V = int(rng.integers(2, max(3, n)))
    edges = tuple((int(rng.integers(0, V)), int(rng.integers(0, V))) for _ in range(n))
    return graphic_rank(Graph(V, edges))

