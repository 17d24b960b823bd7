"""Coxeter-Dynkin graphs, reflections, and exact Coxeter elements.

A graph here is a simply laced intersection diagram: every vertex class
has self-intersection -2, plain edges pair to +1 and double broken edges
to -2.  The vertex tuple fixes a distinguished order, and the Coxeter
element is the product of the vertex reflections in that order with the
first reflection applied last.  All matrix arithmetic is integer exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _poly
from .errors import DenominatorVanishes, InvalidRank, ParseError, UnsupportedArm


@dataclass(frozen=True)
class DynkinGraph:
    """Undirected weighted graph with a distinguished vertex order."""

    vertices: tuple[str, ...]
    edges: frozenset  # triples (i, j, weight) with i < j

    def __post_init__(self):
        k = len(self.vertices)
        seen = set()
        for i, j, w in self.edges:
            if not (0 <= i < j < k):
                raise ValueError(f"edge ({i},{j}) out of range")
            if w not in (1, -2):
                raise ValueError(f"edge weight {w} not allowed")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i},{j})")
            seen.add((i, j))

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def bilinear_form(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric intersection matrix; diagonal entries are -2."""
        k = self.rank
        out = [[0] * k for _ in range(k)]
        for i in range(k):
            out[i][i] = -2
        for i, j, w in self.edges:
            out[i][j] = out[j][i] = w
        return tuple(tuple(row) for row in out)

    def __str__(self):
        return f"graph on {self.rank} vertices, {len(self.edges)} edges"


def build_T(p: int, q: int, r: int) -> DynkinGraph:
    """Two hub vertices sharing three arms, hubs tied by a -2 edge.

    Arm i carries p_i - 1 vertices listed from the far end inward; both
    hubs attach to the inner end of every arm.  Vertex order: first hub,
    the three arms, second hub.
    """
    arms = (p, q, r)
    if any(a < 2 for a in arms):
        raise UnsupportedArm(f"arm parameters {arms} must all be >= 2")
    names = ["d1"]
    edges = set()
    inner_ends = []
    for a_idx, a in enumerate(arms, start=1):
        first = len(names)
        for j in range(1, a):
            names.append(f"a{a_idx}.{j}")
        for v in range(first, len(names) - 1):
            edges.add((v, v + 1, 1))
        inner_ends.append(len(names) - 1)
    d2 = len(names)
    names.append("d2")
    for e in inner_ends:
        edges.add((0, e, 1))
        edges.add((e, d2, 1))
    edges.add((0, d2, -2))
    return DynkinGraph(tuple(names), frozenset(edges))


def build_S(p: int, q: int, r: int) -> DynkinGraph:
    """The T graph extended by one vertex hanging off the second hub."""
    t = build_T(p, q, r)
    d2 = t.rank - 1
    names = t.vertices + ("d3",)
    edges = set(t.edges)
    edges.add((d2, d2 + 1, 1))
    return DynkinGraph(names, frozenset(edges))


def _star(arm_lengths) -> DynkinGraph:
    names = ["c"]
    edges = set()
    for a_idx, a in enumerate(arm_lengths, start=1):
        prev = 0
        for j in range(1, a + 1):
            v = len(names)
            names.append(f"a{a_idx}.{j}")
            edges.add((prev, v, 1))
            prev = v
    return DynkinGraph(tuple(names), frozenset(edges))


def finite_dynkin(kind: str, rank: int) -> DynkinGraph:
    """Classical simply laced tree: A path, D and E three-armed stars."""
    kind = kind.strip().upper()
    if kind == "A":
        if rank < 1:
            raise InvalidRank(f"A requires rank >= 1, got {rank}")
        names = tuple(f"v{i + 1}" for i in range(rank))
        edges = frozenset((i, i + 1, 1) for i in range(rank - 1))
        return DynkinGraph(names, edges)
    if kind == "D":
        if rank < 4:
            raise InvalidRank(f"D requires rank >= 4, got {rank}")
        return _star((1, 1, rank - 3))
    if kind == "E":
        if rank not in (6, 7, 8):
            raise InvalidRank(f"E requires rank 6, 7 or 8, got {rank}")
        return _star((1, 2, rank - 4))
    raise InvalidRank(f"unknown diagram kind {kind!r}")


def affine_a_cycle(mu: int) -> DynkinGraph:
    """Cycle on mu+1 vertices: the A_mu path closed up by one extra vertex.

    The extra vertex joins both ends of the path and comes last in the
    distinguished order.
    """
    if mu < 2:
        raise InvalidRank(f"cycle closure needs mu >= 2, got {mu}")
    names = tuple([f"v{i + 1}" for i in range(mu)] + ["w"])
    edges = {(i, i + 1, 1) for i in range(mu - 1)}
    edges.add((0, mu, 1))
    edges.add((mu - 1, mu, 1))
    return DynkinGraph(names, frozenset(edges))


# ---------------------------------------------------------------------------
# reflections and Coxeter elements

def _identity(k: int):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def _mat_mul(a, b):
    k = len(a)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        row = a[i]
        for l in range(k):
            c = row[l]
            if c:
                brow = b[l]
                for j in range(k):
                    out[i][j] += c * brow[j]
    return out


def _mat_pow(a, e: int):
    out = _identity(len(a))
    base = [list(r) for r in a]
    while e:
        if e & 1:
            out = _mat_mul(out, base)
        base = _mat_mul(base, base)
        e >>= 1
    return out


def reflection(form, i: int):
    """Matrix of x -> x + <x, d_i> d_i on coordinates in the vertex basis."""
    k = len(form)
    if form[i][i] != -2:
        raise ValueError("vertex self-intersection must be -2")
    out = _identity(k)
    for j in range(k):
        out[i][j] += form[i][j]
    return tuple(tuple(row) for row in out)


def _char_poly(mat) -> tuple[int, ...]:
    """det(tI - M), ascending integer coefficients, via trace recursion."""
    k = len(mat)
    if k == 0:
        return (1,)
    a = [[Fraction(v) for v in row] for row in mat]
    coeffs = [Fraction(1)]  # descending from t^k
    n_mat = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for m in range(1, k + 1):
        an = [[sum(a[i][l] * n_mat[l][j] for l in range(k)) for j in range(k)]
              for i in range(k)]
        c = Fraction(-sum(an[i][i] for i in range(k)), m)
        coeffs.append(c)
        if m < k:
            n_mat = an
            for i in range(k):
                n_mat[i][i] += c
    out = []
    for c in reversed(coeffs):
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


@dataclass(frozen=True)
class CoxeterMatrix:
    matrix: tuple[tuple[int, ...], ...]
    charpoly: tuple[int, ...]  # ascending, monic

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def determinant(self) -> int:
        # det(M) = (-1)^k * charpoly(0)
        return self.charpoly[0] if self.rank % 2 == 0 else -self.charpoly[0]

    def __str__(self):
        return f"Coxeter element of rank {self.rank}"


def coxeter_element(g: DynkinGraph) -> CoxeterMatrix:
    """Product of the vertex reflections in the distinguished order.

    The first listed reflection acts last, so the matrix is the plain
    left-to-right product of the reflection matrices.
    """
    form = g.bilinear_form()
    mat = _identity(g.rank)
    for i in range(g.rank):
        mat = _mat_mul(mat, [list(r) for r in reflection(form, i)])
    cp = _char_poly(mat)
    assert abs(cp[0]) == 1 and cp[-1] == 1
    return CoxeterMatrix(tuple(tuple(row) for row in mat), cp)


def quasi_unipotent_check(c: CoxeterMatrix) -> tuple[bool, int | None]:
    """Whether every eigenvalue is a root of unity, plus the finite order.

    Returns (True, h) when the characteristic polynomial splits into
    cyclotomic factors and c^h is the identity for h the lcm of their
    orders; (True, None) when it splits but c has infinite order; and
    (False, None) when some factor is not cyclotomic.
    """
    rem = list(c.charpoly)
    h = 1
    while _poly.degree(rem) > 0:
        deg = _poly.degree(rem)
        hit = None
        for m in range(1, 2 * deg * deg + 7):
            if _poly.euler_phi(m) > deg:
                continue
            quo, r = _poly.divmod_poly(rem, _poly.cyclotomic(m))
            if not r:
                hit = m
                rem = [int(x) for x in quo]
                break
        if hit is None:
            return False, None
        h = math.lcm(h, hit)
    if _mat_pow([list(r) for r in c.matrix], h) == _identity(c.rank):
        return True, h
    return True, None


def klein_fuchs_check(series, phi_num, phi_den, order: int) -> bool:
    """Compare a Poincare series against phi_num/phi_den up to t^order."""
    num = _poly.trim(list(phi_num))
    den = _poly.trim(list(phi_den))
    if not den or den[0] == 0:
        raise DenominatorVanishes("quotient has no power-series expansion")
    lhs = series.expand(order)
    rhs = _poly.series_quotient(num, den, order)
    return lhs == rhs


def parse_graph_spec(text: str) -> DynkinGraph:
    """Graph specs: "T:2,3,7", "S:2,3,7", "A:5", "D:4", "E:8"."""
    head, sep, rest = text.strip().partition(":")
    if not sep:
        raise ParseError(f"graph spec {text!r} needs KIND:ARGS")
    head = head.strip().upper()
    try:
        args = [int(a) for a in rest.split(",")]
    except ValueError:
        raise ParseError(f"bad graph arguments {rest!r}") from None
    if head in ("T", "S"):
        if len(args) != 3:
            raise ParseError("T and S graphs take three arm parameters")
        return build_T(*args) if head == "T" else build_S(*args)
    if head in ("A", "D", "E"):
        if len(args) != 1:
            raise ParseError("Dynkin diagrams take a single rank")
        return finite_dynkin(head, args[0])
    raise ParseError(f"unknown graph kind {head!r}")
