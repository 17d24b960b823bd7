"""Diagonal symmetry groups of invertible polynomials.

A diagonal symmetry multiplies each variable by a root of unity and is
recorded additively: the element (a_1,..,a_n) acts by x_i -> e[a_i] x_i
where e[t] = exp(2*pi*i*t).  All phases are rationals reduced to [0,1),
so equality of elements and of groups is plain syntactic equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from ._linalg import mat_inverse
from .errors import (
    AmbientMismatch,
    GroupTooLarge,
    NotASubgroup,
    NotASymmetry,
    ParseError,
)
from .polynomials import InvertiblePolynomial, canonical_weights, transpose

SUBGROUP_BOUND = 10_000


@dataclass(frozen=True, order=True)
class GroupElement:
    phases: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "phases", tuple(Fraction(p) % 1 for p in self.phases)
        )

    @property
    def n(self) -> int:
        return len(self.phases)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(a + b for a, b in zip(self.phases, other.phases)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-p for p in self.phases))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def scaled(self, k: int) -> "GroupElement":
        return GroupElement(tuple(k * p for p in self.phases))

    def order(self) -> int:
        return math.lcm(*(p.denominator for p in self.phases))

    def is_identity(self) -> bool:
        return all(p == 0 for p in self.phases)

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.phases) + ")"


def identity_element(n: int) -> GroupElement:
    return GroupElement((Fraction(0),) * n)


def age(g: GroupElement) -> Fraction:
    """Sum of the phases, each taken in [0,1)."""
    return sum(g.phases, Fraction(0))


def fixed_coordinates(g: GroupElement) -> tuple[tuple[int, ...], int]:
    """1-based indices of coordinates with phase 0, and their count."""
    idx = tuple(i + 1 for i, p in enumerate(g.phases) if p == 0)
    return idx, len(idx)


_ELEMENT_TEXT = re.compile(r"\(?\s*([^()]*?)\s*\)?\s*$")


def parse_element(text: str, n: int) -> GroupElement:
    """Parse "(1/2, 1/3, 0)" (parentheses optional) into an element."""
    m = _ELEMENT_TEXT.match(text.strip())
    if m is None:
        raise ParseError(f"bad group element {text!r}")
    parts = [p.strip() for p in m.group(1).split(",") if p.strip()]
    if len(parts) != n:
        raise ParseError(f"expected {n} phases, got {len(parts)}")
    try:
        phases = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad phase in {text!r}") from exc
    return GroupElement(phases)


# ---------------------------------------------------------------------------
# subgroups

@dataclass(frozen=True)
class Subgroup:
    """A subgroup of the diagonal symmetry group of a fixed polynomial."""

    ambient: InvertiblePolynomial
    elements: frozenset[GroupElement]
    generators: tuple[GroupElement, ...] = field(compare=False, default=())

    def __post_init__(self):
        if not self.generators:
            gens = tuple(_small_generating_set(self.elements))
            object.__setattr__(self, "generators", gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def n(self) -> int:
        return self.ambient.n

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements

    def __le__(self, other: "Subgroup") -> bool:
        return self.ambient == other.ambient and self.elements <= other.elements

    def sorted_elements(self) -> list[GroupElement]:
        return sorted(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __str__(self):
        if self.is_trivial():
            return "{e}"
        gens = ", ".join(str(g) for g in self.generators)
        return f"<{gens}>"


def _close(n: int, gens) -> frozenset[GroupElement]:
    """All sums of the generators (BFS closure under addition mod 1)."""
    seen = {identity_element(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                s = a + g
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return frozenset(seen)


def _small_generating_set(elements) -> list[GroupElement]:
    """Greedy generating set: repeatedly adjoin an element of largest order."""
    n = next(iter(elements)).n if elements else 0
    gens: list[GroupElement] = []
    have = {identity_element(n)}
    remaining = set(elements) - have
    while remaining:
        g = max(remaining, key=lambda e: (e.order(), [-p for p in e.phases]))
        gens.append(g)
        have = _close(n, gens)
        remaining = set(elements) - have
    return gens


def is_symmetry(f: InvertiblePolynomial, g: GroupElement) -> bool:
    """Whether g preserves every monomial of f: E*alpha integral."""
    if g.n != f.n:
        return False
    for m in f.monomials:
        s = sum(e * p for e, p in zip(m.exponents, g.phases))
        if s.denominator != 1:
            return False
    return True


def symmetry_group(f: InvertiblePolynomial) -> Subgroup:
    """The full diagonal symmetry group G_f, of order det E."""
    inv = mat_inverse(f.exponent_matrix())
    cols = [
        GroupElement(tuple(inv[i][j] for i in range(f.n)))
        for j in range(f.n)
    ]
    elements = _close(f.n, cols)
    assert len(elements) == f.determinant()
    return Subgroup(f, elements, tuple(g for g in cols if not g.is_identity()))


def subgroup_generated(ambient: Subgroup, gens) -> Subgroup:
    """Subgroup of ambient generated by the given elements."""
    gens = tuple(gens)
    for g in gens:
        if g not in ambient:
            raise NotASymmetry(f"{g} is not in {ambient}")
    elements = _close(ambient.n, gens)
    return Subgroup(ambient.ambient, elements, tuple(g for g in gens if not g.is_identity()))


def trivial_subgroup(f: InvertiblePolynomial) -> Subgroup:
    return Subgroup(f, frozenset({identity_element(f.n)}))


def exponential_grading_operator(f: InvertiblePolynomial) -> GroupElement:
    """The element with phases the charges w_i/d."""
    return GroupElement(canonical_weights(f).charges)


def grading_subgroup(f: InvertiblePolynomial) -> Subgroup:
    """The cyclic subgroup generated by the exponential grading operator."""
    return subgroup_generated(symmetry_group(f), [exponential_grading_operator(f)])


def index(G: Subgroup, H: Subgroup) -> int:
    if not H <= G:
        raise NotASubgroup(f"{H} is not a subgroup of {G}")
    assert G.order % H.order == 0
    return G.order // H.order


# ---------------------------------------------------------------------------
# the duality pairing and dual groups

def duality_pairing(f: InvertiblePolynomial, a: GroupElement, b: GroupElement) -> Fraction:
    """<a,b> = (E a)^T b mod 1, for a in G_f and b in G_ftilde."""
    if not is_symmetry(f, a):
        raise NotASymmetry(f"{a} is not a symmetry of {f}")
    if not is_symmetry(transpose(f), b):
        raise NotASymmetry(f"{b} is not a symmetry of the transpose of {f}")
    e = f.exponent_matrix()
    total = Fraction(0)
    for i in range(f.n):
        for j in range(f.n):
            total += e[i][j] * a.phases[j] * b.phases[i]
    return total % 1


def dual_group(G: Subgroup) -> Subgroup:
    """Annihilator of G inside the symmetry group of the transpose.

    Concrete model of the dual group: b is kept iff <a,b> = 0 for every
    generator a of G.  Contravariant and involutive; the order satisfies
    |G| * |dual| = |G_f|.
    """
    f = G.ambient
    ft = transpose(f)
    e = f.exponent_matrix()
    gens = G.generators
    paired = []
    for a in gens:
        # row vector (E a)^T; integral exactly because a lies in G_f
        row = []
        for i in range(f.n):
            s = sum(e[i][j] * a.phases[j] for j in range(f.n))
            assert s.denominator == 1
            row.append(int(s))
        paired.append(tuple(row))
    kept = []
    for b in symmetry_group(ft).elements:
        if all(
            sum(r * p for r, p in zip(row, b.phases)) % 1 == 0
            for row in paired
        ):
            kept.append(b)
    out = Subgroup(ft, frozenset(kept))
    assert out.order * G.order == f.determinant()
    return out


def sl_subgroup(G: Subgroup) -> Subgroup:
    """Elements of G of integral age (determinant-one symmetries)."""
    kept = frozenset(g for g in G.elements if age(g).denominator == 1)
    return Subgroup(G.ambient, kept)


def j_invariant(G: Subgroup) -> int:
    """Count of age-1 elements fixing only the origin."""
    return sum(
        1
        for g in G.elements
        if age(g) == 1 and all(p != 0 for p in g.phases)
    )


def fixing_subgroup(G: Subgroup, i: int) -> Subgroup:
    """Maximal subgroup of G fixing the i-th coordinate (1-based)."""
    if not 1 <= i <= G.n:
        raise IndexError(f"coordinate {i} out of range 1..{G.n}")
    kept = frozenset(g for g in G.elements if g.phases[i - 1] == 0)
    return Subgroup(G.ambient, kept)


# ---------------------------------------------------------------------------
# the subgroup lattice

def intersection(G: Subgroup, H: Subgroup) -> Subgroup:
    if G.ambient != H.ambient:
        raise AmbientMismatch("subgroups of different polynomials")
    return Subgroup(G.ambient, G.elements & H.elements)


def join(G: Subgroup, H: Subgroup) -> Subgroup:
    if G.ambient != H.ambient:
        raise AmbientMismatch("subgroups of different polynomials")
    elements = _close(G.n, list(G.generators) + list(H.generators))
    return Subgroup(G.ambient, elements)


def all_subgroups(G: Subgroup) -> list[Subgroup]:
    """Every subgroup of G, smallest first.

    Join-closure of the cyclic subgroups; fine for the group orders in
    play here (a few hundred at most).
    """
    if G.order > SUBGROUP_BOUND:
        raise GroupTooLarge(f"|G| = {G.order} exceeds {SUBGROUP_BOUND}")
    cyclic = {}
    for g in G.elements:
        sub = subgroup_generated(G, [g])
        cyclic[sub.elements] = sub
    found = dict(cyclic)
    frontier = list(cyclic.values())
    while frontier:
        nxt = []
        for sub in frontier:
            for cyc in cyclic.values():
                joined = join(sub, cyc)
                if joined.elements not in found:
                    found[joined.elements] = joined
                    nxt.append(joined)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.sorted_elements()))


def intermediate_subgroups(G: Subgroup, H: Subgroup) -> list[Subgroup]:
    """All K with H <= K <= G."""
    if not H <= G:
        raise NotASubgroup(f"{H} is not a subgroup of {G}")
    return [K for K in all_subgroups(G) if H <= K]


# ---------------------------------------------------------------------------
# cosets

def cosets(G: Subgroup, H: Subgroup) -> list[GroupElement]:
    """One canonical (minimal) representative per coset of H in G."""
    if not H <= G:
        raise NotASubgroup(f"{H} is not a subgroup of {G}")
    reps = {}
    for g in sorted(G.elements):
        key = frozenset(g + h for h in H.elements)
        if key not in reps:
            reps[key] = g
    return sorted(reps.values())


def coset_of(g: GroupElement, H: Subgroup) -> GroupElement:
    """Canonical representative of g + H."""
    return min(g + h for h in H.elements)


# ---------------------------------------------------------------------------
# CLI group specifiers

def parse_group_spec(f: InvertiblePolynomial, spec: str) -> Subgroup:
    """Resolve "e", "G0", "Gf", "SL" or a list "g1;g2;..." of elements."""
    text = spec.strip()
    key = text.lower()
    if key in {"e", "1", "trivial"}:
        return trivial_subgroup(f)
    if key == "g0":
        return grading_subgroup(f)
    if key == "gf":
        return symmetry_group(f)
    if key == "sl":
        return sl_subgroup(symmetry_group(f))
    gens = [parse_element(part, f.n) for part in text.split(";") if part.strip()]
    if not gens:
        raise ParseError(f"empty group specifier {spec!r}")
    return subgroup_generated(symmetry_group(f), gens)


def element_orbit(g: GroupElement) -> list[GroupElement]:
    """g, 2g, ..., up to the identity."""
    return [g.scaled(k) for k in range(g.order())]
