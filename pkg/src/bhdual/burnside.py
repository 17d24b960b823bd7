"""Burnside-ring Euler characteristics and equivariant Saito duality.

Elements of the Burnside ring of a finite abelian group are integer
combinations of transitive classes [G/H].  The equivariant Euler
characteristic of a Milnor fiber collects the exactly-H strata; the
orbifold Euler characteristic averages joint fixed-locus counts over
commuting pairs.  The duality map swaps [G/H] for the annihilator class
on the transposed polynomial's side.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbientMismatch, NonIntegerQuotient
from .groups import (
    GroupElement,
    Subgroup,
    all_subgroups,
    coset_of,
    cosets,
    dual_group,
    symmetry_group,
)
from .milnor import as_weighted, milnor_number, restrict
from .polynomials import InvertiblePolynomial, transpose


def _subgroup_key(H: Subgroup):
    return (H.order, tuple(g.phases for g in H.sorted_elements()))


def _fixed_indices(H: Subgroup) -> tuple[int, ...]:
    """1-based coordinates fixed by every element of H."""
    n = H.n
    fixed = set(range(n))
    for g in H.generators:
        fixed &= {i for i in range(n) if g.phases[i] == 0}
    return tuple(i + 1 for i in sorted(fixed))


@dataclass(frozen=True)
class BurnsideElement:
    group: Subgroup
    terms: tuple[tuple[Subgroup, int], ...]  # canonical order, no zeros

    def coefficient(self, H: Subgroup) -> int:
        for K, c in self.terms:
            if K == H:
                return c
        return 0

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        if self.group != other.group:
            raise AmbientMismatch("terms live over different groups")
        out: dict[Subgroup, int] = dict(self.terms)
        for H, c in other.terms:
            out[H] = out.get(H, 0) + c
        return _element(self.group, out)

    def __neg__(self) -> "BurnsideElement":
        return BurnsideElement(self.group, tuple((H, -c) for H, c in self.terms))

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return BurnsideElement(self.group, ())
            return BurnsideElement(
                self.group, tuple((H, other * c) for H, c in self.terms)
            )
        return burnside_mul(self, other)

    __rmul__ = __mul__

    def to_json(self) -> str:
        payload = []
        for H, c in self.terms:
            gens = [[str(p) for p in g.phases] for g in H.generators]
            payload.append({"subgroup": gens, "coeff": c})
        return json.dumps({"terms": payload})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for H, c in self.terms:
            body = f"[G/{H}]"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


def _element(G: Subgroup, coeffs: dict[Subgroup, int]) -> BurnsideElement:
    terms = tuple(
        (H, c) for H, c in sorted(coeffs.items(), key=lambda kv: _subgroup_key(kv[0]))
        if c != 0
    )
    return BurnsideElement(G, terms)


def burnside_one(G: Subgroup) -> BurnsideElement:
    """The ring identity [G/G]."""
    return _element(G, {G: 1})


def burnside_from_json(G: Subgroup, text: str) -> BurnsideElement:
    from .groups import parse_element, subgroup_generated

    data = json.loads(text)
    coeffs: dict[Subgroup, int] = {}
    for term in data["terms"]:
        gens = [
            GroupElement(tuple(Fraction(p) for p in phases))
            for phases in term["subgroup"]
        ]
        H = subgroup_generated(G, gens)
        coeffs[H] = coeffs.get(H, 0) + int(term["coeff"])
    return _element(G, coeffs)


def burnside_mul(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Bilinear extension of [G/H][G/K] = (|G|/|HK|) [G/(H and K)]."""
    if a.group != b.group:
        raise AmbientMismatch("factors live over different groups")
    G = a.group
    out: dict[Subgroup, int] = {}
    for H, c1 in a.terms:
        for K, c2 in b.terms:
            meet = Subgroup(G.ambient, H.elements & K.elements)
            product_order = H.order * K.order // meet.order  # |HK|, abelian
            mult = G.order // product_order
            out[meet] = out.get(meet, 0) + c1 * c2 * mult
    return _element(G, out)


# ---------------------------------------------------------------------------
# Euler characteristics

def milnor_fiber_euler(p) -> int:
    """1 + (-1)^(n-1) mu for the fiber of p; 0 for the empty fiber."""
    w = as_weighted(p)
    if w.n == 0:
        return 0
    return 1 + (-1) ** (w.n - 1) * milnor_number(w)


def _fixed_euler_table(f: InvertiblePolynomial, subgroups) -> dict[Subgroup, int]:
    memo: dict[tuple[int, ...], int] = {}
    out = {}
    for H in subgroups:
        key = _fixed_indices(H)
        if key not in memo:
            memo[key] = milnor_fiber_euler(restrict(f, key))
        out[H] = memo[key]
    return out


def equivariant_euler(f: InvertiblePolynomial, G: Subgroup) -> BurnsideElement:
    """chi^G of the fiber of f as a sum of classes [G/H].

    The exactly-H stratum count comes from removing every strictly
    larger subgroup's stratum from chi(V^H); dividing by [G:H] counts
    its free orbits.
    """
    assert G.ambient == f
    subs = all_subgroups(G)
    chi_fixed = _fixed_euler_table(f, subs)
    strata: dict[Subgroup, int] = {}
    for H in sorted(subs, key=lambda s: -s.order):
        above = sum(strata[K] for K in strata if H <= K and H != K)
        strata[H] = chi_fixed[H] - above
    coeffs: dict[Subgroup, int] = {}
    for H, s in strata.items():
        if s == 0:
            continue
        idx = G.order // H.order
        if s % idx:
            raise NonIntegerQuotient(f"stratum {s} not divisible by index {idx}")
        coeffs[H] = s // idx
    return _element(G, coeffs)


def reduced_equivariant_euler(f: InvertiblePolynomial, G: Subgroup) -> BurnsideElement:
    return equivariant_euler(f, G) - burnside_one(G)


def r_orb(x: BurnsideElement) -> int:
    """The linear map [G/H] -> |H|."""
    return sum(c * H.order for H, c in x.terms)


def orbifold_euler(f: InvertiblePolynomial, G: Subgroup) -> int:
    """Average of joint fixed-locus Euler numbers over pairs of elements."""
    assert G.ambient == f
    elements = G.sorted_elements()
    n = G.n
    fixed_sets = [
        frozenset(i for i in range(n) if g.phases[i] == 0) for g in elements
    ]
    memo: dict[tuple[int, ...], int] = {}
    total = 0
    for fg in fixed_sets:
        for fh in fixed_sets:
            key = tuple(i + 1 for i in sorted(fg & fh))
            if key not in memo:
                memo[key] = milnor_fiber_euler(restrict(f, key))
            total += memo[key]
    assert total % G.order == 0
    return total // G.order


def reduced_orbifold_euler(f: InvertiblePolynomial, G: Subgroup) -> int:
    return orbifold_euler(f, G) - G.order


# ---------------------------------------------------------------------------
# equivariant Saito duality

def saito_duality_map(x: BurnsideElement) -> BurnsideElement:
    """[G/H] -> [G*/annihilator(H)] over the transposed polynomial.

    Defined when the element lives over the full symmetry group, so that
    the dual side is the full symmetry group of the transpose.
    """
    G = x.group
    f = G.ambient
    assert G == symmetry_group(f), "duality needs the full symmetry group"
    Gt = symmetry_group(transpose(f))
    coeffs: dict[Subgroup, int] = {}
    for H, c in x.terms:
        Ht = dual_group(H)
        coeffs[Ht] = coeffs.get(Ht, 0) + c
    return _element(Gt, coeffs)


# ---------------------------------------------------------------------------
# enhanced classes

@dataclass(frozen=True)
class EnhancedTerm:
    """A class [G/H, h+H, character of H].

    The character is stored through the duality pairing: beta ranges
    over canonical representatives of cosets of the annihilator of H,
    and h over canonical representatives of cosets of H.
    """

    group: Subgroup
    subgroup: Subgroup
    shift: GroupElement      # canonical representative of h + H
    character: GroupElement  # canonical representative of beta + annihilator(H)

    def __str__(self):
        return f"[G/{self.subgroup}, {self.shift}, {self.character}]"


def enhanced_classes(f: InvertiblePolynomial) -> tuple[EnhancedTerm, ...]:
    """All classes [G/H, h, alpha] over the full symmetry group."""
    G = symmetry_group(f)
    Gt = symmetry_group(transpose(f))
    out = []
    for H in all_subgroups(G):
        Ht = dual_group(H)
        for h in cosets(G, H):
            for beta in cosets(Gt, Ht):
                out.append(EnhancedTerm(G, H, h, beta))
    return tuple(out)


def enhanced_duality_map(t: EnhancedTerm) -> EnhancedTerm:
    """[G/H, h, beta] -> [G*/annihilator(H), beta, h], all slots canonical."""
    f = t.group.ambient
    Gt = symmetry_group(transpose(f))
    Ht = dual_group(t.subgroup)
    new_shift = coset_of(t.character, Ht)
    new_char = coset_of(t.shift, t.subgroup)
    return EnhancedTerm(Gt, Ht, new_shift, new_char)
