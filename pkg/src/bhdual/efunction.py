"""Equivariant E-functions for pairs (polynomial, symmetry group).

Every group element g contributes a sector: the Milnor basis of the
restriction of f to the fixed coordinates of g, filtered down to the
monomials invariant under the whole group, each placed at a bidegree
shifted by age(g).  Sector parity is the fixed-coordinate count mod 2;
the E-function takes even minus odd dimensions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groups import Subgroup, age, dual_group, grading_subgroup, sl_subgroup, symmetry_group
from .milnor import milnor_basis, product_from_eigenvalues, restrict
from .polynomials import InvertiblePolynomial, transpose


@dataclass(frozen=True)
class Sector:
    """One group element's contribution, before super-dimension signs."""

    element: object
    fixed_indices: tuple[int, ...]  # 1-based
    parity: int
    dimensions: tuple[tuple[Fraction, Fraction, int], ...]  # (p, q, dim)


def sector(f: InvertiblePolynomial, g, G: Subgroup) -> Sector:
    """Invariant Milnor-basis dimensions of f^g, age-shifted.

    A restricted basis monomial x^k survives when every generator h of G
    satisfies sum_i (k_i + 1) h_i = 0 mod 1 over the fixed coordinates;
    it then sits at (n_g - alpha + age(g), alpha + age(g)) where alpha is
    its weighted exponent.  An element without fixed coordinates
    contributes a single even dimension at (age(g), age(g)).
    """
    assert g in G and G.ambient == f
    fixed0 = tuple(i for i, ph in enumerate(g.phases) if ph == 0)
    r = restrict(f, [i + 1 for i in fixed0])
    basis = milnor_basis(r)
    charges = r.weights.charges
    shift = age(g)
    n_g = len(fixed0)
    dims: dict[tuple[Fraction, Fraction], int] = {}
    for mono in basis.monomials:
        invariant = True
        for h in G.generators:
            s = sum(((k + 1) * h.phases[i] for k, i in zip(mono, fixed0)), Fraction(0))
            if s.denominator != 1:
                invariant = False
                break
        if not invariant:
            continue
        alpha = sum(((k + 1) * q for k, q in zip(mono, charges)), Fraction(0))
        key = (n_g - alpha + shift, alpha + shift)
        dims[key] = dims.get(key, 0) + 1
    ordered = tuple((p, q, dims[(p, q)]) for p, q in sorted(dims))
    return Sector(g, tuple(i + 1 for i in fixed0), n_g % 2, ordered)


@dataclass(frozen=True)
class EFunctionValue:
    """Finite sum of coeff * t^{p-n/2} tbar^{q-n/2} with exact exponents."""

    n: int
    terms: tuple[tuple[Fraction, Fraction, int], ...]  # (p, q, coeff), sorted

    def coefficient(self, p, q) -> int:
        p, q = Fraction(p), Fraction(q)
        for tp, tq, c in self.terms:
            if (tp, tq) == (p, q):
                return c
        return 0

    def support(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple((p, q) for p, q, _ in self.terms)

    @property
    def chi(self) -> int:
        return sum(c for _, _, c in self.terms)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "terms": [
                    {"p": str(p), "q": str(q), "coeff": c} for p, q, c in self.terms
                ],
            }
        )

    def __str__(self):
        if not self.terms:
            return "0"
        half = Fraction(self.n, 2)
        parts = []
        for p, q, c in self.terms:
            a, b = p - half, q - half
            factors = []
            if a != 0:
                factors.append(f"t^{a}" if a != 1 else "t")
            if b != 0:
                factors.append(f"tbar^{b}" if b != 1 else "tbar")
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                text = body
            elif c == -1 and factors:
                text = "-" + body
            else:
                text = f"{c}*{body}" if factors else str(c)
            parts.append(text)
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


def e_function_from_json(text: str) -> EFunctionValue:
    data = json.loads(text)
    terms = tuple(
        sorted(
            (Fraction(t["p"]), Fraction(t["q"]), int(t["coeff"]))
            for t in data["terms"]
        )
    )
    return EFunctionValue(int(data["n"]), terms)


@lru_cache(maxsize=None)
def e_function(f: InvertiblePolynomial, G: Subgroup) -> EFunctionValue:
    """Sum of all sector contributions with super-dimension signs."""
    assert G.ambient == f
    coeffs: dict[tuple[Fraction, Fraction], int] = {}
    for g in G.sorted_elements():
        s = sector(f, g, G)
        sign = -1 if s.parity else 1
        for p, q, d in s.dimensions:
            coeffs[(p, q)] = coeffs.get((p, q), 0) + sign * d
    terms = tuple((p, q, c) for (p, q), c in sorted(coeffs.items()) if c != 0)
    return EFunctionValue(f.n, terms)


def hodge_numbers(f: InvertiblePolynomial, G: Subgroup):
    """Parity-summed dimensions h^{p,q}, plus the hypothesis flag.

    The flag records whether G sits inside the SL part or contains the
    grading element's group, the regimes where these numbers carry their
    usual meaning; the table itself is computed unconditionally.
    """
    table: dict[tuple[Fraction, Fraction], int] = {}
    for g in G.sorted_elements():
        s = sector(f, g, G)
        for p, q, d in s.dimensions:
            table[(p, q)] = table.get((p, q), 0) + d
    flag = G <= sl_subgroup(symmetry_group(f)) or grading_subgroup(f) <= G
    return table, flag


def chi(f: InvertiblePolynomial, G: Subgroup) -> int:
    return e_function(f, G).chi


def first_moment(f: InvertiblePolynomial, G: Subgroup) -> Fraction:
    """Signed sum of (q - n/2); zero whenever the mean theorem applies."""
    half = Fraction(f.n, 2)
    e = e_function(f, G)
    return sum((c * (q - half) for _, q, c in e.terms), Fraction(0))


def mean_exponent(f: InvertiblePolynomial, G: Subgroup) -> Fraction:
    """Signed mean of the exponents q, normalized by chi.

    Raises ZeroDivisionError when chi vanishes; first_moment still
    reports the unnormalized sum in that case.
    """
    e = e_function(f, G)
    total = sum((c * q for _, q, c in e.terms), Fraction(0))
    return total / e.chi


def variance(f: InvertiblePolynomial, G: Subgroup) -> Fraction:
    """Signed second moment of q about n/2."""
    half = Fraction(f.n, 2)
    e = e_function(f, G)
    return sum((c * (q - half) ** 2 for _, q, c in e.terms), Fraction(0))


def central_charge(ws) -> Fraction:
    """n - 2*sum(charges) for a weight system."""
    return len(ws.weights) - 2 * sum(ws.charges, Fraction(0))


def characteristic_polynomial_pair(f: InvertiblePolynomial, G: Subgroup):
    """Eigenvalue multiset {q mod 1} with multiplicities h^{p,q}.

    Returns (eigenvalues, product) where the product is the factored
    form when the multiset groups into full primitive-root packets and
    None otherwise.
    """
    table, _ = hodge_numbers(f, G)
    eigenvalues = []
    for (_, q), d in sorted(table.items()):
        eigenvalues.extend([q % 1] * d)
    eigenvalues.sort()
    try:
        product = product_from_eigenvalues(eigenvalues)
    except Exception:
        product = None
    return tuple(eigenvalues), product


@dataclass(frozen=True)
class DualityReport:
    holds: bool
    hodge_symmetric: bool | None  # None when the SL hypothesis fails
    mismatches: tuple[str, ...]


def duality_check(f: InvertiblePolynomial, G: Subgroup) -> DualityReport:
    """Coefficientwise test of E(f,G)(t,tbar) = (-1)^n E(ft,Gt)(1/t,tbar)."""
    ft = transpose(f)
    Gt = dual_group(G)
    n = f.n
    e1 = e_function(f, G)
    e2 = e_function(ft, Gt)
    sign = -1 if n % 2 else 1
    support = set(e1.support()) | {(n - p, q) for p, q in e2.support()}
    mismatches = []
    for p, q in sorted(support):
        lhs = e1.coefficient(p, q)
        rhs = sign * e2.coefficient(n - p, q)
        if lhs != rhs:
            mismatches.append(f"({p},{q}): {lhs} != {rhs}")
    hodge = None
    if G <= sl_subgroup(symmetry_group(f)):
        t1, _ = hodge_numbers(f, G)
        t2, _ = hodge_numbers(ft, Gt)
        mirrored = {(n - p, q): d for (p, q), d in t2.items()}
        hodge = t1 == mirrored
    return DualityReport(not mismatches, hodge, tuple(mismatches))
