"""Graded Milnor algebra, spectrum, monodromy characteristic polynomial.

For a weighted homogeneous polynomial with an isolated critical point the
Jacobian-ideal quotient is finite dimensional; a monomial basis of it is
computed degree by degree with exact row reduction.  The multiset of
exponents read off that basis expands the characteristic polynomial of
the monodromy as a product of cyclotomic-style factors (t^m - 1)^chi.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _poly
from .errors import NotIsolated, NotRational
from .polynomials import (
    InvertiblePolynomial,
    Monomial,
    WeightSystem,
    reduced_weights,
)


@dataclass(frozen=True)
class WeightedPolynomial:
    """A weighted homogeneous polynomial that need not be invertible.

    Restrictions of an invertible polynomial to a fixed coordinate
    subspace land here: the monomial count no longer matches the
    variable count, but the grading survives.
    """

    variables: tuple[str, ...]
    monomials: tuple[Monomial, ...]
    weights: WeightSystem

    @property
    def n(self) -> int:
        return len(self.variables)

    def __str__(self):
        if not self.monomials:
            return "0"
        from .polynomials import format_polynomial

        return format_polynomial(self)


def as_weighted(f) -> WeightedPolynomial:
    """View an invertible polynomial with its reduced weight system."""
    if isinstance(f, WeightedPolynomial):
        return f
    return WeightedPolynomial(f.variables, f.monomials, reduced_weights(f))


def restrict(f: InvertiblePolynomial, coords) -> WeightedPolynomial:
    """Restriction to the coordinate subspace given by 1-based indices."""
    keep = sorted({int(i) - 1 for i in coords})
    if any(i < 0 or i >= f.n for i in keep):
        raise IndexError(f"coordinates out of range 1..{f.n}")
    ws = reduced_weights(f)
    keep_set = set(keep)
    monos = []
    for m in f.monomials:
        if set(m.support()) <= keep_set:
            monos.append(Monomial(m.coefficient, tuple(m.exponents[i] for i in keep)))
    return WeightedPolynomial(
        tuple(f.variables[i] for i in keep),
        tuple(monos),
        WeightSystem(tuple(ws.weights[i] for i in keep), ws.degree),
    )


def restrict_to_element(f: InvertiblePolynomial, g) -> WeightedPolynomial:
    """Restriction of f to the fixed locus of a diagonal symmetry."""
    fixed = [i + 1 for i, p in enumerate(g.phases) if p == 0]
    return restrict(f, fixed)


# ---------------------------------------------------------------------------
# the graded basis

@dataclass(frozen=True)
class MilnorBasis:
    monomials: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    weights: WeightSystem

    def __len__(self):
        return len(self.monomials)

    def degree_histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return out


def _monomials_by_degree(weights: tuple[int, ...], top: int) -> list[list[tuple[int, ...]]]:
    """All exponent tuples of each weighted degree 0..top."""
    table: list[list[tuple[int, ...]]] = [[] for _ in range(top + 1)]
    table[0].append(())
    for w in weights:
        new: list[list[tuple[int, ...]]] = [[] for _ in range(top + 1)]
        for d in range(top + 1):
            for mono in table[d]:
                k = 0
                while d + k * w <= top:
                    new[d + k * w].append(mono + (k,))
                    k += 1
        table = new
    for row in table:
        row.sort()
    return table


def _quotient_basis_in_degree(colmons, rows):
    """Monomials not hit by a pivot after exact row reduction."""
    index = {m: j for j, m in enumerate(colmons)}
    pivots: dict[int, list[Fraction]] = {}
    for row in rows:
        vec = [Fraction(0)] * len(colmons)
        for mono, c in row.items():
            vec[index[mono]] += c
        for col in sorted(pivots):
            if vec[col] != 0:
                p = pivots[col]
                factor = vec[col]
                for j in range(col, len(vec)):
                    vec[j] -= factor * p[j]
        lead = next((j for j, c in enumerate(vec) if c != 0), None)
        if lead is None:
            continue
        inv = vec[lead]
        pivots[lead] = [c / inv for c in vec]
    return [m for j, m in enumerate(colmons) if j not in pivots]


@lru_cache(maxsize=None)
def _milnor_basis(p: WeightedPolynomial) -> MilnorBasis:
    ws = p.weights
    n = p.n
    if n == 0:
        return MilnorBasis(((),), (0,), ws)
    weights = ws.weights
    d = ws.degree
    top = sum(d - 2 * w for w in weights)
    if top < 0:
        raise NotIsolated(f"negative top degree for {p}")
    wmax = max(weights)
    table = _monomials_by_degree(weights, top + wmax)

    # partial derivatives, each weighted homogeneous of degree d - w_j
    partials = []
    for j in range(n):
        terms = {}
        for m in p.monomials:
            k = m.exponents[j]
            if k > 0:
                e = list(m.exponents)
                e[j] -= 1
                key = tuple(e)
                terms[key] = terms.get(key, Fraction(0)) + m.coefficient * k
        terms = {k: c for k, c in terms.items() if c != 0}
        if terms:
            partials.append((j, terms))

    basis = []
    degrees = []
    for deg in range(top + wmax + 1):
        cols = table[deg]
        if not cols:
            continue
        rows = []
        for j, terms in partials:
            shift = deg - (d - weights[j])
            if shift < 0 or shift > top + wmax:
                continue
            for mult in table[shift]:
                row = {}
                for mono, c in terms.items():
                    key = tuple(a + b for a, b in zip(mult, mono))
                    row[key] = row.get(key, Fraction(0)) + c
                rows.append(row)
        kept = _quotient_basis_in_degree(cols, rows)
        if deg <= top:
            basis.extend(kept)
            degrees.extend([deg] * len(kept))
        elif kept:
            raise NotIsolated(f"non-trivial quotient in degree {deg} for {p}")
    return MilnorBasis(tuple(basis), tuple(degrees), ws)


def milnor_basis(f, ws: WeightSystem | None = None) -> MilnorBasis:
    """Monomial basis of the Jacobian-ideal quotient, graded by weight.

    Accepts an invertible polynomial (reduced weights are used) or a
    restriction; an explicit weight system overrides either.
    """
    p = as_weighted(f)
    if ws is not None:
        p = WeightedPolynomial(p.variables, p.monomials, ws)
    return _milnor_basis(p)


def milnor_number(f, ws: WeightSystem | None = None) -> int:
    """Product formula over the charges: mu = prod (d - w_i)/w_i."""
    p = as_weighted(f)
    if ws is None:
        ws = p.weights
    mu = Fraction(1)
    for w in ws.weights:
        mu *= Fraction(ws.degree - w, w)
    if mu.denominator != 1 or mu <= 0:
        raise NotIsolated(f"product formula gives {mu} for {p}")
    return int(mu)


def spectrum(f, ws: WeightSystem | None = None) -> tuple[Fraction, ...]:
    """Exponents alpha = sum (k_i + 1) q_i over the Milnor basis, sorted."""
    basis = milnor_basis(f, ws)
    q = basis.weights.charges
    out = []
    for mono in basis.monomials:
        out.append(sum(((k + 1) * qi for k, qi in zip(mono, q)), Fraction(0)))
    return tuple(sorted(out))


def spectrum_json(spec) -> str:
    return json.dumps([str(a) for a in spec])


# ---------------------------------------------------------------------------
# characteristic polynomial as a product of (t^m - 1)^chi

@dataclass(frozen=True)
class CyclotomicProduct:
    """prod_{m|h} (t^m - 1)^{chi_m} with integer exponents chi_m."""

    h: int
    factors: tuple[tuple[int, int], ...]  # (m, chi_m), descending in m

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def degree(self) -> int:
        return sum(m * chi for m, chi in self.factors)

    def expand(self) -> list[int]:
        num, den = [1], [1]
        for m, chi in self.factors:
            block = _poly.power(_poly.monomial_minus_one(m), abs(chi))
            if chi > 0:
                num = _poly.mul(num, block)
            else:
                den = _poly.mul(den, block)
        return _poly.exact_div(num, den)

    def to_json(self) -> str:
        return json.dumps(
            {"h": self.h, "factors": {str(m): chi for m, chi in self.factors}}
        )

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for m, chi in self.factors:
            base = "(t-1)" if m == 1 else f"(t^{m}-1)"
            parts.append(base if chi == 1 else f"{base}^{chi}")
        return "".join(parts)


def cyclotomic_product_from_json(text: str) -> CyclotomicProduct:
    data = json.loads(text)
    factors = sorted(((int(m), int(c)) for m, c in data["factors"].items()), reverse=True)
    return CyclotomicProduct(int(data["h"]), tuple(factors))


def product_from_eigenvalues(alphas) -> CyclotomicProduct:
    """Convert a multiset of rational rotation numbers into factored form."""
    counts: dict[int, dict[int, int]] = {}
    for a in alphas:
        frac = a % 1
        r, num = frac.denominator, frac.numerator
        counts.setdefault(r, {}).setdefault(num, 0)
        counts[r][num] += 1
    mult: dict[int, int] = {}
    for r, residues in counts.items():
        expected = _poly.euler_phi(r)
        values = set(residues.values())
        if len(residues) != expected or len(values) != 1:
            raise NotRational(f"uneven multiplicity on primitive {r}-th roots")
        mult[r] = values.pop()
    h = math.lcm(*mult.keys()) if mult else 1
    factors = []
    for m in _poly.divisors(h):
        chi = 0
        for k in _poly.divisors(h):
            if k % m == 0:
                chi += _poly.mobius(k // m) * mult.get(k, 0)
        if chi:
            factors.append((m, chi))
    factors.sort(reverse=True)
    out = CyclotomicProduct(h, tuple(factors))
    assert out.degree == len(list(alphas))
    return out


def characteristic_polynomial(f, ws: WeightSystem | None = None) -> CyclotomicProduct:
    """Characteristic polynomial of the monodromy in factored form."""
    spec = spectrum(f, ws)
    out = product_from_eigenvalues(spec)
    p = as_weighted(f)
    d = ws.degree if ws is not None else p.weights.degree
    assert d % out.h == 0, "monodromy order must divide the degree"
    return out


def saito_dual(p: CyclotomicProduct) -> CyclotomicProduct:
    """The involution chi_k -> -chi_{h/k} at fixed h."""
    factors = tuple(
        sorted(((p.h // m, -chi) for m, chi in p.factors), reverse=True)
    )
    return CyclotomicProduct(p.h, factors)


# ---------------------------------------------------------------------------
# Poincare series

@dataclass(frozen=True)
class PoincareSeries:
    """Rational function numerator/denominator, kept as exact coefficients."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def expand(self, order: int) -> list:
        return _poly.series_quotient(list(self.numerator), list(self.denominator), order)

    def __str__(self):
        return f"({_format_poly(self.numerator)}) / ({_format_poly(self.denominator)})"


def _format_poly(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        term = "t" if k == 1 else f"t^{k}"
        if c == 1:
            parts.append(term)
        elif c == -1:
            parts.append(f"-{term}")
        else:
            parts.append(f"{c}*{term}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def poincare_series(ws: WeightSystem) -> PoincareSeries:
    """(1 - t^d) / prod (1 - t^{w_i}) for the coordinate ring grading."""
    num = _poly.neg(_poly.monomial_minus_one(ws.degree))
    den = [1]
    for w in ws.weights:
        den = _poly.mul(den, _poly.neg(_poly.monomial_minus_one(w)))
    return PoincareSeries(tuple(num), tuple(den))


def milnor_poincare(ws: WeightSystem) -> PoincareSeries:
    """prod (1 - t^{d-w_i}) / (1 - t^{w_i}): degree histogram of the basis."""
    num, den = [1], [1]
    for w in ws.weights:
        num = _poly.mul(num, _poly.neg(_poly.monomial_minus_one(ws.degree - w)))
        den = _poly.mul(den, _poly.neg(_poly.monomial_minus_one(w)))
    return PoincareSeries(tuple(num), tuple(den))
