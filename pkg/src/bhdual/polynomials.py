"""Invertible polynomials: parsing, weights, transposition, block structure.

An invertible polynomial has as many monomials as variables and an
invertible exponent matrix.  The exponent matrix E has row i holding the
exponents of monomial i; all arithmetic on it is exact.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import mat_det, mat_solve, smith_normal_form
from .errors import (
    DuplicateMonomial,
    NonPositiveWeight,
    NotInvertible,
    ParseError,
    UnsupportedShape,
)

_NAMED_VARS = ("x", "y", "z", "w")


def variable_names(n: int) -> tuple[str, ...]:
    """Default variable names: x,y,z,w for n <= 4, else x1..xn."""
    if n <= 4:
        return _NAMED_VARS[:n]
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class Monomial:
    coefficient: Fraction
    exponents: tuple[int, ...]

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)


@dataclass(frozen=True)
class InvertiblePolynomial:
    variables: tuple[str, ...]
    monomials: tuple[Monomial, ...]

    def __post_init__(self):
        n = len(self.variables)
        if len(self.monomials) != n:
            raise NotInvertible(
                f"{len(self.monomials)} monomials for {n} variables"
            )
        for m in self.monomials:
            if m.coefficient == 0:
                raise NotInvertible("zero coefficient")
            if len(m.exponents) != n or any(e < 0 for e in m.exponents):
                raise NotInvertible("bad exponent vector")
        if len({m.exponents for m in self.monomials}) != n:
            raise DuplicateMonomial("repeated exponent vector")
        d = mat_det(self.exponent_matrix())
        if d == 0:
            raise NotInvertible("exponent matrix is singular")
        if d < 0:
            raise NotInvertible("monomials not in det > 0 order")

    @property
    def n(self) -> int:
        return len(self.variables)

    def exponent_matrix(self) -> list[list[int]]:
        return [list(m.exponents) for m in self.monomials]

    def determinant(self) -> int:
        d = mat_det(self.exponent_matrix())
        assert d.denominator == 1
        return int(d)

    def __str__(self) -> str:
        return format_polynomial(self)


def make_polynomial(exponents, coefficients=None, variables=None) -> InvertiblePolynomial:
    """Build a polynomial from exponent rows, normalizing det E > 0.

    Monomial order is preserved except that the last two rows are swapped
    when det E < 0, so equal polynomials written in different orders still
    get sign-consistent data.
    """
    rows = [tuple(int(e) for e in row) for row in exponents]
    n = len(rows)
    if coefficients is None:
        coefficients = [Fraction(1)] * n
    coeffs = [Fraction(c) for c in coefficients]
    if variables is None:
        variables = variable_names(n)
    if len(coeffs) != n:
        raise NotInvertible("coefficient count mismatch")
    d = mat_det(rows)
    if d == 0:
        raise NotInvertible("exponent matrix is singular")
    if d < 0 and n >= 2:
        rows[-1], rows[-2] = rows[-2], rows[-1]
        coeffs[-1], coeffs[-2] = coeffs[-2], coeffs[-1]
    monos = tuple(Monomial(c, tuple(r)) for c, r in zip(coeffs, rows))
    return InvertiblePolynomial(tuple(variables), monos)


# ---------------------------------------------------------------------------
# parsing and printing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[a-zA-Z]\w*)|(?P<op>[\^*+-])|(?P<bad>\S))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r}")
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("var"):
            tokens.append(("var", m.group("var")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def _order_key(name):
    if name in _NAMED_VARS:
        return (0, _NAMED_VARS.index(name))
    m = re.fullmatch(r"x(\d+)", name)
    if m:
        return (1, int(m.group(1)))
    return (2, name)


def parse_polynomial(text: str, variables=None) -> InvertiblePolynomial:
    """Parse sums of monomials like ``x^2+z*y^3+z^5`` or ``3*x1^4*x2``.

    The '*' between factors is optional, '-' starts a negated term, and
    coefficients are integers or fractions like 3/2.  Variables are the
    distinct names appearing in the text unless an explicit sequence is
    given.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input")
    terms = []
    term = None  # (coefficient, {var: exp})
    sign = 1
    pending = False  # a separator or sign was seen, a term must follow

    i = 0
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val in "+-":
            if term is not None:
                terms.append(term)
                term = None
                sign = 1
            elif pending or terms:
                raise ParseError("dangling operator")
            pending = True
            if val == "-":
                sign = -sign
            i += 1
            continue
        if kind == "op" and val == "*":
            if term is None:
                raise ParseError("misplaced '*'")
            i += 1
            continue
        if kind == "num":
            coeff = Fraction(val)
            if term is None:
                term = (sign * coeff, {})
                pending = False
            else:
                term = (term[0] * coeff, term[1])
            i += 1
            continue
        if kind == "var":
            exp = 1
            if i + 1 < len(tokens) and tokens[i + 1] == ("op", "^"):
                if i + 2 >= len(tokens) or tokens[i + 2][0] != "num":
                    raise ParseError("'^' needs an integer exponent")
                exp_text = tokens[i + 2][1]
                if "/" in exp_text:
                    raise ParseError("fractional exponent")
                exp = int(exp_text)
                i += 3
            else:
                i += 1
            if term is None:
                term = (Fraction(sign), {})
                pending = False
            term[1][val] = term[1].get(val, 0) + exp
            continue
        raise ParseError(f"unexpected token {val!r}")
    if term is not None:
        terms.append(term)
    elif pending:
        raise ParseError("trailing operator")
    if not terms:
        raise ParseError("no monomials")

    seen_names = {v for _, mono in terms for v in mono}
    if variables is None:
        names = sorted(seen_names, key=_order_key)
    else:
        names = list(variables)
        unknown = seen_names - set(names)
        if unknown:
            raise ParseError(f"variables {sorted(unknown)} not declared")
    index = {v: k for k, v in enumerate(names)}
    rows = []
    coeffs = []
    for coeff, mono in terms:
        row = [0] * len(names)
        for v, e in mono.items():
            row[index[v]] = e
        rows.append(row)
        coeffs.append(coeff)
    return make_polynomial(rows, coeffs, names)


def format_polynomial(f: InvertiblePolynomial) -> str:
    parts = []
    for m in f.monomials:
        factors = []
        for name, e in zip(f.variables, m.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors) if factors else "1"
        c = m.coefficient
        if c == 1:
            text = body
        elif c == -1:
            text = "-" + body
        else:
            text = f"{c}*{body}"
        if parts and not text.startswith("-"):
            parts.append("+" + text)
        else:
            parts.append(text)
    return "".join(parts)


# ---------------------------------------------------------------------------
# weights

@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]
    degree: int

    @property
    def charges(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(w, self.degree) for w in self.weights)

    @property
    def scale(self) -> int:
        """gcd of all weights with the degree."""
        return math.gcd(self.degree, *self.weights)

    def reduced(self) -> "WeightSystem":
        c = self.scale
        return WeightSystem(tuple(w // c for w in self.weights), self.degree // c)

    def __str__(self):
        return "(" + ",".join(map(str, self.weights)) + f";{self.degree})"


def canonical_weights(f: InvertiblePolynomial) -> WeightSystem:
    """Integer weights with E w = det(E) * (1,..,1); degree is det E."""
    d = f.determinant()
    sol = mat_solve(f.exponent_matrix(), [d] * f.n)
    weights = []
    for w in sol:
        assert w.denominator == 1
        weights.append(int(w))
    if any(w <= 0 for w in weights):
        raise NonPositiveWeight(f"canonical weights {weights}")
    return WeightSystem(tuple(weights), d)


def reduce_weights(ws: WeightSystem) -> tuple[WeightSystem, int]:
    """Divide out the common scale; returns the reduced system and the scale."""
    c = ws.scale
    return ws.reduced(), c


def reduced_weights(f: InvertiblePolynomial) -> WeightSystem:
    return canonical_weights(f).reduced()


def gorenstein_parameter(w) -> int:
    """Degree minus the sum of the weights of the reduced system.

    Accepts a weight system or a polynomial (reduced first either way).
    """
    if isinstance(w, InvertiblePolynomial):
        w = canonical_weights(w)
    ws = w.reduced()
    return ws.degree - sum(ws.weights)


# ---------------------------------------------------------------------------
# transposition

def transpose(f: InvertiblePolynomial) -> InvertiblePolynomial:
    """Transpose the exponent matrix; coefficient i stays with monomial i."""
    e = f.exponent_matrix()
    rows = [[e[j][i] for j in range(f.n)] for i in range(f.n)]
    coeffs = [m.coefficient for m in f.monomials]
    return make_polynomial(rows, coeffs, f.variables)


# ---------------------------------------------------------------------------
# atomic block structure

@dataclass(frozen=True)
class Block:
    kind: str  # "fermat" | "chain" | "loop"
    variables: tuple[int, ...]
    exponents: tuple[int, ...]

    def __str__(self):
        vs = ",".join(map(str, self.variables))
        es = ",".join(map(str, self.exponents))
        return f"{self.kind}[vars {vs}; exps {es}]"


def atomic_decomposition(f: InvertiblePolynomial) -> tuple[Block, ...]:
    """Split f into Fermat, chain and loop blocks.

    Each monomial must be x_i^a (owned by i) or x_i^a * x_j (owned by i
    with successor j).  A perfect owner assignment is searched by
    backtracking; chains read head to tail, loops start at their smallest
    variable.  Raises UnsupportedShape when no assignment exists.
    """
    n = f.n
    options = []
    for m in f.monomials:
        sup = m.support()
        opts = []
        if len(sup) == 1:
            opts.append((sup[0], None))
        elif len(sup) == 2:
            i, j = sup
            if m.exponents[j] == 1:
                opts.append((i, j))
            if m.exponents[i] == 1:
                opts.append((j, i))
        if not opts:
            raise UnsupportedShape(f"monomial {m.exponents} is not atomic")
        options.append(opts)

    # require in-degree at most one as well, so the successor graph is a
    # disjoint union of simple paths and cycles
    succ: dict[int, int | None] = {}
    own_exp: dict[int, int] = {}
    tails: set[int] = set()

    def assign(k):
        if k == n:
            return True
        for owner, nxt in options[k]:
            if owner in succ or (nxt is not None and nxt in tails):
                continue
            succ[owner] = nxt
            own_exp[owner] = f.monomials[k].exponents[owner]
            if nxt is not None:
                tails.add(nxt)
            if assign(k + 1):
                return True
            del succ[owner]
            del own_exp[owner]
            if nxt is not None:
                tails.discard(nxt)
        return False

    if not assign(0):
        raise UnsupportedShape("no consistent owner assignment")

    blocks = []
    seen = set()
    for head in range(n):
        if head in tails:
            continue
        path = [head]
        v = head
        while succ[v] is not None:
            v = succ[v]
            path.append(v)
        kind = "fermat" if len(path) == 1 else "chain"
        blocks.append(Block(kind, tuple(path), tuple(own_exp[u] for u in path)))
        seen.update(path)
    for v in range(n):
        if v in seen:
            continue
        cycle = [v]
        seen.add(v)
        u = succ[v]
        while u != v:
            cycle.append(u)
            seen.add(u)
            u = succ[u]
        rot = cycle.index(min(cycle))
        cycle = cycle[rot:] + cycle[:rot]
        blocks.append(Block("loop", tuple(cycle), tuple(own_exp[u] for u in cycle)))
    blocks.sort(key=lambda b: b.variables[0])
    return tuple(blocks)


def is_nondegenerate(f: InvertiblePolynomial) -> bool:
    """True when f defines an isolated singularity at the origin.

    Decided by finite-dimensionality of the Jacobian-ideal quotient,
    computed by exact row reduction degree by degree.
    """
    from .errors import NotIsolated
    from .milnor import milnor_basis

    try:
        milnor_basis(f)
    except (NotIsolated, NonPositiveWeight):
        return False
    return True


# ---------------------------------------------------------------------------
# maximal grading

@dataclass(frozen=True)
class GradingGroup:
    """Finitely generated abelian group, free rank plus torsion factors."""
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def maximal_grading(f: InvertiblePolynomial) -> GradingGroup:
    """Quotient of Z^(n+1) by the rows of [E | -1].

    The free rank is always 1 for invertible E; the torsion factors are
    the invariant factors above 1.
    """
    rows = [list(m.exponents) + [-1] for m in f.monomials]
    factors = smith_normal_form(rows)
    rank = f.n + 1 - len(factors)
    assert rank == 1
    return GradingGroup(rank, tuple(d for d in factors if d > 1))


def delta(a: int, b: int, c: int) -> int:
    """a*b*c - b*c - a*c - a*b, the sign of which separates the main cases."""
    return a * b * c - b * c - a * c - a * b
