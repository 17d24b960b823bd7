"""Dense univariate polynomial helpers over exact coefficients.

Polynomials are lists of coefficients in ascending degree order with no
trailing zeros (the zero polynomial is the empty list).  Coefficients are
ints or Fractions; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DenominatorVanishes


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def add(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim([c * a for a in p])


def divmod_poly(p, q):
    """Exact-arithmetic long division; q must be non-zero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    lead = q[-1]
    dq = len(q) - 1
    quot = [0] * max(0, len(rem) - dq)
    while len(trim(rem)) - 1 >= dq:
        rem = trim(rem)
        shift = len(rem) - 1 - dq
        c = Fraction(rem[-1], lead) if lead != 1 else rem[-1]
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
    return trim(quot), trim(rem)


def exact_div(p, q):
    """Quotient p/q, raising if the division leaves a remainder."""
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ValueError("division is not exact")
    out = []
    for c in quot:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("division is not exact")
            c = int(c)
        out.append(c)
    return trim(out)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def monomial_minus_one(m: int):
    """t^m - 1."""
    out = [0] * (m + 1)
    out[0] = -1
    out[m] = 1
    return out


def power(p, k: int):
    out = [1]
    for _ in range(k):
        out = mul(out, p)
    return out


def series_quotient(num, den, order: int):
    """Power-series coefficients of num/den through t^order."""
    if not den or den[0] == 0:
        raise DenominatorVanishes("denominator has no constant term")
    inv0 = Fraction(1, den[0])
    out = []
    for k in range(order + 1):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc * inv0)
    result = []
    for c in out:
        result.append(int(c) if c.denominator == 1 else c)
    return result


def _mobius(n: int) -> int:
    result = 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    return _mobius(n)


def euler_phi(n: int) -> int:
    result = n
    k = 2
    m = n
    while k * k <= m:
        if m % k == 0:
            while m % k == 0:
                m //= k
            result -= result // k
        k += 1
    if m > 1:
        result -= result // m
    return result


_CYCLOTOMIC_CACHE: dict[int, tuple] = {}


def cyclotomic(m: int):
    """The m-th cyclotomic polynomial, exact integer coefficients."""
    if m in _CYCLOTOMIC_CACHE:
        return list(_CYCLOTOMIC_CACHE[m])
    p = monomial_minus_one(m)
    for d in divisors(m):
        if d < m:
            p = exact_div(p, cyclotomic(d))
    _CYCLOTOMIC_CACHE[m] = tuple(p)
    return p
