"""Exact integer and rational linear algebra on small dense matrices.

Everything here works on lists of lists.  Sizes stay tiny (the number of
variables of a polynomial, so single digits), hence the plain O(n^3)
algorithms with Fraction arithmetic.
"""

from fractions import Fraction


def mat_det(rows):
    """Determinant via fraction-free-ish Gaussian elimination."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            factor = a[r][col] * inv
            for c in range(col, n):
                a[r][c] -= factor * a[col][c]
    return det


def mat_solve(rows, rhs):
    """Solve A x = rhs exactly.  Raises ZeroDivisionError on singular A."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * p for v, p in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def mat_inverse(rows):
    n = len(rows)
    cols = [mat_solve(rows, [1 if r == i else 0 for r in range(n)]) for i in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def mat_mul_vec(rows, vec):
    return [sum(r * v for r, v in zip(row, vec)) for row in rows]


def smith_normal_form(rows):
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns the list of nonzero diagonal entries of the Smith form,
    normalized positive.  Zero rows/columns of the form are dropped.
    """
    a = [list(map(int, row)) for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    factors = []
    top = 0
    while top < min(m, n):
        # find a nonzero entry to pivot on
        pivot = None
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j] != 0:
                    if pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[top], a[i] = a[i], a[top]
        for row in a:
            row[top], row[j] = row[j], row[top]
        # clear the pivot row and column, restarting whenever a remainder
        # produces a smaller entry that must become the new pivot
        while True:
            p = a[top][top]
            dirty = False
            for i in range(top + 1, m):
                if a[i][top] % p != 0:
                    q = a[i][top] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                    a[top], a[i] = a[i], a[top]
                    dirty = True
                    break
            if dirty:
                continue
            for i in range(top + 1, m):
                q = a[i][top] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
            for j in range(top + 1, n):
                if a[top][j] % p != 0:
                    q = a[top][j] // p
                    for row in a:
                        row[j] -= q * row[top]
                    for row in a:
                        row[top], row[j] = row[j], row[top]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(top + 1, n):
                q = a[top][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[top]
            # pivot must divide every remaining entry
            bad = None
            for i in range(top + 1, m):
                for j in range(top + 1, n):
                    if a[i][j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[top] = [x + y for x, y in zip(a[top], a[bad])]
        factors.append(abs(a[top][top]))
        top += 1
    return [d for d in factors if d != 0]
