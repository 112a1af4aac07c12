"""Exact linear algebra over the integers.

Matrices are plain lists of lists of Python ints, so arbitrary precision
comes for free.  Everything here is small (a few dozen rows at most) and
favours clarity over asymptotics: twist words of a couple hundred letters
already produce entries far beyond 64 bits, which is why none of this
goes through numpy.
"""

from __future__ import annotations

from math import gcd

Matrix = list[list[int]]
Vector = list[int]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def clone(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def shape(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    rows, cols = shape(a)
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch: {ra}x{ca} times {rb}x{cb}")
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            aik = arow[k]
            if aik == 0:
                continue
            brow = b[k]
            for j in range(cb):
                orow[j] += aik * brow[j]
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    rows, cols = shape(a)
    if cols != len(v):
        raise ValueError(f"shape mismatch: {rows}x{cols} times vector of length {len(v)}")
    return [sum(a[i][j] * v[j] for j in range(cols)) for i in range(rows)]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(a[i] == b[i] for i in range(len(a)))


def is_identity(a: Matrix) -> bool:
    rows, cols = shape(a)
    return rows == cols and all(
        a[i][j] == (1 if i == j else 0) for i in range(rows) for j in range(cols)
    )


def mat_pow(a: Matrix, k: int) -> Matrix:
    """a**k by repeated squaring, k >= 0."""
    n, m = shape(a)
    if n != m:
        raise ValueError("power of a non-square matrix")
    if k < 0:
        raise ValueError("negative power")
    result = identity(n)
    base = clone(a)
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def det(a: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n, m = shape(a)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    work = clone(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for i in range(k + 1, n):
                if work[i][k] != 0:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return sign * work[n - 1][n - 1]


def _swap_rows(a: Matrix, i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]


def _swap_cols(a: Matrix, i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_row(a: Matrix, src: int, dst: int, mult: int) -> None:
    a[dst] = [x + mult * y for x, y in zip(a[dst], a[src])]


def _add_col(a: Matrix, src: int, dst: int, mult: int) -> None:
    for row in a:
        row[dst] += mult * row[src]


def _negate_row(a: Matrix, i: int) -> None:
    a[i] = [-x for x in a[i]]


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (d, u, v) with u*a*v = d diagonal, u and v unimodular.

    Diagonal entries are non-negative and satisfy the divisibility chain
    d[0] | d[1] | ... .  The usual pivot-and-reduce loop; row operations
    accumulate in u, column operations in v.
    """
    rows, cols = shape(a)
    d = clone(a)
    u = identity(rows)
    v = identity(cols)

    def pivot_at(t: int) -> bool:
        # move a minimal-magnitude nonzero entry of d[t:, t:] to (t, t)
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            return False
        bi, bj = best
        if bi != t:
            _swap_rows(d, t, bi)
            _swap_rows(u, t, bi)
        if bj != t:
            _swap_cols(d, t, bj)
            _swap_cols(v, t, bj)
        return True

    t = 0
    while t < min(rows, cols):
        if not pivot_at(t):
            break
        # clear row and column t; pivoting keeps shrinking |d[t][t]|, so this terminates
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    _add_row(d, t, i, -q)
                    _add_row(u, t, i, -q)
                    if d[i][t] != 0:
                        _swap_rows(d, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    _add_col(d, t, j, -q)
                    _add_col(v, t, j, -q)
                    if d[t][j] != 0:
                        _swap_cols(d, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
        # enforce divisibility: d[t][t] must divide everything below-right
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    offender = (i, j)
                    break
            if offender:
                break
        if offender:
            _add_row(d, offender[0], t, 1)
            _add_row(u, offender[0], t, 1)
            continue  # redo this pivot
        t += 1

    for i in range(min(rows, cols)):
        if d[i][i] < 0:
            _negate_row(d, i)
            _negate_row(u, i)
    return d, u, v


def invariant_factors(a: Matrix) -> list[int]:
    """Nonzero diagonal of the Smith form, in divisibility order."""
    d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(shape(a))) if d[i][i] != 0]


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of the integer kernel of a (as columns of the right transform).

    The returned vectors generate a saturated sublattice: any integer
    solution of a*x = 0 is an integer combination of them.
    """
    rows, cols = shape(a)
    d, _, v = smith_normal_form(a)
    rank = len(invariant_factors(a))
    return [[v[i][j] for i in range(cols)] for j in range(rank, cols)]


def solve_gcd_one(coeffs: Vector) -> Vector | None:
    """An integer x with coeffs . x == 1, or None if gcd(coeffs) != 1."""
    n = len(coeffs)
    if n == 0:
        return None
    # fold pairwise: g = gcd(c0..ck), x achieving it
    g = coeffs[0]
    x = [1] + [0] * (n - 1)
    if g < 0:
        g, x[0] = -g, -1
    for k in range(1, n):
        c = coeffs[k]
        if c == 0:
            continue
        if g == 0:
            g = abs(c)
            x = [0] * n
            x[k] = 1 if c > 0 else -1
            continue
        g2, s, t = _ext_gcd(g, c)
        x = [s * xi for xi in x]
        x[k] += t
        g = g2
    if g != 1:
        return None
    return x


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_primitive(v: Vector) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1
