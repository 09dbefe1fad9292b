"""Small exact linear algebra over the rationals.

Matrices are tuples of tuples of :class:`fractions.Fraction`.  Everything
here is dense and intended for the small systems that show up in relation
checks, ideal membership, and monad rank counts.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = tuple[tuple[Fraction, ...], ...]


def mat(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(r: int, c: int) -> Matrix:
    return tuple((Fraction(0),) * c for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def shape(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(a: Matrix, k) -> Matrix:
    k = Fraction(k)
    return tuple(tuple(k * x for x in row) for row in a)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch in matmul: {shape(a)} x {shape(b)}")
    bt = list(zip(*b)) if rb else [()] * cb
    return tuple(
        tuple(sum((a[i][k] * bt[j][k] for k in range(ca)), Fraction(0)) for j in range(cb))
        for i in range(ra)
    )


def max_abs(a: Matrix) -> Fraction:
    best = Fraction(0)
    for row in a:
        for x in row:
            if abs(x) > best:
                best = abs(x)
    return best


def rank(a: Matrix) -> int:
    rows = [list(r) for r in a]
    nr, nc = len(rows), len(rows[0]) if rows else 0
    rk = 0
    col = 0
    for col in range(nc):
        pivot = None
        for i in range(rk, nr):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        pv = rows[rk][col]
        rows[rk] = [x / pv for x in rows[rk]]
        for i in range(nr):
            if i != rk and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rk])]
        rk += 1
        if rk == nr:
            break
    return rk


def solve(a: Matrix, b: list[Fraction]):
    """One solution x of A x = b, or None if the system is inconsistent."""
    nr, nc = shape(a)
    rows = [list(a[i]) + [Fraction(b[i])] for i in range(nr)]
    pivots: list[tuple[int, int]] = []
    rk = 0
    for col in range(nc):
        pivot = None
        for i in range(rk, nr):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        pv = rows[rk][col]
        rows[rk] = [x / pv for x in rows[rk]]
        for i in range(nr):
            if i != rk and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rk])]
        pivots.append((rk, col))
        rk += 1
    for i in range(rk, nr):
        if rows[i][nc] != 0:
            return None
    x = [Fraction(0)] * nc
    for r, c in pivots:
        x[c] = rows[r][nc]
    return x


def is_nilpotent(a: Matrix) -> bool:
    n, m = shape(a)
    if n != m:
        return False
    power = a
    for _ in range(n):
        if max_abs(power) == 0:
            return True
        power = matmul(power, a)
    return max_abs(power) == 0
