"""Exact linear algebra over the rationals.

Matrices are lists of row lists holding ``Fraction`` (or int) entries.
Vectors are rows and maps act on the right, matching the module
convention used across the package: a map X -> Y with dim X = m and
dim Y = n is an m x n matrix, composition is plain matrix product.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def copy_matrix(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def shape(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        acc[j] += x * brow[j]
        out.append(acc)
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def vstack(blocks: list[Matrix]) -> Matrix:
    out = []
    for b in blocks:
        out.extend(copy_matrix(b))
    return out


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    m = copy_matrix(a)
    rows, cols = shape(m)
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    _, pivots = rref(a)
    return len(pivots)


def row_space_basis(a: Matrix) -> Matrix:
    """Independent rows spanning the row space (in rref form)."""
    r, pivots = rref(a)
    return [r[i] for i in range(len(pivots))]


def row_kernel(a: Matrix, rows: int | None = None) -> Matrix:
    """Basis of ``{x : x a = 0}`` as rows.

    ``rows`` gives the row count of ``a`` when ``a`` is empty.
    """
    m = len(a) if rows is None else rows
    if m == 0:
        return []
    cols = len(a[0]) if a else 0
    if cols == 0:
        return identity(m)
    # x a = 0  <=>  a^T x^T = 0: kernel of the transpose, columns as rows
    r, pivots = rref(transpose(a))
    pivot_set = set(pivots)
    free = [j for j in range(m) if j not in pivot_set]
    basis = []
    for j in free:
        vec = [Fraction(0)] * m
        vec[j] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -r[i][j]
        basis.append(vec)
    return basis


def coords_in_row_basis(basis: Matrix, vectors: Matrix) -> Matrix | None:
    """Solve ``C basis = vectors`` for C, or None if some row is outside.

    ``basis`` rows must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        if all(not x for row in vectors for x in row):
            return [[] for _ in vectors]
        return None
    cols = len(basis[0])
    # Solve basis^T c^T = v^T per vector: eliminate on [basis^T | vectors^T]
    aug = [[basis[i][j] for i in range(k)] + [vec[j] for vec in vectors]
           for j in range(cols)]
    r, pivots = rref(aug)
    if any(p >= k for p in pivots):
        return None  # inconsistent: some vector not in the span
    nvecs = len(vectors)
    coords = [[Fraction(0)] * k for _ in range(nvecs)]
    for i, p in enumerate(pivots):
        for t in range(nvecs):
            coords[t][p] = r[i][k + t]
    # consistency: rows of aug beyond pivots must vanish
    for i in range(len(pivots), len(r)):
        if any(r[i][k + t] for t in range(nvecs)):
            return None
    return coords


def is_invertible(a: Matrix) -> bool:
    rows, cols = shape(a)
    return rows == cols and rank(a) == rows


def int_rank(a: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Bareiss elimination."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def int_mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        acc[j] += x * brow[j]
        out.append(acc)
    return out
