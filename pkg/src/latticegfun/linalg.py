"""Small exact linear algebra helpers over the rationals."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations


def mat_rank(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def affine_rank(points) -> int:
    """Dimension of the affine hull of the given points (-1 if empty)."""
    points = list(points)
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return 0
    return mat_rank(diffs)


def det(rows) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        result *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return sign * result


def mat_inverse(rows):
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [row[n:] for row in m]


def solve_exact(rows, rhs):
    """Solve A x = b for the unique solution.

    Returns None when the system is inconsistent; raises if the solution
    is not unique (column rank deficiency).
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(m)):
        if m[r][ncols]:
            return None
    if rank < ncols:
        raise ValueError("linear system is underdetermined")
    out = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        out[col] = m[r][ncols]
    return out


def nullspace_vector(rows):
    """A spanning vector of a one-dimensional nullspace, or None."""
    ncols = len(rows[0])
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    if rank != ncols - 1:
        return None
    free = next(c for c in range(ncols) if c not in pivots)
    vec = [Fraction(0)] * ncols
    vec[free] = Fraction(1)
    for r, col in enumerate(pivots):
        vec[col] = -m[r][free]
    return vec


def primitive_integer(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (gcd 1)."""
    vec = [Fraction(v) for v in vec]
    denom = math.lcm(*(v.denominator for v in vec)) if vec else 1
    ints = [int(v * denom) for v in vec]
    g = math.gcd(*ints) if any(ints) else 1
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(v // g for v in ints)


def lattice_index(generators) -> int:
    """Index of the sublattice spanned by independent integer vectors
    inside the saturation of their span: the gcd of all maximal minors."""
    gens = [list(v) for v in generators]
    if not gens:
        return 1
    k = len(gens)
    g = 0
    for cols in combinations(range(len(gens[0])), k):
        minor = det([[row[c] for c in cols] for row in gens])
        assert minor.denominator == 1
        g = math.gcd(g, abs(int(minor)))
    if g == 0:
        raise ValueError("generators are linearly dependent")
    return g
