"""Exact integer linear algebra on small dense/sparse matrices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np


def _sparse_rows(matrix) -> list[dict[int, int]]:
    rows = []
    for row in np.asarray(matrix, dtype=object):
        rows.append({j: int(v) for j, v in enumerate(row) if v != 0})
    return rows


def exact_rank(matrix) -> int:
    """Rank over the rationals by fraction-free elimination."""
    arr = np.asarray(matrix)
    if arr.size == 0:
        return 0
    pivots: dict[int, dict[int, int]] = {}
    for row in _sparse_rows(arr):
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                pivots[col] = {k: v // g for k, v in row.items()}
                break
            a, b = piv[col], row[col]
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                new[k] = new.get(k, 0) - b * v
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {k: v // g for k, v in new.items() if v} if g else {}
    return len(pivots)


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix."""
    a = [[int(v) for v in row] for row in np.asarray(matrix, dtype=object)]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def null_space(matrix: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis (columns) of the numerical kernel of a symmetric matrix."""
    if matrix.shape[0] == 0:
        return np.zeros((0, 0))
    w, v = np.linalg.eigh(matrix)
    scale = max(1.0, float(np.abs(w).max(initial=0.0)))
    return v[:, np.abs(w) <= tol * scale]


def fraction_det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant over the rationals by Gaussian elimination."""
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                r = a[i][k] / a[k][k]
                for j in range(k, n):
                    a[i][j] -= r * a[k][j]
    return det
