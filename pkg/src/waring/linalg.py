"""Small dense linear algebra over exact fields, plus float-rank helpers.

The exact routines only need field operations (+, -, *, /, truthiness), so
they work uniformly for Fraction and CycloScalar entries.  Floating-point
ranks use an SVD with a relative singular-value cutoff.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def _exactify(row) -> list:
    """Promote ints to Fractions so that division stays exact."""
    return [Fraction(v) if isinstance(v, int) else v for v in row]


class LinearSolveError(ValueError):
    pass


class InconsistentSystem(LinearSolveError):
    pass


class RankDeficientSystem(LinearSolveError):
    pass


def exact_rank(rows) -> int:
    """Rank of a matrix (list of rows) over an exact field, by Gaussian elimination."""
    matrix = [_exactify(r) for r in rows]
    if not matrix or not matrix[0]:
        return 0
    ncols = len(matrix[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            if matrix[r][col]:
                factor = matrix[r][col] / inv
                row, top = matrix[r], matrix[rank]
                for c in range(col, ncols):
                    if top[c]:
                        row[c] = row[c] - factor * top[c]
        rank += 1
        if rank == len(matrix):
            break
    return rank


def exact_solve(rows, rhs) -> list:
    """Solve a consistent linear system with a unique solution, exactly.

    The system may be overdetermined; raises InconsistentSystem if no solution
    exists and RankDeficientSystem if the solution is not unique.
    """
    matrix = [_exactify(list(r) + [b]) for r, b in zip(rows, rhs)]
    if not matrix:
        raise RankDeficientSystem("empty system")
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = matrix[rank][col]
        matrix[rank] = [v / inv for v in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(matrix)):
        if matrix[r][ncols]:
            raise InconsistentSystem("no solution")
    if rank < ncols:
        raise RankDeficientSystem("solution is not unique")
    solution = [None] * ncols
    for r, col in enumerate(pivots):
        solution[col] = matrix[r][ncols]
    return solution


def float_rank(matrix: np.ndarray, cutoff: float = 1e-8) -> int:
    """Numerical rank: singular values below cutoff * (largest) count as zero."""
    a = np.asarray(matrix)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > cutoff * s[0]))


def lstsq_solve(matrix: np.ndarray, rhs: np.ndarray) -> tuple[np.ndarray, float]:
    """Least-squares solve returning the solution and the max-norm residual."""
    a = np.asarray(matrix)
    b = np.asarray(rhs)
    x, *_ = np.linalg.lstsq(a, b, rcond=None)
    residual = float(np.max(np.abs(a @ x - b))) if a.size else 0.0
    return x, residual
