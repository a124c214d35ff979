"""Exact circulant blocks and the assembled residue-count systems.

Matrices are numpy object arrays of python ints (or Fractions), so every
operation stays exact.
"""
import cmath
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

import mpmath
import numpy as np

from src.core.config import get_settings
from src.core.errors import BadSpec, NotSquare, Singular

IntMatrix = np.ndarray


class CirculantSpec(NamedTuple):
    """Row i has a 1 in column (i + offset) mod n for every offset; repeats add up."""

    n: int
    offsets: Tuple[int, ...]

    @classmethod
    def a_block(cls, n: int) -> "CirculantSpec":
        return cls(n, (1, -1)).validated()

    @classmethod
    def b_block(cls, n: int, j: int) -> "CirculantSpec":
        return cls(n, (j, -j)).validated()

    @classmethod
    def c_block(cls, n: int, m: int) -> "CirculantSpec":
        if m % 2:
            raise BadSpec(f"C block needs an even m, got {m}")
        return cls(n, (-(m // 2),)).validated()

    def validated(self) -> "CirculantSpec":
        if self.n < 1:
            raise BadSpec(f"circulant size must be positive, got {self.n}")
        return CirculantSpec(self.n, tuple(o % self.n for o in self.offsets))


def identity(n: int) -> IntMatrix:
    return np.array([[int(i == j) for j in range(n)] for i in range(n)], dtype=object)


def zeros(n: int) -> IntMatrix:
    return np.zeros((n, n), dtype=object)


def circulant(spec: CirculantSpec) -> IntMatrix:
    spec = spec.validated()
    mat = zeros(spec.n)
    for i in range(spec.n):
        for o in spec.offsets:
            mat[i, (i + o) % spec.n] += 1
    return mat


def build_blocks(n: int, j: int, m: int | None = None) -> Tuple[IntMatrix, ...]:
    """(A, B) or, when m is given, (A, B, C)."""
    a = circulant(CirculantSpec.a_block(n))
    b = circulant(CirculantSpec.b_block(n, j))
    if m is None:
        return a, b
    return a, b, circulant(CirculantSpec.c_block(n, m))


def assemble_m(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = a.shape[0]
    return np.block([[a, identity(n)], [identity(n), b]])


def assemble_l(a: IntMatrix, b: IntMatrix, c: IntMatrix) -> IntMatrix:
    n = a.shape[0]
    i, o = identity(n), zeros(n)
    return np.block([[a, i, o], [i, o, b], [o, b, c]])


def _require_square(mat: IntMatrix) -> int:
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise NotSquare(f"matrix of shape {mat.shape} is not square")
    return mat.shape[0]


def determinant(mat: IntMatrix) -> int:
    """Fraction-free Bareiss elimination over python ints."""
    n = _require_square(mat)
    a = [[int(x) for x in row] for row in mat]
    sign, prev = 1, 1
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
    return sign * a[n - 1][n - 1] if n else 1


def det_nonzero(mat: IntMatrix) -> Tuple[bool, int]:
    det = determinant(mat)
    return det != 0, det


def solve_exact(mat: IntMatrix, rhs: Sequence[Fraction | int]) -> List[Fraction]:
    """Gauss-Jordan elimination over Fractions."""
    n = _require_square(mat)
    x = np.array([[Fraction(int(v)) for v in row] for row in mat], dtype=object)
    y = np.array([Fraction(v) for v in rhs], dtype=object)

    for i in range(n):
        pivot = next((r for r in range(i, n) if x[r, i] != 0), None)
        if pivot is None:
            raise Singular("matrix is not invertible")
        if pivot != i:
            x[[i, pivot]] = x[[pivot, i]]
            y[[i, pivot]] = y[[pivot, i]]
        y[i] /= x[i, i]
        x[i, :] /= x[i, i]
        for r in range(n):
            if r != i and x[r, i] != 0:
                y[r] -= x[r, i] * y[i]
                x[r, :] -= x[r, i] * x[i, :]
    return list(y)


def solve_all_ones(mat: IntMatrix, rhs: Fraction | int) -> List[Fraction]:
    """Solution of mat x = rhs * (1, ..., 1)."""
    n = _require_square(mat)
    return solve_exact(mat, [Fraction(rhs)] * n)


class EigenDescriptor(NamedTuple):
    """lambda_k = sum of omega^e over the exponents, omega = exp(2 pi i / n)."""

    n: int
    k: int
    exponents: Tuple[int, ...]

    @property
    def value(self) -> complex:
        return sum(cmath.exp(2j * cmath.pi * e / self.n) for e in self.exponents)


def eigenvalues_circulant(spec: CirculantSpec, k: int) -> EigenDescriptor:
    spec = spec.validated()
    return EigenDescriptor(spec.n, k % spec.n, tuple(sorted((o * k) % spec.n for o in spec.offsets)))


def eigen_residual(spec: CirculantSpec, k: int, digits: int | None = None) -> float:
    """max |C v - lambda_k v| for the Fourier vector v_t = omega^(k t), at circulant.float_digits."""
    spec = spec.validated()
    digits = digits or get_settings().circulant.float_digits
    desc = eigenvalues_circulant(spec, k)
    n = spec.n
    with mpmath.workdps(digits):
        v = [mpmath.expjpi(mpmath.mpf(2 * k * t) / n) for t in range(n)]
        lam = mpmath.fsum(mpmath.expjpi(mpmath.mpf(2 * e) / n) for e in desc.exponents)
        worst = max(abs(mpmath.fsum(v[(i + o) % n] for o in spec.offsets) - lam * v[i]) for i in range(n))
        return float(worst)


def eigen_check(spec: CirculantSpec, tolerance: float | None = None) -> bool:
    """Every Fourier vector is an eigenvector with its descriptor's eigenvalue."""
    tolerance = get_settings().circulant.residual_tolerance if tolerance is None else tolerance
    return all(eigen_residual(spec, k) <= tolerance for k in range(spec.validated().n))
