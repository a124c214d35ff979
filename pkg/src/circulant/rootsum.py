"""Exact zero tests for integer sums of N-th roots of unity.

sum c_e zeta_N^e vanishes iff the N-th cyclotomic polynomial divides
sum c_e x^e, with exponents read mod N.
"""
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

import mpmath
import numpy as np

from src.core.config import get_settings
from src.core.logging import logger

Poly = Tuple[int, ...]  # coefficients, constant term first

PETERSEN_ORDER = 30
PAPPUS_ORDER = 210
PREFILTER_TOLERANCE = 1e-6


class RootSumPoly:
    """Integer combination sum c_e zeta_N^e, stored as coefficients c_0..c_(N-1)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Sequence[int]):
        if N < 1:
            raise ValueError(f"root order must be positive, got {N}")
        reduced = [0] * N
        for e, c in enumerate(coeffs):
            reduced[e % N] += int(c)
        self.N = N
        self.coeffs: Poly = tuple(reduced)

    @classmethod
    def from_terms(cls, N: int, terms: Dict[int, int] | Iterable[Tuple[int, int]]) -> "RootSumPoly":
        """Build from (exponent, coefficient) pairs; negative exponents are fine."""
        items = terms.items() if isinstance(terms, dict) else terms
        coeffs = [0] * N
        for e, c in items:
            coeffs[e % N] += c
        return cls(N, coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{e}" for e, c in enumerate(self.coeffs) if c]
        return f"RootSumPoly(N={self.N}, {' + '.join(terms) or '0'})"


def _trim(p: List[int]) -> List[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(_trim(out))


def poly_divmod(p: Sequence[int], d: Sequence[int]) -> Tuple[Poly, Poly]:
    """Division by a monic integer polynomial."""
    d = _trim(list(d))
    if not d or d[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = _trim(list(p))
    if len(rem) < len(d):
        return (), tuple(rem)
    quot = [0] * (len(rem) - len(d) + 1)
    for shift in range(len(rem) - len(d), -1, -1):
        c = rem[shift + len(d) - 1]
        if c:
            quot[shift] = c
            for i, b in enumerate(d):
                rem[shift + i] -= c * b
    return tuple(_trim(quot)), tuple(_trim(rem[: len(d) - 1]))


def divisors(N: int) -> List[int]:
    return [d for d in range(1, N + 1) if N % d == 0]


@lru_cache(maxsize=None)
def cyclotomic(N: int) -> Poly:
    """Phi_N = (x^N - 1) / prod of Phi_d over proper divisors d."""
    p: Poly = (-1,) + (0,) * (N - 1) + (1,)
    for d in divisors(N)[:-1]:
        p, rem = poly_divmod(p, cyclotomic(d))
        if rem:
            raise ArithmeticError(f"Phi_{d} does not divide x^{N} - 1")
    return p


def verify_cyclotomic_factorization(N: int) -> bool:
    product: Poly = (1,)
    for d in divisors(N):
        product = poly_mul(product, cyclotomic(d))
    return product == (-1,) + (0,) * (N - 1) + (1,)


def is_zero_rootsum(p: RootSumPoly) -> bool:
    _, rem = poly_divmod(p.coeffs, cyclotomic(p.N))
    return not rem


def evaluate(p: RootSumPoly, digits: int | None = None) -> mpmath.mpc:
    digits = digits or get_settings().circulant.float_digits
    with mpmath.workdps(digits):
        return mpmath.fsum(
            c * mpmath.expjpi(mpmath.mpf(2 * e) / p.N) for e, c in enumerate(p.coeffs) if c
        )


def _conjugate_pair(N: int, e: int, weight: int = 1) -> List[Tuple[int, int]]:
    return [(e, weight), (-e, weight)]


def reduce_exponent(N: int, e: int) -> int:
    """Representative of {e, -e} mod N in 0..N/2."""
    e %= N
    return min(e, N - e)


def solve_real_pair_system(N: int, target: int, weight: int = 1) -> List[int]:
    """Reduced exponents k with weight * (zeta^k + zeta^-k) = target over N-th roots."""
    found = set()
    for k in range(N):
        terms = _conjugate_pair(N, k, weight) + [(0, -target)]
        if is_zero_rootsum(RootSumPoly.from_terms(N, terms)):
            found.add(reduce_exponent(N, k))
    return sorted(found)


def _rational_exponents(N: int) -> set:
    """Exponents whose roots have rational real part: orders dividing 6."""
    return {e for e in range(N // 2 + 1) if (6 * e) % N == 0}


def search_vanishing_sums_petersen(rational_only: bool = False) -> List[Tuple[int, int]]:
    """All (a, b), a <= b in 0..15, with 1 = z^a + z^-a + z^b + z^-b over 30th roots.

    Every one of the 900 ordered pairs is tested exactly; results are reduced by
    conjugating each term and by swapping the two roots.
    """
    N = PETERSEN_ORDER
    found = set()
    for a in range(N):
        for b in range(N):
            terms = _conjugate_pair(N, a) + _conjugate_pair(N, b) + [(0, -1)]
            if is_zero_rootsum(RootSumPoly.from_terms(N, terms)):
                found.add(tuple(sorted((reduce_exponent(N, a), reduce_exponent(N, b)))))
    if rational_only:
        allowed = _rational_exponents(N)
        found = {s for s in found if set(s) <= allowed}
    logger.info(f"30th-root search: {len(found)} solution classes")
    return sorted(found)


def search_vanishing_sums_pappus(rational_only: bool = False) -> List[Tuple[int, int, int]]:
    """All (a, b, c) with 0 = 1 + z^a + z^-a + z^b + z^-b + 2 z^c + 2 z^-c over 210th roots.

    Exponents are reduced to 0..105 with a <= b. A vectorised float prefilter
    over the 2cos table keeps near-zero candidates; each is confirmed exactly.
    """
    N = PAPPUS_ORDER
    half = N // 2
    table = 2 * np.cos(2 * np.pi * np.arange(half + 1) / N)
    total = (
        1
        + table[:, None, None]
        + table[None, :, None]
        + 2 * table[None, None, :]
    )
    candidates = np.argwhere(np.abs(total) < PREFILTER_TOLERANCE)

    found = set()
    for a, b, c in candidates.tolist():
        if a > b:
            continue
        terms = (
            _conjugate_pair(N, a) + _conjugate_pair(N, b) + _conjugate_pair(N, c, 2) + [(0, 1)]
        )
        if is_zero_rootsum(RootSumPoly.from_terms(N, terms)):
            found.add((a, b, c))
    if rational_only:
        allowed = _rational_exponents(N)
        found = {s for s in found if set(s) <= allowed}
    logger.info(f"210th-root search: {len(candidates)} float candidates, {len(found)} exact solutions")
    return sorted(found)
