"""Eigenvalues of small dense symmetric matrices and distance spectra.

Eigenvalues come from a cyclic Jacobi solver; characteristic polynomials of
(possibly non-symmetric) quotient matrices are computed exactly with
Faddeev-LeVerrier over ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import BadArgument
from .graph import Graph, all_pairs_distances

EPS = 1e-9
HALF = -0.5
GOLDEN = (-3 + math.sqrt(5)) / 2

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def lambda1(self) -> float:
        return self.values[0]

    @property
    def lambda2(self) -> float:
        return self.values[1]

    def multiplicity(self, value: float, tol: float = 1e-7) -> int:
        return sum(1 for x in self.values if abs(x - value) <= tol)


def _as_symmetric(m) -> np.ndarray:
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadArgument("expected a square matrix")
    if not np.all(np.isfinite(a)):
        raise BadArgument("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if np.abs(a - a.T).max(initial=0.0) > 1e-12 * scale:
        raise BadArgument("matrix is not symmetric")
    return (a + a.T) / 2


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings of range(n) (circle method): every pair meets once per sweep."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            p, q = players[i], players[m - 1 - i]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(m) -> np.ndarray:
    """Eigenvalues (unsorted) of a real symmetric matrix by Jacobi rotations.

    Each round of a sweep rotates n/2 disjoint index pairs at once; disjoint
    rotations commute, so a round is one orthogonal similarity.
    """
    a = _as_symmetric(m)
    n = a.shape[0]
    # work at unit scale so the Frobenius norm cannot overflow
    scale = float(np.abs(a).max(initial=0.0))
    if scale == 0.0 or n == 1:
        return np.diag(a).copy()
    a = a / scale
    target = JACOBI_TOL * math.sqrt(float(np.sum(a * a)))
    rounds = _round_robin(n)
    r = np.eye(n)
    for _ in range(JACOBI_MAX_SWEEPS):
        offdiag = a - np.diag(np.diag(a))
        if math.sqrt(float(np.sum(offdiag * offdiag))) <= target:
            return np.diag(a) * scale
        for ps, qs in rounds:
            apq = a[ps, qs]
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                theta = (a[qs, qs] - a[ps, ps]) / (2.0 * apq)
                # smaller root of t^2 + 2 theta t - 1 = 0; huge theta gives t = 0
                t = np.copysign(1.0, theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[apq == 0.0] = 0.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            r[ps, ps] = c
            r[qs, qs] = c
            r[ps, qs] = -s
            r[qs, ps] = s
            a = r @ a @ r.T
            a[ps, qs] = a[qs, ps] = 0.0
            r[ps, ps] = r[qs, qs] = 1.0
            r[ps, qs] = r[qs, ps] = 0.0
    raise RuntimeError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")


def eig_symmetric(m) -> Spectrum:
    vals = sorted(jacobi_eigenvalues(m).tolist(), reverse=True)
    return Spectrum(tuple(vals))


def distance_spectrum(g: Graph) -> Spectrum:
    return eig_symmetric(all_pairs_distances(g))


def lambda2(g: Graph) -> float:
    """Second largest distance eigenvalue of a connected graph with n >= 2."""
    return distance_spectrum(g).lambda2


def cycle_lambda2_closed_form(n: int) -> float:
    if n < 3:
        raise BadArgument("cycles need n >= 3")
    if n % 2 == 0:
        return 0.0
    return -0.25 / math.cos(math.pi / n) ** 2


class TriState(str, Enum):
    YES = "yes"
    NO = "no"
    BOUNDARY = "boundary"


def below(value: float, threshold: float, eps: float = EPS) -> TriState:
    """Decide ``value < threshold`` with a boundary band of half-width ``eps``."""
    if value < threshold - eps:
        return TriState.YES
    if value > threshold + eps:
        return TriState.NO
    return TriState.BOUNDARY


# -- interlacing ------------------------------------------------------------


@dataclass(frozen=True)
class InterlacingReport:
    ok: bool
    worst_violation: float


def check_interlacing(a, rows: Sequence[int], tol: float = 1e-8) -> InterlacingReport:
    """Check Cauchy interlacing for the principal submatrix on ``rows``.

    ``worst_violation`` is the smallest slack over all inequalities; negative
    values are violations.
    """
    idx = sorted(set(rows))
    if not idx:
        raise BadArgument("rows must be nonempty")
    big = np.asarray(a, dtype=float)
    n, m = big.shape[0], len(idx)
    if idx[0] < 0 or idx[-1] >= n:
        raise BadArgument("row index out of range")
    ra = eig_symmetric(big).values
    rb = eig_symmetric(big[np.ix_(idx, idx)]).values
    worst = math.inf
    for i in range(m):
        worst = min(worst, ra[i] - rb[i], rb[i] - ra[n - m + i])
    return InterlacingReport(worst >= -tol, worst)


# -- equitable partitions ---------------------------------------------------


def _check_partition(blocks: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    out = [sorted(b) for b in blocks]
    flat = [v for b in out for v in b]
    if any(not b for b in out):
        raise BadArgument("partition blocks must be nonempty")
    if sorted(flat) != list(range(n)):
        raise BadArgument(f"blocks do not partition range({n})")
    return out


def _block_sums(m: np.ndarray, blocks: list[list[int]]) -> list[list[np.ndarray]]:
    return [[m[np.ix_(bi, bj)].sum(axis=1) for bj in blocks] for bi in blocks]


def _exact(m: np.ndarray) -> bool:
    return np.issubdtype(m.dtype, np.integer) or m.dtype == object


def is_equitable(m, blocks: Sequence[Sequence[int]], tol: float = 1e-9) -> bool:
    mat = np.asarray(m)
    parts = _check_partition(blocks, mat.shape[0])
    exact = _exact(mat)
    for row in _block_sums(mat, parts):
        for sums in row:
            if exact:
                if any(x != sums[0] for x in sums):
                    return False
            elif np.ptp(sums.astype(float)) > tol:
                return False
    return True


def quotient_matrix(m, blocks: Sequence[Sequence[int]]) -> np.ndarray:
    """Quotient of ``m`` over an equitable partition (row sums block-to-block)."""
    mat = np.asarray(m)
    if not is_equitable(mat, blocks):
        raise BadArgument("partition is not equitable")
    parts = _check_partition(blocks, mat.shape[0])
    sums = _block_sums(mat, parts)
    k = len(parts)
    dtype = mat.dtype if _exact(mat) else float
    q = np.empty((k, k), dtype=dtype)
    for i in range(k):
        for j in range(k):
            q[i, j] = sums[i][j][0]
    return q


# -- exact characteristic polynomials --------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients listed from the highest degree down."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0 if isinstance(x, (int, Fraction)) else 0.0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        d = self.degree
        return IntPolynomial(tuple(c * (d - i) for i, c in enumerate(self.coefficients[:-1])))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            p = self.degree - i
            if c == 0:
                continue
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            terms.append(("-" if c < 0 else "+") + " " + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+") else "-" + s[2:]


def char_poly_exact(q) -> IntPolynomial:
    """``det(xI - Q)`` for an integer matrix by Faddeev-LeVerrier."""
    mat = np.asarray(q, dtype=object)
    n = mat.shape[0]
    if mat.shape != (n, n):
        raise BadArgument("expected a square matrix")
    if n > 8:
        raise BadArgument("char_poly_exact is limited to order <= 8")
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            x = mat[i, j]
            if isinstance(x, (float, np.floating)):
                if not float(x).is_integer():
                    raise BadArgument(f"non-integer entry {x!r} at ({i}, {j})")
                x = int(x)
            elif not isinstance(x, (int, np.integer)):
                raise BadArgument(f"non-integer entry {x!r} at ({i}, {j})")
            a[i][j] = Fraction(int(x))
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[-1]
        mk = prod
        trace = sum(sum(a[i][l] * mk[l][i] for l in range(n)) for i in range(n))
        coeffs.append(-trace / k)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("characteristic polynomial has non-integral coefficients")
    return IntPolynomial(tuple(int(c) for c in coeffs))


def numeric_rank(m, tol: float = 1e-7) -> int:
    a = np.asarray(m, dtype=float)
    scale = max(1.0, math.sqrt(float(np.sum(a * a))))
    return sum(1 for x in eig_symmetric(a).values if abs(x) > tol * scale)
