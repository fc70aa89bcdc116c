"""Torus rotations, their integer linearizations, and centralizer tests.

The standard torus acts by independent coordinate rotations
z_j -> e^{i theta_j} z_j. A linearized action twists the angles by an
integer matrix of determinant +1 or -1; that determinant condition is
exact arithmetic, so it is decided with fraction-free integer
elimination, never floating point.

`commutes_with_torus` and `extract_diagonal` are the two halves of the
dichotomy this package relies on: a word commutes with every torus
rotation exactly when it is a diagonal map, and in that case its
diagonal is recoverable from a single orbit ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionMismatch, DomainNotPreserved, NotDiagonal, NotUnimodular
from .domains import DomainSpec, sample_points, word_preserves_domain
from .words import Word, eval_word_batch

COMMUTE_TOL = 1e-10
DIAG_RATIO_TOL = 1e-9
DIAG_DEPENDENCE_TOL = 1e-10
DIAG_PROBE_STEP = 1e-3


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix.

    Fraction-free (Bareiss) elimination over Python integers: every
    intermediate division is exact, so there is no rounding anywhere.
    """
    m = [[int(x) for x in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        raise ValueError("matrix must be nonempty")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def validate_exponent_matrix(a: Sequence[Sequence[int]]) -> int:
    """Return the exact integer determinant if it is +1 or -1."""
    det = integer_det(a)
    if det not in (1, -1):
        raise NotUnimodular(det)
    return det


@dataclass(frozen=True)
class ExponentMatrix:
    """Integer angle-mixing matrix with determinant +1 or -1."""

    n: int
    a: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.a)
        object.__setattr__(self, "a", rows)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise DimensionMismatch(f"expected a {self.n}x{self.n} matrix")
        validate_exponent_matrix(rows)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.a, dtype=np.int64)


@dataclass(frozen=True)
class TorusElement:
    """Angles, in radians, of one coordinatewise rotation."""

    theta: tuple

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(float(t) for t in self.theta))

    @property
    def n(self) -> int:
        return len(self.theta)

    @property
    def angles(self) -> np.ndarray:
        return np.array(self.theta, dtype=np.float64)


def apply_torus(a: ExponentMatrix, t: TorusElement, z) -> np.ndarray:
    """Image of z under the linearized rotation z_j -> e^{i(a.theta)_j} z_j."""
    z = np.asarray(z, dtype=np.complex128)
    if t.n != a.n or z.shape != (a.n,):
        raise DimensionMismatch(
            f"matrix is {a.n}x{a.n}, angles have length {t.n}, point has shape {z.shape}")
    return np.exp(1j * (a.array @ t.angles)) * z


@dataclass(frozen=True, eq=False)
class CentralizerWitness:
    theta: np.ndarray
    z: np.ndarray
    deviation: float


@dataclass(frozen=True, eq=False)
class CentralizerVerdict:
    commutes: bool
    witness: Optional[CentralizerWitness]


def commutes_with_torus(w: Word, d: DomainSpec, seed: int) -> CentralizerVerdict:
    """Test w(t(z)) = t(w(z)) over 64 seeded rotations and 64 seeded points.

    The word must preserve the domain; torus orbits never leave it, so
    both sides are always defined. The verdict is the max deviation in
    sup norm over the full 64x64 grid, compared against 1e-10, with the
    maximizing pair returned on failure. Enumeration order is fixed, so
    the verdict is reproducible for a given seed.
    """
    if w.n != d.n:
        raise DimensionMismatch(f"word dimension {w.n} != domain dimension {d.n}")
    guard = word_preserves_domain(w, d, seed)
    if not guard.preserves:
        raise DomainNotPreserved(
            f"word does not preserve the domain (witness {guard.witness})")
    rng = np.random.default_rng(seed)
    thetas = rng.uniform(0.0, 2.0 * np.pi, size=(64, w.n))
    pts = sample_points(d, 64, rng)
    coeffs = np.exp(1j * thetas)
    rotated = (coeffs[:, None, :] * pts[None, :, :]).reshape(-1, w.n)
    w_of_tz = eval_word_batch(w, rotated).reshape(64, 64, w.n)
    t_of_wz = coeffs[:, None, :] * eval_word_batch(w, pts)[None, :, :]
    dev = np.max(np.abs(w_of_tz - t_of_wz), axis=2)
    worst = float(dev.max())
    if worst < COMMUTE_TOL:
        return CentralizerVerdict(True, None)
    i, j = np.unravel_index(int(np.argmax(dev)), dev.shape)
    return CentralizerVerdict(False, CentralizerWitness(thetas[i], pts[j], worst))


def extract_diagonal(w: Word, d: DomainSpec, seed: int) -> np.ndarray:
    """Recover lambda from a word assumed to commute with the torus.

    lambda_j = w_j(p) / p_j at one seeded base point with every
    |p_j| in [0.5, 1.5]; then two verifications back the assumption up:
    the same ratio at 32 further points agrees to 1e-9, and nudging any
    one coordinate moves no other output coordinate by more than 1e-10.
    Either failure raises NotDiagonal with the offending point, meaning
    the commutation precondition held only to sampling accuracy.
    """
    if w.n != d.n:
        raise DimensionMismatch(f"word dimension {w.n} != domain dimension {d.n}")
    rng = np.random.default_rng(seed)
    n = w.n
    r = rng.uniform(0.5, 1.5, size=(33, n))
    ang = rng.uniform(0.0, 2.0 * np.pi, size=(33, n))
    pts = r * np.exp(1j * ang)
    images = eval_word_batch(w, pts)
    ratios = images / pts
    lam = ratios[0]
    drift = np.abs(ratios[1:] - lam[None, :])
    bad = np.flatnonzero(np.max(drift, axis=1) >= DIAG_RATIO_TOL)
    if bad.size:
        raise NotDiagonal("orbit ratio is not constant across sample points",
                          point=pts[1 + bad[0]])
    # each output coordinate may respond only to its own input coordinate
    probes = np.repeat(pts, n, axis=0)
    probes[np.arange(33 * n), np.tile(np.arange(n), 33)] += DIAG_PROBE_STEP
    shifts = np.abs(eval_word_batch(w, probes) - np.repeat(images, n, axis=0))
    shifts = shifts.reshape(33, n, n)
    cross = np.max(np.where(np.eye(n, dtype=bool)[None, :, :], 0.0, shifts), axis=(1, 2))
    bad = np.flatnonzero(cross >= DIAG_DEPENDENCE_TOL)
    if bad.size:
        raise NotDiagonal("an output coordinate depends on a foreign input coordinate",
                          point=pts[bad[0]])
    return lam
