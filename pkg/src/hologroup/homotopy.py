"""Explicit paths joining overshears and transpositions to the identity.

An overshear deforms by scaling both of its data polynomials: at time t
the step is Overshear(axis, (1-t) f, (1-t) g), so the multiplier
exp((1-t) g) interpolates continuously with no branch ambiguity. A
transposition of coordinates j < k deforms through invertible linear
maps mixing the (j, k) plane with coefficients

    row j:  t        1-t
    row k:  (1-t) + i f(t)   t

where f is a real bump on [0, 1] with f(0) = f(1) = 0 and f(1/2) != 0;
the block determinant (2t-1) - i(1-t) f(t) then never vanishes, since
its real part is zero only at t = 1/2 where the bump keeps the
imaginary part away from 0. Both families hit the target map at t = 0
and the identity at t = 1.

Certification is empirical on one compact set per call: endpoint
errors, a global lower bound on |det| over a t-grid, worst inverse
residual, and a modulus of continuity in t.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import OutOfRange
from .words import (Linear, Overshear, Permutation, Word, eval_word_batch,
                    invert_word, jacobian_det_batch)

BUMP_ENDPOINT_TOL = 1e-12
BUMP_MIDPOINT_TOL = 1e-12
CERTIFY_POINTS = 100
DEFAULT_CERTIFY_SEED = 42


@dataclass(frozen=True)
class BumpFunction:
    """Real continuous function on [0,1], zero at the ends, nonzero at 1/2.

    Either the named default sin(pi t) or a piecewise-linear table over
    a uniform grid on [0,1]. The three defining constraints are checked
    at construction (endpoints to 1e-12, since sin(pi*1) is itself only
    zero to roundoff).
    """

    name: str
    table: Optional[tuple] = None

    def __post_init__(self):
        if self.name == "sin":
            if self.table is not None:
                raise ValueError("the sin bump takes no table")
        elif self.name == "table":
            if self.table is None or len(self.table) < 3:
                raise ValueError("a table bump needs at least 3 values")
            object.__setattr__(self, "table", tuple(float(v) for v in self.table))
        else:
            raise ValueError(f"unknown bump function {self.name!r}")
        if abs(self(0.0)) > BUMP_ENDPOINT_TOL or abs(self(1.0)) > BUMP_ENDPOINT_TOL:
            raise ValueError("bump function must vanish at t=0 and t=1")
        if abs(self(0.5)) <= BUMP_MIDPOINT_TOL:
            raise ValueError("bump function must be nonzero at t=1/2")

    def __call__(self, t):
        if self.name == "sin":
            return np.sin(np.pi * t)
        knots = np.linspace(0.0, 1.0, len(self.table))
        return np.interp(t, knots, self.table)


SIN_BUMP = BumpFunction("sin")


@dataclass(frozen=True)
class OvershearPath:
    """Deformation of one overshear step to the identity."""

    target: Overshear
    n: int

    def __post_init__(self):
        if self.target.dim != self.n:
            raise ValueError(f"target acts in dimension {self.target.dim}, path says {self.n}")


@dataclass(frozen=True)
class TranspositionPath:
    """Deformation of the swap of coordinates j and k to the identity."""

    j: int
    k: int
    n: int
    bump: BumpFunction = SIN_BUMP

    def __post_init__(self):
        if not 1 <= self.j < self.k <= self.n:
            raise ValueError(f"need 1 <= j < k <= n, got j={self.j}, k={self.k}, n={self.n}")


HomotopyPath = Union[OvershearPath, TranspositionPath]


def _check_t(t: float):
    if not 0.0 <= t <= 1.0:
        raise OutOfRange(f"path parameter must lie in [0, 1], got {t}")


def transposition_matrix(path: TranspositionPath, t: float) -> np.ndarray:
    m = np.eye(path.n, dtype=np.complex128)
    j, k = path.j - 1, path.k - 1
    ft = float(path.bump(t))
    m[j, j] = t
    m[j, k] = 1.0 - t
    m[k, j] = (1.0 - t) + 1j * ft
    m[k, k] = t
    return m


def path_at(path: HomotopyPath, t: float) -> Word:
    """The automorphism at time t: the target at t=0, identity at t=1."""
    _check_t(t)
    if isinstance(path, OvershearPath):
        s = 1.0 - t
        step = Overshear(path.target.axis, path.target.f.scale(s), path.target.g.scale(s))
        return Word(path.n, (step,))
    return Word(path.n, (Linear(transposition_matrix(path, t)),))


def path_det(path: TranspositionPath, t: float) -> complex:
    """Closed-form Jacobian determinant of the transposition path."""
    if not isinstance(path, TranspositionPath):
        raise TypeError("closed-form determinant exists for transposition paths only")
    return complex((2.0 * t - 1.0) - 1j * (1.0 - t) * float(path.bump(t)))


def path_target(path: HomotopyPath) -> Word:
    """The map the path starts from at t=0."""
    if isinstance(path, OvershearPath):
        return Word(path.n, (path.target,))
    perm = list(range(1, path.n + 1))
    perm[path.j - 1], perm[path.k - 1] = path.k, path.j
    return Word(path.n, (Permutation(tuple(perm)),))


def sample_polydisc(n: int, count: int, radius: float,
                    rng: np.random.Generator) -> np.ndarray:
    """Points with every coordinate uniform on the closed disc of `radius`."""
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, size=(count, n)))
    ang = rng.uniform(0.0, 2.0 * np.pi, size=(count, n))
    return r * np.exp(1j * ang)


@dataclass(frozen=True)
class CertificationReport:
    endpoint_err0: float
    endpoint_err1: float
    min_abs_det: float
    max_inverse_residual: float


def certify_path(path: HomotopyPath, grid_size: int, sample_radius: float,
                 seed: int = DEFAULT_CERTIFY_SEED) -> CertificationReport:
    """Measure how well the path behaves on one compact polydisc.

    Over a uniform t-grid and 100 seeded points: sup-norm error against
    the target map at t=0 and the identity at t=1, the minimum |det| of
    the Jacobian, and the worst round-trip residual through the inverse
    at each grid time.
    """
    if grid_size < 2:
        raise OutOfRange(f"grid must have at least 2 points, got {grid_size}")
    rng = np.random.default_rng(seed)
    pts = sample_polydisc(path.n, CERTIFY_POINTS, sample_radius, rng)
    min_det = np.inf
    max_resid = 0.0
    for t in np.linspace(0.0, 1.0, grid_size):
        wt = path_at(path, float(t))
        images = eval_word_batch(wt, pts)
        min_det = min(min_det, float(np.min(np.abs(jacobian_det_batch(wt, pts)))))
        back = eval_word_batch(invert_word(wt), images)
        max_resid = max(max_resid, float(np.max(np.abs(back - pts))))
    target_images = eval_word_batch(path_target(path), pts)
    err0 = float(np.max(np.abs(eval_word_batch(path_at(path, 0.0), pts) - target_images)))
    err1 = float(np.max(np.abs(eval_word_batch(path_at(path, 1.0), pts) - pts)))
    return CertificationReport(err0, err1, float(min_det), max_resid)


def continuity_modulus(path: HomotopyPath, dt: float, sample_radius: float,
                       seed: int = DEFAULT_CERTIFY_SEED) -> float:
    """Largest sup-norm jump between consecutive grid times at spacing dt.

    A computable stand-in for continuity in the topology of uniform
    convergence on compact sets, measured on one seeded polydisc; for
    these smooth-in-t paths it scales linearly with dt.
    """
    if not 0.0 < dt <= 1.0:
        raise OutOfRange(f"time step must lie in (0, 1], got {dt}")
    rng = np.random.default_rng(seed)
    pts = sample_polydisc(path.n, CERTIFY_POINTS, sample_radius, rng)
    steps = int(np.floor(1.0 / dt + 1e-9))
    times = np.minimum(np.arange(steps + 1) * dt, 1.0)
    modulus = 0.0
    prev = eval_word_batch(path_at(path, float(times[0])), pts)
    for t in times[1:]:
        cur = eval_word_batch(path_at(path, float(t)), pts)
        modulus = max(modulus, float(np.max(np.abs(cur - prev))))
        prev = cur
    return modulus
