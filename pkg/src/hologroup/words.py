"""Automorphism words: explicit generators, evaluation, composition,
inversion, and Jacobian determinants.

A word is a finite ordered list of generator steps sharing a dimension
n; it represents the composite map obtained by applying the steps
left to right (the first listed step acts first). The empty word is the
identity. Generators:

    Overshear(axis, f, g)   z_axis -> f(z') + exp(g(z')) * z_axis
    Permutation(perm)       coordinate i moves to slot perm[i-1]
    Diagonal(lam)           z_j -> lam_j * z_j
    Linear(matrix)          z -> A z
    Inversion(axis)         z_axis -> 1 / z_axis

f and g are polynomials that must not involve the overshear axis, so
the multiplier exp(g) is entire and nowhere zero by construction.
All step and word values are immutable; every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DimensionMismatch, NonInvertibleStep, SingularPoint
from .polynomials import Poly

# Linear steps must have |det| above this after scaling rows to unit norm.
TAU_DET = 1e-12


def _as_batch(pts) -> np.ndarray:
    pts = np.asarray(pts, dtype=np.complex128)
    if pts.ndim != 2:
        raise ValueError(f"expected a (P, n) batch of points, got shape {pts.shape}")
    return pts


@dataclass(frozen=True)
class Overshear:
    """z_axis -> f(z') + exp(g(z')) * z_axis, other coordinates fixed.

    f and g are stored as polynomials in all n variables with zero
    exponent on the axis variable, which the constructor enforces.
    """

    axis: int
    f: Poly
    g: Poly

    def __post_init__(self):
        if self.f.n_vars != self.g.n_vars:
            raise DimensionMismatch(
                f"f has {self.f.n_vars} variables, g has {self.g.n_vars}")
        if not 1 <= self.axis <= self.f.n_vars:
            raise ValueError(f"axis {self.axis} out of range 1..{self.f.n_vars}")
        if self.f.references(self.axis) or self.g.references(self.axis):
            raise ValueError(f"overshear data may not involve variable {self.axis}")

    @property
    def dim(self) -> Optional[int]:
        return self.f.n_vars

    def apply_batch(self, cur: np.ndarray) -> np.ndarray:
        a = self.axis - 1
        fv = self.f.eval_batch(cur)
        hv = np.exp(self.g.eval_batch(cur))
        cur[:, a] = fv + hv * cur[:, a]
        return cur

    def jac_batch(self, cur: np.ndarray) -> np.ndarray:
        return np.exp(self.g.eval_batch(cur))

    def inverse(self) -> tuple:
        # (y - f) * exp(-g) is not overshear-shaped in one step unless
        # f or g vanishes, so split into a translation and a scaling.
        if self.g.is_zero:
            return (Overshear(self.axis, -self.f, self.g),)
        if self.f.is_zero:
            return (Overshear(self.axis, self.f, -self.g),)
        zero = Poly.zero(self.f.n_vars)
        return (Overshear(self.axis, -self.f, zero),
                Overshear(self.axis, zero, -self.g))


@dataclass(frozen=True)
class Permutation:
    """Coordinate permutation; perm[i-1] is the 1-based image of i."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        object.__setattr__(self, "perm", perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")

    @property
    def dim(self) -> Optional[int]:
        return len(self.perm)

    @property
    def sign(self) -> int:
        seen = [False] * len(self.perm)
        sign = 1
        for i in range(len(self.perm)):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.perm[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def apply_batch(self, cur: np.ndarray) -> np.ndarray:
        out = np.empty_like(cur)
        out[:, np.array(self.perm) - 1] = cur
        return out

    def jac_batch(self, cur: np.ndarray) -> np.ndarray:
        return np.full(cur.shape[0], complex(self.sign))

    def inverse(self) -> tuple:
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p - 1] = i + 1
        return (Permutation(tuple(inv)),)


@dataclass(frozen=True)
class Diagonal:
    """z_j -> lam_j * z_j with all lam_j nonzero."""

    lam: tuple

    def __post_init__(self):
        lam = tuple(complex(v) for v in self.lam)
        object.__setattr__(self, "lam", lam)
        if any(v == 0 for v in lam):
            raise NonInvertibleStep("diagonal entries must be nonzero")

    @property
    def dim(self) -> Optional[int]:
        return len(self.lam)

    def apply_batch(self, cur: np.ndarray) -> np.ndarray:
        cur *= np.array(self.lam)
        return cur

    def jac_batch(self, cur: np.ndarray) -> np.ndarray:
        return np.full(cur.shape[0], complex(np.prod(np.array(self.lam))))

    def inverse(self) -> tuple:
        return (Diagonal(tuple(1.0 / v for v in self.lam)),)


@dataclass(frozen=True, eq=False)
class Linear:
    """z -> A z for an invertible complex matrix A."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"matrix must be square, got shape {m.shape}")
        norms = np.linalg.norm(m, axis=1)
        if np.any(norms == 0):
            raise NonInvertibleStep("linear step has a zero row")
        if abs(np.linalg.det(m / norms[:, None])) <= TAU_DET:
            raise NonInvertibleStep("linear step is singular to tolerance")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "_det", complex(np.linalg.det(m)))

    def __eq__(self, other):
        return isinstance(other, Linear) and np.array_equal(self.matrix, other.matrix)

    @property
    def dim(self) -> Optional[int]:
        return self.matrix.shape[0]

    def apply_batch(self, cur: np.ndarray) -> np.ndarray:
        return cur @ self.matrix.T

    def jac_batch(self, cur: np.ndarray) -> np.ndarray:
        return np.full(cur.shape[0], self._det)

    def inverse(self) -> tuple:
        try:
            inv = np.linalg.inv(self.matrix)
        except np.linalg.LinAlgError as exc:
            raise NonInvertibleStep(str(exc)) from exc
        return (Linear(inv),)


@dataclass(frozen=True)
class Inversion:
    """z_axis -> 1 / z_axis; undefined where the coordinate is zero."""

    axis: int

    def __post_init__(self):
        if self.axis < 1:
            raise ValueError("axis must be a positive coordinate index")

    @property
    def dim(self) -> Optional[int]:
        return None  # compatible with any n >= axis

    def apply_batch(self, cur: np.ndarray) -> np.ndarray:
        col = cur[:, self.axis - 1]
        if np.any(col == 0):
            raise SingularPoint(f"inversion of coordinate {self.axis} at value 0")
        cur[:, self.axis - 1] = 1.0 / col
        return cur

    def apply_batch_masked(self, cur: np.ndarray, valid: np.ndarray) -> np.ndarray:
        col = cur[:, self.axis - 1]
        bad = (col == 0) & valid
        safe = np.where(col == 0, 1.0, col)
        cur[:, self.axis - 1] = np.where(bad, np.nan, 1.0 / safe)
        valid &= ~bad
        return cur

    def jac_batch(self, cur: np.ndarray) -> np.ndarray:
        col = cur[:, self.axis - 1]
        if np.any(col == 0):
            raise SingularPoint(f"inversion of coordinate {self.axis} at value 0")
        return -1.0 / col ** 2

    def inverse(self) -> tuple:
        return (self,)


GeneratorStep = Union[Overshear, Permutation, Diagonal, Linear, Inversion]


@dataclass(frozen=True)
class Word:
    """An automorphism word: dimension n plus an ordered tuple of steps."""

    n: int
    steps: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be a positive integer")
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        for step in steps:
            d = step.dim
            if d is not None and d != self.n:
                raise DimensionMismatch(
                    f"step {type(step).__name__} has dimension {d}, word has {self.n}")
            if isinstance(step, Inversion) and step.axis > self.n:
                raise DimensionMismatch(
                    f"inversion axis {step.axis} exceeds dimension {self.n}")

    @staticmethod
    def identity(n: int) -> "Word":
        return Word(n, ())

    def __call__(self, z):
        return eval_word(self, z)


def _check_point(word: Word, z) -> np.ndarray:
    z = np.asarray(z, dtype=np.complex128)
    if z.shape != (word.n,):
        raise DimensionMismatch(f"point has shape {z.shape}, word dimension is {word.n}")
    return z


def eval_word(word: Word, z) -> np.ndarray:
    """Image of the point z under the word (steps applied left to right)."""
    z = _check_point(word, z)
    return eval_word_batch(word, z.reshape(1, -1))[0]


def eval_word_batch(word: Word, pts) -> np.ndarray:
    """Vectorized evaluation on a (P, n) batch; raises on singular points."""
    cur = _as_batch(pts).copy()
    if cur.shape[1] != word.n:
        raise DimensionMismatch(f"points have {cur.shape[1]} coordinates, word has {word.n}")
    for step in word.steps:
        cur = step.apply_batch(cur)
    return cur


def eval_word_batch_masked(word: Word, pts) -> tuple[np.ndarray, np.ndarray]:
    """Like eval_word_batch but flags singular points instead of raising.

    Returns (images, valid) where invalid rows hold NaN in the
    coordinate that hit an inversion at zero.
    """
    cur = _as_batch(pts).copy()
    if cur.shape[1] != word.n:
        raise DimensionMismatch(f"points have {cur.shape[1]} coordinates, word has {word.n}")
    valid = np.ones(cur.shape[0], dtype=bool)
    for step in word.steps:
        if isinstance(step, Inversion):
            cur = step.apply_batch_masked(cur, valid)
        else:
            cur = step.apply_batch(cur)
    return cur, valid


def compose(a: Word, b: Word) -> Word:
    """The word evaluating as z -> b(a(z)): concatenation of step lists."""
    if a.n != b.n:
        raise DimensionMismatch(f"cannot compose words of dimensions {a.n} and {b.n}")
    return Word(a.n, a.steps + b.steps)


def invert_word(word: Word) -> Word:
    """Reverse the steps and invert each one.

    An overshear with both f and g nonzero inverts to two overshear
    steps (subtract f, then scale by exp(-g)); every other generator
    inverts to a single step.
    """
    inv_steps = []
    for step in reversed(word.steps):
        inv_steps.extend(step.inverse())
    return Word(word.n, tuple(inv_steps))


def jacobian_det(word: Word, z) -> complex:
    """Determinant of the complex Jacobian of the word at z (chain rule)."""
    z = _check_point(word, z)
    return complex(jacobian_det_batch(word, z.reshape(1, -1))[0])


def jacobian_det_batch(word: Word, pts) -> np.ndarray:
    """Jacobian determinants at a (P, n) batch of points."""
    cur = _as_batch(pts).copy()
    if cur.shape[1] != word.n:
        raise DimensionMismatch(f"points have {cur.shape[1]} coordinates, word has {word.n}")
    det = np.ones(cur.shape[0], dtype=np.complex128)
    for step in word.steps:
        det *= step.jac_batch(cur)
        cur = step.apply_batch(cur)
    return det
