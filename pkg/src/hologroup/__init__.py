"""Automorphism words on complex coordinate-hyperplane complements.

Explicit generators (overshears, permutations, diagonal and linear
maps, coordinate inversions), composition and inversion, Jacobian
determinants, domain preservation checks, torus centralizer tests with
diagonal extraction, winding-number component invariants, and certified
homotopy paths to the identity. A JSON-driven CLI exposes every
operation; see `hologroup --help`.

Set HOLOGROUP_BACKEND=numpy|numba|auto to pick the polynomial
evaluation kernel (default auto: use numba when importable).
"""

from ._kernels import active_backend
from .domains import (DomainClass, FullSpace, HyperplaneComplement,
                      PreservationVerdict, Punctured, classify_domain, contains,
                      contains_batch, sample_points, word_preserves_domain)
from .errors import (BudgetExhausted, DimensionMismatch, DomainNotPreserved,
                     HoloError, InvalidAxis, NonInvertibleStep, NotDiagonal,
                     NotUnimodular, OutOfRange, OutsideDomain, SceneError,
                     SingularPoint, ZeroOnContour)
from .homotopy import (SIN_BUMP, BumpFunction, CertificationReport, HomotopyPath,
                       OvershearPath, TranspositionPath, certify_path,
                       continuity_modulus, path_at, path_det, path_target,
                       sample_polydisc, transposition_matrix)
from .polynomials import Poly, poly_from_mapping
from .torus import (CentralizerVerdict, CentralizerWitness, ExponentMatrix,
                    TorusElement, apply_torus, commutes_with_torus,
                    extract_diagonal, integer_det, validate_exponent_matrix)
from .winding import (ContourSpec, IndexResult, contour_points,
                      in_negative_component, make_contour, winding_index)
from .words import (TAU_DET, Diagonal, GeneratorStep, Inversion, Linear,
                    Overshear, Permutation, Word, compose, eval_word,
                    eval_word_batch, eval_word_batch_masked, invert_word,
                    jacobian_det, jacobian_det_batch)

__version__ = "0.1.0"

__all__ = [
    "__version__", "active_backend",
    # errors
    "HoloError", "DimensionMismatch", "SingularPoint", "NonInvertibleStep",
    "NotUnimodular", "NotDiagonal", "InvalidAxis", "OutsideDomain",
    "ZeroOnContour", "BudgetExhausted", "OutOfRange", "DomainNotPreserved",
    "SceneError",
    # polynomials
    "Poly", "poly_from_mapping",
    # words
    "TAU_DET", "GeneratorStep", "Overshear", "Permutation", "Diagonal",
    "Linear", "Inversion", "Word", "compose", "eval_word", "eval_word_batch",
    "eval_word_batch_masked", "invert_word", "jacobian_det",
    "jacobian_det_batch",
    # domains
    "FullSpace", "Punctured", "HyperplaneComplement", "DomainClass",
    "PreservationVerdict", "contains", "contains_batch", "classify_domain",
    "sample_points", "word_preserves_domain",
    # torus
    "ExponentMatrix", "TorusElement", "apply_torus", "integer_det",
    "validate_exponent_matrix", "CentralizerVerdict", "CentralizerWitness",
    "commutes_with_torus", "extract_diagonal",
    # winding
    "ContourSpec", "IndexResult", "make_contour", "contour_points",
    "winding_index", "in_negative_component",
    # homotopy
    "BumpFunction", "SIN_BUMP", "OvershearPath", "TranspositionPath",
    "HomotopyPath", "path_at", "path_det", "path_target",
    "transposition_matrix", "certify_path", "continuity_modulus",
    "sample_polydisc", "CertificationReport",
]
