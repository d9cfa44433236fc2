"""Uniform model of geometric spaces.

One specification vector {k_1, ..., k_n}, k_i in {-1, 0, 1}, selects the
space (elliptic, Euclidean, hyperbolic, Galilean, Minkowski and the mixed
types) and a single code path evaluates its trigonometry, motions, triangle
laws, lineal measures and volumes.
"""

from ._core import (
    GeometryError,
    Lineal,
    Measure,
    Motion,
    RightTriangle,
    Specification,
    TextParseError,
    TriangleSolution,
    apply,
    c_fn,
    canonical_basis,
    change_basis,
    classify_pair,
    compose,
    cone_volume,
    cosine1_side,
    cosine2_angle,
    cross_norm,
    curvature,
    decompose,
    dot,
    inverse,
    inverse_c,
    inverse_s,
    inverse_t,
    is_generalized_orthogonal,
    is_proper,
    main_rotation,
    measure_between,
    normalize_point,
    orthogonal_completion,
    parallelepiped_volume,
    preset,
    preset_names,
    project,
    quadric_signs,
    right_relation_residuals,
    right_solve,
    rotation_ij,
    s_fn,
    sine_ratio,
    solve_sas,
    spec_from_quadric,
    state_matrix,
    t_fn,
    transformed,
    translation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
