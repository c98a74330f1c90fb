"""Numerical solver for the two classical extremal rational-function
problems on a pair of disjoint complex sets: minimax approximation of the
two-valued sign function, and the minimal-ratio function derived from it.
"""

from .aaa import AaaOptions, AaaReport, aaa_fit
from .barycentric import (BarycentricRational, evaluate, poles, shift_values,
                          zeros)
from .fieldmap import (FieldGrid, capacity_bound, default_bbox,
                       magnitude_field, sign_distance_fields)
from .geometry import (Arc, Circle, Ellipse, GeometryError, GradedRay,
                       Interval, Polyline, PRESETS, Preset, SampleSet,
                       ShapeSpec, Transform, build_sample_set,
                       chebyshev_points, conjugate_sample_set,
                       preset_sample_set, unit_circle_points)
from .lawson import (LawsonOptions, LawsonState, lawson_refine,
                     lawson_weight_update)
from .linalg import (SvdResult, blended_weight_vector, generalized_eigenvalues,
                     min_singular_vector, svd_right)
from .zolotarev import (ProblemSpec, SweepEntry, Z3Solution, Z4Solution,
                        degree_sweep, sigma_to_tau, solve, solve_z4,
                        tau_to_sigma, z4_to_z3)

__version__ = "0.1.0"
