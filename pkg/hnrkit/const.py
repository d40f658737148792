# -*- coding:utf-8 -*-

"""
Some constants.

Date:   2026/10/19
"""

import math


# Barrier families
FAMILY_CATENOID = "catenoid"  # Rotational n-catenoids C_a.
FAMILY_MD = "md"  # Translation-invariant family M_d, d > 1.
FAMILIES = (FAMILY_CATENOID, FAMILY_MD)

# Profile sources
PROFILE_SOURCE_ODE = "ode"
PROFILE_SOURCE_QUADRATURE = "quadrature-inversion"

# Vertical hyperplane kinds
PLANE_DIAMETER = "diameter"  # Through the origin, stored by its unit normal.
PLANE_SPHERE = "sphere"  # Euclidean sphere orthogonal to the unit sphere.

# Sweep status
SWEEP_STATUS_CONTACT = "contact"
SWEEP_STATUS_DISJOINT = "disjoint"
SWEEP_STATUS_EXHAUSTED = "exhausted"

# Verdict status
VERDICT_OBSTRUCTED = "obstructed"
VERDICT_NONE = "no_obstruction_detected"

# Verdict rules
RULE_SLAB = "slab_and_projection"
RULE_ASYMPTOTIC = "asymptotic_theorem"
RULE_CONVEXITY = "strict_convexity"
RULE_NONE = "none"

RULE_CITATIONS = {
    RULE_SLAB: "Slab non-existence theorem: a closed asymptotic boundary contained in an open slab of "
               "height pi/(n-1) whose vertical projection omits an open subset bounds no complete connected "
               "properly immersed minimal hypersurface.",
    RULE_ASYMPTOTIC: "Asymptotic theorem: if some q_inf on the boundary of Pr(Gamma) is not in Pr(dGamma) and "
                     "Gamma lies in a slab (t0, t0 + pi/(n-1)), no properly and completely immersed minimal "
                     "hypersurface M with M u Gamma a continuous n-manifold with boundary has asymptotic "
                     "boundary Gamma.",
    RULE_CONVEXITY: "Strict convexity corollary: a closed asymptotic boundary that is strictly convex in the "
                    "Euclidean sense of the half-space model bounds no such minimal hypersurface (in particular "
                    "no horizontal minimal graph over a bounded strictly convex domain).",
    RULE_NONE: "No obstruction detected. This never asserts existence.",
}

# Numerical defaults
DEFAULT_TOL = 1e-10  # Quadrature absolute tolerance.
DEFAULT_MAX_DEPTH = 60  # Adaptive bisection depth cap.
MIN_MAX_DEPTH = 10
GEOMETRY_TOL = 1e-12  # Normalization tolerance of planes and ideal points.
UNIT_TOL = 1e-9  # Unit-vector validation when loading boundary data.
GOLDEN_TOL = 1e-12  # Golden-section tolerance of foot-point searches.
ROOT_TOL = 1e-12  # Bisection tolerance of catenoid roots.
DEFAULT_SLOPE_CAP = 1e3  # ODE abandoned once f_t exceeds this.
DEFAULT_ODE_STEP = 0.05  # Largest ODE step.
DEFAULT_CONTACT_TOL = 1e-6  # Sweep contact threshold (hyperbolic distance).
TRIANGLE_TOL = 1e-8  # Subdivision tolerance of vertex-to-triangle distances.
TRIANGLE_DEPTH = 4  # Subdivision levels before the local polish.
MIN_FACE_AREA = 1e-14
DEFAULT_ANGLE_TOL_DEG = 2.0  # Angular margin certifying omitted regions.
DEFAULT_CONV_TOL = 1e-9  # Strict convexity margin, relative to the diameter scale.
DEFAULT_SLAB_TOL = 1e-9
ARC_SAMPLES = 128  # Boundary samples per arc of M_d.
SPHERE_SAMPLES = 4000  # Test directions on S^2 for omitted caps.

# Output formatting
SIGNIFICANT_DIGITS = 12


def critical_height(n):
    """Critical slab height pi/(n-1)."""
    return math.pi / (n - 1)
