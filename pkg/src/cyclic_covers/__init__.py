"""Exact computations with cyclic covers of hypersurfaces over finite fields.

Build the d-fold cover V(x_new^d - F) of a hypersurface V(F), find its outer
Galois points, bring it to Fermat-block normal form, recover the branch
hypersurface from an arbitrary linear image of the cover, and test projective
equivalence with explicit, exactly checked witnesses.
"""

from .census import census, random_form, report_json, trial_seeds
from .cover import as_cover, cover_equation, cyclic_cover, deck_transform
from .equiv import (
    DEFAULT_CAP,
    Verdict,
    equivalent_bruteforce,
    equivalent_structured,
    invariants,
    iter_equivalences,
    verify_equivalence,
)
from .errors import *  # noqa: F401,F403
from .fields import (
    Field,
    FieldElement,
    extension_field,
    is_prime,
    parse_field,
    prime_field,
    rationals,
    root_extension_degree,
    root_of_unity,
)
from .galois import (
    GaloisReport,
    StructureForm,
    TschirnhausResult,
    enumerate_galois,
    is_outer_galois,
    iter_galois_points,
    structure_normalize,
    tschirnhaus,
)
from .hypersurface import (
    DEFAULT_POINT_CAP,
    Hypersurface,
    SmoothnessCertificate,
    point_count,
    singular_points,
    smooth_modulo_primes,
    smoothness_certificate,
)
from .poly import (
    Polynomial,
    apply_linear,
    canonical_scalar,
    evaluate,
    monomials,
    parse,
    partial_derivative,
    shear_substitute,
    split_variable,
)
from .projlin import (
    ProjectivePoint,
    ProjectiveTransform,
    basis_completion,
    count_projective_points,
    enumerate_invertible,
    enumerate_pgl,
    gl_order,
    projective_points,
    random_invertible,
    transposition,
)
from .recovery import Recovery, base_equivalence, recover_branch
from .rng import SplitMix64

__version__ = "0.1.0"
