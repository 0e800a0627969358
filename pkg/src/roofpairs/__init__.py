"""Exact invariants of Calabi-Yau pairs arising from roofs of projective bundles.

Quadric cohomology rings with exact rational coefficients, the
projective-bundle roof engine (intersection lattices of hyperplane
sections, pushforward locus classes, side switching, residue scans),
integer-lattice algorithms (Smith normal form, discriminant groups,
isotropic pairs, the Fourier-Mukai vector), Borel-Weil-Bott cohomology of
homogeneous bundles, and Grothendieck-ring fibration identities.
"""

__version__ = "0.1.0"

from .gradedring import (  # noqa: F401
    BasisElement,
    ChernVector,
    GradedClass,
    RingPresentation,
    chern_twist,
    integrate,
    make_quadric_ring,
    multiply,
    validate_mukai_pair,
)
from .roofcalc import (  # noqa: F401
    BundleClass,
    MiddleLattice,
    ResidueScan,
    RoofConfig,
    RoofSide,
    build_side_from_chern,
    cayley_rank_decomposition,
    cy_degree,
    locus_pushforward_class,
    middle_lattice,
    pairing_on_M,
    polarized_sign_check,
    pushforward_to_base,
    reduce,
    residue_scan,
    switch_side,
)
from .latticecore import (  # noqa: F401
    DiscriminantGroup,
    MukaiSolution,
    SmithDecomposition,
    discriminant_group,
    isotropic_pair_solve,
    mukai_vector,
    orthogonal_kernel,
    smith_normal_form,
)
from .bwbcoh import (  # noqa: F401
    RootSystem,
    bundle_cohomology,
    dominant_conjugate,
    euler_characteristic,
    les_solve,
    rho,
    vanishing_case,
    weyl_dimension,
)
from .motivicring import (  # noqa: F401
    MotivicPoly,
    fibration_class,
    l_equivalence_residual,
    proj_class,
)
from .configs import builtin_config, load_config  # noqa: F401
