"""Exact computation of Landau-Ginzburg orbifold state-space dimensions
for quasihomogeneous singularities with finite matrix symmetry groups,
with the Klein quartic catalog built in.

All arithmetic is exact (cyclotomic fields over arbitrary-precision
rationals); floating point appears only in optional diagnostic printers.
"""

from lgorb._kernels import BACKEND as kernel_backend
from lgorb.catalog import (
    catalog_entries,
    catalog_group,
    expected,
    generator_matrix,
    klein_quartic,
    word_matrix,
)
from lgorb.exactnum import CycNum, Rational, cyclotomic_polynomial, lift_conductor, zeta
from lgorb.jacobian import (
    GroebnerBasis,
    JacobianAlgebra,
    buchberger,
    jacobian_algebra,
    normal_form,
    quotient_basis,
    residue_pairing,
)
from lgorb.matgroup import (
    ConjugacyData,
    FiniteMatrixGroup,
    GMatrix,
    conjugacy_classes,
    element_order,
    fixed_space,
    from_elements,
    generate_closure,
    groups_conjugate,
    hat_extend,
)
from lgorb.orbifold import (
    HHReport,
    Sector,
    SectorReport,
    build_sector,
    compute_hh,
    identity_sector_products,
    invariant_subspace,
    reynolds_image,
    rho,
    sector_action,
    surface_cohomology_dim,
)
from lgorb.polyring import (
    Monomial,
    Poly,
    WeightSystem,
    hessian,
    is_quasihomogeneous,
    partial_derivative,
    restrict_to_subspace,
    substitute_linear,
)
from lgorb.words import GeneratorWord, parse_word

__version__ = "1.0.0"

__all__ = [
    "ConjugacyData",
    "CycNum",
    "FiniteMatrixGroup",
    "GMatrix",
    "GeneratorWord",
    "GroebnerBasis",
    "HHReport",
    "JacobianAlgebra",
    "Monomial",
    "Poly",
    "Rational",
    "Sector",
    "SectorReport",
    "WeightSystem",
    "buchberger",
    "build_sector",
    "catalog_entries",
    "catalog_group",
    "compute_hh",
    "conjugacy_classes",
    "cyclotomic_polynomial",
    "element_order",
    "expected",
    "fixed_space",
    "from_elements",
    "generate_closure",
    "generator_matrix",
    "groups_conjugate",
    "hat_extend",
    "hessian",
    "identity_sector_products",
    "invariant_subspace",
    "is_quasihomogeneous",
    "jacobian_algebra",
    "kernel_backend",
    "klein_quartic",
    "lift_conductor",
    "normal_form",
    "parse_word",
    "partial_derivative",
    "quotient_basis",
    "residue_pairing",
    "restrict_to_subspace",
    "reynolds_image",
    "rho",
    "sector_action",
    "substitute_linear",
    "surface_cohomology_dim",
    "word_matrix",
    "zeta",
]
