"""Local Picard groups and higher cohomology of the unit sheaf on punctured
spectra of binoids, simplicial binoids and Stanley-Reisner algebras."""

__version__ = "0.1.0"

from .kernels import BACKEND
from .abelian import (FgAbelianGroup, IntMatrix, Subgroup, cokernel, complex_cohomology,
                      complex_cohomology_mod, image_basis, kernel_basis, smith_normal_form)
from .fields import (AlgClosedChar0, AlgClosedCharP, CyclicCoefficients, FieldModel,
                     FiniteField, GroupValue, Rationals, Reals, Symbolic, parse_field)
from .simplicial import (SimplicialComplex, cochain_complex, cohomology_Z,
                         cohomology_with_coefficients, homology_Z)
from .binoid import (BinoidPresentation, IntegralBinoid, detect_simplicial, difference_group,
                     localization_unit_group, minimal_face_contains, simplicial_binoid_of)
from .cech import build_cech_complex, cech_cohomology, constant_sheaf_complex
from .picard import (CohomologyReport, crosscheck_simplicial, graph_fast_path,
                     graph_graded_report, picloc_integral_binoid, picloc_simplicial_direct,
                     picloc_simplicial_formula, stanley_reisner_cohomology)
from .monomial import (DegreeBox, MonomialIdeal, nilpotent_cech_dimensions, nonreduced_report,
                       reduction_complex)
