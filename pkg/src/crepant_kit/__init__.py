"""Exact verification toolkit for scalar cyclic quotient singularities C^n/Z_d.

Submodules
----------
group_rep   diagonal Z/d actions, isotypic Hilbert series, Gorenstein test
cohomology  line bundles on P^{n-1} and on Tot(O(-d)); Cech oracle
tilting     graded shadow of the tilting bundle sum_j t^*O(-j)
sod         exceptional collections, Ext on the blow-up, the decomposition
crepancy    canonical bundle and discrepancy of the blow-up
cli         ``crepant-kit`` command line
"""

__version__ = "0.1.0"

from .cohomology import (CohomologyTable, LineBundle, ProjSpace, ResourceLimitError,
                         TotalSpaceBundle, bott_cohomology, cech_cohomology_oracle,
                         pushforward_vanishing, total_space_cohomology)
from .crepancy import (CanonicalReport, NonGorensteinError, canonical_of_total_space,
                       canonical_report, discrepancy, weak_crepancy_hypothesis)
from .group_rep import (Character, CyclicAction, HilbertSeries, covariant_hilbert,
                        det_character, is_gorenstein, molien_series)
from .sod import (EulerMatrix, ExceptionalCollection, SODBlock, euler_matrix,
                  exceptional_collection_check, koszul_ext_oracle, kuznetsov_sod_check,
                  pushforward_ext)
from .tilting import (DescentDatum, HypothesisError, TiltingReport, descent_line_bundles,
                      hom_hilbert, skew_hom_hilbert, tilting_check)
