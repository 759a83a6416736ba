"""Exact flag-vector machinery for Eulerian and half-Eulerian graded
posets, with a rational polyhedral cone engine."""

from .cone import (ConeError, EvenFrame, facets_from_rays, is_extreme,
                   membership, rays_from_facets, verify_rank)
from .constructions import (appendix_a1, boolean_lattice, chain,
                            double_interval, generalized_double, glue,
                            horizontal_double, limit_family_poset,
                            parse_construction)
from .forms import (LinearForm, convolve_L, convolve_ell, convolve_f,
                    facet_theorem_candidates, graded_ijk_form,
                    graded_lemma_form, ijk_form, inequality_lemma_form)
from .posets import (GradedPoset, dual, flag_f_vector, interval, is_eulerian,
                     is_half_eulerian, mobius, random_graded_poset,
                     rank_selected, validate)
from .systems import (IntervalSystem, cd_index_of_doubled_limit,
                      doubled_limit_L_vector, doubled_limit_f_vector,
                      enumerate_even_systems, extreme_sum_vector,
                      is_even_system, lambda_decode, lambda_encode,
                      limit_ell_vector, limit_f_vector,
                      maximal_interval_system, rank7_extreme_vectors,
                      system_for_cd_word)
from .vectors import (FlagVector, check_dehn_sommerville, f_to_L, f_to_ell,
                      f_to_h, h_to_f, L_to_f, ell_to_f)
from .words import (IndexPolynomial, NotCDExpressibleError, ab_index,
                    ab_to_ce, cd_to_ce, ce_index, ce_to_cd)

__version__ = "0.1.0"
