"""Exact counting of colorings without rainbow 3-term arithmetic progressions."""

__version__ = "0.1.0"

from .colorings import (Coloring, HypergraphStats, Template, count_rainbow_subtemplates,
                        find_rainbow_3ap, has_rainbow_3ap, is_subtemplate,
                        rainbow_hypergraph_stats, template_of)
from .formulas import (AwZnCharacterization, FormulaValue, aw_zn3_is_3, closed_form_count,
                       cor6_rhs, eq1_lower_bound, thm2_upper_bound, thm5_exact_zp)
from .numbers import (APTriple, Structure, count_3aps_interval, is_generator, is_prime,
                      list_3aps, list_aps, mult_order)
from .orbits import (OrbitDecomposition, orbit_decompose, structured_exact3_count,
                     zero_ap_pair_same_orbit)
from .search import (AwResult, AwUndefined, BudgetExceeded, CountReport, compute_aw,
                     count_exact_color, count_rainbow_free, enumerate_rainbow_free,
                     prop10_pair_count, prop11_pair_count)
