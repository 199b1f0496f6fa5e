"""quasiline: colouring quasi-line graphs within chi_f + 3*sqrt(chi_f).

The package combines exact combinatorial oracles (chromatic and clique
number by branch and bound, maximum-weight stable sets, an exact
rational simplex) with the constructive pipeline for compositions of
linear interval strips: fractional colouring by column generation,
overlap rounding, contraction to a line graph, and type-preserving
merges of hub and strip colourings.
"""

from .composition import (Strip, StripComposition, check_robust, compose,
                          detect_strip_decomposition, hub_graph, normalize,
                          parse_composition, serialize_composition)
from .dimacs import (parse_colouring, parse_graph, serialize_colouring,
                     serialize_graph)
from .errors import (CompositionError, ContractViolationError,
                     DecompositionRequiredError, InputError, ParseError,
                     QuasilineError, ResourceLimitError, SpecError,
                     StructuralError)
from .exact import (InfeasibleAtBudget, exact_chromatic, exact_clique_number,
                    k_colouring, max_clique)
from .fractional import (FractionalColouring, Overlap, compute_overlaps,
                         fractional_chromatic, max_weight_stable_set)
from .generators import gen_circular_interval, gen_composition
from .graphs import (Bounds, Colouring, Graph, Multigraph, is_quasi_line,
                     verify_colouring)
from .hubcolour import (Contraction, colour_gprime, contract, lift_to_hub,
                        merge, transfer_fractional)
from .interval import (CircularIntervalRep, LinearIntervalRep,
                       colour_circular_interval, recognize_circular_interval,
                       recognize_linear_interval)
from .pipeline import colour_composition, colour_quasi_line, compute_bounds
from .reductions import (HomogeneousPair, HomogeneousPairReduction,
                         ReductionStep, find_clique_cutset, find_low_degree,
                         find_nonlinear_homogeneous_pair,
                         reduce_homogeneous_pair)
from .rounding import OutEdgeLabelling, label_out_edges, round_all, round_class
from .stripcolour import StripColourSpec, build_Fe, colour_strip

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
