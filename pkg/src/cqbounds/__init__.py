"""Reliability-function bounds for classical-quantum channels.

Sphere-packing exponents for constant-composition codes, zero-error rate
quantities, Marton/Lovasz theta functions of confusability graphs, and an
Elias-type bound for pure-state channels. All values are in nats.
"""

__version__ = "0.1.0"

from .channel import (
    CodeBlock,
    ConditionalComposition,
    ConfusabilityGraph,
    CQChannel,
    PureStateChannel,
    classical_embed,
    composition_of,
    conditional_composition_of,
    confusability_graph,
)
from .elias import (
    GammaCertificate,
    SpuSearchSpace,
    SubcodeWitness,
    code_overlap_exponent,
    construct_aux_channel,
    espu_cc,
    extract_subcode,
    gamma_check,
    mutual_information,
    overlap_rate_bound,
    weakened_bound,
)
from .linalg import InvalidInputError
from .renyi import SolverConfig, e0_gradient, e0_objective, minimize_over_density
from .spherepacking import (
    BoundCurve,
    CondChannelFamily,
    check_cond_theorem4,
    check_theorem4,
    e0_optimal_composition,
    e0cc,
    e0cc_cond,
    espcc,
    espcc_cond,
    espcc_curve,
    r_infinity,
    r_infinity_cond,
    r_infinity_global,
)
from .theta import (
    OrthonormalRepresentation,
    ProjectorRepresentation,
    ThetaConfig,
    direct_sum_mix,
    max_p_theta,
    purify_to_rank_one,
    theta_lovasz,
    theta_marton,
    theta_sp,
)
