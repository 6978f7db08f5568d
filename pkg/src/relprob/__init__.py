"""Relative probability functions on finite outcome spaces."""

from .bayes import (
    bayes_update,
    likelihood_from_density,
    message_likelihood,
    noisy_channel_likelihood,
    pointwise_product,
    sequential_update,
)
from .catalog import (
    binomial,
    certain,
    empty,
    finite_geometric,
    from_absolute,
    from_weights,
    indeterminate,
    uniform,
    unit,
)
from .compose import Composition, CompositionReport, compose, total_comparability_conditions
from .document import parse_document, serialize_document
from .errors import (
    AxiomViolationError,
    DocumentError,
    IncomparableError,
    NotAnchoredError,
    NotConvergedError,
    RpfError,
)
from .events import absolute_event_prob, event_rel_prob, internal_anchor, to_absolute
from .limits import EmbeddedRpf, embed, family_limit, sequence_limit, unembed
from .magnitude import (
    INF,
    ONE,
    WILDCARD,
    ZERO,
    Kind,
    Magnitude,
    inverse_odds,
    matches,
    mw_add,
    mw_inverse,
    mw_mul,
    odds,
)
from .rpf import (
    ClassedRpf,
    ClassificationReport,
    DenseRpf,
    Violation,
    check_path_composition,
    classify,
    comparable,
    find_anchors,
    matched_by,
    mutually_possible,
    possibility_classes,
    possible,
    to_classed,
    to_dense,
    validate,
)

__version__ = "0.1.0"
