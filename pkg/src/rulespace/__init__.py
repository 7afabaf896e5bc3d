"""Rule-based password search-space modeling.

Complexity bounds (brute-force upper bound, whole-password rule bound,
chain-rule segmentation, order-aware try-order accumulation), a
time-to-crack strength hypothesis test, a desk-scale cracking-experiment
simulator, and an estimator evaluation harness.
"""

from .cardinality import UNBOUNDED, Cardinality, bits
from .complexity import (
    ChainResult,
    ComplexityReport,
    PolicyBounds,
    compute_report,
    eta_chain,
    eta_lower_rule,
    eta_order_aware,
    eta_order_unknown,
    eta_upper,
)
from .config import build_engine, default_engine, load_engine
from .engine import Engine, ScoreResult, canonical_record_json
from .errors import ValidationError
from .evaluation import EstimatorAdapter, EvaluationReport, evaluate, length_threshold_estimator
from .oracle import (
    ExperimentOutcome,
    ExperimentSpec,
    FatSecureResult,
    assert_injective,
    fat_secure,
    fnv1a_64,
    run_experiment,
)
from .parsing import (
    EnumerationLimits,
    Parsing,
    ParsingSet,
    TaggedParsing,
    conformant_parsings,
    enumerate_parsings,
    format_parsing,
    parse_parsing_line,
)
from .rules import (
    Alphabet,
    AuxConstraint,
    CharClassRule,
    ExternalRule,
    MangledWordlistRule,
    Rule,
    RuleCombination,
    Topology,
    Transform,
    UnionSize,
    WordlistRule,
    conjoin_aux,
    load_wordlist,
    make_char_class_rule,
    make_mangled_rule,
    make_wordlist_rule,
)
from .strength import (
    PROTECTION_PRESETS,
    AdversaryModel,
    ProtectionFunction,
    StrengthVerdict,
    fat_strength_test,
    moore_scaling,
    time_to_crack,
)

__version__ = "0.1.0"
