"""Value coalition logic: typed one-step game models, their propositional
encoding, Hilbert-style proof checking, and value-level effectivity analysis."""

from .correspondence import (
    CoherenceReport,
    back_translate,
    coherence_formula,
    is_coherent,
    to_prop_model,
    to_vcl_model,
    translate,
)
from .errors import (
    IncoherentModelError,
    ModeError,
    ModelError,
    ParseError,
    ResourceError,
    SortError,
    UnknownNameError,
    VCLError,
)
from .fixtures import fixture_ex1, fixture_ex2
from .generators import GeneratorConfig, random_formula, random_model
from .io import load_derivation, load_model, model_from_dict, model_to_dict
from .models import (
    EMPTY_PROFILE,
    GameModel,
    JointProfile,
    enumerate_profiles,
    evaluate,
    extension,
    merge_profiles,
    successors,
    validate_model,
)
from .projection import (
    EffectivityFamily,
    QuotientGameForm,
    de_dicto_formula,
    de_re_formula,
    game_form_effectivity,
    minimal_generators,
    one_step_value_range,
    projected_effectivity,
    projected_effectivity_direct,
    quotient_game_form,
    range_hypergraph,
    residual_indeterminacy,
    transversal_dual,
    value_range,
)
from .proofs import Derivation, check_derivation, is_tautology_instance, match_axiom
from .properties import run_property_suite
from .soundness import soundness_harness
from .syntax import (
    BOTTOM,
    TOP,
    And,
    Coal,
    Formula,
    Neg,
    PropAtom,
    Top,
    TypedSignature,
    ValueAtom,
    parse_formula,
    region_formula,
    render_formula,
)

__version__ = "0.1.0"

__all__ = [
    "CoherenceReport",
    "back_translate",
    "coherence_formula",
    "is_coherent",
    "to_prop_model",
    "to_vcl_model",
    "translate",
    "IncoherentModelError",
    "ModeError",
    "ModelError",
    "ParseError",
    "ResourceError",
    "SortError",
    "UnknownNameError",
    "VCLError",
    "fixture_ex1",
    "fixture_ex2",
    "GeneratorConfig",
    "random_formula",
    "random_model",
    "load_derivation",
    "load_model",
    "model_from_dict",
    "model_to_dict",
    "EMPTY_PROFILE",
    "GameModel",
    "JointProfile",
    "enumerate_profiles",
    "evaluate",
    "extension",
    "merge_profiles",
    "successors",
    "validate_model",
    "EffectivityFamily",
    "QuotientGameForm",
    "de_dicto_formula",
    "de_re_formula",
    "game_form_effectivity",
    "minimal_generators",
    "one_step_value_range",
    "projected_effectivity",
    "projected_effectivity_direct",
    "quotient_game_form",
    "range_hypergraph",
    "residual_indeterminacy",
    "transversal_dual",
    "value_range",
    "Derivation",
    "check_derivation",
    "is_tautology_instance",
    "match_axiom",
    "run_property_suite",
    "soundness_harness",
    "BOTTOM",
    "TOP",
    "And",
    "Coal",
    "Formula",
    "Neg",
    "PropAtom",
    "Top",
    "TypedSignature",
    "ValueAtom",
    "parse_formula",
    "region_formula",
    "render_formula",
]
