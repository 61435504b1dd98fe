"""ontogloss: ontology diagrams that explain themselves in controlled English.

Pipeline: parse Manchester text into an ontology, derive a lexicon from the
entity names, build and lay out a node-link diagram, and on demand verbalize
the axioms behind any diagram element as English sentences.
"""

from .diagram import DiagramElement, DiagramModel, build_diagram, collect, diagram_to_dict, layout
from .lexicon import Lexicon, LexiconEntry, build_lexicon, merge_overrides
from .manchester import ParseDiagnostic, parse_class_expression, parse_ontology, render_manchester
from .model import (
    Axiom,
    ClassExpression,
    EntityKind,
    EntityRef,
    Ontology,
    PropertyExpression,
    axioms_referencing,
    normalize_expression,
)
from .reader import ReaderResult, read_sentence
from .reasoner import InferredAxiom, infer, small_model_entails, small_model_equivalent
from .service import Workbench, create_app
from .verbalizer import Sentence, paraphrase_normalize, verbalize_axiom, verbalize_axioms

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "ClassExpression",
    "DiagramElement",
    "DiagramModel",
    "EntityKind",
    "EntityRef",
    "InferredAxiom",
    "Lexicon",
    "LexiconEntry",
    "Ontology",
    "ParseDiagnostic",
    "PropertyExpression",
    "ReaderResult",
    "Sentence",
    "Workbench",
    "axioms_referencing",
    "build_diagram",
    "build_lexicon",
    "collect",
    "create_app",
    "diagram_to_dict",
    "infer",
    "layout",
    "merge_overrides",
    "normalize_expression",
    "paraphrase_normalize",
    "parse_class_expression",
    "parse_ontology",
    "read_sentence",
    "render_manchester",
    "small_model_entails",
    "small_model_equivalent",
    "verbalize_axiom",
    "verbalize_axioms",
]
