"""Session engine and HTTP facade.

One Workbench holds the full derived state for a loaded ontology (lexicon,
diagram, inferred axioms). Loading replaces that state atomically: readers see
either the previous session or the new one, never a mixture. The FastAPI app
is a thin JSON layer over the same engine the CLI uses.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from .diagram import DiagramModel, ElementNotFoundError, build_diagram, collect, diagram_to_dict, layout
from .lexicon import Lexicon, LexiconError, build_lexicon, merge_overrides
from .manchester import ParseDiagnostic, parse_ontology
from .model import (
    AllValuesFrom,
    Declaration,
    EntityKind,
    Ontology,
    OntologyError,
    SubClassOf,
    axioms_referencing,
)
from .reasoner import InferredAxiom, infer
from .verbalizer import Sentence, verbalize_axiom, verbalize_axioms

SCOPES = ("direct", "referencing", "inferred")


class NoSessionError(OntologyError):
    pass


class LoadError(OntologyError):
    def __init__(self, diagnostics: list[ParseDiagnostic], message: str = "ontology load failed"):
        super().__init__(message)
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class SessionState:
    ontology: Ontology
    lexicon: Lexicon
    diagram: DiagramModel
    inferred: tuple[InferredAxiom, ...]
    source: str
    overrides: str


def sentence_to_dict(s: Sentence) -> dict:
    return {
        "text": s.text,
        "axiom_ids": list(s.axiom_ids),
        "inferred": s.inferred,
        "fallback": s.fallback,
    }


class Workbench:
    """Pipeline driver: load -> diagram -> contextual verbalization."""

    def __init__(self) -> None:
        self._state: Optional[SessionState] = None
        self._lock = threading.Lock()

    @property
    def state(self) -> Optional[SessionState]:
        return self._state

    def _require_state(self) -> SessionState:
        state = self._state
        if state is None:
            raise NoSessionError("no ontology loaded")
        return state

    def load(self, source: str, overrides: str = "") -> dict:
        """Run the full pipeline. On any error the previous session stays."""
        ontology, diagnostics = parse_ontology(source)
        if ontology is None:
            raise LoadError(diagnostics)
        try:
            lexicon = merge_overrides(build_lexicon(ontology), overrides)
        except LexiconError as exc:
            raise LoadError(diagnostics, str(exc)) from exc
        diagram = layout(build_diagram(ontology))
        inferred = tuple(infer(ontology))
        state = SessionState(ontology, lexicon, diagram, inferred, source, overrides)
        with self._lock:
            self._state = state
        return {
            "entities": len(ontology.declarations),
            "axioms": sum(1 for a in ontology.axioms if not isinstance(a.content, Declaration)),
            "elements": len(diagram.elements),
            "inferred": len(inferred),
            "diagnostics": [str(d) for d in diagnostics],
        }

    def set_overrides(self, overrides: str) -> dict:
        state = self._require_state()
        lexicon = merge_overrides(build_lexicon(state.ontology), overrides)
        with self._lock:
            self._state = SessionState(
                state.ontology, lexicon, state.diagram, state.inferred, state.source, overrides
            )
        return {"entries": len(lexicon.entries)}

    def diagram_dict(self) -> dict:
        return diagram_to_dict(self._require_state().diagram)

    def lexicon_dict(self) -> dict:
        state = self._require_state()
        return {
            "entries": [
                {
                    "name": ref.name,
                    "kind": ref.kind.value,
                    "category": entry.category,
                    "forms": dict(entry.forms),
                }
                for ref, entry in sorted(state.lexicon.entries.items(), key=lambda kv: kv[0].name.lower())
            ]
        }

    def verbalize_element(
        self, element_id: str, scope: str = "direct", direct_reading: bool = False
    ) -> list[Sentence]:
        state = self._require_state()
        if scope not in SCOPES:
            raise ValueError(f"unknown scope {scope!r}")
        pairs = collect(state.diagram, state.ontology, state.inferred, element_id, scope)
        inferred_ids = {a.id for a, flagged in pairs if flagged}
        sentences = verbalize_axioms([a for a, _ in pairs], state.lexicon, inferred_ids)
        if direct_reading:
            for a, flagged in pairs:
                c = a.content
                if isinstance(c, SubClassOf) and isinstance(c.sup, AllValuesFrom):
                    sentences.extend(
                        verbalize_axiom(a, state.lexicon, inferred=flagged, paraphrase=False)
                    )
        return sentences

    def resolve_element(self, name: str) -> str:
        """Map an element id or an entity name to a diagram element id."""
        state = self._require_state()
        if state.diagram.has_element(name):
            return name
        for prefix in ("class", "edge", "ind"):
            candidate = f"{prefix}:{name}"
            if state.diagram.has_element(candidate):
                return candidate
        for e in state.diagram.elements:
            if e.labels.get("name") == name or e.labels.get("role") == name or e.labels.get("inverse_role") == name:
                return e.id
        raise ElementNotFoundError(f"no diagram element for {name!r}")

    def export_dictionary(self) -> dict:
        """Entity-grouped verbalization of the whole ontology. A sentence
        appears under every entity its axiom mentions, by design."""
        state = self._require_state()
        sections = []
        entities = [r for r in state.ontology.declarations if r.kind != EntityKind.DATATYPE]
        for ref in sorted(entities, key=lambda r: r.name.lower()):
            axioms = axioms_referencing(state.ontology, ref)
            sentences = verbalize_axioms(axioms, state.lexicon)
            sections.append(
                {
                    "entity": ref.name,
                    "kind": ref.kind.value,
                    "sentences": [sentence_to_dict(s) for s in sentences],
                }
            )
        return {"sections": sections}

    def dictionary_text(self) -> str:
        lines = []
        for section in self.export_dictionary()["sections"]:
            lines.append(f"== {section['entity']} ({section['kind']}) ==")
            for s in section["sentences"]:
                lines.append(f"  {s['text']}")
            lines.append("")
        return "\n".join(lines)


# --- HTTP layer ---------------------------------------------------------------

from pydantic import BaseModel


class LoadRequest(BaseModel):
    source: str
    lexicon: str = ""


class OverridesRequest(BaseModel):
    overrides: str


def create_app(workbench: Optional[Workbench] = None):
    from fastapi import FastAPI, HTTPException, Query
    from fastapi.middleware.cors import CORSMiddleware

    bench = workbench or Workbench()
    app = FastAPI(title="ontogloss", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.workbench = bench

    def guard(fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except NoSessionError as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        except ElementNotFoundError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/ontology")
    def load_ontology(body: LoadRequest):
        try:
            return bench.load(body.source, body.lexicon)
        except LoadError as exc:
            raise HTTPException(
                status_code=422,
                detail={"message": str(exc), "diagnostics": [str(d) for d in exc.diagnostics]},
            )

    @app.get("/diagram")
    def get_diagram():
        return guard(bench.diagram_dict)

    @app.get("/verbalize")
    def get_verbalization(
        element: str = Query(...),
        scope: str = Query("direct"),
        direct_reading: bool = Query(False),
    ):
        sentences = guard(bench.verbalize_element, element, scope, direct_reading)
        return {"element": element, "scope": scope, "sentences": [sentence_to_dict(s) for s in sentences]}

    @app.get("/dictionary")
    def get_dictionary():
        return guard(bench.export_dictionary)

    @app.get("/lexicon")
    def get_lexicon():
        return guard(bench.lexicon_dict)

    @app.put("/lexicon")
    def put_lexicon(body: OverridesRequest):
        try:
            return guard(bench.set_overrides, body.overrides)
        except LexiconError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    return app
