"""Bundled example ontologies with golden outputs, shared by the test suites.

Each fixture is a Manchester source file plus a lexicon override file and a
golden sentence file keyed by diagram element id. Axioms whose exact content
is documented are tagged "paper"; everything chosen while assembling the
example is tagged "reconstructed".
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from ..lexicon import Lexicon, build_lexicon, merge_overrides
from ..manchester import parse_ontology
from ..model import Ontology, OntologyError, functional, normalize_axiom

FIXTURE_NAMES = ("simple-fragment", "mini-university")

_FILES = {
    "simple-fragment": "simple_fragment",
    "mini-university": "mini_university",
}

# Axioms whose exact content is documented (quoted text, figure captions or
# explicit prose claims); everything else in the fixtures is a reconstruction.
_DOCUMENTED = {
    "ObjectPropertyDomain(likes Person)",
    "ObjectPropertyRange(likes Person)",
    "DataPropertyDomain(hasAge Person)",
    "DataPropertyRange(hasAge integer)",
    "ObjectPropertyDomain(teaches Teacher)",
    "ObjectPropertyRange(teaches Course)",
    "SubClassOf(Teacher ObjectMaxCardinality(2 teaches Course))",
    "DisjointObjectProperties(takes teaches)",
    "SubClassOf(MandatoryCourse ObjectAllValuesFrom(ObjectInverseOf(teaches) Professor))",
    "SubClassOf(Assistant Teacher)",
    "SubClassOf(Docent Teacher)",
    "SubClassOf(Professor Teacher)",
    "DisjointClasses(Assistant Docent Professor)",
    "DisjointClasses(Course Person)",
    "SubClassOf(Student ObjectExactCardinality(1 isEnrolledIn AcademicProgram))",
}

# Golden blocks that are verbatim quotes rather than derived outputs.
_QUOTED_GOLDEN = {
    "mini-university": {"edge:teaches", "restr:MandatoryCourse:teaches:Professor"},
    "simple-fragment": {"edge:likes"},
}


@dataclass(frozen=True)
class Fixture:
    name: str
    omn_source: str
    lex_source: str
    golden_sentences: Mapping[str, tuple[str, ...]]
    golden_provenance: Mapping[str, str]
    provenance: Mapping[str, str]  # axiom id -> "paper" | "reconstructed"


def _read(filename: str) -> str:
    return resources.files("ontogloss").joinpath("fixtures", filename).read_text("utf-8")


def _parse_golden(text: str) -> dict[str, tuple[str, ...]]:
    sections: dict[str, tuple[str, ...]] = {}
    current: str | None = None
    lines: list[str] = []
    for raw in text.splitlines():
        line = raw.rstrip()
        if line.startswith("[") and line.endswith("]"):
            if current is not None:
                sections[current] = tuple(lines)
            current = line[1:-1]
            lines = []
        elif line:
            lines.append(line)
    if current is not None:
        sections[current] = tuple(lines)
    return sections


def fixture(name: str) -> Fixture:
    if name not in _FILES:
        raise OntologyError(f"unknown fixture {name!r}; expected one of {FIXTURE_NAMES}")
    stem = _FILES[name]
    omn = _read(f"{stem}.omn")
    lex = _read(f"{stem}.lex")
    golden = _parse_golden(_read(f"golden/{stem}.txt"))
    ontology, diagnostics = parse_ontology(omn)
    if ontology is None:
        raise OntologyError(f"fixture {name} failed to parse: {diagnostics}")
    provenance = {
        a.id: "paper" if functional(normalize_axiom(a.content)) in _DOCUMENTED else "reconstructed"
        for a in ontology.axioms
    }
    quoted = _QUOTED_GOLDEN.get(name, set())
    golden_provenance = {k: ("paper" if k in quoted else "derived") for k in golden}
    return Fixture(name, omn, lex, golden, golden_provenance, provenance)


def fixture_ontology(name: str) -> tuple[Ontology, Lexicon]:
    """Parsed ontology plus merged lexicon for a fixture, for convenience."""
    f = fixture(name)
    ontology, _ = parse_ontology(f.omn_source)
    assert ontology is not None
    return ontology, merge_overrides(build_lexicon(ontology), f.lex_source)
