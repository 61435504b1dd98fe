import random

import pytest

from helpers import CORPUS_LEXICON, random_sentence_axiom
from ontogloss.fixtures import fixture_ontology
from ontogloss.lexicon import Lexicon, LexiconEntry, COMMON_NOUN
from ontogloss.model import (
    Axiom,
    EntityKind,
    EntityRef,
    Named,
    PropertyExpression,
    SomeValuesFrom,
    SubClassOf,
    THING,
    functional,
    normalize_axiom,
)
from ontogloss.reader import AceReadError, read_sentence
from ontogloss.verbalizer import paraphrase_normalize, verbalize_axiom


@pytest.fixture(scope="module")
def lex():
    return fixture_ontology("mini-university")[1]


class TestReadSentence:
    def test_existential_subject(self, lex):
        r = read_sentence("Everything that teaches something is a teacher.", lex)
        teaches = PropertyExpression(EntityRef(EntityKind.OBJECT_PROPERTY, "teaches"))
        want = SubClassOf(SomeValuesFrom(teaches, THING), Named(EntityRef(EntityKind.CLASS, "Teacher")))
        assert normalize_axiom(r.axiom.content) == normalize_axiom(want)
        assert r.confidence == "exact"

    def test_reflexive_subclass(self, lex):
        r = read_sentence("Every teacher is a teacher.", lex)
        teacher = Named(EntityRef(EntityKind.CLASS, "Teacher"))
        assert normalize_axiom(r.axiom.content) == normalize_axiom(SubClassOf(teacher, teacher))

    def test_inverts_the_verbalizer_on_the_restriction_sentence(self, lex):
        teaches = PropertyExpression(EntityRef(EntityKind.OBJECT_PROPERTY, "teaches"))
        want = SubClassOf(
            SomeValuesFrom(teaches, Named(EntityRef(EntityKind.CLASS, "MandatoryCourse"))),
            Named(EntityRef(EntityKind.CLASS, "Professor")),
        )
        (s,) = verbalize_axiom(Axiom("1", want), lex)
        assert s.text == "Everything that teaches a mandatory course is a professor."
        r = read_sentence(s.text, lex)
        assert normalize_axiom(r.axiom.content) == normalize_axiom(want)

    def test_unknown_surface_form_is_an_error(self, lex):
        with pytest.raises(AceReadError):
            read_sentence("Every wizard is a teacher.", lex)

    def test_unparseable_sentence_names_the_unmatched_token(self, lex):
        with pytest.raises(AceReadError, match="perhaps"):
            read_sentence("Every teacher perhaps teaches something.", lex)

    def test_sentence_must_end_with_a_period(self, lex):
        with pytest.raises(AceReadError, match="'\\.'"):
            read_sentence("Every teacher is a person", lex)

    def test_ambiguous_surface_form_is_flagged(self):
        course = EntityRef(EntityKind.CLASS, "Course")
        unit = EntityRef(EntityKind.CLASS, "CourseUnit")
        entries = {
            course: LexiconEntry(course, COMMON_NOUN, {"sg": "course", "pl": "courses"}),
            unit: LexiconEntry(unit, COMMON_NOUN, {"sg": "course", "pl": "courses"}),
        }
        r = read_sentence("Every course is a course.", Lexicon(entries))
        assert r.confidence == "ambiguous"
        assert any("ambiguous" in d for d in r.diagnostics)

    def test_round_trip_over_random_corpus(self):
        rng = random.Random(20250811)
        for i in range(500):
            a = Axiom(str(i + 1), random_sentence_axiom(rng))
            (s,) = verbalize_axiom(a, CORPUS_LEXICON)
            assert not s.fallback, functional(a.content)
            r = read_sentence(s.text, CORPUS_LEXICON)
            want = normalize_axiom(paraphrase_normalize(a).content)
            got = normalize_axiom(r.axiom.content)
            assert got == want, (s.text, functional(want), functional(got))

    def test_lexical_closure_on_fixture_sentences(self, lex):
        ontology, _ = fixture_ontology("mini-university")
        from ontogloss.model import Declaration

        for a in ontology.axioms:
            if isinstance(a.content, Declaration):
                continue
            for s in verbalize_axiom(a, lex):
                if not s.fallback:
                    read_sentence(s.text, lex)  # must not raise
