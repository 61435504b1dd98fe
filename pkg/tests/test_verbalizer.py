import random

import pytest

from helpers import CORPUS_LEXICON, random_sentence_axiom
from ontogloss.fixtures import fixture_ontology
from ontogloss.lexicon import LexiconError
from ontogloss.model import (
    AllValuesFrom,
    Axiom,
    Declaration,
    DisjointClasses,
    DisjointObjectProperties,
    EntityKind,
    EntityRef,
    EquivalentClasses,
    InverseObjectProperties,
    MaxCardinality,
    Named,
    ObjectPropertyDomain,
    PropertyExpression,
    SomeValuesFrom,
    SubClassOf,
    THING,
    normalize_axiom,
)
from ontogloss.verbalizer import axiom_sort_key, paraphrase_normalize, verbalize_axiom, verbalize_axioms


def C(name):
    return Named(EntityRef(EntityKind.CLASS, name))


def P(name, inverted=False):
    return PropertyExpression(EntityRef(EntityKind.OBJECT_PROPERTY, name), inverted)


@pytest.fixture(scope="module")
def mini():
    return fixture_ontology("mini-university")


class TestParaphraseNormalize:
    def test_inverse_only_restriction_becomes_existential(self):
        a = Axiom("9", SubClassOf(C("MandatoryCourse"), AllValuesFrom(P("teaches", True), C("Professor"))))
        out = paraphrase_normalize(a)
        assert out.id == "9"
        assert out.content == SubClassOf(SomeValuesFrom(P("teaches"), C("MandatoryCourse")), C("Professor"))

    def test_plain_only_restriction_swaps_to_the_inverse(self):
        a = Axiom("1", SubClassOf(C("A"), AllValuesFrom(P("likes"), C("B"))))
        out = paraphrase_normalize(a)
        assert out.content == SubClassOf(SomeValuesFrom(P("likes", True), C("A")), C("B"))

    def test_domain_becomes_existential_subclass(self):
        a = Axiom("1", ObjectPropertyDomain(P("likes"), C("Person")))
        assert paraphrase_normalize(a).content == SubClassOf(SomeValuesFrom(P("likes"), THING), C("Person"))

    def test_no_rule_passes_through(self):
        a = Axiom("1", SubClassOf(C("Student"), C("Person")))
        assert paraphrase_normalize(a) is a


class TestVerbalizeAxiom:
    def test_domain_sentence(self, mini):
        _, lex = fixture_ontology("simple-fragment")
        a = Axiom("1", ObjectPropertyDomain(P("likes"), C("Person")))
        (s,) = verbalize_axiom(a, lex)
        assert s.text == "Everything that likes something is a person."
        assert s.axiom_ids == ("1",) and not s.fallback and not s.inferred

    def test_cardinality_sentence(self, mini):
        _, lex = mini
        a = Axiom("1", SubClassOf(C("Teacher"), MaxCardinality(2, P("teaches"), C("Course"))))
        (s,) = verbalize_axiom(a, lex)
        assert s.text == "Every teacher teaches at most 2 courses."

    def test_disjoint_properties_sentence(self, mini):
        _, lex = mini
        a = Axiom("1", DisjointObjectProperties(P("takes").base, P("teaches").base))
        (s,) = verbalize_axiom(a, lex)
        assert s.text == "If X takes Y then it is false that X teaches Y."

    def test_equivalence_yields_both_directions(self, mini):
        _, lex = mini
        a = Axiom("1", EquivalentClasses((C("Course"), C("SimpleCourse"))))
        texts = [s.text for s in verbalize_axiom(a, lex)]
        assert texts == ["Every course is a simple course.", "Every simple course is a course."]

    def test_inverse_properties_yield_sentence_and_converse(self, mini):
        _, lex = mini
        a = Axiom("1", InverseObjectProperties(P("teaches").base, P("takes").base))
        texts = [s.text for s in verbalize_axiom(a, lex)]
        assert texts == [
            "If X teaches Y then Y takes X.",
            "If X takes Y then Y teaches X.",
        ]

    def test_nary_disjointness_expands_pairwise(self, mini):
        _, lex = mini
        a = Axiom("1", DisjointClasses((C("Assistant"), C("Docent"), C("Professor"))))
        texts = [s.text for s in verbalize_axiom(a, lex)]
        assert texts == [
            "No assistant is a docent.",
            "No assistant is a professor.",
            "No docent is a professor.",
        ]

    def test_fallback_carries_manchester_text_verbatim(self, mini):
        ontology, lex = mini
        from ontogloss.model import ComplementOf

        a = Axiom("1", SubClassOf(C("Course"), ComplementOf(C("Person"))))
        (s,) = verbalize_axiom(a, lex)
        assert s.fallback and s.text == "Course SubClassOf not Person"

    def test_missing_lexicon_entry_names_the_entity(self, mini):
        _, lex = mini
        a = Axiom("1", SubClassOf(C("Ghost"), C("Person")))
        with pytest.raises(LexiconError, match="Ghost"):
            verbalize_axiom(a, lex)

    def test_direct_reading_skips_the_paraphrase(self, mini):
        _, lex = mini
        a = Axiom("1", SubClassOf(C("MandatoryCourse"), AllValuesFrom(P("teaches", True), C("Professor"))))
        (s,) = verbalize_axiom(a, lex, paraphrase=False)
        assert s.text == "Every mandatory course is taught by nothing but professors."


class TestVerbalizeAxioms:
    def test_teaches_block_order_is_fixed(self, mini):
        ontology, lex = mini
        wanted = []
        for a in ontology.axioms:
            c = a.content
            if isinstance(c, (ObjectPropertyDomain,)) and c.prop.base.name == "teaches":
                wanted.append(a)
            elif type(c).__name__ == "ObjectPropertyRange" and c.prop.base.name == "teaches":
                wanted.append(a)
            elif isinstance(c, SubClassOf) and isinstance(c.sup, MaxCardinality):
                wanted.append(a)
            elif isinstance(c, DisjointObjectProperties):
                wanted.append(a)
        assert len(wanted) == 4
        expected = [
            "Every teacher teaches at most 2 courses.",
            "Everything that is taught by something is a course.",
            "Everything that teaches something is a teacher.",
            "If X takes Y then it is false that X teaches Y.",
        ]
        rng = random.Random(1)
        for _ in range(8):
            shuffled = list(wanted)
            rng.shuffle(shuffled)
            assert [s.text for s in verbalize_axioms(shuffled, lex)] == expected

    def test_empty_list(self, mini):
        assert verbalize_axioms([], mini[1]) == []

    def test_likes_block(self):
        ontology, lex = fixture_ontology("simple-fragment")
        axioms = [a for a in ontology.axioms if type(a.content).__name__.startswith("ObjectProperty")]
        texts = [s.text for s in verbalize_axioms(axioms, lex)]
        assert texts == [
            "Everything that likes something is a person.",
            "Everything that is liked by something is a person.",
        ]

    def test_inferred_flag_is_carried(self, mini):
        _, lex = mini
        a = Axiom("i1", SubClassOf(C("BigCourse"), C("Course")))
        (s,) = verbalize_axioms([a], lex, inferred_ids={"i1"})
        assert s.inferred and s.text == "Every big course is a course."

    def test_no_fallbacks_on_the_fixture(self, mini):
        ontology, lex = mini
        axioms = [a for a in ontology.axioms if not isinstance(a.content, Declaration)]
        sentences = verbalize_axioms(axioms, lex)
        assert sentences and all(not s.fallback for s in sentences)

    def test_sentence_shape_invariant_over_random_corpus(self):
        rng = random.Random(99)
        for i in range(300):
            a = Axiom(str(i + 1), random_sentence_axiom(rng))
            for s in verbalize_axiom(a, CORPUS_LEXICON):
                assert not s.fallback
                assert s.text.endswith(".")
                assert s.text[0].isupper()
                assert s.axiom_ids == (a.id,)

    def test_order_is_independent_of_input_permutation(self, mini):
        ontology, lex = mini
        axioms = [a for a in ontology.axioms if not isinstance(a.content, Declaration)]
        baseline = [s.text for s in verbalize_axioms(axioms, lex)]
        rng = random.Random(5)
        for _ in range(5):
            shuffled = list(axioms)
            rng.shuffle(shuffled)
            assert [s.text for s in verbalize_axioms(shuffled, lex)] == baseline

    def test_sort_key_ranks_types_in_presentation_order(self, mini):
        ontology, _ = mini
        ranked = sorted(ontology.axioms, key=axiom_sort_key)
        ranks = [axiom_sort_key(a)[0] for a in ranked]
        assert ranks == sorted(ranks)
