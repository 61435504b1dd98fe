"""Shared random generators for the property suites.

Two corpora with different jobs:

* random_sentence_axiom: axioms the verbalizer turns into exactly one
  non-fallback sentence (depth <= 2 over the mini-university entity pool,
  restricted to the grammar's single-sentence fragment). Used for the
  CNL round-trip property.
* random_any_axiom / random_ontology: unconstrained axiom shapes including
  unions, complements and n-ary forms. Used for Manchester round-trips and
  the diagram coverage property.
"""

from __future__ import annotations

import random

from ontogloss.lexicon import build_lexicon
from ontogloss.model import (
    AllValuesFrom,
    AxiomContent,
    ClassAssertion,
    ClassExpression,
    ComplementOf,
    DataPropertyAssertion,
    DataPropertyDomain,
    DataPropertyRange,
    DisjointClasses,
    DisjointObjectProperties,
    EntityKind,
    EntityRef,
    EquivalentClasses,
    EquivalentObjectProperties,
    ExactCardinality,
    IntersectionOf,
    InverseObjectProperties,
    Literal,
    MaxCardinality,
    MinCardinality,
    Named,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    PropertyExpression,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    THING,
    UnionOf,
    build_ontology,
)

CLASS_NAMES = (
    "Person", "Student", "Teacher", "Assistant", "Docent", "Professor",
    "Course", "MandatoryCourse", "SimpleCourse", "BigCourse", "AcademicProgram",
)
VERB_PROP_NAMES = ("teaches", "takes", "likes", "hasEnrolled")
COPULA_PROP_NAMES = ("isEnrolledIn",)
INDIVIDUAL_NAMES = ("Alice", "Bob", "ComputerScience")
DATA_PROP_NAMES = ("hasAge", "hasTitle")

CLASSES = tuple(EntityRef(EntityKind.CLASS, n) for n in CLASS_NAMES)
VERB_PROPS = tuple(EntityRef(EntityKind.OBJECT_PROPERTY, n) for n in VERB_PROP_NAMES)
COPULA_PROPS = tuple(EntityRef(EntityKind.OBJECT_PROPERTY, n) for n in COPULA_PROP_NAMES)
ALL_PROPS = VERB_PROPS + COPULA_PROPS
INDIVIDUALS = tuple(EntityRef(EntityKind.INDIVIDUAL, n) for n in INDIVIDUAL_NAMES)
DATA_PROPS = tuple(EntityRef(EntityKind.DATA_PROPERTY, n) for n in DATA_PROP_NAMES)

CORPUS_ONTOLOGY = build_ontology(
    [], extra_declarations=CLASSES + ALL_PROPS + INDIVIDUALS + DATA_PROPS
)
CORPUS_LEXICON = build_lexicon(CORPUS_ONTOLOGY)


def _named(rng: random.Random) -> Named:
    return Named(rng.choice(CLASSES))


def _prop(rng: random.Random, *, allow_inverted: bool = True, allow_copula: bool = True) -> PropertyExpression:
    pool = ALL_PROPS if allow_copula else VERB_PROPS
    base = rng.choice(pool)
    inverted = allow_inverted and rng.random() < 0.3
    return PropertyExpression(base, inverted)


def _simple_filler(rng: random.Random) -> ClassExpression:
    return THING if rng.random() < 0.3 else _named(rng)


def _prop_no_inverted_copula(rng: random.Random) -> PropertyExpression:
    """Cardinalities and 'nothing but' have no object-gap form, so inverses
    of copula phrases are excluded there."""
    base = rng.choice(ALL_PROPS)
    if base in COPULA_PROPS:
        return PropertyExpression(base, False)
    return PropertyExpression(base, rng.random() < 0.3)


def sentence_expression(rng: random.Random, depth: int) -> ClassExpression:
    """A class expression inside the verbalizer's single-sentence fragment."""
    if depth <= 0 or rng.random() < 0.35:
        return _simple_filler(rng)
    kind = rng.randrange(5)
    if kind == 0:
        prop = _prop(rng)
        if prop.inverted and prop.base in COPULA_PROPS:
            # object-gap clause; filler stays simple to keep the grammar flat
            return SomeValuesFrom(prop, _simple_filler(rng))
        return SomeValuesFrom(prop, sentence_expression(rng, depth - 1))
    if kind == 1:
        return AllValuesFrom(_prop_no_inverted_copula(rng), _simple_filler(rng))
    if kind == 2:
        cls = rng.choice((MinCardinality, MaxCardinality, ExactCardinality))
        n = rng.choice((0, 1, 2, 3, 100))
        return cls(n, _prop_no_inverted_copula(rng), _simple_filler(rng))
    if kind == 3 and depth >= 2:
        clauses = [restriction_only(rng, 1) for _ in range(rng.choice((1, 2)))]
        return IntersectionOf((_named(rng), *clauses))
    return _named(rng)


def restriction_only(rng: random.Random, depth: int) -> ClassExpression:
    restrictions = (SomeValuesFrom, AllValuesFrom, MinCardinality, MaxCardinality, ExactCardinality)
    while True:
        expr = sentence_expression(rng, depth)
        if isinstance(expr, restrictions):
            return expr


def random_sentence_axiom(rng: random.Random) -> AxiomContent:
    """An axiom that verbalizes to exactly one non-fallback sentence."""
    kind = rng.randrange(9)
    if kind == 0:
        sub = sentence_expression(rng, 2)
        while isinstance(sub, IntersectionOf) and not any(isinstance(o, Named) for o in sub.operands):
            sub = sentence_expression(rng, 2)
        return SubClassOf(sub, sentence_expression(rng, 2))
    if kind == 1:
        # exercises the only-paraphrase on every verbalization
        return SubClassOf(_named(rng), AllValuesFrom(_prop(rng), _named(rng)))
    if kind == 2:
        return ObjectPropertyDomain(_prop(rng), sentence_expression(rng, 1))
    if kind == 3:
        return ObjectPropertyRange(_prop(rng), sentence_expression(rng, 1))
    if kind == 4:
        a, b = rng.sample(CLASSES, 2)
        return DisjointClasses((Named(a), Named(b)))
    if kind == 5:
        p, q = rng.sample(ALL_PROPS, 2)
        return DisjointObjectProperties(p, q)
    if kind == 6:
        p, q = rng.sample(ALL_PROPS, 2)
        return SubObjectPropertyOf(PropertyExpression(p), PropertyExpression(q))
    if kind == 7:
        return ClassAssertion(sentence_expression(rng, 2), rng.choice(INDIVIDUALS))
    if rng.random() < 0.5:
        s, o = rng.choice(INDIVIDUALS), rng.choice(INDIVIDUALS)
        return ObjectPropertyAssertion(rng.choice(ALL_PROPS), s, o)
    return DataPropertyAssertion(DATA_PROPS[0], rng.choice(INDIVIDUALS), Literal(rng.randrange(200)))


def any_expression(rng: random.Random, depth: int) -> ClassExpression:
    """Unconstrained class expression, including unions and complements."""
    if depth <= 0 or rng.random() < 0.3:
        return _simple_filler(rng)
    kind = rng.randrange(7)
    if kind == 0:
        return SomeValuesFrom(_prop(rng), any_expression(rng, depth - 1))
    if kind == 1:
        return AllValuesFrom(_prop(rng), any_expression(rng, depth - 1))
    if kind == 2:
        cls = rng.choice((MinCardinality, MaxCardinality, ExactCardinality))
        return cls(rng.randrange(4), _prop(rng), any_expression(rng, depth - 1))
    if kind == 3:
        ops = tuple(any_expression(rng, depth - 1) for _ in range(rng.choice((2, 3))))
        return IntersectionOf(ops)
    if kind == 4:
        ops = tuple(any_expression(rng, depth - 1) for _ in range(rng.choice((2, 3))))
        return UnionOf(ops)
    if kind == 5:
        return ComplementOf(any_expression(rng, depth - 1))
    return _named(rng)


def random_any_axiom(rng: random.Random) -> AxiomContent:
    kind = rng.randrange(13)
    if kind == 0:
        return SubClassOf(any_expression(rng, 2), any_expression(rng, 2))
    if kind == 1:
        ops = tuple(any_expression(rng, 1) for _ in range(rng.choice((2, 3))))
        return EquivalentClasses(ops)
    if kind == 2:
        ops = tuple(any_expression(rng, 1) for _ in range(rng.choice((2, 3))))
        return DisjointClasses(ops)
    if kind == 3:
        return ObjectPropertyDomain(_prop(rng), any_expression(rng, 1))
    if kind == 4:
        return ObjectPropertyRange(_prop(rng), any_expression(rng, 1))
    if kind == 5:
        return DataPropertyDomain(rng.choice(DATA_PROPS), any_expression(rng, 1))
    if kind == 6:
        from ontogloss.model import BUILTIN_DATATYPES

        return DataPropertyRange(rng.choice(DATA_PROPS), BUILTIN_DATATYPES["integer"])
    if kind == 7:
        p, q = rng.sample(ALL_PROPS, 2)
        return InverseObjectProperties(p, q)
    if kind == 8:
        return SubObjectPropertyOf(_prop(rng), _prop(rng))
    if kind == 9:
        p, q = rng.sample(ALL_PROPS, 2)
        return rng.choice((DisjointObjectProperties(p, q), EquivalentObjectProperties((p, q))))
    if kind == 10:
        return ClassAssertion(any_expression(rng, 1), rng.choice(INDIVIDUALS))
    if kind == 11:
        return ObjectPropertyAssertion(rng.choice(ALL_PROPS), rng.choice(INDIVIDUALS), rng.choice(INDIVIDUALS))
    value = Literal(rng.randrange(100)) if rng.random() < 0.7 else Literal("text value")
    return DataPropertyAssertion(rng.choice(DATA_PROPS), rng.choice(INDIVIDUALS), value)


def random_ontology(rng: random.Random, max_axioms: int = 12):
    contents = [random_any_axiom(rng) for _ in range(rng.randrange(1, max_axioms + 1))]
    return build_ontology(contents, extra_declarations=CLASSES + ALL_PROPS + INDIVIDUALS + DATA_PROPS)
