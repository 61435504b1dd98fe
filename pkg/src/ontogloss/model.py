"""Core OWL vocabulary: entities, class expressions, axioms, ontologies.

Everything in this module is an immutable value. Ontologies are replaced
wholesale, never mutated, so they are safe to share across request handlers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence, Union

DEFAULT_NAMESPACE = "http://example.org/ontology#"
OWL_NAMESPACE = "http://www.w3.org/2002/07/owl#"
XSD_NAMESPACE = "http://www.w3.org/2001/XMLSchema#"


class OntologyError(Exception):
    """Base class for errors raised by the ontology layer."""


class EntityNotFoundError(OntologyError):
    """An entity name was used that is not declared in the ontology."""


class EntityKind(str, Enum):
    CLASS = "Class"
    OBJECT_PROPERTY = "ObjectProperty"
    DATA_PROPERTY = "DataProperty"
    INDIVIDUAL = "NamedIndividual"
    DATATYPE = "Datatype"


@dataclass(frozen=True)
class EntityRef:
    """A named entity. Identity within an ontology is the (kind, iri) pair."""

    kind: EntityKind
    name: str
    iri: str = ""

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("entity name must be non-empty")
        if not self.iri:
            object.__setattr__(self, "iri", DEFAULT_NAMESPACE + self.name)


THING_REF = EntityRef(EntityKind.CLASS, "Thing", OWL_NAMESPACE + "Thing")
NOTHING_REF = EntityRef(EntityKind.CLASS, "Nothing", OWL_NAMESPACE + "Nothing")

BUILTIN_DATATYPES: Mapping[str, EntityRef] = {
    name: EntityRef(EntityKind.DATATYPE, name, XSD_NAMESPACE + name)
    for name in ("integer", "string", "boolean", "decimal", "float")
}


@dataclass(frozen=True)
class PropertyExpression:
    """An object property or its inverse. Double inversion never nests."""

    base: EntityRef
    inverted: bool = False

    def inverse(self) -> "PropertyExpression":
        return PropertyExpression(self.base, not self.inverted)


class ClassExpression:
    """Marker base for the class-expression variants below."""

    __slots__ = ()


@dataclass(frozen=True)
class Named(ClassExpression):
    entity: EntityRef


@dataclass(frozen=True)
class Thing(ClassExpression):
    pass


@dataclass(frozen=True)
class Nothing(ClassExpression):
    pass


@dataclass(frozen=True)
class IntersectionOf(ClassExpression):
    operands: tuple[ClassExpression, ...]

    def __post_init__(self) -> None:
        if len(self.operands) < 2:
            raise ValueError("IntersectionOf requires at least 2 operands")


@dataclass(frozen=True)
class UnionOf(ClassExpression):
    operands: tuple[ClassExpression, ...]

    def __post_init__(self) -> None:
        if len(self.operands) < 2:
            raise ValueError("UnionOf requires at least 2 operands")


@dataclass(frozen=True)
class ComplementOf(ClassExpression):
    operand: ClassExpression


@dataclass(frozen=True)
class SomeValuesFrom(ClassExpression):
    prop: PropertyExpression
    filler: ClassExpression


@dataclass(frozen=True)
class AllValuesFrom(ClassExpression):
    prop: PropertyExpression
    filler: ClassExpression


@dataclass(frozen=True)
class MinCardinality(ClassExpression):
    n: int
    prop: PropertyExpression
    filler: ClassExpression

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class MaxCardinality(ClassExpression):
    n: int
    prop: PropertyExpression
    filler: ClassExpression

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class ExactCardinality(ClassExpression):
    n: int
    prop: PropertyExpression
    filler: ClassExpression

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


THING = Thing()
NOTHING = Nothing()

_CARDINALITIES = (MinCardinality, MaxCardinality, ExactCardinality)
_RESTRICTIONS = (SomeValuesFrom, AllValuesFrom) + _CARDINALITIES


@dataclass(frozen=True)
class Literal:
    """An integer or string value, optionally tagged with a datatype name."""

    value: Union[int, str]
    datatype: str = ""


# --- axiom payloads ---------------------------------------------------------


class AxiomContent:
    """Marker base for axiom payloads; an Axiom pairs one with a stable id."""

    __slots__ = ()


@dataclass(frozen=True)
class SubClassOf(AxiomContent):
    sub: ClassExpression
    sup: ClassExpression


@dataclass(frozen=True)
class EquivalentClasses(AxiomContent):
    operands: tuple[ClassExpression, ...]


@dataclass(frozen=True)
class DisjointClasses(AxiomContent):
    operands: tuple[ClassExpression, ...]


@dataclass(frozen=True)
class ObjectPropertyDomain(AxiomContent):
    prop: PropertyExpression
    domain: ClassExpression


@dataclass(frozen=True)
class ObjectPropertyRange(AxiomContent):
    prop: PropertyExpression
    range: ClassExpression


@dataclass(frozen=True)
class DataPropertyDomain(AxiomContent):
    prop: EntityRef
    domain: ClassExpression


@dataclass(frozen=True)
class DataPropertyRange(AxiomContent):
    prop: EntityRef
    datatype: EntityRef


@dataclass(frozen=True)
class InverseObjectProperties(AxiomContent):
    first: EntityRef
    second: EntityRef


@dataclass(frozen=True)
class SubObjectPropertyOf(AxiomContent):
    sub: PropertyExpression
    sup: PropertyExpression


@dataclass(frozen=True)
class EquivalentObjectProperties(AxiomContent):
    operands: tuple[EntityRef, ...]


@dataclass(frozen=True)
class DisjointObjectProperties(AxiomContent):
    first: EntityRef
    second: EntityRef


@dataclass(frozen=True)
class ClassAssertion(AxiomContent):
    expr: ClassExpression
    individual: EntityRef


@dataclass(frozen=True)
class ObjectPropertyAssertion(AxiomContent):
    prop: EntityRef
    subject: EntityRef
    object: EntityRef


@dataclass(frozen=True)
class DataPropertyAssertion(AxiomContent):
    prop: EntityRef
    subject: EntityRef
    value: Literal


@dataclass(frozen=True)
class Declaration(AxiomContent):
    entity: EntityRef


@dataclass(frozen=True)
class Axiom:
    """One ontology statement with a stable, session-unique identifier."""

    id: str
    content: AxiomContent


@dataclass(frozen=True)
class Ontology:
    declarations: tuple[EntityRef, ...]
    axioms: tuple[Axiom, ...]
    annotations: Mapping[EntityRef, str] = field(default_factory=dict)

    def entity(self, name: str) -> EntityRef:
        for ref in self.declarations:
            if ref.name == name:
                return ref
        if name == THING_REF.name:
            return THING_REF
        if name == NOTHING_REF.name:
            return NOTHING_REF
        if name in BUILTIN_DATATYPES:
            return BUILTIN_DATATYPES[name]
        raise EntityNotFoundError(f"entity not declared: {name}")

    def has_entity(self, name: str) -> bool:
        try:
            self.entity(name)
        except EntityNotFoundError:
            return False
        return True

    def axiom(self, axiom_id: str) -> Axiom:
        for a in self.axioms:
            if a.id == axiom_id:
                return a
        raise OntologyError(f"no axiom with id {axiom_id!r}")

    def declared(self, *kinds: EntityKind) -> tuple[EntityRef, ...]:
        if not kinds:
            return self.declarations
        return tuple(r for r in self.declarations if r.kind in kinds)


EMPTY_ONTOLOGY = Ontology((), ())


# --- functional-style rendering ---------------------------------------------
#
# One axiom per line; the canonical serialization used by the sort keys, the
# structural-equality tests and the fixture dumps. Byte-stable: rendering a
# normalized value twice yields identical text.


def functional(x) -> str:
    if isinstance(x, EntityRef):
        return x.name
    if isinstance(x, PropertyExpression):
        return f"ObjectInverseOf({x.base.name})" if x.inverted else x.base.name
    if isinstance(x, Literal):
        if isinstance(x.value, int):
            body = str(x.value)
        else:
            body = '"%s"' % x.value
        return f"{body}^^{x.datatype}" if x.datatype else body
    if isinstance(x, Named):
        return x.entity.name
    if isinstance(x, Thing):
        return "owl:Thing"
    if isinstance(x, Nothing):
        return "owl:Nothing"
    if isinstance(x, IntersectionOf):
        return "ObjectIntersectionOf(%s)" % " ".join(functional(o) for o in x.operands)
    if isinstance(x, UnionOf):
        return "ObjectUnionOf(%s)" % " ".join(functional(o) for o in x.operands)
    if isinstance(x, ComplementOf):
        return "ObjectComplementOf(%s)" % functional(x.operand)
    if isinstance(x, SomeValuesFrom):
        return "ObjectSomeValuesFrom(%s %s)" % (functional(x.prop), functional(x.filler))
    if isinstance(x, AllValuesFrom):
        return "ObjectAllValuesFrom(%s %s)" % (functional(x.prop), functional(x.filler))
    if isinstance(x, MinCardinality):
        return "ObjectMinCardinality(%d %s %s)" % (x.n, functional(x.prop), functional(x.filler))
    if isinstance(x, MaxCardinality):
        return "ObjectMaxCardinality(%d %s %s)" % (x.n, functional(x.prop), functional(x.filler))
    if isinstance(x, ExactCardinality):
        return "ObjectExactCardinality(%d %s %s)" % (x.n, functional(x.prop), functional(x.filler))
    if isinstance(x, Axiom):
        return functional(x.content)
    if isinstance(x, SubClassOf):
        return "SubClassOf(%s %s)" % (functional(x.sub), functional(x.sup))
    if isinstance(x, EquivalentClasses):
        return "EquivalentClasses(%s)" % " ".join(functional(o) for o in x.operands)
    if isinstance(x, DisjointClasses):
        return "DisjointClasses(%s)" % " ".join(functional(o) for o in x.operands)
    if isinstance(x, ObjectPropertyDomain):
        return "ObjectPropertyDomain(%s %s)" % (functional(x.prop), functional(x.domain))
    if isinstance(x, ObjectPropertyRange):
        return "ObjectPropertyRange(%s %s)" % (functional(x.prop), functional(x.range))
    if isinstance(x, DataPropertyDomain):
        return "DataPropertyDomain(%s %s)" % (x.prop.name, functional(x.domain))
    if isinstance(x, DataPropertyRange):
        return "DataPropertyRange(%s %s)" % (x.prop.name, x.datatype.name)
    if isinstance(x, InverseObjectProperties):
        return "InverseObjectProperties(%s %s)" % (x.first.name, x.second.name)
    if isinstance(x, SubObjectPropertyOf):
        return "SubObjectPropertyOf(%s %s)" % (functional(x.sub), functional(x.sup))
    if isinstance(x, EquivalentObjectProperties):
        return "EquivalentObjectProperties(%s)" % " ".join(o.name for o in x.operands)
    if isinstance(x, DisjointObjectProperties):
        return "DisjointObjectProperties(%s %s)" % (x.first.name, x.second.name)
    if isinstance(x, ClassAssertion):
        return "ClassAssertion(%s %s)" % (functional(x.expr), x.individual.name)
    if isinstance(x, ObjectPropertyAssertion):
        return "ObjectPropertyAssertion(%s %s %s)" % (x.prop.name, x.subject.name, x.object.name)
    if isinstance(x, DataPropertyAssertion):
        return "DataPropertyAssertion(%s %s %s)" % (x.prop.name, x.subject.name, functional(x.value))
    if isinstance(x, Declaration):
        return "Declaration(%s(%s))" % (x.entity.kind.value, x.entity.name)
    raise TypeError(f"cannot render {type(x).__name__}")


def dump_axioms(axioms: Iterable[Axiom]) -> str:
    """Line-based dump of normalized axioms, one per line."""
    return "\n".join(functional(normalize_axiom(a.content)) for a in axioms) + "\n"


# --- normalization ----------------------------------------------------------


def normalize_expression(e: ClassExpression) -> ClassExpression:
    """Canonical form: flatten nested intersections/unions, sort operand
    lists by their serialized form, drop double complements. Idempotent."""
    if isinstance(e, Named):
        if e.entity == THING_REF:
            return THING
        if e.entity == NOTHING_REF:
            return NOTHING
        return e
    if isinstance(e, (Thing, Nothing)):
        return e
    if isinstance(e, (IntersectionOf, UnionOf)):
        flat: list[ClassExpression] = []
        for op in e.operands:
            op = normalize_expression(op)
            if isinstance(op, type(e)):
                flat.extend(op.operands)
            else:
                flat.append(op)
        unique = sorted(set(flat), key=functional)
        if len(unique) == 1:
            return unique[0]
        return type(e)(tuple(unique))
    if isinstance(e, ComplementOf):
        inner = normalize_expression(e.operand)
        if isinstance(inner, ComplementOf):
            return inner.operand
        return ComplementOf(inner)
    if isinstance(e, (SomeValuesFrom, AllValuesFrom)):
        return type(e)(e.prop, normalize_expression(e.filler))
    if isinstance(e, _CARDINALITIES):
        return type(e)(e.n, e.prop, normalize_expression(e.filler))
    raise TypeError(f"not a class expression: {type(e).__name__}")


def normalize_axiom(c: AxiomContent) -> AxiomContent:
    """Canonical payload used for structural equality and duplicate checks.

    Operand order of the symmetric axiom types is irrelevant, so their
    operand lists are sorted here.
    """
    if isinstance(c, SubClassOf):
        return SubClassOf(normalize_expression(c.sub), normalize_expression(c.sup))
    if isinstance(c, (EquivalentClasses, DisjointClasses)):
        ops = sorted((normalize_expression(o) for o in c.operands), key=functional)
        return type(c)(tuple(ops))
    if isinstance(c, ObjectPropertyDomain):
        return ObjectPropertyDomain(c.prop, normalize_expression(c.domain))
    if isinstance(c, ObjectPropertyRange):
        return ObjectPropertyRange(c.prop, normalize_expression(c.range))
    if isinstance(c, DataPropertyDomain):
        return DataPropertyDomain(c.prop, normalize_expression(c.domain))
    if isinstance(c, (InverseObjectProperties, DisjointObjectProperties)):
        a, b = sorted((c.first, c.second), key=lambda r: r.name)
        return type(c)(a, b)
    if isinstance(c, EquivalentObjectProperties):
        return EquivalentObjectProperties(tuple(sorted(c.operands, key=lambda r: r.name)))
    if isinstance(c, ClassAssertion):
        return ClassAssertion(normalize_expression(c.expr), c.individual)
    return c


def structurally_equal(a: AxiomContent, b: AxiomContent) -> bool:
    return normalize_axiom(a) == normalize_axiom(b)


# --- entity mentions --------------------------------------------------------


def _expr_entities(e: ClassExpression) -> Iterator[EntityRef]:
    if isinstance(e, Named):
        yield e.entity
    elif isinstance(e, (IntersectionOf, UnionOf)):
        for op in e.operands:
            yield from _expr_entities(op)
    elif isinstance(e, ComplementOf):
        yield from _expr_entities(e.operand)
    elif isinstance(e, (SomeValuesFrom, AllValuesFrom)):
        yield e.prop.base
        yield from _expr_entities(e.filler)
    elif isinstance(e, _CARDINALITIES):
        yield e.prop.base
        yield from _expr_entities(e.filler)


def mentioned_entities(c: AxiomContent) -> tuple[EntityRef, ...]:
    """Every entity occurring anywhere in the axiom, in tree order."""
    out: list[EntityRef] = []

    def push(it: Iterable[EntityRef]) -> None:
        for ref in it:
            if ref not in out:
                out.append(ref)

    if isinstance(c, SubClassOf):
        push(_expr_entities(c.sub))
        push(_expr_entities(c.sup))
    elif isinstance(c, (EquivalentClasses, DisjointClasses)):
        for op in c.operands:
            push(_expr_entities(op))
    elif isinstance(c, ObjectPropertyDomain):
        push([c.prop.base])
        push(_expr_entities(c.domain))
    elif isinstance(c, ObjectPropertyRange):
        push([c.prop.base])
        push(_expr_entities(c.range))
    elif isinstance(c, DataPropertyDomain):
        push([c.prop])
        push(_expr_entities(c.domain))
    elif isinstance(c, DataPropertyRange):
        push([c.prop, c.datatype])
    elif isinstance(c, (InverseObjectProperties, DisjointObjectProperties)):
        push([c.first, c.second])
    elif isinstance(c, SubObjectPropertyOf):
        push([c.sub.base, c.sup.base])
    elif isinstance(c, EquivalentObjectProperties):
        push(c.operands)
    elif isinstance(c, ClassAssertion):
        push(_expr_entities(c.expr))
        push([c.individual])
    elif isinstance(c, ObjectPropertyAssertion):
        push([c.prop, c.subject, c.object])
    elif isinstance(c, DataPropertyAssertion):
        push([c.prop, c.subject])
    elif isinstance(c, Declaration):
        push([c.entity])
    return tuple(out)


def axioms_referencing(o: Ontology, e: EntityRef) -> list[Axiom]:
    """All non-declaration axioms whose expression tree mentions `e`, in
    ontology order. Raises EntityNotFoundError for undeclared entities."""
    if e not in o.declarations and e not in (THING_REF, NOTHING_REF):
        raise EntityNotFoundError(f"entity not declared: {e.name}")
    return [
        a
        for a in o.axioms
        if not isinstance(a.content, Declaration) and e in mentioned_entities(a.content)
    ]


# --- construction helper ----------------------------------------------------


def build_ontology(
    contents: Sequence[AxiomContent],
    extra_declarations: Sequence[EntityRef] = (),
) -> Ontology:
    """Assemble an ontology from axiom payloads, declaring every mentioned
    entity and assigning sequential ids. Structural duplicates are dropped."""
    declarations: list[EntityRef] = []

    def declare(ref: EntityRef) -> None:
        if ref in (THING_REF, NOTHING_REF) or ref.kind == EntityKind.DATATYPE:
            return
        if ref not in declarations:
            declarations.append(ref)

    for ref in extra_declarations:
        declare(ref)
    for c in contents:
        for ref in mentioned_entities(c):
            declare(ref)

    axioms: list[Axiom] = []
    seen: set[AxiomContent] = set()
    counter = 0

    def append(c: AxiomContent) -> None:
        nonlocal counter
        key = normalize_axiom(c)
        if key in seen:
            return
        seen.add(key)
        counter += 1
        axioms.append(Axiom(str(counter), c))

    for ref in declarations:
        append(Declaration(ref))
    for c in contents:
        if not isinstance(c, Declaration):
            append(c)
    return Ontology(tuple(declarations), tuple(axioms))
