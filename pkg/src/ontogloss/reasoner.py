"""Structural inference and a brute-force model-enumeration oracle.

The inference side is a fixed-point closure of four rules over named classes:
subclass transitivity, subclass extraction from intersection equivalences,
class-assertion propagation along the subclass order, and domain/range typing
of property assertions. That is deliberately all of it; anything deeper is out
of scope.

The oracle side enumerates every interpretation over tiny domains (bitmask
class extensions, bitmask property relations) to decide semantic equivalence
or entailment. It exists to machine-check the verbalizer's paraphrase rules
and the inferences above, so it must stay independent of both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .model import (
    AllValuesFrom,
    Axiom,
    AxiomContent,
    ClassAssertion,
    ClassExpression,
    ComplementOf,
    Declaration,
    DisjointClasses,
    DisjointObjectProperties,
    EntityKind,
    EntityRef,
    EquivalentClasses,
    EquivalentObjectProperties,
    ExactCardinality,
    IntersectionOf,
    InverseObjectProperties,
    MaxCardinality,
    MinCardinality,
    Named,
    Nothing,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Ontology,
    OntologyError,
    PropertyExpression,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    Thing,
    UnionOf,
    mentioned_entities,
    normalize_axiom,
)

RULE_TRANSITIVITY = "subclass-transitivity"
RULE_EQUIVALENCE = "equivalence-intersection"
RULE_ASSERTION = "assertion-propagation"
RULE_TYPING = "domain-range-typing"


@dataclass(frozen=True)
class InferredAxiom:
    axiom: Axiom
    rule: str
    premises: tuple[str, ...]


def infer(o: Ontology) -> list[InferredAxiom]:
    """Fixed-point closure of the four structural rules. The result never
    repeats an asserted axiom and is duplicate-free."""
    asserted = {normalize_axiom(a.content) for a in o.axioms}
    derived: dict[AxiomContent, InferredAxiom] = {}
    counter = 0

    def add(content: AxiomContent, rule: str, premises: Sequence[str]) -> bool:
        nonlocal counter
        key = normalize_axiom(content)
        if key in asserted or key in derived:
            return False
        counter += 1
        derived[key] = InferredAxiom(Axiom(f"i{counter}", content), rule, tuple(premises))
        return True

    # (sub, sup) -> supporting axiom id, over named classes only
    subclass: dict[tuple[EntityRef, EntityRef], str] = {}
    assertions: dict[tuple[EntityRef, EntityRef], str] = {}  # (class, individual) -> id

    for a in o.axioms:
        c = a.content
        if isinstance(c, SubClassOf) and isinstance(c.sub, Named) and isinstance(c.sup, Named):
            subclass.setdefault((c.sub.entity, c.sup.entity), a.id)
        elif isinstance(c, ClassAssertion) and isinstance(c.expr, Named):
            assertions.setdefault((c.expr.entity, c.individual), a.id)
        elif isinstance(c, EquivalentClasses):
            named = [op for op in c.operands if isinstance(op, Named)]
            intersections = [op for op in c.operands if isinstance(op, IntersectionOf)]
            for left in named:
                for inter in intersections:
                    for part in inter.operands:
                        if isinstance(part, Named) and part.entity != left.entity:
                            if add(SubClassOf(left, part), RULE_EQUIVALENCE, [a.id]):
                                subclass.setdefault((left.entity, part.entity), f"i{counter}")

    # R4: domain/range typing of property assertions
    for a in o.axioms:
        c = a.content
        if not isinstance(c, ObjectPropertyAssertion):
            continue
        for b in o.axioms:
            d = b.content
            if isinstance(d, ObjectPropertyDomain) and d.prop.base == c.prop and isinstance(d.domain, Named):
                target = c.object if d.prop.inverted else c.subject
                if add(ClassAssertion(d.domain, target), RULE_TYPING, [a.id, b.id]):
                    assertions.setdefault((d.domain.entity, target), f"i{counter}")
            elif isinstance(d, ObjectPropertyRange) and d.prop.base == c.prop and isinstance(d.range, Named):
                target = c.subject if d.prop.inverted else c.object
                if add(ClassAssertion(d.range, target), RULE_TYPING, [a.id, b.id]):
                    assertions.setdefault((d.range.entity, target), f"i{counter}")

    # R1 + R3 to fixed point
    changed = True
    while changed:
        changed = False
        for (a1, b1), id1 in list(subclass.items()):
            for (a2, b2), id2 in list(subclass.items()):
                if b1 == a2 and a1 != b2:
                    if add(SubClassOf(Named(a1), Named(b2)), RULE_TRANSITIVITY, [id1, id2]):
                        subclass[(a1, b2)] = f"i{counter}"
                        changed = True
        for (cls, ind), id1 in list(assertions.items()):
            for (sub, sup), id2 in list(subclass.items()):
                if sub == cls:
                    if add(ClassAssertion(Named(sup), ind), RULE_ASSERTION, [id1, id2]):
                        assertions[(sup, ind)] = f"i{counter}"
                        changed = True

    return sorted(derived.values(), key=lambda inf: int(inf.axiom.id[1:]))


# --- small-model oracle --------------------------------------------------------


class SmallModelError(OntologyError):
    """The requested interpretation space is too large to enumerate."""


_MAX_CLASSES = 4
_MAX_PROPERTIES = 3
_MAX_DOMAIN = 4
_MAX_INTERPRETATIONS = 1 << 26


def _signature(contents: Iterable[AxiomContent]):
    classes: list[EntityRef] = []
    props: list[EntityRef] = []
    individuals: list[EntityRef] = []
    for content in contents:
        for ref in mentioned_entities(content):
            if ref.kind == EntityKind.CLASS and ref.name not in ("Thing", "Nothing"):
                if ref not in classes:
                    classes.append(ref)
            elif ref.kind == EntityKind.OBJECT_PROPERTY:
                if ref not in props:
                    props.append(ref)
            elif ref.kind == EntityKind.INDIVIDUAL:
                if ref not in individuals:
                    individuals.append(ref)
            elif ref.kind == EntityKind.DATA_PROPERTY:
                raise SmallModelError("data properties are outside the oracle's semantics")
    return classes, props, individuals


class _Interpretations:
    """All interpretations of a fixed signature over a domain of size n.

    Property relations are vectorized: one numpy axis ranges over every
    possible combination of relation bitmasks, class extensions and individual
    assignments are enumerated by the caller.
    """

    def __init__(self, n: int, props: Sequence[EntityRef]):
        self.n = n
        self.full = (1 << n) - 1
        bits = n * n
        count = 1 << (bits * len(props))
        idx = np.arange(count, dtype=np.int64)
        self.rel: dict[EntityRef, np.ndarray] = {}
        self.rows: dict[EntityRef, list[np.ndarray]] = {}
        self.inv_rows: dict[EntityRef, list[np.ndarray]] = {}
        mask = (1 << bits) - 1
        for k, p in enumerate(props):
            rel = (idx >> (bits * k)) & mask
            self.rel[p] = rel
            self.rows[p] = [(rel >> (x * n)) & self.full for x in range(n)]
            inv = []
            for x in range(n):
                col = np.zeros_like(rel)
                for y in range(n):
                    col |= ((rel >> (y * n + x)) & 1) << y
                inv.append(col)
            self.inv_rows[p] = inv
        self.pop = np.array([bin(v).count("1") for v in range(1 << n)], dtype=np.int64)

    def row(self, prop: PropertyExpression, x: int) -> np.ndarray:
        table = self.inv_rows if prop.inverted else self.rows
        return table[prop.base][x]

    def extension(self, e: ClassExpression, classes: dict[EntityRef, int]):
        if isinstance(e, Named):
            return classes[e.entity]
        if isinstance(e, Thing):
            return self.full
        if isinstance(e, Nothing):
            return 0
        if isinstance(e, IntersectionOf):
            out = self.full
            for op in e.operands:
                out = out & self.extension(op, classes)
            return out
        if isinstance(e, UnionOf):
            out = 0
            for op in e.operands:
                out = out | self.extension(op, classes)
            return out
        if isinstance(e, ComplementOf):
            return self.full ^ self.extension(e.operand, classes)
        filler = self.extension(e.filler, classes)
        if isinstance(e, SomeValuesFrom):
            out = 0
            for x in range(self.n):
                out = out | (((self.row(e.prop, x) & filler) != 0).astype(np.int64) << x)
            return out
        if isinstance(e, AllValuesFrom):
            out = 0
            for x in range(self.n):
                out = out | (((self.row(e.prop, x) & (self.full ^ filler)) == 0).astype(np.int64) << x)
            return out
        if isinstance(e, (MinCardinality, MaxCardinality, ExactCardinality)):
            out = 0
            for x in range(self.n):
                count = self.pop[self.row(e.prop, x) & filler]
                if isinstance(e, MinCardinality):
                    hit = count >= e.n
                elif isinstance(e, MaxCardinality):
                    hit = count <= e.n
                else:
                    hit = count == e.n
                out = out | (hit.astype(np.int64) << x)
            return out
        raise SmallModelError(f"unsupported expression {type(e).__name__}")

    def satisfied(self, c: AxiomContent, classes: dict[EntityRef, int], inds: dict[EntityRef, int]):
        if isinstance(c, SubClassOf):
            sub = self.extension(c.sub, classes)
            sup = self.extension(c.sup, classes)
            return (sub & (self.full ^ sup)) == 0
        if isinstance(c, EquivalentClasses):
            exts = [self.extension(op, classes) for op in c.operands]
            out = True
            for other in exts[1:]:
                out = out & (exts[0] == other)
            return out
        if isinstance(c, DisjointClasses):
            exts = [self.extension(op, classes) for op in c.operands]
            out = True
            for i in range(len(exts)):
                for j in range(i + 1, len(exts)):
                    out = out & ((exts[i] & exts[j]) == 0)
            return out
        if isinstance(c, ObjectPropertyDomain):
            target = self.extension(c.domain, classes)
            out = True
            for x in range(self.n):
                occupied = self.row(c.prop, x) != 0
                out = out & (~occupied | (((target >> x) & 1) == 1))
            return out
        if isinstance(c, ObjectPropertyRange):
            target = self.extension(c.range, classes)
            out = True
            for x in range(self.n):
                occupied = self.row(c.prop.inverse(), x) != 0
                out = out & (~occupied | (((target >> x) & 1) == 1))
            return out
        if isinstance(c, InverseObjectProperties):
            out = True
            for x in range(self.n):
                out = out & (self.rows[c.second][x] == self.inv_rows[c.first][x])
            return out
        if isinstance(c, SubObjectPropertyOf):
            out = True
            for x in range(self.n):
                sub = self.row(c.sub, x)
                sup = self.row(c.sup, x)
                return_mask = sub & (self.full ^ sup)
                out = out & (return_mask == 0)
            return out
        if isinstance(c, EquivalentObjectProperties):
            out = True
            first = self.rel[c.operands[0]]
            for other in c.operands[1:]:
                out = out & (first == self.rel[other])
            return out
        if isinstance(c, DisjointObjectProperties):
            return (self.rel[c.first] & self.rel[c.second]) == 0
        if isinstance(c, ClassAssertion):
            ext = self.extension(c.expr, classes)
            return ((ext >> inds[c.individual]) & 1) == 1
        if isinstance(c, ObjectPropertyAssertion):
            bit = inds[c.subject] * self.n + inds[c.object]
            return ((self.rel[c.prop] >> bit) & 1) == 1
        if isinstance(c, Declaration):
            return True
        raise SmallModelError(f"unsupported axiom {type(c).__name__}")


def _contents(axioms: Iterable[Axiom | AxiomContent]) -> list[AxiomContent]:
    return [a.content if isinstance(a, Axiom) else a for a in axioms]


def _check_bounds(n_classes: int, n_props: int, n_inds: int, max_domain: int) -> None:
    if n_classes > _MAX_CLASSES or n_props > _MAX_PROPERTIES or max_domain > _MAX_DOMAIN:
        raise SmallModelError(
            f"signature too large: {n_classes} classes, {n_props} properties, domain {max_domain}"
        )
    n = max_domain
    total = (1 << (n * n_classes)) * (1 << (n * n * n_props)) * (n ** n_inds)
    if total > _MAX_INTERPRETATIONS:
        raise SmallModelError(f"interpretation space too large ({total} interpretations)")


def _assignments(n: int, classes, individuals):
    for class_masks in itertools.product(range(1 << n), repeat=len(classes)):
        class_env = dict(zip(classes, class_masks))
        for ind_elems in itertools.product(range(n), repeat=len(individuals)):
            yield class_env, dict(zip(individuals, ind_elems))


def small_model_equivalent(a: Axiom | AxiomContent, b: Axiom | AxiomContent, max_domain: int) -> bool:
    """True iff `a` and `b` are satisfied by exactly the same interpretations
    over every domain of size 1..max_domain."""
    ca, cb = _contents([a, b])
    classes, props, individuals = _signature([ca, cb])
    _check_bounds(len(classes), len(props), len(individuals), max_domain)
    for n in range(1, max_domain + 1):
        interp = _Interpretations(n, props)
        for class_env, ind_env in _assignments(n, classes, individuals):
            sat_a = interp.satisfied(ca, class_env, ind_env)
            sat_b = interp.satisfied(cb, class_env, ind_env)
            if np.any(sat_a != sat_b):
                return False
    return True


def small_model_entails(
    premises: Sequence[Axiom | AxiomContent],
    conclusion: Axiom | AxiomContent,
    max_domain: int,
) -> bool:
    """True iff every interpretation over domains of size 1..max_domain that
    satisfies all premises also satisfies the conclusion."""
    prems = _contents(premises)
    (concl,) = _contents([conclusion])
    classes, props, individuals = _signature(prems + [concl])
    _check_bounds(len(classes), len(props), len(individuals), max_domain)
    for n in range(1, max_domain + 1):
        interp = _Interpretations(n, props)
        for class_env, ind_env in _assignments(n, classes, individuals):
            holds = True
            for p in prems:
                holds = holds & interp.satisfied(p, class_env, ind_env)
            bad = holds & ~np.asarray(interp.satisfied(concl, class_env, ind_env))
            if np.any(bad):
                return False
    return True
