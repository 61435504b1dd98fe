"""Axiom-to-sentence generation in the controlled-English subset.

Axioms are first rewritten into the paraphrase forms preferred for reading
(universal restrictions become existential ones over the inverse property, so
the determiner "only"/"nothing but" disappears), then rendered through a small
compositional grammar of noun phrases, verb phrases and relative clauses.
Anything the grammar cannot express is emitted as a fallback sentence carrying
the Manchester rendering verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence

from . import manchester
from .lexicon import (
    COPULA_VERB,
    HAS_NOUN,
    Lexicon,
    LexiconEntry,
    TRANSITIVE_VERB,
    indefinite_article,
)
from .model import (
    AllValuesFrom,
    Axiom,
    AxiomContent,
    ClassAssertion,
    ClassExpression,
    DataPropertyAssertion,
    DataPropertyDomain,
    DisjointClasses,
    DisjointObjectProperties,
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
    Thing,
)


@dataclass(frozen=True)
class Sentence:
    text: str
    axiom_ids: tuple[str, ...]
    inferred: bool = False
    rule: str = ""
    fallback: bool = False


class _Unverbalizable(Exception):
    """Raised internally when an expression falls outside the grammar."""


# --- paraphrase normalization -------------------------------------------------


def paraphrase_normalize(a: Axiom) -> Axiom:
    """Rewrite an axiom into the semantically equivalent form preferred for
    verbalization; axioms matching no rule pass through unchanged.

    Rules (each verified by the small-model oracle in the test suite):
      universal restrictions:  A < only(inv P).B  =>  some(P).A < B
                               A < only(P).B      =>  some(inv P).A < B
      property domain:         domain(P) = C      =>  some(P).Thing < C
      property range:          range(P) = C       =>  some(inv P).Thing < C
    """
    c = a.content
    if isinstance(c, SubClassOf) and isinstance(c.sup, AllValuesFrom):
        prop = c.sup.prop
        return Axiom(a.id, SubClassOf(SomeValuesFrom(prop.inverse(), c.sub), c.sup.filler))
    if isinstance(c, ObjectPropertyDomain):
        return Axiom(a.id, SubClassOf(SomeValuesFrom(c.prop, Thing()), c.domain))
    if isinstance(c, ObjectPropertyRange):
        return Axiom(a.id, SubClassOf(SomeValuesFrom(c.prop.inverse(), Thing()), c.range))
    return a


# --- phrase building ----------------------------------------------------------


class _PhraseBuilder:
    def __init__(self, lex: Lexicon):
        self.lex = lex

    def _entry(self, ref: EntityRef) -> LexiconEntry:
        return self.lex.entry(ref)

    def noun(self, expr: Named, plural: bool = False) -> list[str]:
        return self._entry(expr.entity).form("pl" if plural else "sg").split()

    def noun_with_article(self, expr: Named) -> list[str]:
        sg = self._entry(expr.entity).form("sg")
        return [indefinite_article(sg)] + sg.split()

    def verb(self, prop: PropertyExpression) -> tuple[str, list[str]]:
        """(category, third-person-singular tokens) for a property base."""
        entry = self._entry(prop.base)
        if entry.category not in (TRANSITIVE_VERB, COPULA_VERB):
            raise _Unverbalizable(f"{prop.base.name} is not verb-like")
        return entry.category, entry.form("vbz").split()

    def passive(self, prop: PropertyExpression) -> list[str]:
        entry = self._entry(prop.base)
        if entry.category != TRANSITIVE_VERB:
            raise _Unverbalizable(f"{prop.base.name} has no passive form")
        return entry.form("vbp-passive").split()

    # noun phrase in object position: "something", "a course",
    # "something that ..."

    def np(self, expr: ClassExpression) -> list[str]:
        if isinstance(expr, Thing):
            return ["something"]
        if isinstance(expr, Named):
            return self.noun_with_article(expr)
        return ["something", "that"] + self.rc(expr)

    def counted_np(self, n: int, expr: ClassExpression) -> list[str]:
        if isinstance(expr, Thing):
            return ["thing" if n == 1 else "things"]
        if isinstance(expr, Named):
            return self.noun(expr, plural=n != 1)
        raise _Unverbalizable("counted noun phrases need a named class")

    def plural_np(self, expr: ClassExpression) -> list[str]:
        if isinstance(expr, Thing):
            return ["things"]
        if isinstance(expr, Named):
            return self.noun(expr, plural=True)
        raise _Unverbalizable("'nothing but' needs a named class")

    # predicate: "is a course", "teaches something", "is taught by ...",
    # "is a course that ..."

    def vp(self, expr: ClassExpression) -> list[str]:
        if isinstance(expr, Thing):
            return ["is", "something"]
        if isinstance(expr, Named):
            return ["is"] + self.noun_with_article(expr)
        if isinstance(expr, SomeValuesFrom):
            category, vbz = self.verb(expr.prop)
            if not expr.prop.inverted:
                return vbz + self.np(expr.filler)
            if category == TRANSITIVE_VERB:
                return ["is"] + self.passive(expr.prop) + ["by"] + self.np(expr.filler)
            # inverse of a copula phrase: object-gap relative clause
            return ["is", "something", "that"] + self.rc(expr)
        if isinstance(expr, AllValuesFrom):
            category, vbz = self.verb(expr.prop)
            if not expr.prop.inverted:
                return vbz + ["nothing", "but"] + self.plural_np(expr.filler)
            return ["is"] + self.passive(expr.prop) + ["by", "nothing", "but"] + self.plural_np(expr.filler)
        if isinstance(expr, (MinCardinality, MaxCardinality, ExactCardinality)):
            words = {
                MinCardinality: ["at", "least"],
                MaxCardinality: ["at", "most"],
                ExactCardinality: ["exactly"],
            }[type(expr)]
            category, vbz = self.verb(expr.prop)
            counted = self.counted_np(expr.n, expr.filler)
            if not expr.prop.inverted:
                return vbz + words + [str(expr.n)] + counted
            return ["is"] + self.passive(expr.prop) + ["by"] + words + [str(expr.n)] + counted
        if isinstance(expr, IntersectionOf):
            head = next((o for o in expr.operands if isinstance(o, Named)), None)
            rest = [o for o in expr.operands if o is not head]
            clauses: list[str] = []
            for i, operand in enumerate(rest):
                clauses += (["and", "that"] if i else ["that"]) + self.rc(operand)
            if head is None:
                return ["is", "something"] + clauses
            return ["is"] + self.noun_with_article(head) + clauses
        raise _Unverbalizable(f"no predicate form for {type(expr).__name__}")

    # relative clause body following "that": a vp, or an object-gap clause
    # for inverses of copula phrases ("that something is enrolled in")

    def rc(self, expr: ClassExpression) -> list[str]:
        if isinstance(expr, SomeValuesFrom) and expr.prop.inverted:
            category, vbz = self.verb(expr.prop)
            if category == COPULA_VERB:
                return self.np(expr.filler) + vbz
        return self.vp(expr)

    # sentence subject: ("every", noun...) or ("everything that", clause...)

    def subject(self, expr: ClassExpression) -> list[str]:
        if isinstance(expr, Thing):
            return ["everything"]
        if isinstance(expr, Named):
            return ["every"] + self.noun(expr)
        if isinstance(expr, IntersectionOf):
            head = next((o for o in expr.operands if isinstance(o, Named)), None)
            if head is None:
                raise _Unverbalizable("subject intersection needs a named head")
            rest = [o for o in expr.operands if o is not head]
            tokens = ["every"] + self.noun(head)
            for i, operand in enumerate(rest):
                tokens += (["and", "that"] if i else ["that"]) + self.rc(operand)
            return tokens
        return ["everything", "that"] + self.rc(expr)


def _finish(tokens: Sequence[str]) -> str:
    text = " ".join(tokens)
    return text[0].upper() + text[1:] + "."


# --- axiom verbalization -------------------------------------------------------


def verbalize_axiom(
    a: Axiom,
    lex: Lexicon,
    *,
    inferred: bool = False,
    paraphrase: bool = True,
) -> list[Sentence]:
    """Sentences for one axiom. Most axiom types yield a single sentence;
    equivalences, inverse-property axioms and n-ary disjointness expand into
    one sentence per direction or pair. Unsupported shapes yield one fallback
    sentence carrying the Manchester text."""
    if paraphrase:
        a = paraphrase_normalize(a)
    b = _PhraseBuilder(lex)
    ids = (a.id,)
    c = a.content

    def sentence(tokens: list[str], rule: str) -> Sentence:
        return Sentence(_finish(tokens), ids, inferred, rule)

    try:
        if isinstance(c, SubClassOf):
            return [sentence(b.subject(c.sub) + b.vp(c.sup), "subclass")]
        if isinstance(c, EquivalentClasses):
            out = []
            first = c.operands[0]
            for other in c.operands[1:]:
                out.append(sentence(b.subject(first) + b.vp(other), "equivalent-classes"))
                out.append(sentence(b.subject(other) + b.vp(first), "equivalent-classes"))
            return out
        if isinstance(c, DisjointClasses):
            if not all(isinstance(o, Named) for o in c.operands):
                raise _Unverbalizable("disjointness over complex expressions")
            out = []
            for i in range(len(c.operands)):
                for j in range(i + 1, len(c.operands)):
                    tokens = ["no"] + b.noun(c.operands[i]) + b.vp(c.operands[j])
                    out.append(sentence(tokens, "disjoint-classes"))
            return out
        if isinstance(c, DisjointObjectProperties):
            _, p = b.verb(PropertyExpression(c.first))
            _, q = b.verb(PropertyExpression(c.second))
            tokens = ["if", "X"] + p + ["Y", "then", "it", "is", "false", "that", "X"] + q + ["Y"]
            return [sentence(tokens, "disjoint-properties")]
        if isinstance(c, InverseObjectProperties):
            out = []
            for first, second in ((c.first, c.second), (c.second, c.first)):
                _, p = b.verb(PropertyExpression(first))
                _, q = b.verb(PropertyExpression(second))
                tokens = ["if", "X"] + p + ["Y", "then", "Y"] + q + ["X"]
                out.append(sentence(tokens, "inverse-properties"))
            return out
        if isinstance(c, SubObjectPropertyOf):
            if c.sub.inverted or c.sup.inverted:
                raise _Unverbalizable("sub-property with an inverse side")
            _, p = b.verb(c.sub)
            _, q = b.verb(c.sup)
            tokens = ["if", "X"] + p + ["Y", "then", "X"] + q + ["Y"]
            return [sentence(tokens, "sub-property")]
        if isinstance(c, EquivalentObjectProperties):
            out = []
            first = c.operands[0]
            for other in c.operands[1:]:
                for sub, sup in ((first, other), (other, first)):
                    _, p = b.verb(PropertyExpression(sub))
                    _, q = b.verb(PropertyExpression(sup))
                    tokens = ["if", "X"] + p + ["Y", "then", "X"] + q + ["Y"]
                    out.append(sentence(tokens, "equivalent-properties"))
            return out
        if isinstance(c, ClassAssertion):
            phrase = lex.entry(c.individual).form("phrase").split()
            return [sentence(phrase + b.vp(c.expr), "class-assertion")]
        if isinstance(c, ObjectPropertyAssertion):
            _, vbz = b.verb(PropertyExpression(c.prop))
            subject = lex.entry(c.subject).form("phrase").split()
            target = lex.entry(c.object).form("phrase").split()
            return [sentence(subject + vbz + target, "property-assertion")]
        if isinstance(c, DataPropertyAssertion):
            entry = lex.entry(c.prop)
            if entry.category != HAS_NOUN:
                raise _Unverbalizable("data assertion for a non-hasX property")
            subject = lex.entry(c.subject).form("phrase").split()
            subject[-1] += "'s"
            return [sentence(subject + entry.form("sg").split() + ["is", _literal_token(c.value)], "data-assertion")]
        if isinstance(c, DataPropertyDomain):
            entry = lex.entry(c.prop)
            if entry.category != HAS_NOUN:
                raise _Unverbalizable("domain of a non-hasX data property")
            noun = entry.form("sg")
            tokens = ["everything", "that", "has", indefinite_article(noun)] + noun.split()
            return [sentence(tokens + b.vp(c.domain), "data-domain")]
        raise _Unverbalizable(type(c).__name__)
    except _Unverbalizable:
        return [Sentence(manchester.render_manchester(c), ids, inferred, "fallback-manchester", fallback=True)]


def _literal_token(lit: Literal) -> str:
    return str(lit.value) if isinstance(lit.value, int) else f'"{lit.value}"'


# --- ordering and list verbalization -------------------------------------------

# Presentation order by axiom type. Domain and range axioms share a rank on
# purpose: within an association, their relative order follows the ontology.
_TYPE_RANK = {
    SubClassOf: 0,
    ObjectPropertyRange: 1,
    ObjectPropertyDomain: 1,
    InverseObjectProperties: 2,
    DisjointObjectProperties: 3,
    DisjointClasses: 4,
    EquivalentClasses: 5,
    ClassAssertion: 6,
    ObjectPropertyAssertion: 7,
    DataPropertyAssertion: 8,
}
_OTHER_RANK = 9


def _id_key(axiom_id: str) -> tuple[int, ...]:
    if axiom_id.isdigit():
        return (0, int(axiom_id))
    if axiom_id[:1] == "i" and axiom_id[1:].isdigit():
        return (1, int(axiom_id[1:]))
    return (2,) + tuple(ord(ch) for ch in axiom_id)


def axiom_sort_key(a: Axiom) -> tuple:
    return (_TYPE_RANK.get(type(a.content), _OTHER_RANK), _id_key(a.id))


def verbalize_axioms(
    axioms: Iterable[Axiom],
    lex: Lexicon,
    inferred_ids: AbstractSet[str] = frozenset(),
) -> list[Sentence]:
    """Verbalize a set of axioms in the fixed presentation order: sorted by
    axiom type, ties broken by axiom id. Independent of input order."""
    out: list[Sentence] = []
    for a in sorted(axioms, key=axiom_sort_key):
        out.extend(verbalize_axiom(a, lex, inferred=a.id in inferred_ids))
    return out
