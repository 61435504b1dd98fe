"""Reads the controlled-English subset emitted by the verbalizer back into
axioms. This is a companion grammar, not a general CNL parser: it exists so
every generated sentence can be checked to mean exactly its source axiom.

Content words are resolved through the same lexicon the verbalizer used, with
longest-match lookup for multi-word surface forms. If two entities share a
surface form the reader still answers, but flags the result as ambiguous and
lists the candidates in the diagnostics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lexicon import COMMON_NOUN, COPULA_VERB, HAS_NOUN, Lexicon, PROPER_NAME, TRANSITIVE_VERB
from .model import (
    AllValuesFrom,
    Axiom,
    ClassAssertion,
    ClassExpression,
    DataPropertyAssertion,
    DataPropertyDomain,
    DisjointClasses,
    DisjointObjectProperties,
    EntityRef,
    ExactCardinality,
    IntersectionOf,
    InverseObjectProperties,
    Literal,
    MaxCardinality,
    MinCardinality,
    Named,
    ObjectPropertyAssertion,
    OntologyError,
    PropertyExpression,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    THING,
    Thing,
)


class AceReadError(OntologyError):
    pass


@dataclass(frozen=True)
class ReaderResult:
    axiom: Axiom
    confidence: str  # "exact" or "ambiguous"
    diagnostics: tuple[str, ...] = ()


_TOKEN_RE = re.compile(r"\"[^\"]*\"|'s\b|[A-Za-z]+|[0-9]+")

def _tokenize(text: str) -> list[str]:
    text = text.strip()
    if not text.endswith("."):
        raise AceReadError("sentence must end with '.'")
    return _TOKEN_RE.findall(text[:-1])


class _SurfaceIndex:
    """Reverse lexicon: surface token tuples back to entities."""

    def __init__(self, lex: Lexicon):
        self.nouns: dict[tuple[str, ...], list[tuple[EntityRef, bool]]] = {}
        self.verbs: dict[tuple[str, ...], list[tuple[EntityRef, str]]] = {}
        self.passives: dict[tuple[str, ...], list[EntityRef]] = {}
        self.propers: dict[tuple[str, ...], list[EntityRef]] = {}
        self.has_nouns: dict[tuple[str, ...], list[EntityRef]] = {}
        for ref, entry in lex.entries.items():
            if entry.category == COMMON_NOUN:
                self.nouns.setdefault(tuple(entry.form("sg").split()), []).append((ref, False))
                self.nouns.setdefault(tuple(entry.form("pl").split()), []).append((ref, True))
            elif entry.category == TRANSITIVE_VERB:
                self.verbs.setdefault(tuple(entry.form("vbz").split()), []).append((ref, TRANSITIVE_VERB))
                self.passives.setdefault(tuple(entry.form("vbp-passive").split()), []).append(ref)
            elif entry.category == COPULA_VERB:
                self.verbs.setdefault(tuple(entry.form("vbz").split()), []).append((ref, COPULA_VERB))
            elif entry.category == PROPER_NAME:
                key = tuple(w.lower() for w in entry.form("phrase").split())
                self.propers.setdefault(key, []).append(ref)
            elif entry.category == HAS_NOUN:
                self.has_nouns.setdefault(tuple(entry.form("sg").split()), []).append(ref)
        self.max_span = max(
            (len(k) for table in (self.nouns, self.verbs, self.passives, self.propers, self.has_nouns)
             for k in table),
            default=1,
        )


class _Reader:
    def __init__(self, tokens: list[str], index: _SurfaceIndex):
        self.tokens = [t.lower() if not t.startswith('"') else t for t in tokens]
        self.raw = tokens
        self.index = index
        self.pos = 0
        self.diagnostics: list[str] = []
        self.ambiguous = False

    # cursor

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else ""

    def take(self) -> str:
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, word: str) -> None:
        tok = self.take()
        if tok != word:
            raise AceReadError(f"expected {word!r}, found {tok or 'end of sentence'!r}")

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def fail_here(self, what: str) -> AceReadError:
        tok = self.peek() or "end of sentence"
        return AceReadError(f"expected {what}, found {tok!r}")

    # longest-match lookup

    def _match(self, table: dict, pos: int) -> tuple[list, int] | None:
        limit = min(self.index.max_span, len(self.tokens) - pos)
        for span in range(limit, 0, -1):
            key = tuple(self.tokens[pos : pos + span])
            if key in table:
                return table[key], span
        return None

    def _pick(self, candidates: list, surface_span: int):
        if len(candidates) > 1:
            self.ambiguous = True
            surface = " ".join(self.tokens[self.pos : self.pos + surface_span])
            names = ", ".join(sorted(self._name_of(c) for c in candidates))
            self.diagnostics.append(f"surface form {surface!r} is ambiguous between: {names}")
        return sorted(candidates, key=self._name_of)[0]

    @staticmethod
    def _name_of(candidate) -> str:
        ref = candidate[0] if isinstance(candidate, tuple) else candidate
        return ref.name

    def match_noun(self, *, plural: bool | None = None) -> Named | None:
        hit = self._match(self.index.nouns, self.pos)
        if hit is None:
            return None
        candidates, span = hit
        if plural is not None:
            candidates = [c for c in candidates if c[1] == plural]
            if not candidates:
                return None
        ref, _ = self._pick(candidates, span)
        self.pos += span
        return Named(ref)

    def match_verb(self) -> tuple[PropertyExpression, str] | None:
        hit = self._match(self.index.verbs, self.pos)
        if hit is None:
            return None
        candidates, span = hit
        ref, category = self._pick(candidates, span)
        self.pos += span
        return PropertyExpression(ref), category

    def match_passive_by(self) -> PropertyExpression | None:
        """Matches `is <participle> by` starting at the current "is"."""
        if self.peek() != "is":
            return None
        hit = self._match(self.index.passives, self.pos + 1)
        if hit is None:
            return None
        candidates, span = hit
        if self.peek(1 + span) != "by":
            return None
        ref = self._pick(candidates, span)
        self.pos += span + 2
        return PropertyExpression(ref, inverted=True)

    def match_proper(self) -> EntityRef | None:
        hit = self._match(self.index.propers, self.pos)
        if hit is None:
            return None
        candidates, span = hit
        ref = self._pick(candidates, span)
        self.pos += span
        return ref

    def match_has_noun(self) -> EntityRef | None:
        hit = self._match(self.index.has_nouns, self.pos)
        if hit is None:
            return None
        candidates, span = hit
        ref = self._pick(candidates, span)
        self.pos += span
        return ref

    # grammar

    def sentence(self):
        tok = self.peek()
        if tok == "every":
            self.take()
            head = self.match_noun(plural=False)
            if head is None:
                raise self.fail_here("a singular noun")
            sub = self.with_clauses(head)
            return SubClassOf(sub, self.vp())
        if tok == "everything":
            self.take()
            if self.peek() == "that":
                self.take()
                if self.peek() == "has" and self.peek(1) in ("a", "an"):
                    return self.data_domain()
                first = self.rc()
                clauses = [first] + self.clause_tail()
                sub = clauses[0] if len(clauses) == 1 else IntersectionOf(tuple(clauses))
                return SubClassOf(sub, self.vp())
            return SubClassOf(THING, self.vp())
        if tok == "no":
            self.take()
            left = self.match_noun(plural=False)
            if left is None:
                raise self.fail_here("a singular noun")
            right = self.vp()
            if not isinstance(right, Named):
                raise AceReadError("a 'No ... is ...' sentence needs a named class on both sides")
            return DisjointClasses((left, right))
        if tok == "if":
            return self.if_then()
        return self.assertion()

    def with_clauses(self, head: Named) -> ClassExpression:
        if self.peek() != "that":
            return head
        self.take()
        clauses = [self.rc()] + self.clause_tail()
        return IntersectionOf((head, *clauses))

    def clause_tail(self) -> list[ClassExpression]:
        out = []
        while self.peek() == "and" and self.peek(1) == "that":
            self.take()
            self.take()
            out.append(self.rc())
        return out

    def data_domain(self):
        self.expect("has")
        self.take()  # article
        prop = self.match_has_noun()
        if prop is None:
            raise self.fail_here("a data-property noun")
        return DataPropertyDomain(prop, self.vp())

    def if_then(self):
        self.expect("if")
        self.expect("x")
        first = self.match_verb()
        if first is None:
            raise self.fail_here("a verb")
        self.expect("y")
        self.expect("then")
        if self.peek() == "it":
            for word in ("it", "is", "false", "that", "x"):
                self.expect(word)
            second = self.match_verb()
            if second is None:
                raise self.fail_here("a verb")
            self.expect("y")
            return DisjointObjectProperties(first[0].base, second[0].base)
        pronoun = self.take()
        second = self.match_verb()
        if second is None:
            raise self.fail_here("a verb")
        if pronoun == "x":
            self.expect("y")
            return SubObjectPropertyOf(first[0], second[0])
        if pronoun == "y":
            self.expect("x")
            return InverseObjectProperties(first[0].base, second[0].base)
        raise AceReadError(f"expected 'X' or 'Y' after 'then', found {pronoun!r}")

    def assertion(self):
        subject = self.match_proper()
        if subject is None:
            raise self.fail_here("a sentence opener or proper name")
        if self.peek() == "'s":
            self.take()
            prop = self.match_has_noun()
            if prop is None:
                raise self.fail_here("a data-property noun")
            self.expect("is")
            return DataPropertyAssertion(prop, subject, self.literal())
        mark = self.pos
        verb = self.match_verb()
        if verb is not None:
            target = self.match_proper()
            if target is not None:
                if not self.at_end():
                    raise self.fail_here("end of sentence")
                return ObjectPropertyAssertion(verb[0].base, subject, target)
            self.pos = mark
        return ClassAssertion(self.vp(), subject)

    def literal(self) -> Literal:
        tok = self.take()
        if tok.isdigit():
            return Literal(int(tok))
        if tok.startswith('"'):
            return Literal(tok.strip('"'))
        raise AceReadError(f"expected a literal value, found {tok!r}")

    # verb phrases (predicates and relative clauses)

    def vp(self) -> ClassExpression:
        tok = self.peek()
        if tok == "is":
            if self.peek(1) == "something":
                self.take()
                self.take()
                if self.peek() == "that":
                    self.take()
                    clauses = [self.rc()] + self.clause_tail()
                    return clauses[0] if len(clauses) == 1 else IntersectionOf(tuple(clauses))
                return THING
            inverse = self.match_passive_by()
            if inverse is not None:
                return self.verb_object(inverse)
            copula = self.match_verb()
            if copula is not None:
                return self.verb_object(copula[0])
            if self.peek(1) in ("a", "an"):
                self.take()
                self.take()
                head = self.match_noun(plural=False)
                if head is None:
                    raise self.fail_here("a singular noun")
                return self.with_clauses(head)
            raise self.fail_here("a predicate after 'is'")
        verb = self.match_verb()
        if verb is not None:
            return self.verb_object(verb[0])
        raise self.fail_here("a verb phrase")

    def verb_object(self, prop: PropertyExpression) -> ClassExpression:
        tok = self.peek()
        if tok == "nothing":
            self.take()
            self.expect("but")
            return AllValuesFrom(prop, self.plural_filler())
        if tok in ("at", "exactly"):
            kind = self.take()
            if kind == "at":
                kind = self.take()  # least / most
                if kind not in ("least", "most"):
                    raise AceReadError(f"expected 'least' or 'most', found {kind!r}")
            n_tok = self.take()
            if not n_tok.isdigit():
                raise AceReadError(f"expected a number, found {n_tok!r}")
            n = int(n_tok)
            filler = self.counted_filler(n)
            cls = {"least": MinCardinality, "most": MaxCardinality, "exactly": ExactCardinality}[kind]
            return cls(n, prop, filler)
        return SomeValuesFrom(prop, self.np())

    def plural_filler(self) -> ClassExpression:
        if self.peek() == "things":
            self.take()
            return THING
        noun = self.match_noun(plural=True)
        if noun is None:
            raise self.fail_here("a plural noun")
        return noun

    def counted_filler(self, n: int) -> ClassExpression:
        if self.peek() in ("thing", "things"):
            self.take()
            return THING
        noun = self.match_noun(plural=n != 1)
        if noun is None:
            noun = self.match_noun()
        if noun is None:
            raise self.fail_here("a noun")
        return noun

    def np(self) -> ClassExpression:
        tok = self.peek()
        if tok == "something":
            self.take()
            if self.peek() == "that":
                self.take()
                clauses = [self.rc()] + self.clause_tail()
                return clauses[0] if len(clauses) == 1 else IntersectionOf(tuple(clauses))
            return THING
        if tok in ("a", "an"):
            self.take()
            noun = self.match_noun(plural=False)
            if noun is None:
                raise self.fail_here("a singular noun")
            return noun
        raise self.fail_here("a noun phrase")

    def rc(self) -> ClassExpression:
        tok = self.peek()
        if tok in ("something", "a", "an"):
            # object-gap relative clause: "<np> is enrolled in"
            filler = self.np()
            verb = self.match_verb()
            if verb is None or verb[1] != COPULA_VERB:
                raise self.fail_here("a copula verb phrase")
            return SomeValuesFrom(verb[0].inverse(), filler)
        return self.vp()


def read_sentence(text: str, lex: Lexicon) -> ReaderResult:
    """Parse one generated sentence back into an axiom. Raises AceReadError
    for sentences outside the emitted subset or with unknown surface forms."""
    tokens = _tokenize(text)
    if not tokens:
        raise AceReadError("empty sentence")
    reader = _Reader(tokens, _SurfaceIndex(lex))
    content = reader.sentence()
    if not reader.at_end():
        raise AceReadError(f"unexpected trailing words: {' '.join(reader.tokens[reader.pos:])!r}")
    return ReaderResult(
        Axiom("read", content),
        "ambiguous" if reader.ambiguous else "exact",
        tuple(reader.diagnostics),
    )
