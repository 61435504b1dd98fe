"""Manchester-syntax frontend: frame parser, expression parser, renderer.

The grammar is the frame subset (Class:, ObjectProperty:, DataProperty:,
Individual:, Datatype:) plus standalone infix axiom lines, which is what the
renderer emits. Entities must be declared by a frame before they can be used
in an expression; references to unknown names are reported as errors, not
auto-declared.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .model import (
    AllValuesFrom,
    Axiom,
    AxiomContent,
    BUILTIN_DATATYPES,
    ClassAssertion,
    ClassExpression,
    ComplementOf,
    DataPropertyAssertion,
    DataPropertyDomain,
    DataPropertyRange,
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
    Literal,
    MaxCardinality,
    MinCardinality,
    Named,
    NOTHING,
    NOTHING_REF,
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
    THING,
    THING_REF,
    Thing,
    UnionOf,
    normalize_axiom,
)


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    severity: str  # "error" or "warning"
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class ManchesterParseError(OntologyError):
    def __init__(self, diagnostics: list[ParseDiagnostic]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


FRAME_KEYWORDS = {
    "Class": EntityKind.CLASS,
    "ObjectProperty": EntityKind.OBJECT_PROPERTY,
    "DataProperty": EntityKind.DATA_PROPERTY,
    "Individual": EntityKind.INDIVIDUAL,
    "Datatype": EntityKind.DATATYPE,
}

SLOT_KEYWORDS = {
    "SubClassOf",
    "EquivalentTo",
    "DisjointWith",
    "Domain",
    "Range",
    "InverseOf",
    "SubPropertyOf",
    "Characteristics",
    "Types",
    "Facts",
}

SECTION_KEYWORDS = {
    "DisjointClasses",
    "EquivalentClasses",
    "DisjointProperties",
    "EquivalentProperties",
}

INFIX_KEYWORDS = {
    "SubClassOf",
    "EquivalentTo",
    "DisjointWith",
    "Domain",
    "Range",
    "InverseOf",
    "SubPropertyOf",
    "Types",
    "Facts",
}

QUANTIFIERS = {"some", "only", "min", "max", "exactly"}


# --- tokenizer ---------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # NAME INT STRING ( ) , : ^^ EOF
    text: str
    line: int
    col: int


def _tokenize(source: str) -> tuple[list[_Token], list[ParseDiagnostic]]:
    tokens: list[_Token] = []
    diags: list[ParseDiagnostic] = []
    line, col = 1, 1
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] in "_-"):
                j += 1
            tokens.append(_Token("NAME", source[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(_Token("INT", source[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch == '"':
            j = i + 1
            while j < n and source[j] != '"':
                if source[j] == "\n":
                    break
                j += 1
            if j >= n or source[j] != '"':
                diags.append(ParseDiagnostic(start_line, start_col, "error", "unterminated string literal"))
                i = j
                continue
            tokens.append(_Token("STRING", source[i + 1 : j], start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if source.startswith("^^", i):
            tokens.append(_Token("^^", "^^", start_line, start_col))
            i += 2
            col += 2
            continue
        if ch in "(),:":
            tokens.append(_Token(ch, ch, start_line, start_col))
            i += 1
            col += 1
            continue
        diags.append(ParseDiagnostic(start_line, start_col, "error", f"unexpected character {ch!r}"))
        i += 1
        col += 1
    tokens.append(_Token("EOF", "", line, col))
    return tokens, diags


# --- parser ------------------------------------------------------------------


class _ParseFail(Exception):
    pass


class _Parser:
    def __init__(self, tokens: list[_Token], diagnostics: list[ParseDiagnostic]):
        self.tokens = tokens
        self.pos = 0
        self.diagnostics = diagnostics
        self.declared: dict[str, EntityRef] = {}
        self.axioms: list[Axiom] = []
        self._seen: set[AxiomContent] = set()
        self._next_id = 0

    # cursor helpers

    def peek(self, offset: int = 0) -> _Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def at_keyword(self, word: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok.kind == "NAME" and tok.text == word

    def error(self, tok: _Token, message: str) -> _ParseFail:
        self.diagnostics.append(ParseDiagnostic(tok.line, tok.col, "error", message))
        return _ParseFail()

    def warn(self, tok: _Token, message: str) -> None:
        self.diagnostics.append(ParseDiagnostic(tok.line, tok.col, "warning", message))

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise self.error(tok, f"expected {what}, found {tok.text or 'end of input'!r}")
        return self.advance()

    def emit(self, content: AxiomContent, tok: Optional[_Token] = None) -> None:
        key = normalize_axiom(content)
        if key in self._seen:
            if tok is not None:
                self.warn(tok, "duplicate axiom ignored")
            return
        self._seen.add(key)
        self._next_id += 1
        self.axioms.append(Axiom(str(self._next_id), content))

    # declaration pass

    def collect_declarations(self) -> None:
        for i, tok in enumerate(self.tokens):
            if tok.kind != "NAME" or tok.text not in FRAME_KEYWORDS:
                continue
            if self.tokens[i + 1].kind != ":" or self.tokens[i + 2].kind != "NAME":
                continue
            kind = FRAME_KEYWORDS[tok.text]
            name_tok = self.tokens[i + 2]
            name = name_tok.text
            if name == "Thing" and kind == EntityKind.CLASS:
                ref = THING_REF
            elif name == "Nothing" and kind == EntityKind.CLASS:
                ref = NOTHING_REF
            elif name in BUILTIN_DATATYPES and kind == EntityKind.DATATYPE:
                ref = BUILTIN_DATATYPES[name]
            else:
                ref = EntityRef(kind, name)
            prior = self.declared.get(name)
            if prior is not None and prior.kind != kind:
                self.diagnostics.append(
                    ParseDiagnostic(
                        name_tok.line,
                        name_tok.col,
                        "error",
                        f"{name!r} already declared as {prior.kind.value}",
                    )
                )
                continue
            self.declared.setdefault(name, ref)

    def lookup(self, tok: _Token, *kinds: EntityKind) -> EntityRef:
        ref = self.declared.get(tok.text)
        if ref is None:
            if tok.text in BUILTIN_DATATYPES and (not kinds or EntityKind.DATATYPE in kinds):
                return BUILTIN_DATATYPES[tok.text]
            raise self.error(tok, f"unknown entity {tok.text!r}")
        if kinds and ref.kind not in kinds:
            raise self.error(
                tok, f"{tok.text!r} is a {ref.kind.value}, expected {' or '.join(k.value for k in kinds)}"
            )
        return ref

    # top level

    def parse(self) -> None:
        while self.peek().kind != "EOF":
            try:
                tok = self.peek()
                if tok.kind == "NAME" and tok.text in FRAME_KEYWORDS and self.peek(1).kind == ":":
                    self.parse_frame()
                elif tok.kind == "NAME" and tok.text in SECTION_KEYWORDS and self.peek(1).kind == ":":
                    self.parse_section()
                else:
                    self.parse_standalone()
            except _ParseFail:
                self.resync()

    def resync(self) -> None:
        while self.peek().kind != "EOF":
            tok = self.peek()
            if tok.kind == "NAME" and tok.text in (FRAME_KEYWORDS.keys() | SECTION_KEYWORDS) and self.peek(1).kind == ":":
                return
            self.advance()

    def parse_frame(self) -> None:
        frame_tok = self.advance()
        kind = FRAME_KEYWORDS[frame_tok.text]
        self.expect(":", "':'")
        name_tok = self.expect("NAME", "entity name")
        subject = self.lookup(name_tok, kind)
        self.emit(Declaration(subject), name_tok)
        while True:
            tok = self.peek()
            if tok.kind != "NAME" or tok.text not in SLOT_KEYWORDS or self.peek(1).kind != ":":
                return
            self.parse_slot(subject, kind)

    def parse_slot(self, subject: EntityRef, frame_kind: EntityKind) -> None:
        slot_tok = self.advance()
        slot = slot_tok.text
        self.expect(":", "':'")
        while True:
            self.parse_slot_value(subject, frame_kind, slot, slot_tok)
            if self.peek().kind == ",":
                self.advance()
                continue
            return

    def parse_slot_value(self, subject: EntityRef, frame_kind: EntityKind, slot: str, slot_tok: _Token) -> None:
        if frame_kind == EntityKind.CLASS:
            subject_expr = Named(subject) if subject != THING_REF else THING
            if slot == "SubClassOf":
                self.emit(SubClassOf(subject_expr, self.parse_expression()), slot_tok)
            elif slot == "EquivalentTo":
                self.emit(EquivalentClasses((subject_expr, self.parse_expression())), slot_tok)
            elif slot == "DisjointWith":
                self.emit(DisjointClasses((subject_expr, self.parse_expression())), slot_tok)
            else:
                raise self.error(slot_tok, f"slot {slot!r} not allowed in a Class frame")
        elif frame_kind == EntityKind.OBJECT_PROPERTY:
            prop = PropertyExpression(subject)
            if slot == "Domain":
                self.emit(ObjectPropertyDomain(prop, self.parse_expression()), slot_tok)
            elif slot == "Range":
                self.emit(ObjectPropertyRange(prop, self.parse_expression()), slot_tok)
            elif slot == "InverseOf":
                other = self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY)
                self.emit(InverseObjectProperties(subject, other), slot_tok)
            elif slot == "SubPropertyOf":
                self.emit(SubObjectPropertyOf(prop, self.parse_property_expression()), slot_tok)
            elif slot == "EquivalentTo":
                other = self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY)
                self.emit(EquivalentObjectProperties((subject, other)), slot_tok)
            elif slot == "DisjointWith":
                other = self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY)
                self.emit(DisjointObjectProperties(subject, other), slot_tok)
            elif slot == "Characteristics":
                char_tok = self.expect("NAME", "characteristic")
                self.warn(char_tok, f"property characteristic {char_tok.text!r} ignored")
            else:
                raise self.error(slot_tok, f"slot {slot!r} not allowed in an ObjectProperty frame")
        elif frame_kind == EntityKind.DATA_PROPERTY:
            if slot == "Domain":
                self.emit(DataPropertyDomain(subject, self.parse_expression()), slot_tok)
            elif slot == "Range":
                dt = self.lookup(self.expect("NAME", "datatype name"), EntityKind.DATATYPE)
                self.emit(DataPropertyRange(subject, dt), slot_tok)
            elif slot == "Characteristics":
                char_tok = self.expect("NAME", "characteristic")
                self.warn(char_tok, f"property characteristic {char_tok.text!r} ignored")
            else:
                raise self.error(slot_tok, f"slot {slot!r} not allowed in a DataProperty frame")
        elif frame_kind == EntityKind.INDIVIDUAL:
            if slot == "Types":
                self.emit(ClassAssertion(self.parse_expression(), subject), slot_tok)
            elif slot == "Facts":
                self.parse_fact(subject, slot_tok)
            else:
                raise self.error(slot_tok, f"slot {slot!r} not allowed in an Individual frame")
        else:
            raise self.error(slot_tok, "Datatype frames take no slots")

    def parse_fact(self, subject: EntityRef, slot_tok: _Token) -> None:
        prop_tok = self.expect("NAME", "property name")
        prop = self.lookup(prop_tok, EntityKind.OBJECT_PROPERTY, EntityKind.DATA_PROPERTY)
        if prop.kind == EntityKind.OBJECT_PROPERTY:
            target = self.lookup(self.expect("NAME", "individual name"), EntityKind.INDIVIDUAL)
            self.emit(ObjectPropertyAssertion(prop, subject, target), slot_tok)
        else:
            self.emit(DataPropertyAssertion(prop, subject, self.parse_literal()), slot_tok)

    def parse_literal(self) -> Literal:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            value: int | str = int(tok.text)
        elif tok.kind == "STRING":
            self.advance()
            value = tok.text
        else:
            raise self.error(tok, "expected an integer or string literal")
        datatype = ""
        if self.peek().kind == "^^":
            self.advance()
            datatype = self.expect("NAME", "datatype name").text
        return Literal(value, datatype)

    def parse_section(self) -> None:
        section_tok = self.advance()
        self.expect(":", "':'")
        if section_tok.text in ("DisjointClasses", "EquivalentClasses"):
            exprs = [self.parse_expression()]
            while self.peek().kind == ",":
                self.advance()
                exprs.append(self.parse_expression())
            if len(exprs) < 2:
                raise self.error(section_tok, f"{section_tok.text} needs at least 2 expressions")
            content = DisjointClasses if section_tok.text == "DisjointClasses" else EquivalentClasses
            self.emit(content(tuple(exprs)), section_tok)
        else:
            props = [self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY)]
            while self.peek().kind == ",":
                self.advance()
                props.append(self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY))
            if len(props) < 2:
                raise self.error(section_tok, f"{section_tok.text} needs at least 2 properties")
            if section_tok.text == "DisjointProperties":
                # n-ary disjointness is carried as pairwise axioms
                for i in range(len(props)):
                    for j in range(i + 1, len(props)):
                        self.emit(DisjointObjectProperties(props[i], props[j]), section_tok)
            else:
                self.emit(EquivalentObjectProperties(tuple(props)), section_tok)

    # standalone infix axioms (the renderer's output format)

    def parse_standalone(self) -> None:
        tok = self.peek()
        subject_prop: Optional[PropertyExpression] = None
        subject_entity: Optional[EntityRef] = None
        if self.at_keyword("inverse") and self.peek(1).kind == "NAME" and not (
            self.peek(2).kind == "NAME" and self.peek(2).text in QUANTIFIERS
        ):
            self.advance()
            base = self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY)
            subject_prop = PropertyExpression(base, inverted=True)
        elif tok.kind == "NAME" and tok.text in self.declared:
            ref = self.declared[tok.text]
            nxt = self.peek(1)
            is_quantified = nxt.kind == "NAME" and nxt.text in QUANTIFIERS
            if ref.kind == EntityKind.OBJECT_PROPERTY and not is_quantified:
                self.advance()
                subject_prop = PropertyExpression(ref)
            elif ref.kind in (EntityKind.DATA_PROPERTY, EntityKind.INDIVIDUAL):
                self.advance()
                subject_entity = ref

        if subject_prop is not None:
            self.parse_property_axiom(subject_prop)
        elif subject_entity is not None and subject_entity.kind == EntityKind.DATA_PROPERTY:
            self.parse_data_property_axiom(subject_entity)
        elif subject_entity is not None:
            self.parse_individual_axiom(subject_entity)
        else:
            sub = self.parse_expression()
            kw_tok = self.expect("NAME", "axiom keyword")
            if kw_tok.text == "SubClassOf":
                self.emit(SubClassOf(sub, self.parse_expression()), kw_tok)
            elif kw_tok.text == "EquivalentTo":
                self.emit(EquivalentClasses((sub, self.parse_expression())), kw_tok)
            elif kw_tok.text == "DisjointWith":
                self.emit(DisjointClasses((sub, self.parse_expression())), kw_tok)
            else:
                raise self.error(kw_tok, f"unexpected keyword {kw_tok.text!r} after a class expression")

    def parse_property_axiom(self, prop: PropertyExpression) -> None:
        kw_tok = self.expect("NAME", "axiom keyword")
        kw = kw_tok.text
        if kw == "Domain":
            self.emit(ObjectPropertyDomain(prop, self.parse_expression()), kw_tok)
        elif kw == "Range":
            self.emit(ObjectPropertyRange(prop, self.parse_expression()), kw_tok)
        elif kw == "SubPropertyOf":
            self.emit(SubObjectPropertyOf(prop, self.parse_property_expression()), kw_tok)
        elif prop.inverted:
            raise self.error(kw_tok, f"inverse property cannot be the subject of {kw!r}")
        elif kw == "InverseOf":
            other = self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY)
            self.emit(InverseObjectProperties(prop.base, other), kw_tok)
        elif kw == "EquivalentTo":
            other = self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY)
            self.emit(EquivalentObjectProperties((prop.base, other)), kw_tok)
        elif kw == "DisjointWith":
            other = self.lookup(self.expect("NAME", "property name"), EntityKind.OBJECT_PROPERTY)
            self.emit(DisjointObjectProperties(prop.base, other), kw_tok)
        else:
            raise self.error(kw_tok, f"unexpected keyword {kw!r} after a property")

    def parse_data_property_axiom(self, prop: EntityRef) -> None:
        kw_tok = self.expect("NAME", "axiom keyword")
        if kw_tok.text == "Domain":
            self.emit(DataPropertyDomain(prop, self.parse_expression()), kw_tok)
        elif kw_tok.text == "Range":
            dt = self.lookup(self.expect("NAME", "datatype name"), EntityKind.DATATYPE)
            self.emit(DataPropertyRange(prop, dt), kw_tok)
        else:
            raise self.error(kw_tok, f"unexpected keyword {kw_tok.text!r} after a data property")

    def parse_individual_axiom(self, individual: EntityRef) -> None:
        kw_tok = self.expect("NAME", "axiom keyword")
        if kw_tok.text == "Types":
            self.emit(ClassAssertion(self.parse_expression(), individual), kw_tok)
        elif kw_tok.text == "Facts":
            self.parse_fact(individual, kw_tok)
        else:
            raise self.error(kw_tok, f"unexpected keyword {kw_tok.text!r} after an individual")

    # class expressions, Manchester precedence: not > and > or

    def parse_expression(self) -> ClassExpression:
        operands = [self.parse_and()]
        while self.at_keyword("or"):
            self.advance()
            operands.append(self.parse_and())
        if len(operands) == 1:
            return operands[0]
        return UnionOf(tuple(operands))

    def parse_and(self) -> ClassExpression:
        operands = [self.parse_unary()]
        while self.at_keyword("and"):
            self.advance()
            operands.append(self.parse_unary())
        if len(operands) == 1:
            return operands[0]
        return IntersectionOf(tuple(operands))

    def parse_unary(self) -> ClassExpression:
        if self.at_keyword("not"):
            self.advance()
            return ComplementOf(self.parse_unary())
        tok = self.peek()
        if self.at_keyword("inverse"):
            return self.parse_restriction()
        if tok.kind == "NAME" and tok.text in self.declared:
            ref = self.declared[tok.text]
            if ref.kind == EntityKind.OBJECT_PROPERTY:
                nxt = self.peek(1)
                if nxt.kind == "NAME" and nxt.text in QUANTIFIERS:
                    return self.parse_restriction()
                raise self.error(tok, f"property {tok.text!r} used where a class is expected")
        return self.parse_primary()

    def parse_restriction(self) -> ClassExpression:
        prop = self.parse_property_expression()
        quant_tok = self.expect("NAME", "a restriction keyword")
        quant = quant_tok.text
        if quant not in QUANTIFIERS:
            raise self.error(quant_tok, f"expected some/only/min/max/exactly, found {quant!r}")
        if quant in ("some", "only"):
            filler = self.parse_filler()
            return SomeValuesFrom(prop, filler) if quant == "some" else AllValuesFrom(prop, filler)
        n_tok = self.expect("INT", "a cardinality")
        n = int(n_tok.text)
        filler: ClassExpression = THING
        if self._filler_follows():
            filler = self.parse_filler()
        if quant == "min":
            return MinCardinality(n, prop, filler)
        if quant == "max":
            return MaxCardinality(n, prop, filler)
        return ExactCardinality(n, prop, filler)

    def _filler_follows(self) -> bool:
        tok = self.peek()
        if tok.kind == "(":
            return True
        if tok.kind != "NAME":
            return False
        if tok.text in ("not", "Thing", "Nothing", "inverse"):
            return True
        if tok.text in ("and", "or") or tok.text in INFIX_KEYWORDS or tok.text in SLOT_KEYWORDS:
            return False
        if tok.text in FRAME_KEYWORDS or tok.text in SECTION_KEYWORDS:
            return not (self.peek(1).kind == ":")
        ref = self.declared.get(tok.text)
        return ref is not None and ref.kind == EntityKind.CLASS

    def parse_filler(self) -> ClassExpression:
        if self.at_keyword("not"):
            self.advance()
            return ComplementOf(self.parse_filler())
        if self.at_keyword("inverse"):
            return self.parse_restriction()
        tok = self.peek()
        if tok.kind == "NAME" and tok.text in self.declared:
            ref = self.declared[tok.text]
            if ref.kind == EntityKind.OBJECT_PROPERTY:
                nxt = self.peek(1)
                if nxt.kind == "NAME" and nxt.text in QUANTIFIERS:
                    return self.parse_restriction()
        return self.parse_primary()

    def parse_primary(self) -> ClassExpression:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            expr = self.parse_expression()
            self.expect(")", "')'")
            return expr
        if tok.kind == "NAME":
            if tok.text == "Thing":
                self.advance()
                return THING
            if tok.text == "Nothing":
                self.advance()
                return NOTHING
            ref = self.lookup(tok, EntityKind.CLASS)
            self.advance()
            return Named(ref)
        raise self.error(tok, f"expected a class expression, found {tok.text or 'end of input'!r}")

    def parse_property_expression(self) -> PropertyExpression:
        inverted = False
        if self.at_keyword("inverse"):
            self.advance()
            inverted = True
        tok = self.expect("NAME", "property name")
        ref = self.lookup(tok, EntityKind.OBJECT_PROPERTY)
        return PropertyExpression(ref, inverted)


def parse_ontology(source: str) -> tuple[Optional[Ontology], list[ParseDiagnostic]]:
    """Parse a Manchester document. On any error diagnostic the ontology is
    not constructed and None is returned alongside the diagnostics."""
    tokens, diagnostics = _tokenize(source)
    parser = _Parser(tokens, diagnostics)
    parser.collect_declarations()
    parser.parse()
    if any(d.severity == "error" for d in parser.diagnostics):
        return None, parser.diagnostics
    ontology = Ontology(tuple(parser.declared.values()), tuple(parser.axioms))
    return ontology, parser.diagnostics


def parse_class_expression(text: str, ontology: Ontology) -> ClassExpression:
    """Parse a single Manchester class expression against an ontology's
    declarations. Raises ManchesterParseError on any error."""
    tokens, diagnostics = _tokenize(text)
    parser = _Parser(tokens, diagnostics)
    for ref in ontology.declarations:
        parser.declared[ref.name] = ref
    try:
        expr = parser.parse_expression()
        if parser.peek().kind != "EOF":
            tok = parser.peek()
            parser.diagnostics.append(
                ParseDiagnostic(tok.line, tok.col, "error", f"unexpected trailing input {tok.text!r}")
            )
    except _ParseFail:
        expr = None
    errors = [d for d in parser.diagnostics if d.severity == "error"]
    if errors or expr is None:
        raise ManchesterParseError(errors)
    return expr


# --- rendering ---------------------------------------------------------------

_PREC_OR = 1
_PREC_AND = 2
_PREC_UNARY = 3


def render_class_expression(e: ClassExpression, parent_prec: int = 0) -> str:
    if isinstance(e, Named):
        return e.entity.name
    if isinstance(e, Thing):
        return "Thing"
    if isinstance(e, Nothing):
        return "Nothing"
    if isinstance(e, UnionOf):
        text = " or ".join(render_class_expression(o, _PREC_OR + 1) for o in e.operands)
        return f"({text})" if parent_prec > _PREC_OR else text
    if isinstance(e, IntersectionOf):
        text = " and ".join(render_class_expression(o, _PREC_AND + 1) for o in e.operands)
        return f"({text})" if parent_prec > _PREC_AND else text
    if isinstance(e, ComplementOf):
        text = "not " + render_class_expression(e.operand, _PREC_UNARY + 1)
        return f"({text})" if parent_prec > _PREC_UNARY else text
    prop = render_property_expression(e.prop)
    if isinstance(e, SomeValuesFrom):
        text = f"{prop} some {render_class_expression(e.filler, _PREC_UNARY + 1)}"
    elif isinstance(e, AllValuesFrom):
        text = f"{prop} only {render_class_expression(e.filler, _PREC_UNARY + 1)}"
    else:
        word = {MinCardinality: "min", MaxCardinality: "max", ExactCardinality: "exactly"}[type(e)]
        if isinstance(e.filler, Thing):
            text = f"{prop} {word} {e.n}"
        else:
            text = f"{prop} {word} {e.n} {render_class_expression(e.filler, _PREC_UNARY + 1)}"
    # restrictions used as fillers or operands of `not` must be parenthesized
    return f"({text})" if parent_prec > _PREC_UNARY else text


def render_property_expression(p: PropertyExpression) -> str:
    return f"inverse {p.base.name}" if p.inverted else p.base.name


def render_literal(lit: Literal) -> str:
    body = str(lit.value) if isinstance(lit.value, int) else f'"{lit.value}"'
    return f"{body}^^{lit.datatype}" if lit.datatype else body


def render_manchester(a: Axiom | AxiomContent) -> str:
    """Render any axiom back to Manchester text that parses to a structurally
    equal axiom (given the entities are declared)."""
    c = a.content if isinstance(a, Axiom) else a
    ce = render_class_expression
    if isinstance(c, SubClassOf):
        return f"{ce(c.sub)} SubClassOf {ce(c.sup)}"
    if isinstance(c, EquivalentClasses):
        if len(c.operands) == 2:
            return f"{ce(c.operands[0])} EquivalentTo {ce(c.operands[1])}"
        return "EquivalentClasses: " + ", ".join(ce(o) for o in c.operands)
    if isinstance(c, DisjointClasses):
        if len(c.operands) == 2:
            return f"{ce(c.operands[0])} DisjointWith {ce(c.operands[1])}"
        return "DisjointClasses: " + ", ".join(ce(o) for o in c.operands)
    if isinstance(c, ObjectPropertyDomain):
        return f"{render_property_expression(c.prop)} Domain {ce(c.domain)}"
    if isinstance(c, ObjectPropertyRange):
        return f"{render_property_expression(c.prop)} Range {ce(c.range)}"
    if isinstance(c, DataPropertyDomain):
        return f"{c.prop.name} Domain {ce(c.domain)}"
    if isinstance(c, DataPropertyRange):
        return f"{c.prop.name} Range {c.datatype.name}"
    if isinstance(c, InverseObjectProperties):
        return f"{c.first.name} InverseOf {c.second.name}"
    if isinstance(c, SubObjectPropertyOf):
        return f"{render_property_expression(c.sub)} SubPropertyOf {render_property_expression(c.sup)}"
    if isinstance(c, EquivalentObjectProperties):
        if len(c.operands) == 2:
            return f"{c.operands[0].name} EquivalentTo {c.operands[1].name}"
        return "EquivalentProperties: " + ", ".join(o.name for o in c.operands)
    if isinstance(c, DisjointObjectProperties):
        return f"{c.first.name} DisjointWith {c.second.name}"
    if isinstance(c, ClassAssertion):
        return f"{c.individual.name} Types {ce(c.expr)}"
    if isinstance(c, ObjectPropertyAssertion):
        return f"{c.subject.name} Facts {c.prop.name} {c.object.name}"
    if isinstance(c, DataPropertyAssertion):
        return f"{c.subject.name} Facts {c.prop.name} {render_literal(c.value)}"
    if isinstance(c, Declaration):
        return f"{c.entity.kind.value}: {c.entity.name}"
    raise TypeError(f"cannot render {type(c).__name__}")
