"""Surface-form lexicon derived from entity names.

Entity names are assumed to be lexically motivated (camelCase or
underscore-separated English words). Classes become common nouns, object
properties become transitive verbs (or copula phrases like "is enrolled in"),
data properties named hasX become has-noun entries and individuals become
proper names. A side file of overrides can replace any derived form.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from .model import EntityKind, EntityRef, Ontology, OntologyError

log = logging.getLogger(__name__)

COMMON_NOUN = "common-noun"
TRANSITIVE_VERB = "transitive-verb"
COPULA_VERB = "copula-verb"
PROPER_NAME = "proper-name"
HAS_NOUN = "has-noun"

FORM_KEYS = ("sg", "pl", "vbz", "vb", "vbp-passive", "phrase")


class LexiconError(OntologyError):
    pass


@dataclass(frozen=True)
class LexiconEntry:
    entity: EntityRef
    category: str
    forms: Mapping[str, str]

    def form(self, key: str) -> str:
        try:
            return self.forms[key]
        except KeyError:
            raise LexiconError(f"{self.entity.name} has no {key!r} form") from None


@dataclass(frozen=True)
class Lexicon:
    entries: Mapping[EntityRef, LexiconEntry]

    def entry(self, ref: EntityRef) -> LexiconEntry:
        try:
            return self.entries[ref]
        except KeyError:
            raise LexiconError(f"no lexicon entry for {ref.name}") from None

    def form(self, ref: EntityRef, key: str) -> str:
        return self.entry(ref).form(key)


# --- tables -------------------------------------------------------------------


def _load_table(filename: str) -> list[list[str]]:
    text = resources.files("ontogloss").joinpath("data", filename).read_text("utf-8")
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows

_PARTICIPLES: dict[str, str] = {}
_IRREGULAR_3SG: dict[str, str] = {}
_SFORM_TO_BASE: dict[str, str] = {}
for _row in _load_table("irregular_verbs.txt"):
    _PARTICIPLES[_row[0]] = _row[1]
    if len(_row) > 2:
        _IRREGULAR_3SG[_row[0]] = _row[2]
        _SFORM_TO_BASE[_row[2]] = _row[0]

_IRREGULAR_PLURALS: dict[str, str] = {s: p for s, p in _load_table("irregular_nouns.txt")}

_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")

# vowel-initial spellings pronounced with a consonant, and vice versa
_ARTICLE_A_PREFIXES = ("uni", "one", "once", "use", "user", "usual", "euro", "ewe")
_ARTICLE_AN_PREFIXES = ("hour", "honest", "honor", "honour", "heir")


# --- morphology ---------------------------------------------------------------


def split_name(name: str) -> list[str]:
    """Split an identifier into lowercase words on case boundaries, digits,
    underscores and hyphens. All-caps runs stay single tokens."""
    if not name:
        raise ValueError("name must be non-empty")
    words: list[str] = []
    for part in re.split(r"[_\-\s]+", name):
        for match in re.finditer(r"[A-Z]+(?![a-z])|[A-Z][a-z]*|[a-z]+|[0-9]+", part):
            words.append(match.group(0).lower())
    return words


def pluralize(noun_sg: str) -> str:
    if noun_sg in _IRREGULAR_PLURALS:
        return _IRREGULAR_PLURALS[noun_sg]
    if noun_sg.endswith("y") and len(noun_sg) > 1 and noun_sg[-2] not in "aeiou":
        return noun_sg[:-1] + "ies"
    if noun_sg.endswith(_SIBILANT_ENDINGS):
        return noun_sg + "es"
    return noun_sg + "s"


def indefinite_article(phrase: str) -> str:
    if not phrase:
        raise ValueError("phrase must be non-empty")
    word = phrase.split()[0].lower()
    if word.startswith(_ARTICLE_AN_PREFIXES):
        return "an"
    if word[0] in "aeiou" and not word.startswith(_ARTICLE_A_PREFIXES):
        return "an"
    return "a"


def verb_base(word: str) -> str:
    """Reduce a (possibly) third-person-singular verb form to its base."""
    if word in _SFORM_TO_BASE:
        return _SFORM_TO_BASE[word]
    if word in _PARTICIPLES:
        return word
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("oes") and len(word) > 3:
        return word[:-2]
    if word.endswith(("ses", "xes", "zes", "ches", "shes")) and len(word) >= 5:
        return word[:-2]
    if word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word


def verb_3sg(base: str) -> str:
    if base in _IRREGULAR_3SG:
        return _IRREGULAR_3SG[base]
    if base.endswith("y") and len(base) > 1 and base[-2] not in "aeiou":
        return base[:-1] + "ies"
    if base.endswith(_SIBILANT_ENDINGS) or base.endswith("o"):
        return base + "es"
    return base + "s"


def verb_participle(base: str) -> str:
    if base in _PARTICIPLES:
        return _PARTICIPLES[base]
    if base.endswith("e"):
        return base + "d"
    if base.endswith("y") and len(base) > 1 and base[-2] not in "aeiou":
        return base[:-1] + "ied"
    return base + "ed"


# --- entry derivation ---------------------------------------------------------


def derive_entry(e: EntityRef) -> LexiconEntry:
    """Derive surface forms from the entity name. Never fails: names that fit
    no known pattern are treated as regular transitive verbs with a warning."""
    words = split_name(e.name)
    if not words:
        words = [e.name.lower()]

    if e.kind == EntityKind.CLASS:
        sg = " ".join(words)
        pl = " ".join(words[:-1] + [pluralize(words[-1])])
        return LexiconEntry(e, COMMON_NOUN, {"sg": sg, "pl": pl})

    if e.kind == EntityKind.INDIVIDUAL:
        phrase = " ".join(w[:1].upper() + w[1:] for w in words)
        return LexiconEntry(e, PROPER_NAME, {"phrase": phrase})

    if e.kind == EntityKind.DATA_PROPERTY:
        if words[0] == "has" and len(words) > 1:
            noun = " ".join(words[1:])
            noun_pl = " ".join(words[1:-1] + [pluralize(words[-1])])
            return LexiconEntry(e, HAS_NOUN, {"sg": noun, "pl": noun_pl})
        log.warning("data property %r does not match the hasX pattern; treating it as a verb", e.name)
        return _verb_entry(e, words)

    if e.kind == EntityKind.OBJECT_PROPERTY:
        if words[0] in ("is", "are") and len(words) > 1:
            rest = words[1:]
            return LexiconEntry(
                e,
                COPULA_VERB,
                {"vbz": " ".join(["is"] + rest), "vb": " ".join(["be"] + rest)},
            )
        base = verb_base(words[0])
        recognized = words[0] in _SFORM_TO_BASE or base in _PARTICIPLES or words[0].endswith("s")
        if not recognized:
            log.warning("object property %r does not start with a recognizable verb form", e.name)
        return _verb_entry(e, words)

    raise LexiconError(f"no lexicalization for {e.kind.value} entities")


def _verb_entry(e: EntityRef, words: list[str]) -> LexiconEntry:
    first, rest = words[0], words[1:]
    base = verb_base(first)
    vbz_head = first if first != base else verb_3sg(base)
    return LexiconEntry(
        e,
        TRANSITIVE_VERB,
        {
            "vbz": " ".join([vbz_head] + rest),
            "vb": " ".join([base] + rest),
            "vbp-passive": " ".join([verb_participle(base)] + rest),
        },
    )


def build_lexicon(ontology: Ontology) -> Lexicon:
    """A lexicon entry for every declared class, property and individual."""
    lexicalizable = (
        EntityKind.CLASS,
        EntityKind.OBJECT_PROPERTY,
        EntityKind.DATA_PROPERTY,
        EntityKind.INDIVIDUAL,
    )
    entries = {ref: derive_entry(ref) for ref in ontology.declared(*lexicalizable)}
    return Lexicon(entries)


# --- override files -----------------------------------------------------------


def parse_overrides(text: str) -> list[tuple[str, dict[str, str]]]:
    """Parse a .lex override file: one `name key=value ...` entry per line.
    Values may contain spaces; a new pair starts at the next token with '='."""
    out: list[tuple[str, dict[str, str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        name = tokens[0]
        if "=" in name:
            raise LexiconError(f"line {lineno}: entry must start with an entity name")
        if len(tokens) < 2:
            raise LexiconError(f"line {lineno}: no key=value pairs for {name!r}")
        pairs: dict[str, str] = {}
        current_key: str | None = None
        for token in tokens[1:]:
            if "=" in token:
                key, _, value = token.partition("=")
                if key not in FORM_KEYS:
                    raise LexiconError(f"line {lineno}: unknown form key {key!r}")
                pairs[key] = value
                current_key = key
            elif current_key is None:
                raise LexiconError(f"line {lineno}: expected key=value, found {token!r}")
            else:
                pairs[current_key] = f"{pairs[current_key]} {token}"
        out.append((name, pairs))
    return out


def merge_overrides(lex: Lexicon, overrides: str) -> Lexicon:
    """Apply override file content on top of a derived lexicon. Unknown
    entities are an error; merging is idempotent."""
    parsed = parse_overrides(overrides)
    by_name = {ref.name: ref for ref in lex.entries}
    entries = dict(lex.entries)
    for name, pairs in parsed:
        ref = by_name.get(name)
        if ref is None:
            raise LexiconError(f"override for undeclared entity {name!r}")
        old = entries[ref]
        entries[ref] = LexiconEntry(ref, old.category, {**old.forms, **pairs})
    return Lexicon(entries)
