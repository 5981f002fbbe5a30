"""Deterministic text ingestion: sentence segmentation, tokenization,
coarse POS/lemma assignment, and the document containers used everywhere
else in the package.

Segmentation is rule based: a sentence ends at '.', '!' or '?' followed by
whitespace and an uppercase letter, unless the period closes a known
abbreviation (data/abbreviations.txt) or a single-letter initial.
Tokenization splits on whitespace and detaches leading/trailing punctuation
characters as separate tokens; internal punctuation survives, so
hyphenated compounds ("plain-language") stay single tokens.

POS tags are coarse -- NOUN, VERB, OTHER, PUNCT.  They come either from a
CoNLL-U file or from suffix-detachment lookups against a WordNet index
(closed-class words are never tagged NOUN/VERB).  A token is PUNCT exactly
when its surface contains no alphanumeric character.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DataError

NOUN = "NOUN"
VERB = "VERB"
OTHER = "OTHER"
PUNCT = "PUNCT"

_VOWELS = "aeiouy"


def _load_wordlist(name):
    text = resources.files("scigispy").joinpath("data", name).read_text("utf-8")
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line.lower())
    return entries


ABBREVIATIONS = frozenset(_load_wordlist("abbreviations.txt"))
CLOSED_CLASS = frozenset(_load_wordlist("closed_class_words.txt"))
FINAL_E_EXCEPTIONS = tuple(_load_wordlist("syllable_final_e_exceptions.txt"))


@dataclass
class Token:
    surface: str
    lemma: str
    pos: str
    char_count: int
    syllable_count: int

    @property
    def is_word(self):
        return self.pos != PUNCT


@dataclass
class Sentence:
    tokens: list[Token]
    raw: str

    def word_count(self):
        return sum(1 for t in self.tokens if t.is_word)


@dataclass
class Document:
    doc_id: str
    sentences: list[Sentence]

    def token_count(self):
        return sum(len(s.tokens) for s in self.sentences)

    def tokens(self):
        for sentence in self.sentences:
            yield from sentence.tokens


@dataclass
class PairRecord:
    pair_id: str
    abs_doc: Document
    pls_doc: Document


def count_syllables(surface: str) -> int:
    """Heuristic syllable count: maximal vowel groups (aeiouy), minus one
    for a terminal silent 'e', floored at 1 for anything with a letter.
    Punctuation and other letterless tokens count 0."""
    word = surface.lower()
    if not any(c.isalpha() for c in word):
        return 0
    groups = len(re.findall(r"[aeiouy]+", word))
    if groups > 1 and word.endswith("e") and not _keeps_final_e(word):
        groups -= 1
    return max(groups, 1)


def _keeps_final_e(word):
    for ending in FINAL_E_EXCEPTIONS:
        if word.endswith(ending) and len(word) > len(ending):
            prev = word[-len(ending) - 1]
            if prev.isalpha() and prev not in _VOWELS:
                return True
    return False


def make_token(surface, lemma, pos):
    return Token(surface, lemma, pos, len(surface), count_syllables(surface))


# Suffix-detachment rules tried in order: (suffix, replacement).  After a
# detachment, a trailing doubled consonant is also tried un-doubled
# ("running" -> "runn" -> "run").
_NOUN_DETACHMENTS = [
    ("ches", "ch"),
    ("shes", "sh"),
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ves", "f"),
    ("ies", "y"),
    ("men", "man"),
    ("es", ""),
    ("s", ""),
    ("ers", ""),
    ("er", ""),
]
_VERB_DETACHMENTS = [
    ("ies", "y"),
    ("ing", "e"),
    ("ing", ""),
    ("ed", "e"),
    ("ed", ""),
    ("es", "e"),
    ("es", ""),
    ("s", ""),
]


def _candidates(word, detachments):
    cands = [word]
    for suffix, repl in detachments:
        if word.endswith(suffix) and len(word) > len(suffix):
            cand = word[: -len(suffix)] + repl
            for c in (cand, _undoubled(cand)):
                if c and c not in cands:
                    cands.append(c)
    return cands


def _undoubled(word):
    if len(word) >= 3 and word[-1] == word[-2] and word[-1].isalpha() and word[-1] not in _VOWELS:
        return word[:-1]
    return None


def fallback_pos_and_lemma(surface: str, db) -> tuple[str, str]:
    """Coarse POS and lemma for a word token, resolved against a WordNet
    index: closed-class words are OTHER; otherwise the first detachment
    candidate found in the index wins, nouns checked before verbs."""
    low = surface.lower()
    if low in CLOSED_CLASS:
        return OTHER, low
    for cand in _candidates(low, _NOUN_DETACHMENTS):
        if db.has_lemma(cand, "n"):
            return NOUN, cand
    for cand in _candidates(low, _VERB_DETACHMENTS):
        if db.has_lemma(cand, "v"):
            return VERB, cand
    return OTHER, low


def _build_token(surface, db):
    if not any(c.isalnum() for c in surface):
        return make_token(surface, surface, PUNCT)
    if db is not None:
        pos, lemma = fallback_pos_and_lemma(surface, db)
    else:
        pos, lemma = OTHER, surface.lower()
    return make_token(surface, lemma, pos)


def _split_chunk(chunk):
    """Detach leading and trailing punctuation characters of a
    whitespace-delimited chunk as separate one-character tokens."""
    lead = []
    while chunk and not chunk[0].isalnum():
        lead.append(chunk[0])
        chunk = chunk[1:]
    trail = []
    while chunk and not chunk[-1].isalnum():
        trail.append(chunk[-1])
        chunk = chunk[:-1]
    parts = lead
    if chunk:
        parts.append(chunk)
    parts.extend(reversed(trail))
    return parts


def word_surfaces(text):
    """Word tokens (punctuation dropped) of a raw string, lowercased."""
    words = []
    for chunk in text.split():
        for part in _split_chunk(chunk):
            if any(c.isalnum() for c in part):
                words.append(part.lower())
    return words


_TERMINATORS = ".!?"
_INITIAL_RE = re.compile(r"[a-z]\.")


def _is_abbreviation(text, dot_index):
    start = dot_index
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    word = text[start : dot_index + 1].lower()
    while word and not word[0].isalnum():
        word = word[1:]
    if word in ABBREVIATIONS:
        return True
    return bool(_INITIAL_RE.fullmatch(word))


def _sentence_spans(text):
    spans = []
    start = 0
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if ch in _TERMINATORS and i + 1 < n and text[i + 1].isspace():
            k = i + 1
            while k < n and text[k].isspace():
                k += 1
            if k < n and text[k].isupper():
                if not (ch == "." and _is_abbreviation(text, i)):
                    spans.append((start, i + 1))
                    start = k
                    i = k
                    continue
        i += 1
    if text[start:].strip():
        spans.append((start, n))
    return spans


def segment_and_tokenize(text: str, db=None, doc_id: str = "doc") -> Document:
    """Split raw text into sentences and tokens.  Empty or whitespace-only
    input yields a document with zero sentences.  When a WordNet index is
    supplied, tokens get POS/lemma via the fallback tagger; otherwise all
    word tokens are OTHER with lowercased lemmas."""
    sentences = []
    for a, b in _sentence_spans(text):
        raw = " ".join(text[a:b].split())
        tokens = []
        for chunk in raw.split():
            for part in _split_chunk(chunk):
                tokens.append(_build_token(part, db))
        if tokens:
            sentences.append(Sentence(tokens=tokens, raw=raw))
    return Document(doc_id=doc_id, sentences=sentences)


_UPOS_MAP = {"NOUN": NOUN, "PROPN": NOUN, "VERB": VERB, "PUNCT": PUNCT}
_NEWDOC_RE = re.compile(r"#\s*newdoc\s+id\s*=\s*(.+)")
_TEXT_RE = re.compile(r"#\s*text\s*=\s*(.*)")


def parse_conllu(stream) -> list[Document]:
    """Parse CoNLL-U formatted lines into documents.

    Only FORM, LEMMA and UPOS are consumed.  UPOS maps NOUN/PROPN -> NOUN,
    VERB -> VERB, PUNCT -> PUNCT, everything else -> OTHER; the PUNCT
    invariant (no alphanumeric character) overrides the treebank tag.
    Multiword-token ranges ("1-2") and empty nodes ("1.1") are skipped.
    `# newdoc id = X` starts a new document; a stream without markers
    becomes a single document "doc1".
    """
    docs = []
    seen_ids = set()
    auto_count = 0
    doc_id = None
    sentences = []
    tokens = []
    sent_text = None

    def flush_sentence():
        nonlocal tokens, sent_text
        if tokens:
            raw = sent_text if sent_text else " ".join(t.surface for t in tokens)
            sentences.append(Sentence(tokens=tokens, raw=raw))
        tokens = []
        sent_text = None

    def flush_document():
        nonlocal doc_id, sentences, auto_count
        if sentences:
            if doc_id is None:
                auto_count += 1
                doc_id = f"doc{auto_count}"
            if doc_id in seen_ids:
                raise DataError(f"duplicate document id {doc_id!r} in CoNLL-U input")
            seen_ids.add(doc_id)
            docs.append(Document(doc_id=doc_id, sentences=sentences))
        doc_id = None
        sentences = []

    for lineno, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if not line.strip():
            flush_sentence()
            continue
        if line.startswith("#"):
            m = _NEWDOC_RE.match(line)
            if m:
                flush_sentence()
                flush_document()
                doc_id = m.group(1).strip()
                continue
            m = _TEXT_RE.match(line)
            if m:
                sent_text = m.group(1).strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise DataError(
                f"CoNLL-U line {lineno}: expected 10 tab-separated columns, got {len(cols)}"
            )
        token_id, form, lemma, upos = cols[0], cols[1], cols[2], cols[3]
        if "-" in token_id or "." in token_id:
            continue
        if not any(c.isalnum() for c in form):
            pos = PUNCT
        else:
            pos = _UPOS_MAP.get(upos, OTHER)
            if pos == PUNCT:
                pos = OTHER
        if lemma == "_" or not lemma:
            lemma = form
        if pos in (NOUN, VERB, OTHER):
            lemma = lemma.lower()
        tokens.append(make_token(form, lemma, pos))
    flush_sentence()
    flush_document()
    return docs


def load_pairs(path, db=None) -> list[PairRecord]:
    """Load a pairs file: one JSON object per line with string fields
    pair_id, abs_text and pls_text.  Both texts are segmented and
    tokenized; document ids are "<pair_id>.abs" and "<pair_id>.pls"."""
    records = []
    seen = set()
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}: line {lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(obj, dict):
                raise DataError(f"{path}: line {lineno}: expected a JSON object")
            for field_name in ("pair_id", "abs_text", "pls_text"):
                if field_name not in obj or not isinstance(obj[field_name], str):
                    raise DataError(f"{path}: line {lineno}: missing string field {field_name!r}")
            pair_id = obj["pair_id"]
            if pair_id in seen:
                raise DataError(f"{path}: line {lineno}: duplicate pair_id {pair_id!r}")
            seen.add(pair_id)
            abs_doc = segment_and_tokenize(obj["abs_text"], db, doc_id=f"{pair_id}.abs")
            pls_doc = segment_and_tokenize(obj["pls_text"], db, doc_id=f"{pair_id}.pls")
            if not abs_doc.sentences or not pls_doc.sentences:
                raise DataError(f"{path}: line {lineno}: empty document text")
            records.append(PairRecord(pair_id=pair_id, abs_doc=abs_doc, pls_doc=pls_doc))
    return records


def load_plaintext_corpus(directory, db=None) -> list[Document]:
    """Load every .txt file of a directory as one document, doc_id taken
    from the filename stem, ordered by filename."""
    directory = Path(directory)
    if not directory.is_dir():
        raise DataError(f"not a directory: {directory}")
    docs = []
    for path in sorted(directory.glob("*.txt")):
        text = path.read_text(encoding="utf-8")
        docs.append(segment_and_tokenize(text, db, doc_id=path.stem))
    if not docs:
        raise DataError(f"no .txt files in {directory}")
    return docs
