"""Comment text normalization: term abstraction, lemmatization, cleanup.

The pipeline is abstract_terms -> lemmatize -> clean. Abstraction runs
first so raw surface forms (URLs, "CAMEL-1475", "jetty-9.3") are intact
when the patterns look for them. Internally everything operates on a
segment list that keeps placeholder tokens as standalone elements, so the
later stages can never corrupt a placeholder that an earlier stage emitted.

Replacement stages, in fixed order:

  1. bug-tracker URLs (URL whose tail is a ticket id) -> @abstracturl @abstractbugid
  2. remaining URLs                                   -> @abstracturl
  3. date expressions (four forms)                    -> @abstractdate
  4. product-dictionary words, case-insensitive       -> @abstractproduct
  5. version expressions                              -> @abstractversion
  6. product placeholder + separator + digits         -> ... @abstractbugid

Ordering rationale: the bug-id pattern references the product placeholder,
so products must be replaced before bug ids; URLs must go first or their
host/path fragments would match product and version patterns; dates go
before versions because both can start with digit.digit. A version match
hyphen-attached to a product placeholder ("jetty-9.3" after stage 4) is
refused so stage 6 can claim it as a bug id; space-separated versions
("Camel 3.0") are untouched by that refusal and become product+version.

No stop-word removal anywhere: words like "when", "until", "after" carry
the waiting-condition signal this package exists to find.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .corpus import Comment, Label
from .inflections import COMPARATIVES, IRREGULAR, KEEP_AS_IS, PATCHES
from .products import ProductDictionary

PLACEHOLDER_DATE = "@abstractdate"
PLACEHOLDER_VERSION = "@abstractversion"
PLACEHOLDER_BUGID = "@abstractbugid"
PLACEHOLDER_URL = "@abstracturl"
PLACEHOLDER_PRODUCT = "@abstractproduct"

PLACEHOLDERS = (
    PLACEHOLDER_DATE,
    PLACEHOLDER_VERSION,
    PLACEHOLDER_BUGID,
    PLACEHOLDER_URL,
    PLACEHOLDER_PRODUCT,
)


@dataclass(frozen=True)
class AbstractionSpan:
    placeholder: str
    original: str
    position: int


@dataclass(frozen=True)
class AbstractedComment:
    comment_id: str
    tokens: tuple[str, ...]
    spans: tuple[AbstractionSpan, ...]


# ---------------------------------------------------------------------------
# regexes
# ---------------------------------------------------------------------------

_URL_RE = re.compile(
    r"https?:\/\/(?:www\.)?[-a-zA-Z0-9@:%._+~#=]{2,256}\.[a-z]{2,6}\b"
    r"[-a-zA-Z0-9@:%_+.~#?&/=]*"
)

# trailing path segment that looks like a tracker ticket, e.g. /browse/SPR-4599
_URL_BUG_TAIL_RE = re.compile(r"/([A-Za-z][A-Za-z0-9]*-[0-9]+)/?$")

_MONTHS = "Jan|Feb|Mar|Apr|May|Jun|Jul|Aug|Sep|Oct|Nov|Dec"

# four date forms; the timestamp form is tried first so its prefix is never
# claimed by a shorter form
_DATE_RE = re.compile(
    r"[0-9]+-[0-9]+-[0-9]+ [0-9]+:[0-9]+:[0-9]+ [-+][0-9]+"
    r"|(?<![0-9.])(?:0[1-9]|[12][0-9]|3[01])\.(?:0[1-9]|1[0-2])"
    r"\.(?:[12][0-9]{3})(?![0-9.])"
    r"|(?<![0-9/])(?:0[1-9]|[12][0-9]|3[01])/(?:0[1-9]|1[0-2])"
    r"(?:/(?:[12][0-9]{3}))*(?![0-9/])"
    rf"|(?<![0-9])(?:[0-9]|[0-2][0-9]|3[01]) (?:{_MONTHS})\w* [0-9]{{4}}(?![0-9])"
)

_VERSION_RE = re.compile(
    r"(?<![0-9.])[0-9]{1,2}\.[0-9]{1,2}"
    r"(?:[+-]|\.[0-9]{1,3}|\.[A-Za-z]{1,2})*(?:_[0-9]{1,3})*(?![0-9])"
)

# separator + digits directly after a product placeholder
_BUGID_TAIL_RE = re.compile(r"^([ -]*)([0-9]+(?:\.[0-9]+)*)")

# a version-looking match whose only distance from the preceding product
# placeholder is hyphens belongs to the bug-id stage instead
_HYPHENS_RE = re.compile(r"^-+$")

_PLACEHOLDER_RE = re.compile(
    "|".join(sorted(map(re.escape, PLACEHOLDERS), key=len, reverse=True))
)

_WORD_RE = re.compile(r"[a-z]+")
_CLEAN_SPLIT_RE = re.compile(r"[^a-z0-9]+")


def _product_regex(products: ProductDictionary) -> re.Pattern:
    words = sorted(products.names, key=len, reverse=True)
    body = "|".join(re.escape(w) for w in words)
    return re.compile(
        rf"(?<![A-Za-z0-9_])(?:{body})(?![A-Za-z0-9_])", re.IGNORECASE
    )


# ---------------------------------------------------------------------------
# segment machinery
# ---------------------------------------------------------------------------
# a segment list is [("text", str) | ("ph", placeholder, original)]

_TEXT = "text"
_PH = "ph"


def _protect_placeholders(text: str) -> list[tuple]:
    """Split raw text so pre-existing placeholder literals become elements.

    Guarantees abstract_terms is idempotent: its own output re-enters as
    protected elements and is reproduced verbatim.
    """
    segments: list[tuple] = []
    pos = 0
    for match in _PLACEHOLDER_RE.finditer(text):
        if match.start() > pos:
            segments.append((_TEXT, text[pos:match.start()]))
        segments.append((_PH, match.group(0), match.group(0)))
        pos = match.end()
    if pos < len(text) or not segments:
        segments.append((_TEXT, text[pos:]))
    return segments


def _sub_in_segments(segments, pattern, make_elements):
    """Run a regex over text segments, replacing matches with new elements.

    make_elements(match) returns the replacement element list; returning
    None refuses the match and leaves the text alone. The callback also
    receives the previous element (for context-sensitive stages).
    """
    out: list[tuple] = []
    for seg in segments:
        if seg[0] == _PH:
            out.append(seg)
            continue
        text = seg[1]
        pos = 0
        for match in pattern.finditer(text):
            prev = out[-1] if out else None
            prefix = text[pos:match.start()]
            replacement = make_elements(match, prev, text[:match.start()])
            if replacement is None:
                continue
            if prefix:
                out.append((_TEXT, prefix))
            out.extend(replacement)
            pos = match.end()
        if pos < len(text):
            out.append((_TEXT, text[pos:]))
    return out


def _abstract_segments(text: str, products: ProductDictionary) -> list[tuple]:
    segments = _protect_placeholders(text)

    def url_elements(match, prev, before):
        url = match.group(0)
        tail = _URL_BUG_TAIL_RE.search(url)
        if tail:
            return [
                (_PH, PLACEHOLDER_URL, url),
                (_PH, PLACEHOLDER_BUGID, tail.group(1)),
            ]
        return [(_PH, PLACEHOLDER_URL, url)]

    segments = _sub_in_segments(segments, _URL_RE, url_elements)

    segments = _sub_in_segments(
        segments, _DATE_RE,
        lambda m, prev, before: [(_PH, PLACEHOLDER_DATE, m.group(0))],
    )

    segments = _sub_in_segments(
        segments, _product_regex(products),
        lambda m, prev, before: [(_PH, PLACEHOLDER_PRODUCT, m.group(0))],
    )

    def version_elements(match, prev, before):
        attached_to_product = (
            prev is not None
            and prev[0] == _PH
            and prev[1] == PLACEHOLDER_PRODUCT
            and _HYPHENS_RE.match(before) is not None
        )
        if attached_to_product:
            return None  # leave for the bug-id stage
        return [(_PH, PLACEHOLDER_VERSION, match.group(0))]

    segments = _sub_in_segments(segments, _VERSION_RE, version_elements)

    # stage 6: digits (with optional space/hyphen separators) right after a
    # product placeholder become its bug id
    out: list[tuple] = []
    for seg in segments:
        prev = out[-1] if out else None
        if (
            seg[0] == _TEXT
            and prev is not None
            and prev[0] == _PH
            and prev[1] == PLACEHOLDER_PRODUCT
        ):
            match = _BUGID_TAIL_RE.match(seg[1])
            if match:
                out.append((_PH, PLACEHOLDER_BUGID, match.group(2)))
                rest = seg[1][match.end():]
                if rest:
                    out.append((_TEXT, rest))
                continue
        out.append(seg)
    return out


def _segments_to_string(segments) -> str:
    parts: list[str] = []
    prev_ph = False
    for seg in segments:
        if seg[0] == _PH:
            if prev_ph:
                parts.append(" ")
            parts.append(seg[1])
            prev_ph = True
        else:
            parts.append(seg[1])
            prev_ph = False
    return "".join(parts)


def abstract_terms(
    text: str, products: ProductDictionary | None = None
) -> tuple[str, list[AbstractionSpan]]:
    """Replace volatile surface forms with placeholder tokens.

    Returns the abstracted string and the spans in order of appearance.
    Span positions here are placeholder ordinals; preprocess() re-indexes
    them to token positions once the token stream exists.
    """
    products = products or ProductDictionary.default()
    segments = _abstract_segments(text, products)
    spans = [
        AbstractionSpan(seg[1], seg[2], position=i)
        for i, seg in enumerate(s for s in segments if s[0] == _PH)
    ]
    return _segments_to_string(segments), spans


# ---------------------------------------------------------------------------
# lemmatization
# ---------------------------------------------------------------------------

_VOWELS = "aeiou"
_VOWELS_Y = "aeiouy"


def _has_vowel(word: str) -> bool:
    return any(c in _VOWELS_Y for c in word)


def _cvc(stem: str) -> bool:
    if len(stem) < 3:
        return False
    a, b, c = stem[-3], stem[-2], stem[-1]
    return a not in _VOWELS and b in _VOWELS_Y and c not in _VOWELS_Y


def _fix_stem(stem: str) -> str:
    """Undo doubling and restore a silent e after stripping -ed / -ing."""
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS_Y
        and stem[-1] not in "slfz"
    ):
        return stem[:-1]
    if len(stem) <= 2:
        return stem + "e"
    if _cvc(stem) and stem[-1] not in "wxy":
        return stem + "e"
    return stem


def _lemma(word: str) -> str:
    """Dictionary form of one lowercase word. Lookup beats rules."""
    if word in KEEP_AS_IS:
        return word
    if word in IRREGULAR:
        return IRREGULAR[word]
    if word in PATCHES:
        return PATCHES[word]
    if word in COMPARATIVES:
        return COMPARATIVES[word]
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("ing") and len(word) >= 5:
        stem = word[:-3]
        if not _has_vowel(stem):
            return word
        return _fix_stem(stem)
    if word.endswith("ed") and len(word) >= 4:
        if word.endswith("ied") and len(word) > 4:
            return word[:-3] + "y"
        if word.endswith("eed"):
            return word[:-1]
        stem = word[:-2]
        if not _has_vowel(stem):
            return word
        return _fix_stem(stem)
    if (
        word.endswith("es")
        and len(word) >= 4
        and word[:-2].endswith(("ss", "x", "z", "ch", "sh"))
    ):
        return word[:-2]
    if (
        word.endswith("s")
        and len(word) >= 3
        and not word.endswith(("ss", "us", "is"))
    ):
        return word[:-1]
    return word


def _lemmatize_text(text: str) -> str:
    lowered = text.lower()
    return _WORD_RE.sub(lambda m: _lemma(m.group(0)), lowered)


def lemmatize(text: str) -> str:
    """Lowercase and reduce inflected words to dictionary form.

    Placeholder strings pass through untouched.
    """
    segments = _protect_placeholders(text)
    parts = [
        seg[1] if seg[0] == _PH else _lemmatize_text(seg[1])
        for seg in segments
    ]
    return "".join(parts)


# ---------------------------------------------------------------------------
# special-character removal
# ---------------------------------------------------------------------------

def _clean_text(text: str) -> list[str]:
    return [t for t in _CLEAN_SPLIT_RE.split(text.lower()) if t]


def clean(text: str) -> list[str]:
    """Split on non-alphanumeric runs; placeholders survive intact.

    No stop words are removed.
    """
    tokens: list[str] = []
    for seg in _protect_placeholders(text):
        if seg[0] == _PH:
            tokens.append(seg[1])
        else:
            tokens.extend(_clean_text(seg[1]))
    return tokens


# ---------------------------------------------------------------------------
# full pipeline
# ---------------------------------------------------------------------------

def preprocess(
    comment: Comment, products: ProductDictionary | None = None
) -> AbstractedComment:
    """abstract_terms, then lemmatize, then clean, with spans re-indexed to
    final token positions."""
    products = products or ProductDictionary.default()
    segments = _abstract_segments(comment.text, products)
    tokens: list[str] = []
    spans: list[AbstractionSpan] = []
    for seg in segments:
        if seg[0] == _PH:
            spans.append(AbstractionSpan(seg[1], seg[2], position=len(tokens)))
            tokens.append(seg[1])
        else:
            tokens.extend(_clean_text(_lemmatize_text(seg[1])))
    return AbstractedComment(comment.id, tuple(tokens), tuple(spans))


def preprocess_text(
    comment_id: str, text: str, products: ProductDictionary | None = None
) -> AbstractedComment:
    """Preprocess bare text without constructing a labeled Comment first."""
    comment = Comment(comment_id, "", text, Label.NOT_ON_HOLD)
    return preprocess(comment, products)
