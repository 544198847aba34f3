"""N-gram enumeration over preprocessed comments and IDF-weighted features.

Enumeration builds one generalized suffix array over the whole corpus
(comments joined by per-comment unique separator symbols) and walks the
LCP-interval tree. Every repeated contiguous token sequence corresponds to
exactly one interval, whose size is its exact occurrence count, so grams
with corpus frequency >= 2 fall out of the traversal directly; a common
prefix of two suffixes can never contain a separator, which keeps grams
from straddling comment boundaries for free.

Two frequency notions per gram:
  gtf  total occurrences across the corpus
  sdf  number of comments containing ALL tokens of the gram anywhere, in
       any order (set-of-terms document frequency, not phrase frequency)

Corpus-level weight of a gram is gtf * ln(D / sdf). The per-comment
feature value used for classification is tf(gram, comment) * ln(D / sdf).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyCorpus
from .preprocess import AbstractedComment


@dataclass(frozen=True)
class NGramEntry:
    gram: tuple[str, ...]
    gtf: int
    sdf: int
    weight: float

    def idf(self, total_comments: int) -> float:
        return math.log(total_comments / self.sdf)


@dataclass(frozen=True)
class NGramTable:
    entries: tuple[NGramEntry, ...]
    total_comments: int
    max_n: int
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update({e.gram: i for i, e in enumerate(self.entries)})

    def __len__(self) -> int:
        return len(self.entries)

    def gram_id(self, gram: tuple[str, ...]) -> int | None:
        return self._index.get(gram)


@dataclass(frozen=True)
class FeatureVector:
    comment_id: str
    weights: dict[int, float]


# ---------------------------------------------------------------------------
# suffix array construction (prefix doubling over integer token ids)
# ---------------------------------------------------------------------------

def _build_suffix_array(seq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return (suffix_array, rank) for an integer sequence."""
    n = seq.size
    order = np.argsort(seq, kind="stable")
    ranks = np.empty(n, dtype=np.int64)
    sorted_vals = seq[order]
    boundary = np.empty(n, dtype=np.int64)
    boundary[0] = 0
    if n > 1:
        boundary[1:] = (np.diff(sorted_vals) != 0).astype(np.int64)
    ranks[order] = np.cumsum(boundary)
    k = 1
    while k < n and ranks[order[-1]] != n - 1:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = ranks[k:]
        order = np.lexsort((second, ranks))
        first_sorted = ranks[order]
        second_sorted = second[order]
        boundary[0] = 0
        boundary[1:] = (
            (np.diff(first_sorted) != 0) | (np.diff(second_sorted) != 0)
        ).astype(np.int64)
        ranks[order] = np.cumsum(boundary)
        k *= 2
    return order, ranks


def _kasai_lcp(seq: np.ndarray, sa: np.ndarray, rank: np.ndarray) -> np.ndarray:
    """lcp[r] = longest common prefix of suffixes sa[r-1] and sa[r]."""
    n = seq.size
    lcp = np.zeros(n, dtype=np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and seq[i + h] == seq[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


def _lcp_intervals(lcp: np.ndarray):
    """Yield (depth, parent_depth, left, right) for every LCP interval.

    Suffixes sa[left..right] share a prefix of exactly `depth` tokens;
    prefix lengths in (parent_depth, depth] occur right-to-left only in
    this interval, so their occurrence count equals right - left + 1.
    """
    n = lcp.size
    stack: list[list[int]] = []  # [depth, left]
    for i in range(1, n + 1):
        h = int(lcp[i]) if i < n else 0
        left = i - 1
        while stack and stack[-1][0] > h:
            depth, lo = stack.pop()
            parent = max(h, stack[-1][0] if stack else 0)
            yield depth, parent, lo, i - 1
            left = lo
        if (not stack or stack[-1][0] < h) and h > 0:
            stack.append([h, left])


def _sep_distance(token_counts: list[int]) -> np.ndarray:
    """For the joined sequence, tokens remaining before the next separator."""
    chunks = []
    for count in token_counts:
        chunks.append(np.arange(count, -1, -1, dtype=np.int64))
    return np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int64)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _token_lists(corpus) -> list[list[str]]:
    lists = []
    for item in corpus:
        if isinstance(item, AbstractedComment):
            lists.append(list(item.tokens))
        else:
            lists.append(list(item))
    return lists


def enumerate_ngrams(corpus, max_n: int = 10, min_freq: int = 2) -> NGramTable:
    """Build the table of every contiguous gram (length <= max_n) whose
    total corpus frequency is at least min_freq."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if min_freq < 1:
        raise ValueError("min_freq must be >= 1")
    token_lists = _token_lists(corpus)
    if not token_lists:
        raise EmptyCorpus()
    total = len(token_lists)

    vocab: dict[str, int] = {}
    for tokens in token_lists:
        for tok in tokens:
            vocab.setdefault(tok, len(vocab))
    id_to_token = list(vocab)

    # join comments with unique separator ids so no gram can span two
    seq_parts: list[int] = []
    next_sep = len(vocab)
    for tokens in token_lists:
        seq_parts.extend(vocab[t] for t in tokens)
        seq_parts.append(next_sep)
        next_sep += 1
    seq = np.asarray(seq_parts, dtype=np.int64)

    counts: dict[tuple[int, ...], int] = {}
    if seq.size:
        sa, rank = _build_suffix_array(seq)
        lcp = _kasai_lcp(seq, sa, rank)
        for depth, parent, lo, hi in _lcp_intervals(lcp):
            if parent >= max_n:
                continue
            count = hi - lo + 1
            start = int(sa[lo])
            top = min(int(depth), max_n)
            for length in range(int(parent) + 1, top + 1):
                gram_ids = tuple(int(t) for t in seq[start:start + length])
                counts[gram_ids] = count

        if min_freq == 1:
            sep_dist = _sep_distance([len(t) for t in token_lists])
            n = seq.size
            for r in range(n):
                start = int(sa[r])
                usable = int(sep_dist[start])
                if usable == 0:
                    continue
                shared = int(lcp[r])
                if r + 1 < n:
                    shared = max(shared, int(lcp[r + 1]))
                top = min(usable, max_n)
                for length in range(shared + 1, top + 1):
                    gram_ids = tuple(int(t) for t in seq[start:start + length])
                    counts[gram_ids] = 1

    # set-of-terms document frequency via per-token comment bitsets
    masks: dict[int, int] = {}
    for ci, tokens in enumerate(token_lists):
        bit = 1 << ci
        for tok in set(tokens):
            tid = vocab[tok]
            masks[tid] = masks.get(tid, 0) | bit

    entries: list[NGramEntry] = []
    for gram_ids, gtf in counts.items():
        if gtf < min_freq:
            continue
        distinct = set(gram_ids)
        mask = masks[distinct.pop()]
        for tid in distinct:
            mask &= masks[tid]
        sdf = mask.bit_count()
        gram = tuple(id_to_token[t] for t in gram_ids)
        weight = gtf * math.log(total / sdf)
        entries.append(NGramEntry(gram, gtf, sdf, weight))

    entries.sort(key=lambda e: e.gram)
    return NGramTable(tuple(entries), total, max_n)


# ---------------------------------------------------------------------------
# feature vectors
# ---------------------------------------------------------------------------

def vectorize(comment: AbstractedComment, table: NGramTable) -> FeatureVector:
    """tf * ln(D / sdf) for every table gram occurring contiguously in the
    comment; absent grams get no entry."""
    tokens = comment.tokens
    length = len(tokens)
    tf: dict[int, int] = {}
    top = min(table.max_n, length)
    for n in range(1, top + 1):
        for i in range(length - n + 1):
            gram_id = table.gram_id(tuple(tokens[i:i + n]))
            if gram_id is not None:
                tf[gram_id] = tf.get(gram_id, 0) + 1
    weights = {}
    for gram_id, count in tf.items():
        entry = table.entries[gram_id]
        weights[gram_id] = count * math.log(table.total_comments / entry.sdf)
    return FeatureVector(comment.comment_id, weights)


def top_features(table: NGramTable, k: int) -> list[NGramEntry]:
    """Entries ranked by corpus-level weight, ties broken lexicographically."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ranked = sorted(table.entries, key=lambda e: (-e.weight, e.gram))
    return ranked[:k]


# ---------------------------------------------------------------------------
# serialization (inspection + fixtures)
# ---------------------------------------------------------------------------

TABLE_HEADER = "# onhold ngram table v1"


def dumps_table(table: NGramTable) -> str:
    lines = [f"{TABLE_HEADER} D={table.total_comments} max_n={table.max_n}"]
    for e in table.entries:
        lines.append(f"{' '.join(e.gram)}\t{e.gtf}\t{e.sdf}\t{e.weight!r}")
    return "\n".join(lines) + "\n"


def loads_table(text: str) -> NGramTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith(TABLE_HEADER):
        raise ValueError("not an ngram table file")
    header = dict(
        part.split("=", 1) for part in lines[0][len(TABLE_HEADER):].split()
    )
    total = int(header["D"])
    max_n = int(header["max_n"])
    entries = []
    for line in lines[1:]:
        gram_text, gtf, sdf, weight = line.split("\t")
        entries.append(NGramEntry(
            tuple(gram_text.split(" ")), int(gtf), int(sdf), float(weight)
        ))
    return NGramTable(tuple(entries), total, max_n)
