"""Suffix-array n-gram enumeration against the brute-force oracle."""

from __future__ import annotations

import math
import random

import pytest

from onhold.errors import EmptyCorpus
from onhold.ngram import (
    NGramTable,
    dumps_table,
    enumerate_ngrams,
    loads_table,
    top_features,
    vectorize,
)
from onhold.preprocess import AbstractedComment

from oracles import naive_ngram_counts, naive_tf


def _comment(cid, tokens):
    return AbstractedComment(cid, tuple(tokens), ())


def _as_dict(table):
    return {e.gram: (e.gtf, e.sdf) for e in table.entries}


def test_two_identical_comments():
    table = enumerate_ngrams([["a", "b"], ["a", "b"]])
    assert _as_dict(table) == {
        ("a",): (2, 2),
        ("b",): (2, 2),
        ("a", "b"): (2, 2),
    }
    assert all(e.weight == 0.0 for e in table.entries)
    assert table.total_comments == 2


def test_single_comment_yields_nothing_at_min_freq_two():
    table = enumerate_ngrams([["a", "b"]])
    assert len(table) == 0


def test_weight_is_gtf_times_idf():
    table = enumerate_ngrams([["x", "y"], ["x", "y"], ["z", "z"], ["w", "w"]])
    entry = table.entries[table.gram_id(("x", "y"))]
    assert entry.gtf == 2 and entry.sdf == 2
    assert entry.weight == pytest.approx(2 * math.log(2), abs=1e-12)
    assert entry.idf(table.total_comments) == pytest.approx(
        math.log(2), abs=1e-12
    )


def test_sdf_uses_set_semantics():
    # third comment holds both tokens, scattered and out of order
    corpus = [["a", "b"], ["a", "b"], ["b", "c", "a"]]
    table = enumerate_ngrams(corpus)
    entry = table.entries[table.gram_id(("a", "b"))]
    assert entry.gtf == 2
    assert entry.sdf == 3


def test_max_n_bounds_gram_length():
    corpus = [["a", "b", "c", "d"], ["a", "b", "c", "d"]]
    table = enumerate_ngrams(corpus, max_n=2)
    assert max(len(e.gram) for e in table.entries) == 2


def test_overlapping_occurrences_count():
    table = enumerate_ngrams([["a", "a", "a"], ["a", "a", "a"]], min_freq=2)
    entry = table.entries[table.gram_id(("a", "a"))]
    assert entry.gtf == 4


def test_accepts_abstracted_comments():
    raw = [["a", "b"], ["a", "b"]]
    wrapped = [_comment(f"c{i}", toks) for i, toks in enumerate(raw)]
    assert _as_dict(enumerate_ngrams(raw)) == _as_dict(enumerate_ngrams(wrapped))


def test_empty_corpus_rejected():
    with pytest.raises(EmptyCorpus):
        enumerate_ngrams([])


def test_oracle_equivalence_fuzz():
    rng = random.Random(1234)
    vocab = ["a", "b", "c", "d", "e", "f"]
    for trial in range(80):
        corpus = [
            [vocab[rng.randrange(1 + trial % 6)] for _ in range(rng.randint(1, 12))]
            for _ in range(rng.randint(1, 10))
        ]
        for min_freq in (1, 2, 3):
            for max_n in (1, 3, 10):
                table = enumerate_ngrams(corpus, max_n=max_n, min_freq=min_freq)
                expected = naive_ngram_counts(corpus, max_n=max_n, min_freq=min_freq)
                assert _as_dict(table) == expected


def test_vectorize_matches_naive_tf():
    rng = random.Random(99)
    vocab = ["a", "b", "c"]
    corpus = [
        [vocab[rng.randrange(3)] for _ in range(rng.randint(2, 10))]
        for _ in range(8)
    ]
    table = enumerate_ngrams(corpus, min_freq=1)
    for i, tokens in enumerate(corpus):
        vec = vectorize(_comment(f"c{i}", tokens), table)
        for gram_id, value in vec.weights.items():
            entry = table.entries[gram_id]
            tf = naive_tf(tokens, entry.gram)
            assert tf > 0
            assert value == pytest.approx(
                tf * math.log(table.total_comments / entry.sdf), abs=1e-12
            )
        # every table gram present in the comment produced an entry
        for entry in table.entries:
            if naive_tf(tokens, entry.gram) > 0:
                assert table.gram_id(entry.gram) in vec.weights


def test_vectorize_unknown_tokens_empty():
    table = enumerate_ngrams([["a", "b"], ["a", "b"]])
    vec = vectorize(_comment("c", ["q", "r"]), table)
    assert vec.weights == {}
    assert vec.comment_id == "c"


def test_top_features_ordering():
    corpus = [
        ["until", "parser", "release"],
        ["until", "parser", "release"],
        ["until", "the", "release"],
        ["parser", "release", "note"],
        ["until", "release"],
        ["parser", "release"],
    ]
    table = enumerate_ngrams(corpus)
    ranked = top_features(table, 3)
    assert ranked[0].gram == ("until", "parser")
    assert ranked[1].gram == ("until", "parser", "release")
    assert ranked[0].weight == pytest.approx(2 * math.log(3), abs=1e-12)
    weights = [e.weight for e in top_features(table, len(table))]
    assert weights == sorted(weights, reverse=True)
    with pytest.raises(ValueError):
        top_features(table, 0)


def test_table_round_trip():
    corpus = [["a", "b", "a"], ["a", "b"], ["b", "b"]]
    table = enumerate_ngrams(corpus, max_n=3, min_freq=1)
    back = loads_table(dumps_table(table))
    assert back == table


def test_loads_table_rejects_junk():
    with pytest.raises(ValueError):
        loads_table("not a table\n")


def test_gram_id_lookup():
    table = enumerate_ngrams([["a", "b"], ["a", "b"]])
    assert table.gram_id(("a", "b")) is not None
    assert table.gram_id(("zz",)) is None
    assert isinstance(table, NGramTable)
