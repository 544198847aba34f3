"""Deterministic synthetic corpus for end-to-end benchmarking.

Positives carry the contiguous cue phrases the sequence features are meant
to catch ("remove in <product> <version>", "workaround for <PRODUCT>-<id>").
Negatives recycle the same vocabulary (every content word of the positive
templates, the trigger keywords, and the abstracted placeholders appears
on both sides) but never the cue phrases themselves, so bag-of-words
features separate the classes only partially while contiguous multi-token
features separate them almost perfectly. A few positives carry no cue
phrase at all to keep even the sequence model imperfect.
"""

from __future__ import annotations

import numpy as np

from .corpus import Comment, Dataset, Label, Provenance

_PRODUCTS = ("Camel", "Hadoop", "Spark", "Maven", "Jetty", "Tomcat", "Hive", "Ant")

_MONTHS = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)

# cue-phrase templates; the contiguous word order is the signal
_POSITIVE_TEMPLATES = (
    "TODO remove in {product} {version}",
    "remove in {product} {version} after the rollout",
    "workaround for {upper}-{bug}",
    "workaround for {upper}-{bug} until the fix ships",
    "can be removed after {product} {version}",
    "hack until {upper}-{bug} is resolved",
    "disable this until {day} {month} {year}",
)

# positives with no cue phrase: hard for every variant
_POSITIVE_PLAIN = (
    "revisit this shim when the upstream fix finally lands",
    "temporary fallback remove it once the migration completes",
    "keep the old path until the cluster rollout finishes",
)

# negatives reuse every positive content word in scrambled contexts,
# including the placeholders, so no single token gives the class away
_NEGATIVE_TEMPLATES = (
    "remove the unused {product} import",
    "todo tidy the parser in this module",
    "the {product} {version} upgrade notes",
    "dropped in {product} {version} quietly",
    "see {upper}-{bug} for the design background",
    "the workaround section documents this",
    "a fix for the flaky teardown shipped",
    "after the loop the cursor advances",
    "can be tuned later if needed",
    "until the lock is held reads stall",
    "resolve the hostname once and cache it",
    "the hack from the old days lives on",
    "disable verbose logging before merging",
    "release notes from {day} {month} {year}",
    "the retry path was removed in a rewrite",
    "the rollout finished after the freeze",
    "{product} {version} ships with the new api",
    "will retry when the budget resets",
    "this should use a ring buffer",
    "fixed width records parse faster",
    "once warmed the cache stays hot",
    "when the queue drains workers park",
    "bump {product} to {version} in the pom",
    "the fallback path keeps old clients alive",
    "ported from {product} with renames",
    "iterate keys in insertion order",
    "values are cached between calls",
    "guard against empty input first",
    "the checksum covers header and payload",
    "binary search keeps lookups fast",
    "hack week demo code lives here",
    "until {version} lands this stays opt in",
    "can this be simplified some day",
    "the fix shipped in {product} {version}",
    "was removed after the freeze",
    "workaround removed once {upper}-{bug} shipped",
    "should we remove the shim for {product}",
    "after {day} {month} {year} the format changed",
    "todo profile the {product} write path",
)

# exact token-multiset permutations of the positive templates: identical
# bags of words in an order that never forms the cue phrase, so they tie
# with their positive counterpart under any bag-of-words scorer while the
# sequence features still tell them apart (each appears twice per cycle)
_PERMUTED_NEGATIVE_TEMPLATES = (
    "todo in {product} {version} remove",
    "after the rollout in {product} {version} remove",
    "for {upper}-{bug} workaround",
    "until the workaround fix ships for {upper}-{bug}",
    "after {product} {version} can be removed",
    "hack is resolved until {upper}-{bug}",
    "until {day} {month} {year} disable this",
)

_NOT_SATD_TEMPLATES = (
    "computes the rolling checksum of one block",
    "returns the number of entries currently cached",
    "maps a column name to its physical index",
    "formats the duration as a human readable string",
    "parses one line of the manifest into a record",
)

_PROJECTS = ("alpha", "beta", "gamma", "delta")


def _fill(template: str, rng) -> str:
    product = _PRODUCTS[rng.integers(len(_PRODUCTS))]
    return template.format(
        product=product,
        upper=product.upper(),
        version=f"{rng.integers(1, 9)}.{rng.integers(0, 9)}",
        bug=int(rng.integers(100, 9999)),
        day=int(rng.integers(1, 28)),
        month=_MONTHS[rng.integers(len(_MONTHS))],
        year=int(rng.integers(2010, 2024)),
    )


def make_benchmark(
    seed: int = 0,
    n_comments: int = 600,
    positive_fraction: float = 0.15,
    not_satd: int = 20,
) -> Dataset:
    """Generate the benchmark corpus; identical seeds give identical data."""
    rng = np.random.default_rng(seed)
    n_pos = round(n_comments * positive_fraction)
    n_neg = n_comments - n_pos - not_satd
    comments = []

    for i in range(n_pos):
        if i % 30 == 29:
            text = _POSITIVE_PLAIN[int(rng.integers(len(_POSITIVE_PLAIN)))]
        else:
            template = _POSITIVE_TEMPLATES[i % len(_POSITIVE_TEMPLATES)]
            text = _fill(template, rng)
        # positives never land in the last project, so its on-hold share
        # stays under any sensible cross-project eligibility ratio
        project = _PROJECTS[i % (len(_PROJECTS) - 1)]
        comments.append(
            Comment(f"synthetic-pos-{i:04d}", project, text, Label.ON_HOLD)
        )

    rotation = _NEGATIVE_TEMPLATES + 2 * _PERMUTED_NEGATIVE_TEMPLATES
    for i in range(n_neg):
        template = rotation[i % len(rotation)]
        text = _fill(template, rng)
        project = _PROJECTS[i % len(_PROJECTS)]
        comments.append(
            Comment(f"synthetic-neg-{i:04d}", project, text, Label.NOT_ON_HOLD)
        )

    for i in range(not_satd):
        text = _NOT_SATD_TEMPLATES[i % len(_NOT_SATD_TEMPLATES)]
        project = _PROJECTS[i % len(_PROJECTS)]
        comments.append(
            Comment(f"synthetic-doc-{i:04d}", project, text, Label.NOT_SATD)
        )

    provenance = Provenance(source=f"synthetic(seed={seed})", loaded_at="")
    return Dataset(tuple(comments), provenance)
