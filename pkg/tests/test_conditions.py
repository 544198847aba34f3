"""Grouping placeholder spans into waiting conditions."""

from __future__ import annotations

import random

import pytest

from onhold.conditions import (
    KIND_DATE,
    KIND_PRODUCT_BUG,
    KIND_PRODUCT_VERSION,
    Condition,
    GoldCondition,
    condition_accuracy,
    detect_conditions,
)
from onhold.preprocess import preprocess_text

GOLDENS = [
    ("Can be removed after 26 June 2013", [(KIND_DATE, ("26 June 2013",))]),
    (
        "remove the httpBindingRef look up in Camel 3.0",
        [(KIND_PRODUCT_VERSION, ("Camel", "3.0"))],
    ),
    ("FIXME (CAMEL-3091): @Test", [(KIND_PRODUCT_BUG, ("CAMEL", "3091"))]),
    ("After YARN-2 is committed", [(KIND_PRODUCT_BUG, ("YARN", "2"))]),
]


@pytest.mark.parametrize("text,expected", GOLDENS, ids=[g[0][:24] for g in GOLDENS])
def test_condition_goldens(text, expected):
    report = detect_conditions(preprocess_text("c", text))
    assert [(c.kind, c.parts) for c in report.conditions] == expected
    assert report.comment_id == "c"


def test_intervening_words_do_not_break_groups():
    report = detect_conditions(
        preprocess_text("c", "Camel should handle this from version 3.0 onwards")
    )
    assert report.conditions == (
        Condition(KIND_PRODUCT_VERSION, ("Camel", "3.0")),
    )


def test_maximal_runs():
    versions = detect_conditions(preprocess_text("c", "supported in Camel 2.9 2.10"))
    assert versions.conditions == (
        Condition(KIND_PRODUCT_VERSION, ("Camel", "2.9", "2.10")),
    )
    dates = detect_conditions(
        preprocess_text("c", "between 22/05/2012 and 23 June 2013")
    )
    assert [c.kind for c in dates.conditions] == [KIND_DATE, KIND_DATE]
    assert [c.parts for c in dates.conditions] == [("22/05/2012",), ("23 June 2013",)]


def test_orphan_placeholders_are_ignored():
    report = detect_conditions(preprocess_text("c", "wait for hadoop"))
    assert report.conditions == ()
    assert [s.original for s in report.ignored] == ["hadoop"]
    orphan_version = detect_conditions(preprocess_text("c", "bump to 1.9.3 soon"))
    assert orphan_version.conditions == ()
    assert [s.original for s in orphan_version.ignored] == ["1.9.3"]


def test_tracker_url_counts_as_bug_id():
    report = detect_conditions(
        preprocess_text(
            "c", "blocked on Camel https://issues.apache.org/jira/browse/CAMEL-5553"
        )
    )
    assert report.conditions == (
        Condition(KIND_PRODUCT_BUG, ("Camel", "CAMEL-5553")),
    )
    assert [s.placeholder for s in report.ignored] == ["@abstracturl"]


def test_tracker_url_without_product_stays_ignored():
    report = detect_conditions(
        preprocess_text("c", "see https://issues.apache.org/jira/browse/CAMEL-5553")
    )
    assert report.conditions == ()
    assert [s.original for s in report.ignored] == [
        "https://issues.apache.org/jira/browse/CAMEL-5553",
        "CAMEL-5553",
    ]


def test_no_markers_no_output():
    report = detect_conditions(preprocess_text("c", "plain old comment text"))
    assert report.conditions == ()
    assert report.ignored == ()


FRAGMENTS = [
    "fix before 22/05/2012",
    "hadoop",
    "Camel 2.9",
    "YARN-42 blocks this",
    "https://issues.apache.org/jira/browse/CAMEL-5553",
    "works fine",
    "upgrade to 4.0",
    "jetty-9.3",
]


def test_spans_partition_into_parts_and_ignored():
    rng = random.Random(11)
    for trial in range(100):
        text = " and ".join(
            rng.choice(FRAGMENTS) for _ in range(rng.randint(1, 6))
        )
        comment = preprocess_text(f"fuzz-{trial}", text)
        report = detect_conditions(comment)
        used = [part for cond in report.conditions for part in cond.parts]
        used += [span.original for span in report.ignored]
        assert sorted(used) == sorted(span.original for span in comment.spans)


def test_plain_words_do_not_influence_detection():
    comment = preprocess_text("c", "remove this once Camel 3.0 is out")
    spans_only = comment.__class__(
        comment_id="c2",
        tokens=tuple(t for t in comment.tokens if t.startswith("@abstract")),
        spans=tuple(
            s.__class__(s.placeholder, s.original, i)
            for i, s in enumerate(comment.spans)
        ),
    )
    full = detect_conditions(comment)
    stripped = detect_conditions(spans_only)
    assert [(c.kind, c.parts) for c in full.conditions] == [
        (c.kind, c.parts) for c in stripped.conditions
    ]


# ---------------------------------------------------------------------------
# accuracy accounting
# ---------------------------------------------------------------------------

def _report_for(cid, text):
    return detect_conditions(preprocess_text(cid, text))


def test_accuracy_published_arithmetic():
    reports = []
    gold = []
    for i in range(80):
        reports.append(_report_for(f"ok-{i}", "ready after Camel 3.0"))
        gold.append(GoldCondition(f"ok-{i}", KIND_PRODUCT_VERSION, ("Camel", "3.0")))
    for i in range(9):
        # detected, but the annotator marked a different condition
        reports.append(_report_for(f"bad-{i}", "ready after Camel 3.0"))
        gold.append(GoldCondition(f"bad-{i}", KIND_DATE, ("26 June 2013",)))
    result = condition_accuracy(reports, gold)
    assert (result.correct, result.spurious) == (80, 9)
    assert result.ratio == pytest.approx(80 / 89, abs=1e-9)
    assert not result.undefined


def test_accuracy_edge_cases():
    empty = condition_accuracy([], [])
    assert empty.undefined and empty.ratio == 0.0
    single = condition_accuracy(
        [_report_for("a", "After YARN-2 is committed")],
        [GoldCondition("a", KIND_PRODUCT_BUG, ("YARN", "2"))],
    )
    assert (single.correct, single.spurious, single.ratio) == (1, 0, 1.0)


def test_accuracy_consumes_gold_once():
    reports = [
        _report_for("a", "After YARN-2 is committed, after YARN-2 is committed"),
    ]
    assert sum(len(r.conditions) for r in reports) == 2
    result = condition_accuracy(
        reports, [GoldCondition("a", KIND_PRODUCT_BUG, ("YARN", "2"))]
    )
    assert (result.correct, result.spurious) == (1, 1)


def test_accuracy_requires_matching_comment_id():
    result = condition_accuracy(
        [_report_for("a", "After YARN-2 is committed")],
        [GoldCondition("b", KIND_PRODUCT_BUG, ("YARN", "2"))],
    )
    assert (result.correct, result.spurious) == (0, 1)
