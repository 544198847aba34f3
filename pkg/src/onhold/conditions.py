"""Extraction of the concrete event an on-hold comment is waiting for.

Works purely on the placeholder spans produced by term abstraction. A
bug-tracker URL immediately followed by the bug id lifted out of it acts
as one bug-id unit (the URL itself is reported as ignored). Units are then
grouped left to right:

  date                                   -> Date condition
  product + maximal run of versions      -> ProductVersion condition
  product + maximal run of bug ids       -> ProductBug condition

"Followed by" is adjacency in placeholder order; plain words between two
placeholders do not break a group. Anything that joins no condition (bare
products, orphan versions or bug ids, URLs) lands in ignored_placeholders,
so conditions' parts plus ignored spans always partition the spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from .preprocess import (
    PLACEHOLDER_BUGID,
    PLACEHOLDER_DATE,
    PLACEHOLDER_PRODUCT,
    PLACEHOLDER_URL,
    PLACEHOLDER_VERSION,
    AbstractedComment,
    AbstractionSpan,
)

KIND_DATE = "Date"
KIND_PRODUCT_VERSION = "ProductVersion"
KIND_PRODUCT_BUG = "ProductBug"


@dataclass(frozen=True)
class Condition:
    kind: str
    parts: tuple[str, ...]


@dataclass(frozen=True)
class ConditionReport:
    comment_id: str
    conditions: tuple[Condition, ...]
    ignored: tuple[AbstractionSpan, ...]


def detect_conditions(comment: AbstractedComment) -> ConditionReport:
    conditions: list[Condition] = []
    ignored: list[AbstractionSpan] = []

    # collapse each url+bugid pair into a single bug-id unit
    units: list[tuple[str, AbstractionSpan]] = []
    spans = comment.spans
    i = 0
    while i < len(spans):
        span = spans[i]
        if (
            span.placeholder == PLACEHOLDER_URL
            and i + 1 < len(spans)
            and spans[i + 1].placeholder == PLACEHOLDER_BUGID
            and spans[i + 1].position == span.position + 1
        ):
            ignored.append(span)
            units.append((PLACEHOLDER_BUGID, spans[i + 1]))
            i += 2
        else:
            units.append((span.placeholder, span))
            i += 1

    j = 0
    while j < len(units):
        kind, span = units[j]
        if kind == PLACEHOLDER_DATE:
            conditions.append(Condition(KIND_DATE, (span.original,)))
            j += 1
            continue
        if kind == PLACEHOLDER_PRODUCT:
            run_kind = units[j + 1][0] if j + 1 < len(units) else None
            if run_kind in (PLACEHOLDER_VERSION, PLACEHOLDER_BUGID):
                parts = [span.original]
                k = j + 1
                while k < len(units) and units[k][0] == run_kind:
                    parts.append(units[k][1].original)
                    k += 1
                name = (
                    KIND_PRODUCT_VERSION
                    if run_kind == PLACEHOLDER_VERSION
                    else KIND_PRODUCT_BUG
                )
                conditions.append(Condition(name, tuple(parts)))
                j = k
                continue
        ignored.append(span)
        j += 1

    return ConditionReport(comment.comment_id, tuple(conditions), tuple(ignored))


@dataclass(frozen=True)
class GoldCondition:
    comment_id: str
    kind: str
    parts: tuple[str, ...]


@dataclass(frozen=True)
class ConditionAccuracy:
    correct: int
    spurious: int
    ratio: float
    undefined: bool


def condition_accuracy(reports, gold) -> ConditionAccuracy:
    """Fraction of detected conditions that match a gold one. Each gold
    condition can be consumed once; unmatched detections are spurious.
    Undefined (ratio 0.0) when nothing was detected at all."""
    pool: dict[tuple, int] = {}
    for g in gold:
        key = (g.comment_id, g.kind, g.parts)
        pool[key] = pool.get(key, 0) + 1
    correct = spurious = 0
    for report in reports:
        for cond in report.conditions:
            key = (report.comment_id, cond.kind, cond.parts)
            if pool.get(key, 0) > 0:
                pool[key] -= 1
                correct += 1
            else:
                spurious += 1
    total = correct + spurious
    if total == 0:
        return ConditionAccuracy(0, 0, 0.0, True)
    return ConditionAccuracy(correct, spurious, correct / total, False)
