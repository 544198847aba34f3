"""Service operation handlers, shared by the HTTP app and the CLI.

Each handler is a pure function from a request body (plus whatever loaded
state it needs) to a response body, so the CLI can call them in-process
and the FastAPI layer stays a thin routing shell.
"""

from __future__ import annotations

from ..conditions import ConditionReport, detect_conditions
from ..model import KeywordBaseline, TermCountModel, baseline_classify, classify_tokens
from ..preprocess import preprocess_text
from .schemas import (
    BaselinePredictionOut,
    BaselineRequest,
    BaselineResponse,
    ClassifyRequest,
    ClassifyResponse,
    ConditionOut,
    ConditionReportOut,
    DetectRequest,
    DetectResponse,
    PredictionOut,
    SpanOut,
)


def excerpt_for(text: str, parts: tuple[str, ...]) -> str:
    """Raw-text span covering the condition parts in order; falls back to
    joining the parts when they cannot be located sequentially."""
    start = None
    cursor = 0
    end = 0
    for part in parts:
        idx = text.find(part, cursor)
        if idx < 0:
            return " ".join(parts)
        if start is None:
            start = idx
        cursor = idx + len(part)
        end = cursor
    if start is None:
        return ""
    return text[start:end]


def _conditions_out(report: ConditionReport, raw_text: str) -> list[ConditionOut]:
    return [
        ConditionOut(
            kind=c.kind,
            parts=list(c.parts),
            excerpt=excerpt_for(raw_text, c.parts),
        )
        for c in report.conditions
    ]


def classify_op(
    model: TermCountModel,
    request: ClassifyRequest,
    products=None,
) -> ClassifyResponse:
    predictions = []
    for item in request.comments:
        abstracted = preprocess_text(item.id, item.text, products)
        pred = classify_tokens(model, abstracted, request.threshold)
        report = detect_conditions(abstracted)
        predictions.append(PredictionOut(
            id=item.id,
            score=pred.score,
            label=pred.predicted.value,
            conditions=_conditions_out(report, item.text),
        ))
    return ClassifyResponse(predictions=predictions)


def detect_op(request: DetectRequest, products=None) -> DetectResponse:
    reports = []
    for item in request.comments:
        abstracted = preprocess_text(item.id, item.text, products)
        report = detect_conditions(abstracted)
        reports.append(ConditionReportOut(
            id=item.id,
            conditions=_conditions_out(report, item.text),
            ignored=[
                SpanOut(
                    placeholder=s.placeholder,
                    original=s.original,
                    position=s.position,
                )
                for s in report.ignored
            ],
        ))
    return DetectResponse(reports=reports)


def baseline_op(request: BaselineRequest, products=None) -> BaselineResponse:
    baseline = (
        KeywordBaseline(frozenset(request.keywords))
        if request.keywords
        else KeywordBaseline()
    )
    predictions = []
    for item in request.comments:
        abstracted = preprocess_text(item.id, item.text, products)
        pred = baseline_classify(baseline, abstracted)
        predictions.append(BaselinePredictionOut(
            id=item.id, score=pred.score, label=pred.predicted.value
        ))
    return BaselineResponse(predictions=predictions)
