"""Request and response bodies for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class CommentIn(BaseModel):
    id: str = Field(min_length=1)
    text: str = Field(min_length=1)


class ClassifyRequest(BaseModel):
    comments: list[CommentIn]
    threshold: float = Field(default=0.5, ge=0.0, le=1.0)


class ConditionOut(BaseModel):
    kind: str
    parts: list[str]
    excerpt: str


class PredictionOut(BaseModel):
    id: str
    score: float
    label: str
    conditions: list[ConditionOut] = []


class ClassifyResponse(BaseModel):
    predictions: list[PredictionOut]


class SpanOut(BaseModel):
    placeholder: str
    original: str
    position: int


class ConditionReportOut(BaseModel):
    id: str
    conditions: list[ConditionOut]
    ignored: list[SpanOut]


class DetectRequest(BaseModel):
    comments: list[CommentIn]


class DetectResponse(BaseModel):
    reports: list[ConditionReportOut]


class BaselineRequest(BaseModel):
    comments: list[CommentIn]
    keywords: list[str] | None = None


class BaselinePredictionOut(BaseModel):
    id: str
    score: float
    label: str


class BaselineResponse(BaseModel):
    predictions: list[BaselinePredictionOut]


class HealthResponse(BaseModel):
    status: str
    model_loaded: bool
    version: str
