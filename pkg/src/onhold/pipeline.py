"""End-to-end flows shared by the command line and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import ConditionReport, detect_conditions
from .corpus import Dataset, Label
from .model import (
    Hyperparams,
    LinearModel,
    Prediction,
    TermCountModel,
    classify_tokens,
    to_count_model,
    train,
)
from .ngram import NGramTable, enumerate_ngrams, vectorize
from .preprocess import preprocess, preprocess_text


@dataclass(frozen=True)
class TrainResult:
    model: LinearModel
    table: NGramTable
    count_model: TermCountModel
    n_comments: int
    n_positive: int


def train_from_dataset(
    dataset: Dataset,
    hyperparams: Hyperparams | None = None,
    variant: str = "ngram",
    products=None,
) -> TrainResult:
    """Preprocess, build the feature table, and fit the classifier.
    Not-SATD comments are excluded up front."""
    ds = dataset.satd_only()
    comments = list(ds.comments)
    abstracted = [preprocess(c, products) for c in comments]
    max_n = 1 if variant == "unigram" else 10
    table = enumerate_ngrams(abstracted, max_n=max_n, min_freq=2)
    vectors = [vectorize(c, table) for c in abstracted]
    labels = [c.label for c in comments]
    model = train(vectors, labels, hyperparams)
    return TrainResult(
        model=model,
        table=table,
        count_model=to_count_model(model, table),
        n_comments=len(comments),
        n_positive=sum(1 for lab in labels if lab is Label.ON_HOLD),
    )


def classify_text(
    model: TermCountModel,
    comment_id: str,
    text: str,
    products=None,
    threshold: float = 0.5,
) -> Prediction:
    abstracted = preprocess_text(comment_id, text, products)
    return classify_tokens(model, abstracted, threshold)


def conditions_for_text(
    comment_id: str, text: str, products=None
) -> ConditionReport:
    return detect_conditions(preprocess_text(comment_id, text, products))
