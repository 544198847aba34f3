"""Classifier training, scoring, and model persistence.

Training is full-batch gradient descent on class-weighted L2-regularized
logistic loss with zero initialization, so identical inputs always yield
bit-identical weights. The in-memory model keyed by table gram ids scores
tf*idf feature vectors; the saved model folds each gram's ln(D/sdf) factor
into its coefficient so that a model file alone (no table) can score a
comment from raw within-comment term counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .corpus import Label
from .errors import (
    DegenerateTraining,
    IoError,
    MalformedRow,
    ModelVersionError,
    NonFiniteLoss,
)
from .fileio import atomic_write_text
from .ngram import FeatureVector, NGramTable, enumerate_ngrams
from .preprocess import AbstractedComment


@dataclass(frozen=True)
class Hyperparams:
    l2_lambda: float = 1e-4
    learning_rate: float = 0.5
    epochs: int = 300
    class_weight_positive: float | None = None  # None: negatives/positives
    seed: int = 0

    def __post_init__(self):
        if self.l2_lambda < 0:
            raise ValueError("l2_lambda must be >= 0")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.class_weight_positive is not None and self.class_weight_positive <= 0:
            raise ValueError("class_weight_positive must be > 0")


@dataclass(frozen=True)
class LinearModel:
    """Weights keyed by gram id of the table the training vectors came from."""
    bias: float
    weights: dict[int, float]
    hyperparams: Hyperparams
    loss_history: tuple[float, ...] = field(repr=False, default=())


@dataclass(frozen=True)
class Prediction:
    comment_id: str
    score: float
    predicted: Label


def _expit(z):
    # equivalent to 1/(1+exp(-z)) but stable for large |z|
    return 0.5 * (1.0 + np.tanh(0.5 * np.asarray(z, dtype=np.float64)))


def logistic_loss_grad(
    w: np.ndarray,
    bias: float,
    rows: np.ndarray,
    cols: np.ndarray,
    vals: np.ndarray,
    y: np.ndarray,
    sample_weight: np.ndarray,
    l2_lambda: float,
) -> tuple[float, np.ndarray, float]:
    """Weighted-mean logistic loss with L2 penalty on w (not bias).

    The sparse design matrix is given in coordinate form (rows, cols, vals);
    y is +/-1 per instance. Returns (loss, grad_w, grad_bias).
    """
    n = y.size
    z = np.full(n, bias, dtype=np.float64)
    np.add.at(z, rows, vals * w[cols])
    margins = y * z
    total_weight = sample_weight.sum()
    losses = np.logaddexp(0.0, -margins)
    loss = float((sample_weight * losses).sum() / total_weight)
    loss += 0.5 * l2_lambda * float(w @ w)

    dz = sample_weight * (-y) * _expit(-margins) / total_weight
    grad_w = np.zeros_like(w)
    np.add.at(grad_w, cols, vals * dz[rows])
    grad_w += l2_lambda * w
    grad_b = float(dz.sum())
    return loss, grad_w, grad_b


def _coo_from_vectors(vectors: list[FeatureVector]):
    rows, cols, vals = [], [], []
    for r, vec in enumerate(vectors):
        for gram_id, value in vec.weights.items():
            rows.append(r)
            cols.append(gram_id)
            vals.append(value)
    return (
        np.asarray(rows, dtype=np.int64),
        np.asarray(cols, dtype=np.int64),
        np.asarray(vals, dtype=np.float64),
    )


def train(
    vectors: list[FeatureVector],
    labels: list[Label],
    hyperparams: Hyperparams | None = None,
) -> LinearModel:
    """Fit the logistic model; deterministic for identical inputs."""
    hp = hyperparams if hyperparams is not None else Hyperparams()
    if len(vectors) != len(labels):
        raise ValueError("vectors and labels must be aligned")
    if any(lab is Label.NOT_SATD for lab in labels):
        raise ValueError("not_satd instances must be excluded before training")
    n_pos = sum(1 for lab in labels if lab is Label.ON_HOLD)
    n_neg = len(labels) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise DegenerateTraining()

    dim = 0
    for vec in vectors:
        if vec.weights:
            dim = max(dim, max(vec.weights) + 1)

    y = np.asarray(
        [1.0 if lab is Label.ON_HOLD else -1.0 for lab in labels], dtype=np.float64
    )
    pos_weight = (
        hp.class_weight_positive
        if hp.class_weight_positive is not None
        else n_neg / n_pos
    )
    sample_weight = np.where(y > 0, pos_weight, 1.0)
    rows, cols, vals = _coo_from_vectors(vectors)

    w = np.zeros(dim, dtype=np.float64)
    bias = 0.0
    history = []
    for epoch in range(hp.epochs):
        loss, grad_w, grad_b = logistic_loss_grad(
            w, bias, rows, cols, vals, y, sample_weight, hp.l2_lambda
        )
        if not math.isfinite(loss):
            raise NonFiniteLoss(epoch)
        history.append(loss)
        w -= hp.learning_rate * grad_w
        bias -= hp.learning_rate * grad_b

    resolved = Hyperparams(
        l2_lambda=hp.l2_lambda,
        learning_rate=hp.learning_rate,
        epochs=hp.epochs,
        class_weight_positive=pos_weight,
        seed=hp.seed,
    )
    weights = {gram_id: float(w[gram_id]) for gram_id in range(dim)}
    return LinearModel(float(bias), weights, resolved, tuple(history))


def score(model: LinearModel, vector: FeatureVector) -> float:
    """Probability in (0, 1) that the comment is on hold."""
    z = model.bias
    for gram_id, value in vector.weights.items():
        z += model.weights.get(gram_id, 0.0) * value
    return float(_expit(z))


def predict(
    model: LinearModel, vector: FeatureVector, threshold: float = 0.5
) -> Prediction:
    s = score(model, vector)
    label = Label.ON_HOLD if s >= threshold else Label.NOT_ON_HOLD
    return Prediction(vector.comment_id, s, label)


# ---------------------------------------------------------------------------
# keyword baseline
# ---------------------------------------------------------------------------

DEFAULT_KEYWORDS = frozenset(
    {"should", "when", "once", "remove", "workaround", "fixed", "after", "will"}
)


@dataclass(frozen=True)
class KeywordBaseline:
    keywords: frozenset[str] = DEFAULT_KEYWORDS

    def __post_init__(self):
        if not self.keywords:
            raise ValueError("keyword set must be non-empty")


def baseline_classify(
    baseline: KeywordBaseline, comment: AbstractedComment
) -> Prediction:
    """Score = fraction of baseline keywords present among the tokens;
    any hit at all predicts on-hold."""
    present = baseline.keywords.intersection(comment.tokens)
    s = len(present) / len(baseline.keywords)
    label = Label.ON_HOLD if present else Label.NOT_ON_HOLD
    return Prediction(comment.comment_id, s, label)


def build_unigram_table(corpus, min_freq: int = 2) -> NGramTable:
    """Single-token variant of the feature table (ablation companion)."""
    return enumerate_ngrams(corpus, max_n=1, min_freq=min_freq)


# ---------------------------------------------------------------------------
# persistence: idf-folded term-count model
# ---------------------------------------------------------------------------

MODEL_HEADER = "# onhold model v1"


@dataclass(frozen=True)
class TermCountModel:
    """Self-contained scorer: coefficients apply to raw within-comment
    term counts because each gram's idf factor is folded in at save time."""
    bias: float
    coefficients: dict[tuple[str, ...], float]
    max_n: int


def to_count_model(model: LinearModel, table: NGramTable) -> TermCountModel:
    coefficients = {}
    max_n = 1
    for gram_id, w in model.weights.items():
        if w == 0.0:
            continue
        entry = table.entries[gram_id]
        coefficients[entry.gram] = w * entry.idf(table.total_comments)
        max_n = max(max_n, len(entry.gram))
    return TermCountModel(model.bias, coefficients, max_n)


def score_tokens(model: TermCountModel, tokens) -> float:
    tokens = tuple(tokens)
    z = model.bias
    top = min(model.max_n, len(tokens))
    for n in range(1, top + 1):
        for i in range(len(tokens) - n + 1):
            coef = model.coefficients.get(tokens[i:i + n])
            if coef is not None:
                z += coef
    return float(_expit(z))


def classify_tokens(
    model: TermCountModel, comment: AbstractedComment, threshold: float = 0.5
) -> Prediction:
    s = score_tokens(model, comment.tokens)
    label = Label.ON_HOLD if s >= threshold else Label.NOT_ON_HOLD
    return Prediction(comment.comment_id, s, label)


def dumps_model(model: TermCountModel) -> str:
    lines = [MODEL_HEADER, f"bias\t{model.bias!r}"]
    for gram in sorted(model.coefficients):
        lines.append(f"{' '.join(gram)}\t{model.coefficients[gram]!r}")
    return "\n".join(lines) + "\n"


def save_model(model, path, table: NGramTable | None = None) -> None:
    if isinstance(model, LinearModel):
        if table is None:
            raise ValueError("saving a LinearModel requires its ngram table")
        model = to_count_model(model, table)
    atomic_write_text(path, dumps_model(model))


def loads_model(text: str) -> TermCountModel:
    rows = [
        (no, line) for no, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not rows or rows[0][1].strip() != MODEL_HEADER:
        found = rows[0][1].strip() if rows else "<empty file>"
        raise ModelVersionError(found)
    bias = None
    coefficients: dict[tuple[str, ...], float] = {}
    max_n = 1
    for no, line in rows[1:]:
        key, sep, value = line.partition("\t")
        if not sep or not key:
            raise MalformedRow(no, "expected '<gram>\\t<coefficient>'")
        try:
            parsed = float(value)
        except ValueError:
            raise MalformedRow(no, f"bad coefficient {value!r}") from None
        if key == "bias":
            bias = parsed
            continue
        gram = tuple(key.split(" "))
        coefficients[gram] = parsed
        max_n = max(max_n, len(gram))
    if bias is None:
        raise MalformedRow(len(text.splitlines()), "model file lacks a bias row")
    return TermCountModel(bias, coefficients, max_n)


def load_model(path) -> TermCountModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(str(path), str(exc)) from exc
    return loads_model(text)
