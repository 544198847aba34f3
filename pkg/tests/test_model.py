"""Logistic model training, scoring, baseline, and model persistence."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

from onhold.corpus import Label
from onhold.errors import (
    DegenerateTraining,
    IoError,
    MalformedRow,
    ModelVersionError,
    NonFiniteLoss,
)
from onhold.model import (
    DEFAULT_KEYWORDS,
    Hyperparams,
    KeywordBaseline,
    LinearModel,
    baseline_classify,
    build_unigram_table,
    dumps_model,
    load_model,
    loads_model,
    logistic_loss_grad,
    predict,
    save_model,
    score,
    score_tokens,
    to_count_model,
    train,
)
from onhold.ngram import FeatureVector, enumerate_ngrams, vectorize
from onhold.preprocess import AbstractedComment, preprocess_text

from oracles import numeric_gradient


def _vec(cid, weights):
    return FeatureVector(cid, weights)


def _random_problem(rng, n_rows=6, dim=5):
    rows, cols, vals = [], [], []
    for r in range(n_rows):
        for c in range(dim):
            if rng.random() < 0.6:
                rows.append(r)
                cols.append(c)
                vals.append(rng.uniform(-2, 2))
    y = np.asarray([rng.choice([-1.0, 1.0]) for _ in range(n_rows)])
    sw = np.asarray([rng.uniform(0.5, 3.0) for _ in range(n_rows)])
    return (
        np.asarray(rows, dtype=np.int64),
        np.asarray(cols, dtype=np.int64),
        np.asarray(vals, dtype=np.float64),
        y,
        sw,
    )


def test_gradient_matches_finite_differences():
    rng = random.Random(7)
    rows, cols, vals, y, sw = _random_problem(rng)
    lam = 0.01
    w0 = np.asarray([rng.uniform(-1, 1) for _ in range(5)])
    b0 = rng.uniform(-1, 1)

    def loss_of(theta):
        loss, _, _ = logistic_loss_grad(
            theta[:-1], float(theta[-1]), rows, cols, vals, y, sw, lam
        )
        return loss

    _, grad_w, grad_b = logistic_loss_grad(w0, b0, rows, cols, vals, y, sw, lam)
    analytic = np.concatenate([grad_w, [grad_b]])
    numeric = numeric_gradient(loss_of, np.concatenate([w0, [b0]]))
    denom = max(np.linalg.norm(numeric), 1e-12)
    assert np.linalg.norm(analytic - numeric) / denom < 1e-6


SEPARABLE_VECTORS = [
    _vec("p1", {0: 2.0, 1: 1.0}),
    _vec("p2", {0: 1.5}),
    _vec("p3", {0: 2.5, 2: 0.5}),
    _vec("n1", {1: 2.0}),
    _vec("n2", {1: 1.0, 2: 1.0}),
    _vec("n3", {2: 2.0}),
]
SEPARABLE_LABELS = [
    Label.ON_HOLD, Label.ON_HOLD, Label.ON_HOLD,
    Label.NOT_ON_HOLD, Label.NOT_ON_HOLD, Label.NOT_ON_HOLD,
]


def test_training_loss_never_increases():
    hp = Hyperparams(learning_rate=0.1, epochs=200)
    model = train(SEPARABLE_VECTORS, SEPARABLE_LABELS, hp)
    history = model.loss_history
    assert len(history) == 200
    assert all(b <= a + 1e-9 for a, b in zip(history, history[1:]))
    assert history[-1] < history[0]


def test_training_is_deterministic():
    a = train(SEPARABLE_VECTORS, SEPARABLE_LABELS)
    b = train(SEPARABLE_VECTORS, SEPARABLE_LABELS)
    assert a.bias == b.bias
    assert a.weights == b.weights
    assert a.loss_history == b.loss_history


def test_training_separates_the_classes():
    model = train(SEPARABLE_VECTORS, SEPARABLE_LABELS)
    scores = [score(model, v) for v in SEPARABLE_VECTORS]
    assert min(scores[:3]) > max(scores[3:])


def test_default_class_weight_is_imbalance_ratio():
    vectors = SEPARABLE_VECTORS + [_vec("n4", {2: 1.0})]
    labels = SEPARABLE_LABELS + [Label.NOT_ON_HOLD]
    model = train(vectors, labels)
    assert model.hyperparams.class_weight_positive == pytest.approx(4 / 3)


def test_single_class_training_rejected():
    with pytest.raises(DegenerateTraining):
        train(SEPARABLE_VECTORS[:3], SEPARABLE_LABELS[:3])


def test_not_satd_labels_rejected():
    with pytest.raises(ValueError):
        train(SEPARABLE_VECTORS[:2], [Label.ON_HOLD, Label.NOT_SATD])


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_overflow_reported_with_epoch():
    vectors = [_vec("a", {0: 1e300}), _vec("b", {0: -1e300})]
    labels = [Label.ON_HOLD, Label.NOT_ON_HOLD]
    with pytest.raises(NonFiniteLoss):
        train(vectors, labels, Hyperparams(learning_rate=1e10, epochs=5))


def test_score_of_zero_model_is_half():
    model = LinearModel(0.0, {}, Hyperparams())
    assert score(model, _vec("c", {})) == 0.5


def test_score_sigmoid_golden():
    model = LinearModel(math.log(3), {}, Hyperparams())
    assert score(model, _vec("c", {})) == pytest.approx(0.75, abs=1e-12)


def test_predict_threshold_boundary():
    model = LinearModel(0.0, {}, Hyperparams())
    assert predict(model, _vec("c", {}), 0.5).predicted is Label.ON_HOLD
    assert predict(model, _vec("c", {}), 0.51).predicted is Label.NOT_ON_HOLD


def test_hyperparams_validation():
    with pytest.raises(ValueError):
        Hyperparams(l2_lambda=-1)
    with pytest.raises(ValueError):
        Hyperparams(learning_rate=0)
    with pytest.raises(ValueError):
        Hyperparams(epochs=0)
    with pytest.raises(ValueError):
        Hyperparams(class_weight_positive=0)


# ---------------------------------------------------------------------------
# keyword baseline
# ---------------------------------------------------------------------------

def test_baseline_keyword_set():
    assert DEFAULT_KEYWORDS == frozenset(
        {"should", "when", "once", "remove", "workaround",
         "fixed", "after", "will"}
    )


def test_baseline_no_keywords_means_negative():
    comment = preprocess_text("c", "todo add javadoc")
    pred = baseline_classify(KeywordBaseline(), comment)
    assert pred.predicted is Label.NOT_ON_HOLD
    assert pred.score == 0.0


def test_baseline_counts_distinct_keywords():
    comment = AbstractedComment("c", ("when", "it", "lands", "after", "when"), ())
    pred = baseline_classify(KeywordBaseline(), comment)
    assert pred.score == pytest.approx(2 / 8)
    assert pred.predicted is Label.ON_HOLD


def test_baseline_flags_workaround_comment():
    text = (
        "Ugly workaround because CodeMirror never hides lines completely. "
        "TODO: Change to use CodeMirror's official workaround after updating "
        "the library to latest HEAD."
    )
    pred = baseline_classify(KeywordBaseline(), preprocess_text("c", text))
    assert pred.predicted is Label.ON_HOLD


def test_baseline_custom_keywords():
    baseline = KeywordBaseline(frozenset({"someday"}))
    comment = AbstractedComment("c", ("someday", "maybe"), ())
    assert baseline_classify(baseline, comment).score == 1.0
    with pytest.raises(ValueError):
        KeywordBaseline(frozenset())


def test_build_unigram_table_is_single_token():
    table = build_unigram_table([["a", "b"], ["a", "b"]])
    assert all(len(e.gram) == 1 for e in table.entries)


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------

def _trained_pair():
    corpus = [
        preprocess_text(f"p{i}", "remove workaround after jetty 9.3 lands")
        for i in range(4)
    ] + [
        preprocess_text(f"n{i}", "maps a column name to the physical index")
        for i in range(4)
    ]
    labels = [Label.ON_HOLD] * 4 + [Label.NOT_ON_HOLD] * 4
    table = enumerate_ngrams(corpus, min_freq=2)
    vectors = [vectorize(c, table) for c in corpus]
    model = train(vectors, labels)
    return corpus, table, model


def test_count_model_scores_match_vector_scores():
    corpus, table, model = _trained_pair()
    count_model = to_count_model(model, table)
    for comment in corpus:
        via_vector = score(model, vectorize(comment, table))
        via_tokens = score_tokens(count_model, comment.tokens)
        assert via_tokens == pytest.approx(via_vector, abs=1e-9)


def test_count_model_drops_zero_weights():
    _, table, model = _trained_pair()
    count_model = to_count_model(model, table)
    assert all(w != 0.0 for w in count_model.coefficients.values())


def test_model_file_round_trip(tmp_path):
    _, table, model = _trained_pair()
    count_model = to_count_model(model, table)
    path = tmp_path / "model.tsv"
    save_model(count_model, str(path))
    loaded = load_model(str(path))
    assert loaded.bias == count_model.bias
    assert loaded.coefficients == count_model.coefficients
    assert loaded.max_n == count_model.max_n


def test_save_linear_model_needs_table(tmp_path):
    _, table, model = _trained_pair()
    path = tmp_path / "model.tsv"
    with pytest.raises(ValueError):
        save_model(model, str(path))
    save_model(model, str(path), table=table)
    assert load_model(str(path)).coefficients


def test_loads_model_rejects_unknown_header():
    with pytest.raises(ModelVersionError):
        loads_model("# onhold model v99\nbias\t0.0\n")


def test_loads_model_reports_malformed_row():
    _, table, model = _trained_pair()
    text = dumps_model(to_count_model(model, table))
    with pytest.raises(MalformedRow) as exc:
        loads_model(text + "broken line without a tab\n")
    assert "gram" in exc.value.reason or "coefficient" in exc.value.reason
    with pytest.raises(MalformedRow):
        loads_model("# onhold model v1\nbias\tnot-a-float\n")
    with pytest.raises(MalformedRow):
        loads_model("# onhold model v1\nremove after\t1.5\n")


def test_load_model_missing_file(tmp_path):
    with pytest.raises(IoError):
        load_model(str(tmp_path / "missing.tsv"))
