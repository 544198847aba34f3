"""Shuffle-split evaluation, ranking metrics, and cross-project runs.

Fold planning draws each fold's test set independently (instances may
appear in several test sets), stratified so every test set keeps the
corpus positive/negative proportion within half an instance. All feature
tables and models are rebuilt per fold from that fold's training comments
only. Besides per-fold metric means, a comment-level verdict is kept: a
comment counts as classified correctly only if it was correct in every
fold whose test set contained it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .corpus import Dataset, Label
from .errors import SingleClass, TooFewInstances, TooFewProjects
from .model import (
    Hyperparams,
    KeywordBaseline,
    Prediction,
    baseline_classify,
    predict,
    train,
)
from .ngram import enumerate_ngrams, vectorize
from .preprocess import preprocess

VARIANTS = ("ngram", "unigram", "baseline")


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int


@dataclass(frozen=True)
class MetricValue:
    value: float
    undefined: bool = False


@dataclass(frozen=True)
class Fold:
    train_ids: tuple[int, ...]
    test_ids: tuple[int, ...]


@dataclass(frozen=True)
class FoldPlan:
    folds: tuple[Fold, ...]
    seed: int
    test_fraction: float
    stratified: bool


def stratified_folds(
    labels,
    n_folds: int = 10,
    test_fraction: float = 0.1,
    seed: int = 0,
    stratified: bool = True,
) -> FoldPlan:
    """Plan n_folds independent test draws over instance indices."""
    if n_folds < 1:
        raise ValueError("n_folds must be >= 1")
    if not 0.0 < test_fraction < 1.0:
        raise ValueError("test_fraction must be in (0, 1)")
    total = len(labels)
    test_size = round(total * test_fraction)
    if test_size < 1 or test_size >= total:
        raise TooFewInstances(
            f"{total} instances at test fraction {test_fraction} leave "
            f"{test_size} for testing"
        )
    rng = np.random.default_rng(seed)
    all_indices = np.arange(total)
    folds = []
    if stratified:
        positive = np.asarray(
            [i for i, lab in enumerate(labels) if lab is Label.ON_HOLD],
            dtype=np.int64,
        )
        negative = np.asarray(
            [i for i, lab in enumerate(labels) if lab is not Label.ON_HOLD],
            dtype=np.int64,
        )
        if positive.size == 0 or negative.size == 0:
            raise SingleClass()
        n_pos = round(test_size * positive.size / total)
        n_neg = test_size - n_pos
        if n_pos < 1 or n_neg < 1:
            raise TooFewInstances(
                "a class would have no instances in the test set"
            )
        for _ in range(n_folds):
            test = np.concatenate([
                rng.choice(positive, size=n_pos, replace=False),
                rng.choice(negative, size=n_neg, replace=False),
            ])
            test.sort()
            mask = np.ones(total, dtype=bool)
            mask[test] = False
            folds.append(Fold(tuple(all_indices[mask]), tuple(test)))
    else:
        for _ in range(n_folds):
            test = rng.choice(total, size=test_size, replace=False)
            test.sort()
            mask = np.ones(total, dtype=bool)
            mask[test] = False
            folds.append(Fold(tuple(all_indices[mask]), tuple(test)))
    return FoldPlan(tuple(folds), seed, test_fraction, stratified)


# ---------------------------------------------------------------------------
# metrics
# ---------------------------------------------------------------------------

def confusion(
    predictions: list[Prediction],
    actual: list[Label],
    threshold: float | None = None,
) -> ConfusionCounts:
    """Counts over aligned predictions and true labels. With a threshold,
    predicted-positive means score >= threshold; without one the stored
    predicted labels are honored (the baseline's rule differs from 0.5)."""
    if len(predictions) != len(actual):
        raise ValueError("predictions and actual labels must be aligned")
    tp = fp = tn = fn = 0
    for pred, truth in zip(predictions, actual):
        if threshold is None:
            said_positive = pred.predicted is Label.ON_HOLD
        else:
            said_positive = pred.score >= threshold
        is_positive = truth is Label.ON_HOLD
        if said_positive and is_positive:
            tp += 1
        elif said_positive:
            fp += 1
        elif is_positive:
            fn += 1
        else:
            tn += 1
    return ConfusionCounts(tp, fp, tn, fn)


def precision(counts: ConfusionCounts) -> MetricValue:
    denom = counts.tp + counts.fp
    if denom == 0:
        return MetricValue(0.0, undefined=True)
    return MetricValue(counts.tp / denom)


def recall(counts: ConfusionCounts) -> MetricValue:
    denom = counts.tp + counts.fn
    if denom == 0:
        return MetricValue(0.0, undefined=True)
    return MetricValue(counts.tp / denom)


def f1(counts: ConfusionCounts) -> MetricValue:
    p = precision(counts)
    r = recall(counts)
    if p.undefined or r.undefined or p.value + r.value == 0.0:
        return MetricValue(0.0, undefined=True)
    return MetricValue(2 * p.value * r.value / (p.value + r.value))


def auc(scores, actual) -> float:
    """Probability a random positive outscores a random negative, ties
    counted half. Computed from mid-ranks: exact for any tie pattern."""
    n = len(scores)
    if n != len(actual):
        raise ValueError("scores and actual labels must be aligned")
    n_pos = sum(1 for lab in actual if lab is Label.ON_HOLD)
    n_neg = n - n_pos
    if n_pos == 0 or n_neg == 0:
        raise SingleClass()
    order = sorted(range(n), key=lambda i: scores[i])
    rank_sum = 0.0
    i = 0
    while i < n:
        j = i
        while j + 1 < n and scores[order[j + 1]] == scores[order[i]]:
            j += 1
        midrank = (i + j + 2) / 2  # 1-based ranks i+1 .. j+1
        group_pos = sum(
            1 for k in range(i, j + 1) if actual[order[k]] is Label.ON_HOLD
        )
        rank_sum += group_pos * midrank
        i = j + 1
    u = rank_sum - n_pos * (n_pos + 1) / 2
    return u / (n_pos * n_neg)


# ---------------------------------------------------------------------------
# cross validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FoldMetrics:
    fold: int
    test_size: int
    test_positives: int
    counts: ConfusionCounts
    precision: MetricValue
    recall: MetricValue
    f1: MetricValue
    auc: MetricValue


@dataclass(frozen=True)
class EvalReport:
    variant: str
    seed: int
    n_folds: int
    test_fraction: float
    stratified: bool
    threshold: float
    folds: tuple[FoldMetrics, ...]
    mean_precision: float
    mean_recall: float
    mean_f1: float
    mean_auc: float
    verdicts: dict
    onhold_tested: int
    onhold_correct: int


@dataclass(frozen=True)
class ProjectMetrics:
    project: str
    n_train: int
    test_size: int
    test_positives: int
    counts: ConfusionCounts
    precision: MetricValue
    recall: MetricValue
    f1: MetricValue
    auc: MetricValue


@dataclass(frozen=True)
class CrossProjectReport:
    variant: str
    threshold: float
    min_onhold_ratio: float
    projects: tuple[ProjectMetrics, ...]
    mean_precision: float
    mean_recall: float
    mean_f1: float
    mean_auc: float


def _fit_and_score(
    train_comments,
    train_labels,
    test_comments,
    variant: str,
    hyperparams: Hyperparams,
    threshold: float,
) -> list[Prediction]:
    if variant == "baseline":
        baseline = KeywordBaseline()
        return [baseline_classify(baseline, c) for c in test_comments]
    max_n = 1 if variant == "unigram" else 10
    table = enumerate_ngrams(train_comments, max_n=max_n, min_freq=2)
    vectors = [vectorize(c, table) for c in train_comments]
    model = train(vectors, train_labels, hyperparams)
    return [predict(model, vectorize(c, table), threshold) for c in test_comments]


def _fold_metrics(fold_no, predictions, truth, threshold) -> FoldMetrics:
    counts = confusion(predictions, truth, threshold=None)
    try:
        auc_metric = MetricValue(auc([p.score for p in predictions], truth))
    except SingleClass:
        auc_metric = MetricValue(0.0, undefined=True)
    return FoldMetrics(
        fold=fold_no,
        test_size=len(truth),
        test_positives=sum(1 for lab in truth if lab is Label.ON_HOLD),
        counts=counts,
        precision=precision(counts),
        recall=recall(counts),
        f1=f1(counts),
        auc=auc_metric,
    )


def cross_validate(
    dataset: Dataset,
    hyperparams: Hyperparams | None = None,
    variant: str = "ngram",
    n_folds: int = 10,
    test_fraction: float = 0.1,
    seed: int = 0,
    stratified: bool = True,
    threshold: float = 0.5,
    products=None,
) -> EvalReport:
    """Run the shuffle-split evaluation; not-SATD comments are excluded."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    hp = hyperparams if hyperparams is not None else Hyperparams(seed=seed)
    ds = dataset.satd_only()
    comments = list(ds.comments)
    abstracted = [preprocess(c, products) for c in comments]
    labels = [c.label for c in comments]
    plan = stratified_folds(labels, n_folds, test_fraction, seed, stratified)

    fold_rows = []
    verdicts: dict[str, bool] = {}
    for fold_no, fold in enumerate(plan.folds):
        train_comments = [abstracted[i] for i in fold.train_ids]
        train_labels = [labels[i] for i in fold.train_ids]
        test_comments = [abstracted[i] for i in fold.test_ids]
        truth = [labels[i] for i in fold.test_ids]
        predictions = _fit_and_score(
            train_comments, train_labels, test_comments, variant, hp, threshold
        )
        fold_rows.append(_fold_metrics(fold_no, predictions, truth, threshold))
        for pred, lab, idx in zip(predictions, truth, fold.test_ids):
            correct = pred.predicted is lab
            cid = comments[idx].id
            verdicts[cid] = verdicts.get(cid, True) and correct

    positive_ids = {c.id for c in comments if c.label is Label.ON_HOLD}
    tested_positive = [cid for cid in verdicts if cid in positive_ids]
    return EvalReport(
        variant=variant,
        seed=seed,
        n_folds=n_folds,
        test_fraction=test_fraction,
        stratified=stratified,
        threshold=threshold,
        folds=tuple(fold_rows),
        mean_precision=_mean([f.precision for f in fold_rows]),
        mean_recall=_mean([f.recall for f in fold_rows]),
        mean_f1=_mean([f.f1 for f in fold_rows]),
        mean_auc=_mean([f.auc for f in fold_rows]),
        verdicts=verdicts,
        onhold_tested=len(tested_positive),
        onhold_correct=sum(1 for cid in tested_positive if verdicts[cid]),
    )


def _mean(metrics: list[MetricValue]) -> float:
    # undefined metrics contribute their 0.0 placeholder; flags are kept
    # per fold so a consumer can tell the two apart
    return sum(m.value for m in metrics) / len(metrics)


def cross_project_validate(
    dataset: Dataset,
    hyperparams: Hyperparams | None = None,
    variant: str = "ngram",
    threshold: float = 0.5,
    min_onhold_ratio: float = 0.02,
    products=None,
) -> CrossProjectReport:
    """Leave one project out: each project whose on-hold share strictly
    exceeds min_onhold_ratio becomes the test set once, with the model
    trained on every other project's comments."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    hp = hyperparams if hyperparams is not None else Hyperparams()
    ds = dataset.satd_only()
    comments = list(ds.comments)
    by_project: dict[str, list[int]] = {}
    for i, c in enumerate(comments):
        by_project.setdefault(c.project, []).append(i)
    if len(by_project) < 2:
        raise TooFewProjects("cross-project runs need at least two projects")

    eligible = []
    for project, idxs in by_project.items():
        n_pos = sum(1 for i in idxs if comments[i].label is Label.ON_HOLD)
        if n_pos / len(idxs) > min_onhold_ratio:
            eligible.append(project)
    if not eligible:
        raise TooFewProjects(
            f"no project has an on-hold share above {min_onhold_ratio}"
        )

    abstracted = [preprocess(c, products) for c in comments]
    labels = [c.label for c in comments]
    rows = []
    for project in eligible:
        test_ids = by_project[project]
        train_ids = [i for i in range(len(comments)) if comments[i].project != project]
        predictions = _fit_and_score(
            [abstracted[i] for i in train_ids],
            [labels[i] for i in train_ids],
            [abstracted[i] for i in test_ids],
            variant,
            hp,
            threshold,
        )
        truth = [labels[i] for i in test_ids]
        counts = confusion(predictions, truth, threshold=None)
        try:
            auc_metric = MetricValue(auc([p.score for p in predictions], truth))
        except SingleClass:
            auc_metric = MetricValue(0.0, undefined=True)
        rows.append(ProjectMetrics(
            project=project,
            n_train=len(train_ids),
            test_size=len(test_ids),
            test_positives=sum(1 for lab in truth if lab is Label.ON_HOLD),
            counts=counts,
            precision=precision(counts),
            recall=recall(counts),
            f1=f1(counts),
            auc=auc_metric,
        ))
    return CrossProjectReport(
        variant=variant,
        threshold=threshold,
        min_onhold_ratio=min_onhold_ratio,
        projects=tuple(rows),
        mean_precision=_mean([r.precision for r in rows]),
        mean_recall=_mean([r.recall for r in rows]),
        mean_f1=_mean([r.f1 for r in rows]),
        mean_auc=_mean([r.auc for r in rows]),
    )


# ---------------------------------------------------------------------------
# JSON report serialization
# ---------------------------------------------------------------------------

def _metric_dict(m: MetricValue) -> dict:
    return {"value": m.value, "undefined": m.undefined}


def _counts_dict(c: ConfusionCounts) -> dict:
    return {"tp": c.tp, "fp": c.fp, "tn": c.tn, "fn": c.fn}


def _fold_dict(f) -> dict:
    row = {
        "test_size": f.test_size,
        "test_positives": f.test_positives,
        "confusion": _counts_dict(f.counts),
        "precision": _metric_dict(f.precision),
        "recall": _metric_dict(f.recall),
        "f1": _metric_dict(f.f1),
        "auc": _metric_dict(f.auc),
    }
    if isinstance(f, FoldMetrics):
        row["fold"] = f.fold
    else:
        row["project"] = f.project
        row["n_train"] = f.n_train
    return row


def report_to_dict(report: EvalReport) -> dict:
    return {
        "variant": report.variant,
        "seed": report.seed,
        "n_folds": report.n_folds,
        "test_fraction": report.test_fraction,
        "stratified": report.stratified,
        "threshold": report.threshold,
        "folds": [_fold_dict(f) for f in report.folds],
        "means": {
            "precision": report.mean_precision,
            "recall": report.mean_recall,
            "f1": report.mean_f1,
            "auc": report.mean_auc,
        },
        "verdicts": dict(report.verdicts),
        "onhold_tested": report.onhold_tested,
        "onhold_correct": report.onhold_correct,
    }


def cross_project_to_dict(report: CrossProjectReport) -> dict:
    return {
        "variant": report.variant,
        "threshold": report.threshold,
        "min_onhold_ratio": report.min_onhold_ratio,
        "projects": [_fold_dict(r) for r in report.projects],
        "means": {
            "precision": report.mean_precision,
            "recall": report.mean_recall,
            "f1": report.mean_f1,
            "auc": report.mean_auc,
        },
    }


def dumps_report(report) -> str:
    if isinstance(report, EvalReport):
        payload = report_to_dict(report)
    else:
        payload = cross_project_to_dict(report)
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
