"""Detection of on-hold technical-debt comments and their waiting conditions.

The package turns raw source-code comments into term-abstracted token
streams, builds IDF-weighted n-gram features, trains a logistic-regression
classifier to separate comments that wait on a specific event from the
rest, and extracts the event itself (a date, a product release, or a bug
report) from the abstracted placeholders.
"""

from .corpus import (
    Comment,
    Dataset,
    Label,
    Provenance,
    deduplicate,
    dumps_dataset,
    load_dataset,
    loads_dataset,
    mine_comments,
    save_dataset,
)
from .errors import (
    DegenerateTraining,
    DuplicateId,
    EmptyCorpus,
    IoError,
    MalformedRow,
    ModelVersionError,
    NonFiniteLoss,
    OnHoldError,
    SingleClass,
    TooFewInstances,
    TooFewProjects,
    UnknownLabel,
)
from .preprocess import (
    AbstractedComment,
    AbstractionSpan,
    abstract_terms,
    clean,
    lemmatize,
    preprocess,
    preprocess_text,
)
from .products import ProductDictionary
from .ngram import (
    FeatureVector,
    NGramEntry,
    NGramTable,
    enumerate_ngrams,
    top_features,
    vectorize,
)
from .model import (
    Hyperparams,
    KeywordBaseline,
    LinearModel,
    Prediction,
    TermCountModel,
    baseline_classify,
    load_model,
    save_model,
    score,
    train,
)
from .conditions import Condition, ConditionReport, condition_accuracy, detect_conditions
from .evaluation import (
    ConfusionCounts,
    EvalReport,
    MetricValue,
    auc,
    confusion,
    cross_project_validate,
    cross_validate,
    f1,
    precision,
    recall,
    stratified_folds,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractedComment",
    "AbstractionSpan",
    "Comment",
    "Condition",
    "ConditionReport",
    "ConfusionCounts",
    "Dataset",
    "DegenerateTraining",
    "DuplicateId",
    "EmptyCorpus",
    "EvalReport",
    "FeatureVector",
    "Hyperparams",
    "IoError",
    "KeywordBaseline",
    "Label",
    "LinearModel",
    "MalformedRow",
    "MetricValue",
    "ModelVersionError",
    "NGramEntry",
    "NGramTable",
    "NonFiniteLoss",
    "OnHoldError",
    "Prediction",
    "ProductDictionary",
    "Provenance",
    "SingleClass",
    "TermCountModel",
    "TooFewInstances",
    "TooFewProjects",
    "UnknownLabel",
    "abstract_terms",
    "auc",
    "baseline_classify",
    "clean",
    "condition_accuracy",
    "confusion",
    "cross_project_validate",
    "cross_validate",
    "deduplicate",
    "detect_conditions",
    "dumps_dataset",
    "enumerate_ngrams",
    "f1",
    "lemmatize",
    "load_dataset",
    "load_model",
    "loads_dataset",
    "mine_comments",
    "precision",
    "preprocess",
    "preprocess_text",
    "recall",
    "save_dataset",
    "save_model",
    "score",
    "stratified_folds",
    "top_features",
    "train",
    "vectorize",
]
