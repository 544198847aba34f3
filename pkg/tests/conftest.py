"""Shared fixtures: a small synthetic corpus and a model trained on it."""

from __future__ import annotations

import pytest

from onhold.model import save_model
from onhold.pipeline import train_from_dataset
from onhold.synthetic import make_benchmark


@pytest.fixture(scope="session")
def bench():
    return make_benchmark(
        seed=0, n_comments=120, positive_fraction=0.2, not_satd=8
    )


@pytest.fixture(scope="session")
def trained(bench):
    return train_from_dataset(bench)


@pytest.fixture(scope="session")
def model_file(trained, tmp_path_factory):
    path = tmp_path_factory.mktemp("model") / "model.tsv"
    save_model(trained.count_model, str(path))
    return str(path)
