"""Command-line front end.

Commands run the library in-process by default; the classification-style
commands (classify, detect-conditions, baseline) can instead delegate to a
running service instance via --server. Exit codes: 0 success, 1 internal
failure, 2 bad user input. All artifact writes are atomic.
"""

from __future__ import annotations

import functools
import json
import os

import click
import httpx

from .corpus import (
    DEFAULT_EXTENSIONS,
    Dataset,
    deduplicate,
    load_dataset,
    mine_comments,
    save_dataset,
)
from .errors import OnHoldError
from .evaluation import (
    cross_project_to_dict,
    cross_project_validate,
    cross_validate,
    report_to_dict,
)
from .fileio import atomic_write_text
from .model import Hyperparams, load_model, save_model
from .ngram import enumerate_ngrams, top_features
from .pipeline import train_from_dataset
from .preprocess import preprocess
from .products import ProductDictionary
from .service.ops import baseline_op, classify_op, detect_op
from .service.schemas import (
    BaselineRequest,
    ClassifyRequest,
    CommentIn,
    DetectRequest,
)
from . import __version__


class _InputError(click.ClickException):
    exit_code = 2


def _friendly_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except OnHoldError as exc:
            raise _InputError(str(exc)) from exc
        except httpx.HTTPError as exc:
            raise _InputError(f"server request failed: {exc}") from exc
    return wrapper


def _load_config(path: str) -> dict:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise _InputError(
                    f"{path}:{line_no}: expected 'key=value', got {line!r}"
                )
            values[key.strip().replace("-", "_")] = value.strip()
    return values


@click.group()
@click.version_option(version=__version__, prog_name="onhold")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Plain key=value file providing flag defaults; explicit flags win.",
)
@click.pass_context
def main(ctx, config_path):
    """Find on-hold debt comments and the conditions they wait for."""
    if config_path:
        flat = _load_config(config_path)
        ctx.default_map = {name: dict(flat) for name in main.commands}


def _products_from(path: str | None) -> ProductDictionary | None:
    return ProductDictionary.from_file(path) if path else None


def _load_input(path: str, extensions=DEFAULT_EXTENSIONS) -> Dataset:
    if os.path.isdir(path):
        return mine_comments(path, extensions)
    return load_dataset(path)


def _emit(text: str, out: str | None) -> None:
    if out:
        atomic_write_text(out, text)
    else:
        click.echo(text, nl=False)


def _emit_json(payload: dict, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2) + "\n", out)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

@main.command()
@click.argument("root", type=click.Path(exists=True, file_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.option(
    "--extensions",
    default=",".join(DEFAULT_EXTENSIONS),
    show_default=True,
    help="Comma-separated source extensions to scan.",
)
@_friendly_errors
def mine(root, out, extensions):
    """Extract comments from a source tree into a dataset CSV."""
    exts = tuple(
        e if e.startswith(".") else f".{e}"
        for e in (part.strip() for part in extensions.split(","))
        if e
    )
    dataset = mine_comments(root, exts)
    save_dataset(dataset, out)
    skipped = len(dataset.provenance.skipped_files)
    note = f" ({skipped} files skipped)" if skipped else ""
    click.echo(f"mined {len(dataset)} comments into {out}{note}")


@main.command()
@click.option(
    "--dataset", "dataset_path", required=True,
    type=click.Path(exists=True, dir_okay=False),
)
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.option("--seed", type=int, required=True)
@click.option(
    "--products", "products_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option("--unigram", is_flag=True, help="Use single-token features only.")
@_friendly_errors
def train(dataset_path, out, seed, products_path, unigram):
    """Train a classifier and write the model file."""
    dataset = deduplicate(load_dataset(dataset_path))
    result = train_from_dataset(
        dataset,
        Hyperparams(seed=seed),
        variant="unigram" if unigram else "ngram",
        products=_products_from(products_path),
    )
    save_model(result.count_model, out)
    click.echo(
        f"trained on {result.n_comments} comments "
        f"({result.n_positive} on hold) into {out}"
    )


@main.command()
@click.option(
    "--dataset", "dataset_path", required=True,
    type=click.Path(exists=True, dir_okay=False),
)
@click.option("--seed", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--folds", type=int, default=10, show_default=True)
@click.option(
    "--products", "products_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option("--no-stratify", is_flag=True, help="Plain shuffled test draws.")
@click.option("--unigram", is_flag=True, help="Evaluate only the unigram variant.")
@click.option(
    "--cross-project", is_flag=True,
    help="Leave-one-project-out instead of shuffle splits.",
)
@_friendly_errors
def evaluate(
    dataset_path, seed, out, folds, products_path,
    no_stratify, unigram, cross_project,
):
    """Compare the n-gram model, unigram model, and keyword baseline."""
    dataset = deduplicate(load_dataset(dataset_path))
    products = _products_from(products_path)
    hp = Hyperparams(seed=seed)
    variants = ("unigram",) if unigram else ("ngram", "unigram", "baseline")
    payload = {
        "dataset": dataset_path,
        "seed": seed,
        "protocol": "cross-project" if cross_project else "shuffle-split",
        "variants": {},
    }
    for variant in variants:
        if cross_project:
            report = cross_project_validate(
                dataset, hp, variant=variant, products=products
            )
            payload["variants"][variant] = cross_project_to_dict(report)
        else:
            report = cross_validate(
                dataset, hp, variant=variant, n_folds=folds, seed=seed,
                stratified=not no_stratify, products=products,
            )
            payload["variants"][variant] = report_to_dict(report)
    _emit_json(payload, out)


@main.command()
@click.option(
    "--model", "model_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option(
    "--dataset", "dataset_path", required=True,
    type=click.Path(exists=True),
    help="Dataset CSV or a source tree to mine first.",
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--threshold", type=float, default=0.5, show_default=True)
@click.option(
    "--products", "products_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option("--server", default=None, help="Base URL of a running service.")
@_friendly_errors
def classify(dataset_path, model_path, out, threshold, products_path, server):
    """Score comments with a trained model; conditions come attached."""
    dataset = _load_input(dataset_path)
    request = ClassifyRequest(
        comments=[CommentIn(id=c.id, text=c.text) for c in dataset.comments],
        threshold=threshold,
    )
    if server:
        response = httpx.post(
            f"{server.rstrip('/')}/classify",
            json=request.model_dump(),
            timeout=60.0,
        )
        response.raise_for_status()
        payload = response.json()
    else:
        if not model_path:
            raise _InputError("either --model or --server is required")
        model = load_model(model_path)
        payload = classify_op(
            model, request, _products_from(products_path)
        ).model_dump()
    _emit_json(payload, out)


@main.command("detect-conditions")
@click.option(
    "--dataset", "dataset_path", required=True,
    type=click.Path(exists=True),
    help="Dataset CSV or a source tree to mine first.",
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option(
    "--products", "products_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option("--server", default=None, help="Base URL of a running service.")
@_friendly_errors
def detect_conditions_cmd(dataset_path, out, products_path, server):
    """Report the waiting condition found in each comment."""
    dataset = _load_input(dataset_path)
    request = DetectRequest(
        comments=[CommentIn(id=c.id, text=c.text) for c in dataset.comments]
    )
    if server:
        response = httpx.post(
            f"{server.rstrip('/')}/detect-conditions",
            json=request.model_dump(),
            timeout=60.0,
        )
        response.raise_for_status()
        payload = response.json()
    else:
        payload = detect_op(request, _products_from(products_path)).model_dump()
    _emit_json(payload, out)


@main.command()
@click.option(
    "--dataset", "dataset_path", required=True,
    type=click.Path(exists=True),
    help="Dataset CSV or a source tree to mine first.",
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option(
    "--products", "products_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option("--server", default=None, help="Base URL of a running service.")
@_friendly_errors
def baseline(dataset_path, out, products_path, server):
    """Classify with the fixed keyword heuristic (no training)."""
    dataset = _load_input(dataset_path)
    request = BaselineRequest(
        comments=[CommentIn(id=c.id, text=c.text) for c in dataset.comments]
    )
    if server:
        response = httpx.post(
            f"{server.rstrip('/')}/baseline",
            json=request.model_dump(),
            timeout=60.0,
        )
        response.raise_for_status()
        payload = response.json()
    else:
        payload = baseline_op(request, _products_from(products_path)).model_dump()
    _emit_json(payload, out)


@main.command()
@click.option(
    "--dataset", "dataset_path", required=True,
    type=click.Path(exists=True, dir_okay=False),
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--top", type=int, default=10, show_default=True)
@click.option(
    "--products", "products_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option("--unigram", is_flag=True, help="Single-token features only.")
@_friendly_errors
def features(dataset_path, out, top, products_path, unigram):
    """Rank the corpus n-grams by weight, strongest first."""
    dataset = deduplicate(load_dataset(dataset_path)).satd_only()
    products = _products_from(products_path)
    abstracted = [preprocess(c, products) for c in dataset.comments]
    table = enumerate_ngrams(abstracted, max_n=1 if unigram else 10, min_freq=2)
    payload = {
        "total_comments": table.total_comments,
        "features": [
            {
                "gram": list(e.gram),
                "text": " ".join(e.gram),
                "gtf": e.gtf,
                "sdf": e.sdf,
                "weight": e.weight,
            }
            for e in top_features(table, top)
        ],
    }
    _emit_json(payload, out)


@main.command()
@click.option(
    "--model", "model_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option(
    "--products", "products_path",
    type=click.Path(exists=True, dir_okay=False), default=None,
)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@_friendly_errors
def serve(model_path, products_path, host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(model_path, products_path), host=host, port=port)


if __name__ == "__main__":
    main()
