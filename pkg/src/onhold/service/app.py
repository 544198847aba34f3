"""FastAPI application factory."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..model import TermCountModel, load_model
from ..products import ProductDictionary
from .ops import baseline_op, classify_op, detect_op
from .schemas import (
    BaselineRequest,
    BaselineResponse,
    ClassifyRequest,
    ClassifyResponse,
    DetectRequest,
    DetectResponse,
    HealthResponse,
)


def create_app(
    model_path: str | None = None,
    products_path: str | None = None,
) -> FastAPI:
    """Build the service. Without a model path the classify route answers
    503; detection and the baseline need no trained state."""
    model: TermCountModel | None = (
        load_model(model_path) if model_path else None
    )
    products = (
        ProductDictionary.from_file(products_path) if products_path else None
    )

    app = FastAPI(title="onhold", version=__version__)
    app.state.model = model
    app.state.products = products

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(request: ClassifyRequest) -> ClassifyResponse:
        if app.state.model is None:
            raise HTTPException(
                status_code=503, detail="no model loaded; start with a model file"
            )
        return classify_op(app.state.model, request, app.state.products)

    @app.post("/detect-conditions", response_model=DetectResponse)
    def detect(request: DetectRequest) -> DetectResponse:
        return detect_op(request, app.state.products)

    @app.post("/baseline", response_model=BaselineResponse)
    def baseline(request: BaselineRequest) -> BaselineResponse:
        return baseline_op(request, app.state.products)

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(
            status="ok",
            model_loaded=app.state.model is not None,
            version=__version__,
        )

    return app
