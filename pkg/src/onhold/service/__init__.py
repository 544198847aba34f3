"""HTTP service exposing classification and condition detection."""

from .app import create_app

__all__ = ["create_app"]
