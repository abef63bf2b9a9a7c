"""HTTP service wrapping the forecasting core."""

from .app import create_app

__all__ = ["create_app"]
