"""Command-line interface."""

from .main import build_parser, certify, main

__all__ = ["build_parser", "certify", "main"]
