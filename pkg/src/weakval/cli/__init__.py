"""Command-line interface."""

from weakval.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
