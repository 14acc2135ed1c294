"""Command-line front end: parser, reports, corpus runner."""

from .commands import InputError, Query, run_command
from .corpus import run_corpus
from .parser import ParseError, parse_expression, render

__all__ = ["InputError", "ParseError", "Query", "parse_expression", "render", "run_command", "run_corpus"]
