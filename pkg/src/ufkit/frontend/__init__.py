"""Surface syntax, reports and the ``uf`` command line."""

from .parser import ParseError, parse, parse_context, parse_term
from .printer import pretty

__all__ = ["ParseError", "parse", "parse_context", "parse_term", "pretty"]
