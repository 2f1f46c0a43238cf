"""Shipped source files: the prelude, the rule corpus and simplicial fixtures."""

from importlib import resources


def corpus_source(name: str = "rules") -> str:
    """A corpus file from ``data/corpus``, by stem."""
    return resources.files(__name__).joinpath("corpus", f"{name}.uf").read_text(encoding="utf-8")
