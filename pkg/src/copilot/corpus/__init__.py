from .docs import DocPage, split_docs, split_text
from .methods import MethodChunk, parse_methods, parse_source

__all__ = [
    "DocPage",
    "split_docs",
    "split_text",
    "MethodChunk",
    "parse_methods",
    "parse_source",
]
