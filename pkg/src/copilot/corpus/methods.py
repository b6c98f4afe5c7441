"""Method-level chunker for C-like (CTRL) source files.

Splits a file into one chunk per top-level function, carrying the
enclosing file name, the parsed function name, and the full method text
including the comment block immediately above the signature. Brace
matching skips string/char literals and comments, so `"{"` in a literal
or a brace inside a comment never breaks a chunk.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..errors import EmptyCorpus, UnbalancedBraces

_IDENT_CALL = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*\($")
_KEYWORDS = {"if", "for", "while", "switch", "return", "sizeof"}


@dataclass(frozen=True)
class MethodChunk:
    file_name: str
    method_name: str
    code: str


def _top_level_bodies(text: str, file_name: str):
    """Yield (preamble_start, open_idx, close_idx) for each top-level {...}.

    preamble_start is the index just after the previous top-level
    terminator (';' or '}') — the region holding the signature.
    """
    depth = 0
    line = 1
    i = 0
    n = len(text)
    preamble_start = 0
    open_idx = None
    state = "code"  # code | line_comment | block_comment | string | char
    quote = ""
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            if state == "line_comment":
                state = "code"
            i += 1
            continue
        if state == "line_comment":
            i += 1
            continue
        if state == "block_comment":
            if ch == "*" and text[i : i + 2] == "*/":
                state = "code"
                i += 2
                continue
            i += 1
            continue
        if state == "string":
            if ch == "\\":
                i += 2
                continue
            if ch == quote:
                state = "code"
            i += 1
            continue
        # state == code
        two = text[i : i + 2]
        if two == "//":
            state = "line_comment"
            i += 2
            continue
        if two == "/*":
            state = "block_comment"
            i += 2
            continue
        if ch in "\"'":
            state = "string"
            quote = ch
            i += 1
            continue
        if ch == "{":
            if depth == 0:
                open_idx = i
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise UnbalancedBraces(file_name, line)
            if depth == 0:
                yield preamble_start, open_idx, i
                preamble_start = i + 1
        elif ch == ";" and depth == 0:
            preamble_start = i + 1
        i += 1
    if depth != 0:
        raise UnbalancedBraces(file_name, line)


_COMMENT = re.compile(r"//[^\n]*|/\*.*?\*/", re.DOTALL)


def _signature_name(preamble: str) -> str | None:
    """Function identifier from the text between terminator and '{', or None."""
    # comments may contain parentheses; drop them before locating the
    # argument list
    sig = _COMMENT.sub(" ", preamble).strip()
    if not sig or "(" not in sig:
        return None
    open_paren = sig.find("(")
    head = sig[:open_paren].rstrip() + "("
    m = _IDENT_CALL.search(head)
    if not m or m.group(1) in _KEYWORDS:
        return None
    return m.group(1)


def _attach_comment(text: str, sig_start: int) -> int:
    """Start index of the comment block belonging to the signature at sig_start.

    A comment block separated from the signature by at most one blank
    line is included.
    """
    lines = text[:sig_start].splitlines(keepends=True)
    idx = len(lines)
    blanks_allowed = 1
    in_block = False
    while idx > 0:
        stripped = lines[idx - 1].strip()
        if in_block:
            idx -= 1
            if stripped.startswith("/*"):
                in_block = False
            continue
        if not stripped:
            if blanks_allowed == 0:
                break
            blanks_allowed -= 1
            idx -= 1
            continue
        if stripped.startswith("//"):
            blanks_allowed = 0
            idx -= 1
            continue
        if stripped.endswith("*/"):
            blanks_allowed = 0
            in_block = not stripped.startswith("/*")
            idx -= 1
            continue
        break
    return sum(len(l) for l in lines[:idx])


def parse_source(text: str, file_name: str) -> list[MethodChunk]:
    chunks: list[MethodChunk] = []
    for preamble_start, open_idx, close_idx in _top_level_bodies(text, file_name):
        preamble = text[preamble_start:open_idx]
        name = _signature_name(preamble)
        if name is None:
            continue
        # signature begins at the first non-comment text in the preamble;
        # blank comments out (offset-preserving) before looking for it
        blanked = _COMMENT.sub(lambda m: " " * len(m.group(0)), preamble)
        sig_offset = preamble_start + len(blanked) - len(blanked.lstrip())
        start = _attach_comment(text, sig_offset)
        code = text[start : close_idx + 1].strip("\n")
        chunks.append(MethodChunk(file_name=file_name, method_name=name, code=code))
    return chunks


def parse_methods(source_dir) -> list[MethodChunk]:
    """Parse every source file under source_dir into method chunks."""
    source_dir = Path(source_dir)
    chunks: list[MethodChunk] = []
    for path in sorted(source_dir.glob("*.ctl")) + sorted(source_dir.glob("*.c")):
        chunks.extend(parse_source(path.read_text(encoding="utf-8"), path.name))
    if not chunks:
        raise EmptyCorpus(f"no methods found under {source_dir}")
    return chunks
