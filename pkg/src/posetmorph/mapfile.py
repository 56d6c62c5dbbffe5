"""Map file format shared by graph and poset morphisms.

One `m SOURCE TARGET` line per source element; `#` starts a comment.
"""
from __future__ import annotations

from .order import ParseError


def load_map(text: str) -> dict:
    assignment = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "m" or len(parts) != 3:
            raise ParseError(f"line {lineno}: malformed map line: {raw!r}")
        src, dst = parts[1], parts[2]
        if src in assignment:
            raise ParseError(f"line {lineno}: duplicate mapping for {src!r}")
        assignment[src] = dst
    return assignment


def dump_map(assignment: dict, order=None) -> str:
    keys = list(order) if order is not None else list(assignment)
    lines = [f"m {k} {assignment[k]}" for k in keys]
    return "\n".join(lines) + "\n"
