"""Text formats: memory files, fragment/order literals, coordinate files, and
the compact generator notation used in reports.

Memory file::

    # comment
     1  1 -1      # one memory per line; tokens 1, +1 or -1

Fragment literals: ``1:+1,3:-1`` (explicit neurons) or ``"1 -1"`` (prefix).
Order literals: ``(4)1325`` for networks up to nine neurons, ``(4)1,3,2,5`` or
``(1,2)3,4,5`` in general.  Whitespace inside an order literal is ignored.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Sequence

from .core import BipolarVector, as_memory_set
from .errors import ParseError
from .generator import Fragment, UpdateOrder

_VALUE_TOKENS = {"1": 1, "+1": 1, "-1": -1}


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _tokens(text: str):
    """Yield ``(column, token)`` for whitespace-separated tokens (1-based columns)."""
    for m in re.finditer(r"\S+", text):
        yield m.start() + 1, m.group()


def parse_memories(text: str, source: str | None = None) -> list[BipolarVector]:
    mems = []
    width = None
    first_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        row = []
        for col, tok in _tokens(body):
            if tok not in _VALUE_TOKENS:
                raise ParseError(f"expected 1, +1 or -1, got {tok!r}", lineno, col, source)
            row.append(_VALUE_TOKENS[tok])
        if not row:
            continue
        if width is None:
            width, first_line = len(row), lineno
        elif len(row) != width:
            raise ParseError(
                f"memory has {len(row)} entries but line {first_line} has {width}",
                lineno, 1, source,
            )
        mems.append(tuple(row))
    if not mems:
        raise ParseError("no memories found", source=source)
    return as_memory_set(mems)


def read_memories(path) -> list[BipolarVector]:
    path = Path(path)
    return parse_memories(path.read_text(encoding="utf-8"), source=str(path))


def format_memories(memories: Iterable[Sequence[int]]) -> str:
    return "".join(format_vector(m) + "\n" for m in memories)


def parse_coordinates(text: str, source: str | None = None) -> dict[int, tuple[float, float]]:
    coords = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = list(_tokens(_strip_comment(raw)))
        if not toks:
            continue
        if len(toks) != 3:
            raise ParseError("expected 'index x y'", lineno, toks[0][0], source)
        col, idx = toks[0]
        try:
            i = int(idx)
        except ValueError:
            raise ParseError(f"bad neuron index {idx!r}", lineno, col, source) from None
        if i < 1:
            raise ParseError(f"neuron index must be positive, got {i}", lineno, col, source)
        if i in coords:
            raise ParseError(f"neuron {i} listed twice", lineno, col, source)
        xy = []
        for col, tok in toks[1:]:
            try:
                xy.append(float(tok))
            except ValueError:
                raise ParseError(f"bad coordinate {tok!r}", lineno, col, source) from None
        coords[i] = (xy[0], xy[1])
    return coords


def read_coordinates(path) -> dict[int, tuple[float, float]]:
    path = Path(path)
    return parse_coordinates(path.read_text(encoding="utf-8"), source=str(path))


def parse_fragment(literal: str, n: int) -> Fragment:
    """Parse ``1:+1,2:-1`` or a prefix pattern such as ``1 -1``."""
    text = literal.strip()
    if not text:
        raise ParseError("empty fragment literal", column=1)
    if ":" not in text:
        values = []
        for col, tok in _tokens(literal):
            if tok not in _VALUE_TOKENS:
                raise ParseError(f"expected 1, +1 or -1, got {tok!r}", column=col)
            values.append(_VALUE_TOKENS[tok])
        if len(values) > n:
            raise ParseError(f"fragment has {len(values)} values for {n} neurons", column=1)
        return Fragment.prefix(values, n)

    pairs = []
    for m in re.finditer(r"[^,]+", literal):
        item = m.group().strip()
        col = m.start() + 1 + (len(m.group()) - len(m.group().lstrip()))
        idx, sep, val = item.partition(":")
        if not sep:
            raise ParseError(f"expected index:value, got {item!r}", column=col)
        try:
            i = int(idx)
        except ValueError:
            raise ParseError(f"bad neuron index {idx!r}", column=col) from None
        if val.strip() not in _VALUE_TOKENS:
            raise ParseError(f"expected 1, +1 or -1, got {val.strip()!r}", column=col)
        if not 1 <= i <= n:
            raise ParseError(f"neuron {i} is outside 1..{n}", column=col)
        pairs.append((i, _VALUE_TOKENS[val.strip()]))
    if len({i for i, _ in pairs}) != len(pairs):
        raise ParseError("a neuron is clamped twice", column=1)
    return Fragment(tuple(pairs), n)


_ORDER_RE = re.compile(r"^\s*\(([^()]*)\)([^()]*)$")


def _split_indices(text: str, use_commas: bool, offset: int) -> list[int]:
    out = []
    if use_commas:
        for m in re.finditer(r"[^,\s]+", text):
            try:
                out.append(int(m.group()))
            except ValueError:
                raise ParseError(f"bad neuron index {m.group()!r}", column=offset + m.start()) from None
    else:
        for pos, ch in enumerate(text):
            if ch.isspace():
                continue
            if not ch.isdigit():
                raise ParseError(f"bad neuron index {ch!r}", column=offset + pos)
            out.append(int(ch))
    return out


def parse_order(literal: str, n: int | None = None) -> UpdateOrder:
    """Parse generator notation ``(seeds)rest`` into an :class:`UpdateOrder`.

    Without commas every digit is one neuron, which is how the notation is
    written for networks of at most nine neurons.
    """
    m = _ORDER_RE.match(literal)
    if not m:
        raise ParseError(f"expected '(seeds)rest', got {literal!r}", column=1)
    use_commas = "," in literal
    seeds = _split_indices(m.group(1), use_commas, m.start(1) + 1)
    rest = _split_indices(m.group(2), use_commas, m.start(2) + 1)
    if not seeds:
        raise ParseError("no seed neurons inside the parentheses", column=m.start(1) + 1)
    order = seeds + rest
    size = len(order) if n is None else n
    if sorted(order) != list(range(1, size + 1)):
        raise ParseError(f"{literal!r} is not a permutation of 1..{size}", column=1)
    return UpdateOrder(tuple(order), len(seeds))


def format_order(order: UpdateOrder) -> str:
    sep = "" if order.n <= 9 else ","
    seeds = sep.join(str(i) for i in order.seeds)
    rest = sep.join(str(i) for i in order.order[order.seed_count:])
    return f"({seeds}){rest}"


def format_vector(v: Sequence[int | None]) -> str:
    return " ".join("0" if x is None else str(x) for x in v)


def format_matrix(m) -> str:
    rows = [[str(int(x)) for x in row] for row in m]
    width = max(len(s) for row in rows for s in row)
    return "".join(" ".join(s.rjust(width) for s in row) + "\n" for row in rows)


def format_fragment(fragment: Fragment) -> str:
    return ",".join(f"{i}:{v:+d}" for i, v in fragment.assignments)
