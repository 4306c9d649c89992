"""
Element file format

    G <k>
    <p> -> <q>
    ...

Words are digit strings, the empty word is "-". Canonical output lists the
pairs of a group element in dictionary order of p, one per line, newline
terminated.
"""

import re

from .exceptions import ElementParseError, InvalidWord
from .tables import GroupElement, Table, maximum_extension
from .words import MAX_ALPHABET, Word, format_word, parse_word

HEADER = re.compile(r"^[ \t]*G[ \t]+(\d+)[ \t]*$")
PAIR = re.compile(r"^[ \t]*(\S+?)[ \t]*->[ \t]*(\S+)[ \t]*$")


def dump_table(table: Table) -> str:
    lines = [f"G {table.k}"]
    lines.extend(f"{format_word(p)} -> {format_word(q)}" for p, q in table.pairs)
    return "\n".join(lines) + "\n"


def dump_element(g: GroupElement) -> str:
    return dump_table(g.table)


def _parse_header(line: str, lineno: int) -> int:
    match = HEADER.match(line)
    if not match:
        raise ElementParseError(lineno, 1, 'expected header "G <k>"')
    k = int(match.group(1))
    if not 2 <= k <= MAX_ALPHABET:
        raise ElementParseError(
            lineno, match.start(1) + 1, f"alphabet size {k} outside 2..{MAX_ALPHABET}"
        )
    return k


def _parse_word_at(text: str, k: int, lineno: int, column: int) -> Word:
    try:
        return parse_word(text, k)
    except InvalidWord as e:
        raise ElementParseError(lineno, column, e.message) from e


def load_table(text: str) -> Table:
    """Parse an element file into a (not necessarily valid) table"""
    k: int | None = None
    pairs: list[tuple[Word, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if k is None:
            k = _parse_header(line, lineno)
            continue
        match = PAIR.match(line)
        if not match:
            raise ElementParseError(lineno, 1, 'expected "<p> -> <q>"')
        p = _parse_word_at(match.group(1), k, lineno, match.start(1) + 1)
        q = _parse_word_at(match.group(2), k, lineno, match.start(2) + 1)
        pairs.append((p, q))
    if k is None:
        raise ElementParseError(1, 1, 'missing header "G <k>"')
    return Table(k=k, pairs=tuple(pairs))


def load_element(text: str) -> GroupElement:
    """Parse, validate and canonicalise an element file"""
    return maximum_extension(load_table(text))


def parse_code(text: str, k: int) -> list[Word]:
    """Comma-separated word list, as given to --code"""
    return [parse_word(token.strip(), k) for token in text.split(",")]
