"""Textual descriptions of monomial algebras and automata.

Two line-oriented formats are understood.  A *presentation* lists the
generators and the forbidden words::

    letters x y
    forbid x x
    forbid y y

An *automaton file* describes a total DFA directly::

    letters x y
    states 2
    initial 0
    accept 0
    trans 0 x 1
    ...

``#`` starts a comment.  Words are whitespace-separated symbol tokens; when
every symbol is a single character, contiguous runs such as ``xy`` are also
accepted.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .automaton import Dfa

Word = tuple  # tuple[str, ...]

EPSILON = "ε"
_RESERVED = ("#", ",")
_AUTOMATON_DIRECTIVES = ("states", "initial", "accept", "trans")


class PresentationError(ValueError):
    """Raised for malformed presentations or automaton descriptions."""


class ParseError(PresentationError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _check_symbol(name: str) -> None:
    if not name or any(ch.isspace() for ch in name):
        raise PresentationError(f"invalid symbol {name!r}")
    if any(ch in name for ch in _RESERVED):
        raise PresentationError(f"symbol {name!r} contains a reserved character")


@dataclass(frozen=True)
class Presentation:
    """Generators plus forbidden words of a monomial algebra."""

    alphabet: tuple
    forbidden: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "forbidden", tuple(tuple(w) for w in self.forbidden))
        if not self.alphabet:
            raise PresentationError("empty alphabet")
        seen = set()
        for name in self.alphabet:
            _check_symbol(name)
            if name in seen:
                raise PresentationError(f"duplicate symbol {name!r}")
            seen.add(name)
        for word in self.forbidden:
            if not word:
                raise PresentationError("empty forbidden word")
            for letter in word:
                if letter not in seen:
                    raise PresentationError(f"unknown symbol {letter!r} in forbidden word")

    def sort_key(self, word: Sequence[str]) -> tuple:
        """(length, letter order) key used for every word ordering."""
        index = {s: i for i, s in enumerate(self.alphabet)}
        return (len(word), tuple(index[s] for s in word))

    def to_text(self) -> str:
        lines = ["letters " + " ".join(self.alphabet)]
        lines += ["forbid " + " ".join(w) for w in self.forbidden]
        return "\n".join(lines) + "\n"


def contains_factor(word: Sequence[str], factor: Sequence[str]) -> bool:
    n, m = len(word), len(factor)
    factor = tuple(factor)
    return any(tuple(word[i:i + m]) == factor for i in range(n - m + 1))


def normalize(p: Presentation) -> Presentation:
    """Drop duplicate and redundant forbidden words; sort the rest.

    A forbidden word containing another forbidden word as a proper factor
    generates nothing new, so the ideal is unchanged.
    """
    words = sorted(set(p.forbidden), key=p.sort_key)
    kept: list = []
    for w in words:
        if not any(contains_factor(w, k) for k in kept):
            kept.append(w)
    return Presentation(p.alphabet, tuple(kept))


def reverse_presentation(p: Presentation) -> Presentation:
    """Presentation of the opposite algebra (every relation read backwards)."""
    return Presentation(p.alphabet, tuple(tuple(reversed(w)) for w in p.forbidden))


# -- parsing -----------------------------------------------------------------


def _directives(text: str):
    """Yield (line number, column of first token, tokens) per non-blank line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if tokens:
            yield lineno, line.index(tokens[0]) + 1, line, tokens


def _token_columns(line: str, tokens: Sequence[str]) -> list:
    cols, pos = [], 0
    for tok in tokens:
        pos = line.index(tok, pos)
        cols.append(pos + 1)
        pos += len(tok)
    return cols


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    """Parse a word given as tokens (``"x y"``) or, for one-character
    alphabets, contiguously (``"xy"``).  ``""`` and ``"ε"`` give the empty
    word."""
    return _parse_word_tokens(text.split(), alphabet, text, lineno=None)


def _parse_word_tokens(tokens, alphabet, line, lineno):
    alphabet = tuple(alphabet)
    known = set(alphabet)
    single = all(len(s) == 1 for s in alphabet)
    cols = _token_columns(line, tokens) if lineno is not None else [None] * len(tokens)
    word: list = []
    for tok, col in zip(tokens, cols):
        if tok == EPSILON and len(tokens) == 1:
            break
        if tok in known:
            word.append(tok)
            continue
        if single and all(ch in known for ch in tok):
            word.extend(tok)
            continue
        bad = tok
        if single:
            offset = next(i for i, ch in enumerate(tok) if ch not in known)
            bad = tok[offset]
            if col is not None:
                col += offset
        msg = f"unknown symbol {bad!r}"
        if lineno is None:
            raise PresentationError(msg)
        raise ParseError(msg, lineno, col)
    return tuple(word)


def _parse_letters(lineno, line, tokens, seen_letters):
    if seen_letters is not None:
        raise ParseError("more than one 'letters' line", lineno)
    names = tokens[1:]
    if not names:
        raise ParseError("empty alphabet", lineno)
    cols = _token_columns(line, tokens)[1:]
    seen: set = set()
    for name, col in zip(names, cols):
        if any(ch in name for ch in _RESERVED):
            raise ParseError(f"symbol {name!r} contains a reserved character", lineno, col)
        if name in seen:
            raise ParseError(f"duplicate symbol {name!r}", lineno, col)
        seen.add(name)
    return tuple(names)


def detect_format(text: str) -> str:
    """Return ``"automaton"`` or ``"presentation"`` from the directives used."""
    for _, _, _, tokens in _directives(text):
        if tokens[0] in _AUTOMATON_DIRECTIVES:
            return "automaton"
    return "presentation"


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation format.  Forbidden words are kept as written."""
    alphabet = None
    forbidden: list = []
    for lineno, col, line, tokens in _directives(text):
        head = tokens[0]
        if head == "letters":
            alphabet = _parse_letters(lineno, line, tokens, alphabet)
        elif head == "forbid":
            if alphabet is None:
                raise ParseError("'forbid' before 'letters'", lineno, col)
            word = _parse_word_tokens(tokens[1:], alphabet, line, lineno)
            if not word:
                raise ParseError("empty forbidden word", lineno, col)
            if len(word) == 1:
                warnings.warn(
                    f"line {lineno}: generator {word[0]!r} is forbidden and vanishes",
                    stacklevel=2,
                )
            forbidden.append(word)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, col)
    if alphabet is None:
        raise ParseError("missing 'letters' line", 1)
    return Presentation(alphabet, tuple(forbidden))


def _parse_int(tok: str, lineno: int, col: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"expected a state index, got {tok!r}", lineno, col) from None
    if value < 0:
        raise ParseError(f"negative state index {value}", lineno, col)
    return value


def parse_automaton(text: str) -> Dfa:
    """Parse the automaton file format; every (state, symbol) pair needs
    exactly one ``trans`` line."""
    alphabet = None
    count = initial = accept = None
    trans: dict = {}
    for lineno, col, line, tokens in _directives(text):
        head, args = tokens[0], tokens[1:]
        cols = _token_columns(line, tokens)[1:]
        if head == "letters":
            alphabet = _parse_letters(lineno, line, tokens, alphabet)
        elif head in ("states", "initial"):
            if len(args) != 1:
                raise ParseError(f"'{head}' takes one argument", lineno, col)
            value = _parse_int(args[0], lineno, cols[0])
            if head == "states":
                if count is not None:
                    raise ParseError("more than one 'states' line", lineno, col)
                if value == 0:
                    raise ParseError("an automaton needs at least one state", lineno, cols[0])
                count = value
            else:
                if initial is not None:
                    raise ParseError("more than one 'initial' line", lineno, col)
                initial = (value, lineno, cols[0])
        elif head == "accept":
            if accept is not None:
                raise ParseError("more than one 'accept' line", lineno, col)
            accept = [(_parse_int(a, lineno, c), lineno, c) for a, c in zip(args, cols)]
        elif head == "trans":
            if alphabet is None:
                raise ParseError("'trans' before 'letters'", lineno, col)
            if len(args) != 3:
                raise ParseError("'trans' takes: source symbol target", lineno, col)
            src = _parse_int(args[0], lineno, cols[0])
            if args[1] not in alphabet:
                raise ParseError(f"unknown symbol {args[1]!r}", lineno, cols[1])
            dst = _parse_int(args[2], lineno, cols[2])
            key = (src, args[1])
            if key in trans:
                raise ParseError(f"duplicate transition for state {src} on {args[1]!r}", lineno, col)
            trans[key] = (dst, lineno, cols)
        elif head == "forbid":
            raise ParseError("'forbid' is not allowed in an automaton file", lineno, col)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, col)

    if alphabet is None:
        raise ParseError("missing 'letters' line", 1)
    if count is None:
        raise ParseError("missing 'states' line", 1)
    if initial is None:
        raise ParseError("missing 'initial' line", 1)
    if accept is None:
        raise ParseError("missing 'accept' line", 1)
    for value, lineno, c in [initial, *accept]:
        if value >= count:
            raise ParseError(f"state {value} out of range (states {count})", lineno, c)
    table = []
    for s in range(count):
        row = []
        for sym in alphabet:
            if (s, sym) not in trans:
                raise ParseError(f"missing transition for state {s} on {sym!r}", 1)
            dst, lineno, cols = trans.pop((s, sym))
            if dst >= count:
                raise ParseError(f"state {dst} out of range (states {count})", lineno, cols[2])
            row.append(dst)
        table.append(tuple(row))
    if trans:
        (src, sym), (_, lineno, cols) = next(iter(trans.items()))
        raise ParseError(f"state {src} out of range (states {count})", lineno, cols[0])
    return Dfa(alphabet, tuple(table), initial[0], frozenset(a[0] for a in accept))


def parse_source(text: str):
    """Parse either format, chosen by :func:`detect_format`."""
    if detect_format(text) == "automaton":
        return parse_automaton(text)
    return parse_presentation(text)


def format_word(word: Iterable[str], empty: str = EPSILON) -> str:
    word = tuple(word)
    return " ".join(word) if word else empty
