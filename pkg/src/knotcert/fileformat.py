"""Plain-text presentation files and word tokens.

Grammar (UTF-8, one declaration per line):

    gens: g1 g2 ...
    rel: tok tok ...
    rel: ...

where a token is ``name`` or ``name^k`` with k a nonzero integer and a
name is made of letters, digits and underscores.  The ``gens:`` line
comes first and appears exactly once; blank lines are ignored.  Printing
a parsed canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import re

from .presentations import Presentation
from .words import Word

_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")
_INT_RE = re.compile(r"^-?[0-9]+$")


class PresentationSyntaxError(ValueError):
    """Malformed presentation text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownGenerator(ValueError):
    """A relator token names a generator missing from the gens: line."""


class ZeroExponent(ValueError):
    """Word tokens must carry nonzero exponents."""


def _parse_token(token: str, line: int, column: int) -> tuple[str, int]:
    name, sep, exp_text = token.partition("^")
    if not _NAME_RE.match(name):
        raise PresentationSyntaxError(f"bad token {token!r}", line, column)
    if not sep:
        return name, 1
    if not _INT_RE.match(exp_text):
        raise PresentationSyntaxError(f"bad exponent in {token!r}", line, column)
    exp = int(exp_text)
    if exp == 0:
        raise ZeroExponent(f"line {line}: token {token!r} has exponent 0")
    return name, exp


def _tokens_with_columns(text_line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text_line)]


def parse_word(text: str, generators: set[str] | None = None, line: int = 1) -> Word:
    """Parse whitespace-separated word tokens; optionally restrict names."""
    syllables = []
    for token, col in _tokens_with_columns(text):
        name, exp = _parse_token(token, line, col)
        if generators is not None and name not in generators:
            raise UnknownGenerator(f"line {line}: unknown generator {name!r}")
        syllables.append((name, exp))
    return Word(syllables)


def parse_presentation(text: str) -> Presentation:
    generators: list[str] | None = None
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if generators is not None:
                raise PresentationSyntaxError("duplicate gens: line", lineno, 1)
            generators = []
            for token, col in _tokens_with_columns(raw[5:]):
                if not _NAME_RE.match(token):
                    raise PresentationSyntaxError(
                        f"bad generator name {token!r}", lineno, col + 5
                    )
                if token in generators:
                    raise PresentationSyntaxError(
                        f"duplicate generator {token!r}", lineno, col + 5
                    )
                generators.append(token)
        elif line.startswith("rel:"):
            if generators is None:
                raise PresentationSyntaxError(
                    "rel: line before gens: line", lineno, 1
                )
            relators.append(parse_word(raw[4:], set(generators), line=lineno))
        else:
            raise PresentationSyntaxError(
                f"expected 'gens:' or 'rel:', got {line.split()[0]!r}", lineno, 1
            )
    if generators is None:
        raise PresentationSyntaxError("missing gens: line", 1, 1)
    return Presentation(generators, relators)


def word_to_text(w: Word) -> str:
    return str(w)


def presentation_to_text(P: Presentation) -> str:
    lines = ["gens: " + " ".join(P.generators)]
    for r in P.relators:
        body = word_to_text(r)
        lines.append("rel: " + body if body else "rel:")
    return "\n".join(lines) + "\n"
