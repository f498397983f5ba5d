"""Text notation: cycle strings, profiles, tuples and exact rationals.

Grammar::

    permutation := "id" | cycle+
    cycle       := "(" INT ((" " | ",") INT)* ")"
    profile     := class ("|" class){3}     class := part ("," part)*    part := INT | INT "^" INT
    tuple       := permutation (";" permutation){3}
"""

from __future__ import annotations

import re
from fractions import Fraction

from .hurwitz import MonodromyTuple, RamificationProfile
from .perm import CycleType, Permutation, format_permutation


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")


def parse_permutation(text: str, degree: int) -> Permutation:
    s = text.strip()
    if s == "id":
        return Permutation.identity(degree)
    cycles: list[list[int]] = []
    seen: dict[int, int] = {}
    current: list[int] | None = None
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        opening, closing, num, comma, junk = m.groups()
        pos = m.end()
        if junk is not None:
            raise ParseError(f"unexpected character {junk!r}", text, start)
        if opening:
            if current is not None:
                raise ParseError("nested '('", text, start)
            current = []
        elif closing:
            if not current:
                raise ParseError("empty or unopened cycle", text, start)
            cycles.append(current)
            current = None
        elif comma:
            if current is None:
                raise ParseError("separator outside a cycle", text, start)
        else:
            if current is None:
                raise ParseError("point outside a cycle", text, start)
            x = int(num)
            if not 1 <= x <= degree:
                raise ParseError(f"point {x} outside 1..{degree}", text, start)
            if x in seen:
                raise ParseError(f"point {x} repeated", text, start)
            seen[x] = start
            current.append(x)
    if current is not None:
        raise ParseError("unclosed '('", text, len(text))
    if not cycles:
        raise ParseError("expected 'id' or at least one cycle", text, 0)
    return Permutation.from_cycles(cycles, degree)


def parse_cycle_type(text: str, degree: int) -> CycleType:
    parts: list[int] = []
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", chunk)
        if m is None:
            raise ParseError(f"bad part {chunk!r}", text, text.find(chunk))
        k, rep = int(m.group(1)), int(m.group(2) or 1)
        if k < 1:
            raise ParseError("parts must be positive", text, text.find(chunk))
        parts.extend([k] * rep)
    # omitted fixed points
    if sum(parts) > degree:
        raise ParseError(f"parts sum to {sum(parts)} > degree {degree}", text, 0)
    parts.extend([1] * (degree - sum(parts)))
    return CycleType(tuple(parts))


def parse_profile(text: str, degree: int) -> RamificationProfile:
    pieces = text.split("|")
    if len(pieces) != 4:
        raise ParseError(f"expected four classes separated by '|', got {len(pieces)}", text, 0)
    return RamificationProfile(degree, tuple(parse_cycle_type(p, degree) for p in pieces))


def parse_tuple(text: str, degree: int) -> MonodromyTuple:
    pieces = text.split(";")
    if len(pieces) != 4:
        raise ParseError(f"expected four permutations separated by ';', got {len(pieces)}", text, 0)
    return MonodromyTuple([parse_permutation(p, degree) for p in pieces])


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError("expected comma-separated integers", text, 0) from None


def format_rational(x: Fraction | int) -> str:
    """'p/q' in lowest terms, or 'n' when integral."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_profile(c: RamificationProfile) -> str:
    return "|".join(",".join(map(str, ct.parts)) for ct in c.classes)


def format_tuple(r: MonodromyTuple) -> str:
    return ";".join(format_permutation(p) for p in r.entries)
