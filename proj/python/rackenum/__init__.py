"""Enumerate the elements of finitely presented racks and quandles."""

from ._rackenum import (
    Enumeration,
    ParseError,
    Presentation,
    RackenumError,
    enumerate,
    enumerate_cosets,
    link_presentation,
    minimal_cyclic_representative,
    parse_presentation,
    reduce_word,
)

__all__ = [
    "Enumeration",
    "ParseError",
    "Presentation",
    "RackenumError",
    "enumerate",
    "enumerate_cosets",
    "link_presentation",
    "load",
    "minimal_cyclic_representative",
    "parse_presentation",
    "reduce_word",
]


def load(path):
    """Parse a presentation file."""
    with open(path, encoding="utf-8") as f:
        return parse_presentation(f.read())
