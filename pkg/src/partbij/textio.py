"""Text wire formats for partitions and k-tuples.

A partition is written as comma-separated parts, ``3,2,2,1``. The empty
partition is the empty string, ``∅`` or ``()``. Parts may also carry a
multiplicity, so ``2^2,1`` and ``1,2^2`` both mean ``(2,2,1)``. Padded
partitions keep their zeros, as in ``2,1,0,0``.

k-tuples travel as JSON objects with ``alpha``, ``beta``, ``gammas`` and
``squares`` keys; ``squares`` lists the side of each square.
"""

from __future__ import annotations

import json
from collections import Counter
from typing import Sequence

from .errors import InvalidInput
from .krank import KTuple
from .partition import PaddedPartition, Partition

__all__ = [
    "parse_parts",
    "parse_partition",
    "parse_padded",
    "format_partition",
    "format_frequency",
    "parse_ktuple",
    "format_ktuple",
]

_EMPTY = {"", "∅", "()", "[]"}


def parse_parts(text: str) -> list[int]:
    """Parse ``"3,2^2,1"`` into a flat list of parts, sorted non-increasingly."""
    body = text.strip()
    if body.startswith(("(", "[")) and body.endswith((")", "]")):
        body = body[1:-1]
    if body.strip() in _EMPTY:
        return []
    parts: list[int] = []
    for token in body.replace(" ", "").split(","):
        if not token:
            raise InvalidInput(f"empty entry in {text!r}")
        value, _, mult = token.partition("^")
        try:
            v = int(value)
            g = int(mult) if mult else 1
        except ValueError as exc:
            raise InvalidInput(f"cannot read {token!r} as a part or part^multiplicity") from exc
        if v < 0 or g < 0:
            raise InvalidInput(f"negative entry {token!r}")
        parts.extend([v] * g)
    parts.sort(reverse=True)
    return parts


def parse_partition(text: str) -> Partition:
    parts = parse_parts(text)
    if any(x == 0 for x in parts):
        raise InvalidInput("partition parts must be positive; zeros belong only in padded sequences")
    return Partition(parts)


def parse_padded(text: str, length: int | None = None) -> PaddedPartition:
    """Parse a padded partition; with ``length`` the result is zero-padded to it."""
    parts = parse_parts(text)
    if length is not None:
        if len([x for x in parts if x]) > length:
            raise InvalidInput(f"{text!r} has more than {length} positive parts")
        parts = [x for x in parts if x]
        parts += [0] * (length - len(parts))
    return PaddedPartition(parts)


def format_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def format_frequency(p: Sequence[int]) -> str:
    """Multiplicity form in increasing part order, e.g. ``3^2,4^3,7``."""
    if not p:
        return "∅"
    counts = Counter(p)
    return ",".join(f"{v}^{c}" if c > 1 else str(v) for v, c in sorted(counts.items()))


def parse_ktuple(text: str) -> KTuple:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"k-tuple must be a JSON object: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise InvalidInput("k-tuple must be a JSON object with alpha, beta, gammas and squares")
    return KTuple.from_json(obj)


def format_ktuple(t: KTuple) -> str:
    return json.dumps(t.to_json(), separators=(",", ":"))
