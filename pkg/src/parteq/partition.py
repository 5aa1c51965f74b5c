"""Canonical integer partition representation and structural operations.

A partition is stored as a descending tuple of (part, multiplicity) pairs.
Zero multiplicities are never stored, so equal partitions compare equal
structurally and hash consistently. All operations are pure; instances are
immutable and safe to share.

Canonical text format: space-separated tokens ``part`` or ``part^mult``
with parts strictly descending, the ``^mult`` suffix only for mult >= 2,
and no leading zeros. The empty string denotes the empty partition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NotSubpartition, ParseError

_TOKEN_RE = re.compile(r"(\d+)(?:\^(\d+))?")


@dataclass(frozen=True)
class Partition:
    """A partition of a nonnegative integer, as (part, multiplicity) pairs."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for part, mult in self.entries:
            if part < 1 or mult < 1:
                raise ValueError(f"invalid entry ({part}, {mult}): parts and multiplicities must be >= 1")
            if prev is not None and part >= prev:
                raise ValueError("entries must be strictly descending by part")
            prev = part

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Partition":
        """Build from (part, multiplicity) pairs in any order; merges duplicates."""
        acc: dict[int, int] = {}
        for part, mult in pairs:
            if mult == 0:
                continue
            acc[part] = acc.get(part, 0) + mult
        return cls(tuple(sorted(acc.items(), reverse=True)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from a bag of parts, e.g. [4, 2, 2, 1]."""
        return cls.from_pairs((p, 1) for p in parts)

    def weight(self) -> int:
        """Sum of all parts with multiplicity (the 'n' this partitions)."""
        return sum(part * mult for part, mult in self.entries)

    def num_parts(self) -> int:
        """Total number of parts, counted with multiplicity."""
        return sum(mult for _, mult in self.entries)

    def largest_part(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.entries[0][0] if self.entries else 0

    def multiplicity(self, part: int) -> int:
        for p, mult in self.entries:
            if p == part:
                return mult
        return 0

    def parts(self) -> Iterator[int]:
        """Yield parts in descending order, repeated per multiplicity."""
        for part, mult in self.entries:
            for _ in range(mult):
                yield part

    def part_sequence(self) -> tuple[int, ...]:
        return tuple(self.parts())

    def is_empty(self) -> bool:
        return not self.entries

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram.

        Part i of the result occurs (#parts >= i) - (#parts >= i+1) times;
        equivalently the columns of the diagram become the rows.
        """
        if not self.entries:
            return Partition()
        # The column height at position i is the count of parts >= i; it is
        # constant on each run between consecutive distinct parts, so each
        # run contributes one entry (height, run length) to the conjugate.
        heights: list[tuple[int, int]] = []  # (height, run_length)
        total = 0
        entries = self.entries
        for idx, (part, mult) in enumerate(entries):
            total += mult
            lower = entries[idx + 1][0] if idx + 1 < len(entries) else 0
            heights.append((total, part - lower))
        # heights is ascending in height (descending part ⇒ growing count);
        # as conjugate entries we need descending part = height order.
        return Partition(tuple((h, run) for h, run in sorted(heights, reverse=True)))

    def add(self, other: "Partition") -> "Partition":
        """Multiset union: multiplicities add pointwise."""
        return Partition.from_pairs(list(self.entries) + list(other.entries))

    def subtract(self, other: "Partition") -> "Partition":
        """Multiset difference; ``other`` must be a sub-multiset of self."""
        acc = dict(self.entries)
        for part, mult in other.entries:
            have = acc.get(part, 0)
            if mult > have:
                raise NotSubpartition(f"part {part}: multiplicity {mult} exceeds available {have}")
            if mult == have:
                del acc[part]
            else:
                acc[part] = have - mult
        return Partition(tuple(sorted(acc.items(), reverse=True)))

    def __add__(self, other: "Partition") -> "Partition":
        return self.add(other)

    def __sub__(self, other: "Partition") -> "Partition":
        return self.subtract(other)

    def render(self) -> str:
        """Canonical text form, e.g. '7^4 6^2 5 1'. Empty partition -> ''."""
        tokens = []
        for part, mult in self.entries:
            tokens.append(f"{part}^{mult}" if mult >= 2 else str(part))
        return " ".join(tokens)

    def __str__(self) -> str:
        return self.render()

    def to_pairs(self) -> list[list[int]]:
        """JSON-friendly form: [[part, mult], ...] descending by part."""
        return [[part, mult] for part, mult in self.entries]

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse the canonical text format; strict inverse of render()."""
        if text == "":
            return Partition()
        entries: list[tuple[int, int]] = []
        pos = 0
        prev_part = None
        first = True
        while pos < len(text):
            if not first:
                if text[pos] != " ":
                    raise ParseError(f"expected single space at position {pos}", position=pos)
                pos += 1
            first = False
            match = _TOKEN_RE.match(text, pos)
            if not match or match.start() != pos or match.group(1) == "":
                raise ParseError(f"expected part at position {pos}", position=pos)
            part_str, mult_str = match.group(1), match.group(2)
            if part_str != "0" and part_str.startswith("0"):
                raise ParseError(f"leading zero at position {pos}", position=pos)
            part = int(part_str)
            if part < 1:
                raise ParseError(f"part must be >= 1 at position {pos}", position=pos)
            if mult_str is not None:
                if mult_str.startswith("0"):
                    raise ParseError(f"leading zero in multiplicity at position {pos}", position=pos)
                mult = int(mult_str)
                if mult < 2:
                    raise ParseError(f"explicit multiplicity must be >= 2 at position {pos}", position=pos)
            else:
                mult = 1
            if prev_part is not None and part >= prev_part:
                raise ParseError(f"parts must be strictly descending at position {pos}", position=pos)
            prev_part = part
            entries.append((part, mult))
            pos = match.end()
        return Partition(tuple(entries))


EMPTY = Partition()
