"""Partitions, bipartitions and multisets of bipartitions.

A partition is stored as a tuple of positive parts; any row index past the
last stored part reads as 0.  A bipartition ``[a,b,...|c,d,...]`` is a pair
of partitions, the *black* one first and the *white* one second.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BoundExceeded

__all__ = [
    "Partition",
    "Bipartition",
    "BoxMoveSets",
    "BipartitionMultiset",
    "EMPTY",
    "contains",
    "box_moves",
    "partitions",
    "partitions_in_box",
    "enumerate_bipartitions",
    "canonical_key",
    "display_key",
    "DEFAULT_ENUMERATION_BOUND",
]

DEFAULT_ENUMERATION_BOUND = 12


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        # trailing zeros are tolerated on input and never stored
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for p in parts:
            if p < 0:
                raise ValueError(f"negative part in {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts are not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __getitem__(self, row: int) -> int:
        """Return the length of ``row`` (1-indexed); rows past the end are 0."""
        if row < 1:
            raise IndexError("rows are numbered from 1")
        return self.parts[row - 1] if row <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def contained_in(self, other: Partition) -> bool:
        return len(self) <= len(other) and all(a <= b for a, b in zip(self.parts, other.parts))

    def addable_rows(self) -> list[int]:
        return [i for i in range(1, len(self) + 2) if i == 1 or self[i - 1] > self[i]]

    def removable_rows(self) -> list[int]:
        return [i for i in range(1, len(self) + 1) if self[i] > self[i + 1]]

    def add_box(self, row: int) -> Partition:
        if row not in self.addable_rows():
            raise ValueError(f"row {row} of ({self}) has no addable box")
        parts = list(self.parts) + [0]
        parts[row - 1] += 1
        return Partition(tuple(parts))

    def remove_box(self, row: int) -> Partition:
        if row not in self.removable_rows():
            raise ValueError(f"row {row} of ({self}) has no removable box")
        parts = list(self.parts)
        parts[row - 1] -= 1
        return Partition(tuple(parts))


def _as_partition(value) -> Partition:
    return value if isinstance(value, Partition) else Partition(tuple(value))


@dataclass(frozen=True)
class Bipartition:
    black: Partition = Partition()
    white: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "black", _as_partition(self.black))
        object.__setattr__(self, "white", _as_partition(self.white))

    def __str__(self) -> str:
        return f"[{self.black}|{self.white}]"

    def __repr__(self) -> str:
        return f"Bipartition({self.black.parts}, {self.white.parts})"

    @property
    def size(self) -> int:
        return self.black.size + self.white.size

    def contained_in(self, other: Bipartition) -> bool:
        return self.black.contained_in(other.black) and self.white.contained_in(other.white)

    def is_empty(self) -> bool:
        return not self.black.parts and not self.white.parts


EMPTY = Bipartition()


def contains(mu: Bipartition, lam: Bipartition) -> bool:
    """True iff ``mu`` is contained in ``lam`` (componentwise, both colours)."""
    return mu.contained_in(lam)


class BoxMoveSets(NamedTuple):
    add_black: tuple[Bipartition, ...]
    add_white: tuple[Bipartition, ...]
    rem_black: tuple[Bipartition, ...]
    rem_white: tuple[Bipartition, ...]


def box_moves(lam: Bipartition) -> BoxMoveSets:
    """All bipartitions one box away from ``lam``, each family ordered by row."""
    b, w = lam.black, lam.white
    return BoxMoveSets(
        tuple(Bipartition(b.add_box(i), w) for i in b.addable_rows()),
        tuple(Bipartition(b, w.add_box(i)) for i in w.addable_rows()),
        tuple(Bipartition(b.remove_box(i), w) for i in b.removable_rows()),
        tuple(Bipartition(b, w.remove_box(i)) for i in w.removable_rows()),
    )


def partitions(n: int, max_part: int | None = None, max_rows: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, optionally boxed."""
    if max_part is None:
        max_part = n
    if max_rows is None:
        max_rows = n

    def rec(remaining, largest, rows_left):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    for parts in rec(n, max_part, max_rows):
        yield Partition(parts)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Every partition fitting in a ``rows`` x ``cols`` rectangle."""
    for n in range(rows * cols + 1):
        yield from partitions(n, max_part=cols, max_rows=rows)


def _lex_desc(p: Partition) -> tuple[int, ...]:
    # parts are positive, so the 0 sentinel sorts a prefix after its extensions
    return tuple(-x for x in p.parts) + (0,)


def canonical_key(lam: Bipartition):
    """Enumeration order: size ascending, then black and white reverse-lex."""
    return (lam.size, _lex_desc(lam.black), _lex_desc(lam.white))


def display_key(lam: Bipartition):
    """Output order: size descending, then black and white reverse-lex."""
    return (-lam.size, _lex_desc(lam.black), _lex_desc(lam.white))


def enumerate_bipartitions(max_size: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Bipartition]:
    """Yield every bipartition of size at most ``max_size`` exactly once.

    >>> [str(x) for x in enumerate_bipartitions(1)]
    ['[|]', '[1|]', '[|1]']
    """
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    if max_size > bound:
        raise BoundExceeded(f"max_size={max_size} exceeds enumeration bound {bound}")
    for size in range(max_size + 1):
        layer = [
            Bipartition(b, w)
            for k in range(size, -1, -1)
            for b in partitions(k)
            for w in partitions(size - k)
        ]
        layer.sort(key=canonical_key)
        yield from layer


class BipartitionMultiset(Mapping):
    """Immutable map from bipartition to positive multiplicity.

    Stands for the direct sum of the indecomposables it labels.  Zero
    multiplicities are dropped on construction; negative ones are rejected.
    """

    __slots__ = ("_counts", "_hash")

    def __init__(self, data: Mapping[Bipartition, int] | Iterable[Bipartition] = ()):
        counts = Counter(data) if not isinstance(data, Mapping) else dict(data)
        for key, mult in counts.items():
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {key}")
        self._counts = {k: v for k, v in counts.items() if v}
        self._hash = None

    def __getitem__(self, key: Bipartition) -> int:
        return self._counts[key]

    def __iter__(self):
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __add__(self, other: BipartitionMultiset) -> BipartitionMultiset:
        counts = Counter(self._counts)
        counts.update(other._counts)
        return BipartitionMultiset(counts)

    def __repr__(self) -> str:
        inner = ", ".join(f"{lam}: {mult}" for lam, mult in self.sorted_items())
        return f"BipartitionMultiset({{{inner}}})"

    def multiplicity(self, key: Bipartition) -> int:
        return self._counts.get(key, 0)

    def total(self) -> int:
        return sum(self._counts.values())

    def sorted_items(self) -> list[tuple[Bipartition, int]]:
        return sorted(self._counts.items(), key=lambda kv: display_key(kv[0]))

    def to_counter(self) -> Counter:
        return Counter(self._counts)

    @classmethod
    def sum(cls, parts: Iterable[tuple[BipartitionMultiset, int]]) -> BipartitionMultiset:
        """Weighted sum ``sum(mult * ms for ms, mult in parts)``."""
        counts = Counter()
        for ms, mult in parts:
            for lam, k in ms._counts.items():
                counts[lam] += mult * k
        return cls(counts)
