"""Weight diagrams, cap diagrams and linkage.

Vertex ``i`` of the weight diagram of ``lam`` at integral parameter ``delta``
is labelled by membership of ``i`` in the two sets

    up(lam)          = {lam.black[r] - r + 1 : r >= 1}
    down(lam, delta) = {r - delta - lam.white[r] : r >= 1}

(``o`` in neither, ``^`` only in up, ``v`` only in down, ``x`` in both).
Left of some vertex every label is ``^`` and right of some vertex every
label is ``v``; a :class:`WeightDiagram` stores only the tight window between.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations
from typing import NamedTuple, Union

from .bipartition import Bipartition, BipartitionMultiset, box_moves

__all__ = [
    "Generic",
    "GENERIC",
    "Delta",
    "is_generic",
    "Label",
    "WeightDiagram",
    "CapDiagram",
    "LocalMove",
    "weight_diagram",
    "cap_diagram",
    "decode_labels",
    "is_linked",
    "linked_labels",
    "m_delta",
    "diagram_move",
    "local_move_classify",
    "BLACK_MOVES",
    "WHITE_MOVES",
]


class Generic:
    """The indeterminate parameter ``t``; compare with ``is GENERIC``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "GENERIC"

    def __str__(self):
        return "t"

    def __reduce__(self):
        return (Generic, ())


GENERIC = Generic()
Delta = Union[int, Generic]


def is_generic(delta) -> bool:
    return delta is GENERIC


class Label(str, enum.Enum):
    CIRCLE = "o"
    UP = "^"
    DOWN = "v"
    CROSS = "x"

    def __str__(self):
        return self.value


_UP, _DOWN, _CIRCLE, _CROSS = Label.UP, Label.DOWN, Label.CIRCLE, Label.CROSS


@dataclass(frozen=True)
class WeightDiagram:
    lo: int
    hi: int
    labels: tuple[Label, ...]
    delta: int

    def label(self, vertex: int) -> Label:
        if vertex < self.lo:
            return _UP
        if vertex > self.hi:
            return _DOWN
        return self.labels[vertex - self.lo]

    def labels_on(self, lo: int, hi: int) -> tuple[Label, ...]:
        return tuple(self.label(v) for v in range(lo, hi + 1))

    def positions(self, label: Label) -> frozenset[int]:
        return frozenset(v for v, lab in zip(range(self.lo, self.hi + 1), self.labels) if lab is label)

    def count(self, label: Label) -> int:
        return self.labels.count(label)

    def __str__(self):
        return "".join(lab.value for lab in self.labels)


@dataclass(frozen=True)
class CapDiagram:
    base: WeightDiagram
    caps: tuple[tuple[int, int], ...]

    def partner(self, vertex: int) -> int | None:
        for i, j in self.caps:
            if vertex == i:
                return j
            if vertex == j:
                return i
        return None


def _tight(lo: int, hi: int, labels: list[Label], delta: int) -> WeightDiagram:
    start, stop = 0, len(labels)
    while start < stop and labels[start] is _UP:
        start += 1
    while stop > start and labels[stop - 1] is _DOWN:
        stop -= 1
    if start == stop:
        # all ^ then all v; the crossover is forced to sit between 0 and 1
        return WeightDiagram(1, 0, (), delta)
    return WeightDiagram(lo + start, lo + stop - 1, tuple(labels[start:stop]), delta)


@lru_cache(maxsize=1 << 16)
def weight_diagram(lam: Bipartition, delta: int) -> WeightDiagram:
    if not isinstance(delta, int):
        raise TypeError("weight diagrams exist only for integral delta")
    b, w = lam.black, lam.white
    lo = min(-len(b), 1 - delta - w[1]) - 1
    hi = max(b[1], len(w) - delta) + 1
    up = {b[r] - r + 1 for r in range(1, hi - lo + len(b) + 2)}
    down = {r - delta - w[r] for r in range(1, hi + delta + 2 + len(w))}
    labels = []
    for v in range(lo, hi + 1):
        if v in up:
            labels.append(_CROSS if v in down else _UP)
        else:
            labels.append(_DOWN if v in down else _CIRCLE)
    return _tight(lo, hi, labels, delta)


def decode_labels(lo: int, labels, delta: int) -> Bipartition:
    """Recover the bipartition whose diagram has ``labels`` on ``lo..``.

    Vertices left of the window are taken as ``^``, right of it as ``v``.
    Raises ``ValueError`` if no bipartition has this diagram.
    """
    labels = list(labels)
    hi = lo + len(labels) - 1
    ups = [v for v in range(hi, lo - 1, -1) if labels[v - lo] in (_UP, _CROSS)]
    downs = [v for v in range(lo, hi + 1) if labels[v - lo] in (_DOWN, _CROSS)]
    if lo + len(ups) - 1 != 0 or len(downs) - delta - hi != 0:
        raise ValueError("labels do not come from a bipartition at this delta")
    black = [a + r for r, a in enumerate(ups)]
    white = [r + 1 - delta - b for r, b in enumerate(downs)]
    return Bipartition(tuple(black), tuple(white))


@lru_cache(maxsize=1 << 16)
def cap_diagram(wd: WeightDiagram) -> CapDiagram:
    """Maximal crossingless caps, each joining a ``v`` to an ``^`` on its right."""
    stack, caps = [], []
    for v, lab in zip(range(wd.lo, wd.hi + 1), wd.labels):
        if lab is _DOWN:
            stack.append(v)
        elif lab is _UP and stack:
            caps.append((stack.pop(), v))
    return CapDiagram(wd, tuple(sorted(caps)))


def is_linked(lam: Bipartition, mu: Bipartition, delta: Delta) -> bool:
    """True iff ``x_mu`` arises from ``x_lam`` by swapping labels on some caps."""
    if is_generic(delta):
        return lam == mu
    if lam == mu:
        return True
    if mu.size > lam.size - 2 or (lam.size - mu.size) % 2:
        # each cap swap lowers the size by a positive even amount
        return False
    x, y = weight_diagram(lam, delta), weight_diagram(mu, delta)
    if x.positions(_CROSS) != y.positions(_CROSS) or x.positions(_CIRCLE) != y.positions(_CIRCLE):
        return False
    caps = cap_diagram(x)
    on_cap = set()
    for i, j in caps.caps:
        on_cap.update((i, j))
        if (y.label(i), y.label(j)) not in ((_DOWN, _UP), (_UP, _DOWN)):
            return False
    lo, hi = min(x.lo, y.lo), max(x.hi, y.hi)
    return all(x.label(v) is y.label(v) for v in range(lo, hi + 1) if v not in on_cap)


def linked_labels(lam: Bipartition, delta: int):
    """Yield ``(lo, labels)`` for every diagram linked to ``x_lam``."""
    caps = cap_diagram(weight_diagram(lam, delta))
    base = caps.base
    for chosen in chain.from_iterable(combinations(caps.caps, k) for k in range(len(caps.caps) + 1)):
        labels = list(base.labels)
        for i, j in chosen:
            labels[i - base.lo], labels[j - base.lo] = labels[j - base.lo], labels[i - base.lo]
        yield base.lo, labels


@lru_cache(maxsize=1 << 16)
def m_delta(lam: Bipartition, delta: Delta) -> BipartitionMultiset:
    """The linkage class of ``lam``: every ``mu`` with D(lam, mu) = 1, once each."""
    if is_generic(delta):
        return BipartitionMultiset({lam: 1})
    return BipartitionMultiset({decode_labels(lo, labels, delta): 1 for lo, labels in linked_labels(lam, delta)})


class LocalMove(NamedTuple):
    colour: str
    case: int
    before: str
    after: str
    vertices: tuple[int, int]


# (labels of the smaller diagram, labels of the larger diagram) on (i, i+1)
BLACK_MOVES = (("xo", "v^"), ("^o", "o^"), ("xv", "vx"), ("^v", "ox"))
WHITE_MOVES = (("ox", "v^"), ("ov", "vo"), ("^x", "x^"), ("^v", "xo"))


def diagram_move(small: WeightDiagram, large: WeightDiagram) -> LocalMove | None:
    """Match a diagram pair against the one-box tables, by labels alone."""
    lo, hi = min(small.lo, large.lo), max(small.hi, large.hi)
    diff = [v for v in range(lo, hi + 1) if small.label(v) is not large.label(v)]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return None
    i = diff[0]
    before = small.label(i).value + small.label(i + 1).value
    after = large.label(i).value + large.label(i + 1).value
    for colour, table in (("black", BLACK_MOVES), ("white", WHITE_MOVES)):
        for case, pair in enumerate(table, start=1):
            if pair == (before, after):
                return LocalMove(colour, case, before, after, (i, i + 1))
    return None


def local_move_classify(mu: Bipartition, lam: Bipartition, delta: int) -> LocalMove | None:
    """Which one-box table entry relates ``x_mu`` to ``x_lam``; None if not one box apart."""
    moves = box_moves(lam)
    if mu in moves.rem_black:
        colour = "black"
    elif mu in moves.rem_white:
        colour = "white"
    else:
        return None
    move = diagram_move(weight_diagram(mu, delta), weight_diagram(lam, delta))
    if move is None or move.colour != colour:
        raise AssertionError(f"one-box pair {mu} < {lam} at delta={delta} matches no table entry")
    return move
