"""Tensor products with the two generating objects.

At generic parameter the products with the natural object ``B`` and its
dual ``W`` are given by adding and removing single boxes.  At an integral
parameter each indecomposable lifts to its linkage class ``m_delta``; the
lifted product is the sum of generic products over the class, and the
specialized answer is recovered by peeling linkage classes off it, largest
summand first.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable, Sequence
from functools import lru_cache

from .bipartition import Bipartition, BipartitionMultiset, box_moves, display_key
from .diagrams import Delta, is_generic, m_delta
from .errors import BoundExceeded, InternalContradiction, NotContained, PeelingFailure

__all__ = [
    "Generator",
    "B",
    "W",
    "GeneratorWord",
    "parse_word",
    "format_word",
    "generic_one_box",
    "specialized_one_box",
    "one_box",
    "peel",
    "lift",
    "tensor_word",
    "reach_witness",
    "verify_chain",
    "DEFAULT_WORD_BOUND",
]

DEFAULT_WORD_BOUND = 6


class Generator(enum.Enum):
    BLACK_BOX = "B"
    WHITE_BOX = "W"

    def __str__(self):
        return self.value


B, W = Generator.BLACK_BOX, Generator.WHITE_BOX

GeneratorWord = tuple[Generator, ...]


def parse_word(text: str) -> GeneratorWord:
    try:
        return tuple(Generator(ch) for ch in text.strip().upper())
    except ValueError:
        raise ValueError(f"generator words use only the letters B and W, got {text!r}") from None


def format_word(word: Iterable[Generator]) -> str:
    return "".join(g.value for g in word)


@lru_cache(maxsize=1 << 16)
def generic_one_box(g: Generator, lam: Bipartition) -> BipartitionMultiset:
    moves = box_moves(lam)
    if g is B:
        summands = moves.add_black + moves.rem_white
    else:
        summands = moves.add_white + moves.rem_black
    return BipartitionMultiset(summands)


def lift(ms: BipartitionMultiset, delta: Delta) -> BipartitionMultiset:
    """Replace every summand by its linkage class (multiplicities carried)."""
    return BipartitionMultiset.sum((m_delta(lam, delta), k) for lam, k in ms.items())


def peel(target: BipartitionMultiset, delta: int) -> list[Bipartition]:
    """Write ``target`` as a sum of linkage classes; return their heads.

    Any summand of maximal size must head a class, so the greedy order is
    forced.  Heads come back in display order, with repetition.
    """
    residue = Counter(target)
    heads = []
    while residue:
        head = min(residue, key=display_key)
        for lam in m_delta(head, delta):
            left = residue[lam] - 1
            if left < 0:
                raise PeelingFailure(f"{lam} missing while peeling the class of {head} at delta={delta}")
            if left:
                residue[lam] = left
            else:
                del residue[lam]
        heads.append(head)
    heads.sort(key=display_key)
    return heads


@lru_cache(maxsize=1 << 16)
def specialized_one_box(g: Generator, lam: Bipartition, delta: int) -> BipartitionMultiset:
    lifted = BipartitionMultiset.sum((generic_one_box(g, mu), 1) for mu in m_delta(lam, delta))
    return BipartitionMultiset(Counter(peel(lifted, delta)))


def one_box(g: Generator, lam: Bipartition, delta: Delta) -> BipartitionMultiset:
    if is_generic(delta):
        return generic_one_box(g, lam)
    return specialized_one_box(g, lam, delta)


def tensor_word(
    word: Sequence[Generator],
    lam: Bipartition | BipartitionMultiset,
    delta: Delta,
    bound: int = DEFAULT_WORD_BOUND,
) -> BipartitionMultiset:
    """Decompose ``word[-1] ⊗ ... ⊗ word[0] ⊗ L(lam)``, applying ``word[0]`` first."""
    if len(word) > bound:
        raise BoundExceeded(f"word length {len(word)} exceeds bound {bound}")
    current = lam if isinstance(lam, BipartitionMultiset) else BipartitionMultiset({lam: 1})
    for g in word:
        current = BipartitionMultiset.sum((one_box(g, nu, delta), k) for nu, k in current.items())
    return current


def verify_chain(start: Bipartition, word: Sequence[Generator], trace: Sequence[Bipartition], delta: Delta) -> bool:
    """Check that ``trace[i]`` is a summand of ``word[i] ⊗ L(trace[i-1])``.

    With ``trace[-1]`` standing for ``start``.  Since tensoring distributes
    over direct sums, a passing chain proves ``trace[-1]`` is a summand of
    ``tensor_word(word, start, delta)`` without expanding the whole product.
    """
    if len(word) != len(trace):
        return False
    current = start
    for g, nxt in zip(word, trace):
        if nxt not in one_box(g, current, delta):
            return False
        current = nxt
    return True


def _growth_path(mu: Bipartition, lam: Bipartition) -> tuple[list[Generator], list[Bipartition]]:
    # black boxes first, then white; within a colour fill the top row first
    word, trace = [], []
    black = mu.black
    for row in range(1, len(lam.black) + 1):
        while black[row] < lam.black[row]:
            black = black.add_box(row)
            word.append(B)
            trace.append(Bipartition(black, mu.white))
    white = mu.white
    for row in range(1, len(lam.white) + 1):
        while white[row] < lam.white[row]:
            white = white.add_box(row)
            word.append(W)
            trace.append(Bipartition(black, white))
    return word, trace


def reach_witness(mu: Bipartition, lam: Bipartition, delta: Delta) -> GeneratorWord:
    """A word ``w`` with ``L(lam)`` a summand of ``w ⊗ L(mu)``, one letter per box of lam/mu."""
    if not mu.contained_in(lam):
        raise NotContained(f"{mu} is not contained in {lam}")
    word, trace = _growth_path(mu, lam)
    if not verify_chain(mu, word, trace, delta):
        raise InternalContradiction(f"growth witness from {mu} to {lam} failed at delta={delta}")
    return tuple(word)
