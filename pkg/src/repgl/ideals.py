"""Ideals of the interpolation category at an integral parameter.

For a fixed parameter ``delta`` the nontrivial ideals are the kernels
``I(m|n)`` with ``m - n = delta``; ``L(lam)`` lies in ``I(m|n)`` exactly when
``lam`` is not (m|n)-cross.  They form a chain, ``I(m2|n2) ⊆ I(m|n)`` iff
``m2 >= m``, so every ideal generated by finitely many indecomposables is
determined by a single number.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Union

from .bipartition import Bipartition, display_key
from .cross import Direction, almost_inside, apply_bump, bump_path, is_almost_cross, is_cross
from .diagrams import Delta, is_generic
from .errors import InternalContradiction
from .tensor import B, W, Generator, GeneratorWord, one_box, reach_witness, tensor_word

__all__ = [
    "ZeroIdeal",
    "FullCategory",
    "Nontrivial",
    "IdealId",
    "ReachesUnit",
    "ReachesAlmost",
    "ReductionOutcome",
    "in_ideal",
    "min_m",
    "m_star",
    "principal_ideal",
    "ideal_of_set",
    "almost_level",
    "reduce_to_almost_or_unit",
    "bothalmost_word",
    "ideal_witness",
]


@dataclass(frozen=True)
class ZeroIdeal:
    def __str__(self):
        return "zero"


@dataclass(frozen=True)
class FullCategory:
    def __str__(self):
        return "full"


@dataclass(frozen=True)
class Nontrivial:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("I(m|n) needs m, n >= 0")

    @property
    def delta(self) -> int:
        return self.m - self.n

    def __contains__(self, lam: Bipartition) -> bool:
        return in_ideal(lam, self.m, self.n)

    def is_subideal_of(self, other: Nontrivial) -> bool:
        """Inclusion at a common parameter: ``I(m2|n2)`` sits inside ``I(m|n)`` iff ``m2 >= m``."""
        if other.delta != self.delta:
            raise ValueError("ideals at different parameters are not comparable")
        return self.m >= other.m

    def __str__(self):
        return f"I({self.m}|{self.n})"


IdealId = Union[ZeroIdeal, FullCategory, Nontrivial]


def in_ideal(lam: Bipartition, m: int, n: int) -> bool:
    return not is_cross(lam, m, n)


def min_m(delta: int) -> int:
    """Smallest admissible ``m`` (so that ``n = m - delta >= 0``)."""
    return max(delta, 0)


def m_star(lam: Bipartition, delta: int) -> int | None:
    """Largest admissible ``m`` with ``lam`` not (m|m-delta)-cross, or None.

    Non-crossness is downward closed in ``m`` along fixed ``delta``, and every
    ``lam`` is cross once ``m`` reaches the total number of rows (take ``k``
    equal to the number of black rows), which bounds the scan.
    """
    best = None
    stop = len(lam.black) + len(lam.white) + abs(delta)
    for m in range(min_m(delta), max(stop, min_m(delta)) + 1):
        if is_cross(lam, m, m - delta):
            break
        best = m
    return best


def principal_ideal(lam: Bipartition, delta: int) -> IdealId:
    """The ideal generated by ``L(lam)``: the smallest one containing it."""
    best = m_star(lam, delta)
    if best is None:
        return FullCategory()
    return Nontrivial(best, best - delta)


def ideal_of_set(lambdas: Iterable[Bipartition], delta: int) -> IdealId:
    lambdas = set(lambdas)
    if not lambdas:
        return ZeroIdeal()
    stars = [m_star(lam, delta) for lam in lambdas]
    if any(s is None for s in stars):
        return FullCategory()
    best = min(stars)
    return Nontrivial(best, best - delta)


@dataclass(frozen=True)
class ReachesUnit:
    witness: GeneratorWord
    trace: tuple[Bipartition, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class ReachesAlmost:
    m: int
    n: int
    target: Bipartition
    witness: GeneratorWord
    trace: tuple[Bipartition, ...] = field(default=(), compare=False)


ReductionOutcome = Union[ReachesUnit, ReachesAlmost]


def almost_level(lam: Bipartition, delta: int) -> int | None:
    """The ``m`` for which ``lam`` is almost (m|m-delta)-cross, if any."""
    for m in range(min_m(delta), lam.size + 1):
        n = m - delta
        if (m + 1) * (n + 1) > lam.size:
            break
        if is_almost_cross(lam, m, n):
            return m
    return None


def reduce_to_almost_or_unit(lam: Bipartition, delta: Delta) -> ReductionOutcome:
    """Walk down through strictly smaller summands of one-box products.

    Stops at the unit or at the first almost-cross bipartition.  The walk
    always finds a smaller summand unless it is already almost cross.
    """
    word: list[Generator] = []
    trace: list[Bipartition] = []
    current = lam
    while True:
        if current.is_empty():
            return ReachesUnit(tuple(word), tuple(trace))
        if not is_generic(delta):
            m = almost_level(current, delta)
            if m is not None:
                return ReachesAlmost(m, m - delta, current, tuple(word), tuple(trace))
        step = None
        for g in (B, W):
            smaller = [nu for nu in one_box(g, current, delta) if nu != current and nu.contained_in(current)]
            if smaller:
                step = (g, min(smaller, key=display_key))
                break
        if step is None:
            raise InternalContradiction(f"{current} has no smaller summand yet is not almost cross at delta={delta}")
        word.append(step[0])
        trace.append(step[1])
        current = step[1]


def bothalmost_word(lam: Bipartition, mu: Bipartition, m: int, n: int) -> tuple[GeneratorWord, list[Bipartition]]:
    """A word ``w`` with ``L(mu)`` a summand of ``w ⊗ L(lam)``, both almost (m|n)-cross.

    Returns the word and the almost-cross bipartitions passed through (one
    per bump).  Each bump ``nu -> nu'`` is certified by ``nu'`` appearing in
    the doubled one-box product ``g ⊗ g ⊗ L(nu)`` at ``delta = m - n``.
    """
    delta = m - n
    word: list[Generator] = []
    stops: list[Bipartition] = []
    current = lam
    for move in bump_path(lam, mu, m, n):
        nxt = apply_bump(current, move, m, n)
        g = W if move.direction is Direction.RIGHTWARD else B
        if nxt not in tensor_word((g, g), current, delta):
            raise InternalContradiction(f"{nxt} is not a summand of {g}{g} ⊗ {current} at delta={delta}")
        word += [g, g]
        stops.append(nxt)
        current = nxt
    return tuple(word), stops


def ideal_witness(lam: Bipartition, mu: Bipartition, m: int, n: int) -> GeneratorWord:
    """For almost-cross ``lam`` and non-cross ``mu``, a word placing ``mu`` in ``w ⊗ L(lam)``."""
    nu = almost_inside(mu, m, n)
    first, _ = bothalmost_word(lam, nu, m, n)
    return first + reach_witness(nu, mu, m - n)
