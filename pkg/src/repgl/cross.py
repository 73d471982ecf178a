"""(m|n)-cross and almost (m|n)-cross bipartitions, and one-box-bumps.

An almost (m|n)-cross bipartition is the same thing as a partition inside
the (m+1) x (n+1) rectangle: the black diagram sits top-left and the white
diagram, rotated by 180 degrees, fills the rest.  Row ``i`` of the white
partition is the complement of black row ``m + 2 - i``.
"""

from __future__ import annotations

import enum
from math import comb
from typing import NamedTuple

from .bipartition import Bipartition, Partition, box_moves, partitions_in_box
from .errors import BoundExceeded, DoesNotFit, NoRemovableBox, NotAlmostCross

__all__ = [
    "CrossStatus",
    "Direction",
    "BumpMove",
    "is_cross",
    "classify",
    "is_almost_cross",
    "almost_from_black",
    "enumerate_almost",
    "count_almost",
    "apply_bump",
    "bump_path",
    "almost_inside",
    "shrink_almost",
    "DEFAULT_BOX_BOUND",
]

DEFAULT_BOX_BOUND = 8


class CrossStatus(enum.Enum):
    CROSS = "cross"
    ALMOST_CROSS = "almost"
    NEITHER = "neither"

    def __str__(self):
        return self.value


class Direction(enum.Enum):
    RIGHTWARD = "R"
    LEFTWARD = "L"


class BumpMove(NamedTuple):
    direction: Direction
    row: int

    def __str__(self):
        return f"{self.direction.value}:{self.row}"


def is_cross(lam: Bipartition, m: int, n: int) -> bool:
    b, w = lam.black, lam.white
    return any(b[k + 1] + w[m - k + 1] <= n for k in range(m + 1))


def is_almost_cross(lam: Bipartition, m: int, n: int) -> bool:
    b, w = lam.black, lam.white
    if b[m + 2] or w[m + 2]:
        return False
    return all(b[k + 1] + w[m - k + 1] == n + 1 for k in range(m + 1))


def classify(lam: Bipartition, m: int, n: int) -> CrossStatus:
    if is_almost_cross(lam, m, n):
        return CrossStatus.ALMOST_CROSS
    if is_cross(lam, m, n):
        return CrossStatus.CROSS
    return CrossStatus.NEITHER


def almost_from_black(black: Partition, m: int, n: int) -> Bipartition:
    """The almost (m|n)-cross bipartition whose black part is ``black``."""
    if not isinstance(black, Partition):
        black = Partition(tuple(black))
    if len(black) > m + 1 or black[1] > n + 1:
        raise DoesNotFit(f"({black}) does not fit in a {m + 1} x {n + 1} box")
    white = Partition(tuple(n + 1 - black[m + 2 - i] for i in range(1, m + 2)))
    lam = Bipartition(black, white)
    if not is_almost_cross(lam, m, n):
        raise AssertionError(f"rectangle complement {lam} is not almost ({m}|{n})-cross")
    return lam


def count_almost(m: int, n: int) -> int:
    return comb(m + n + 2, m + 1)


def enumerate_almost(m: int, n: int, bound: int = DEFAULT_BOX_BOUND) -> list[Bipartition]:
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m > bound or n > bound:
        raise BoundExceeded(f"(m|n)=({m}|{n}) exceeds bound {bound}")
    return [almost_from_black(p, m, n) for p in partitions_in_box(m + 1, n + 1)]


def apply_bump(lam: Bipartition, move: BumpMove, m: int, n: int) -> Bipartition:
    """Move one box between a row of one colour and row ``m+2-row`` of the other."""
    if not is_almost_cross(lam, m, n):
        raise NotAlmostCross(f"{lam} is not almost ({m}|{n})-cross")
    target = m + 2 - move.row
    if move.direction is Direction.RIGHTWARD:
        src, dst = lam.black, lam.white
    else:
        src, dst = lam.white, lam.black
    if move.row not in src.removable_rows():
        raise NoRemovableBox(f"row {move.row} has no removable box in {lam}")
    src, dst = src.remove_box(move.row), dst.add_box(target)
    if move.direction is Direction.RIGHTWARD:
        out = Bipartition(src, dst)
    else:
        out = Bipartition(dst, src)
    if not is_almost_cross(out, m, n):
        raise AssertionError(f"bump {move} of {lam} left the almost ({m}|{n})-cross family")
    return out


def bump_path(lam: Bipartition, mu: Bipartition, m: int, n: int) -> list[BumpMove]:
    """A shortest sequence of one-box-bumps turning ``lam`` into ``mu``.

    Works on black parts inside the rectangle: first strip the boxes of
    ``lam`` outside the common part (bottom row first, always removable),
    then grow towards ``mu`` (top row first, always addable).
    """
    for x in (lam, mu):
        if not is_almost_cross(x, m, n):
            raise NotAlmostCross(f"{x} is not almost ({m}|{n})-cross")
    meet = [min(lam.black[i], mu.black[i]) for i in range(1, m + 2)]
    moves = []
    current = lam
    for row in range(m + 1, 0, -1):
        while current.black[row] > meet[row - 1]:
            move = BumpMove(Direction.RIGHTWARD, row)
            current = apply_bump(current, move, m, n)
            moves.append(move)
    for row in range(1, m + 2):
        while current.black[row] < mu.black[row]:
            move = BumpMove(Direction.LEFTWARD, m + 2 - row)
            current = apply_bump(current, move, m, n)
            moves.append(move)
    if current != mu:
        raise AssertionError(f"bump path from {lam} ended at {current}, not {mu}")
    return moves


def almost_inside(lam: Bipartition, m: int, n: int) -> Bipartition:
    """An almost (m|n)-cross bipartition contained in a non-(m|n)-cross ``lam``.

    Removes boxes while the result stays non-cross; crossness is closed
    under containment, so a stuck point is almost cross.
    """
    if is_cross(lam, m, n):
        raise ValueError(f"{lam} is (m|n)-cross; it contains no almost ({m}|{n})-cross bipartition")
    current = lam
    while True:
        moves = box_moves(current)
        for smaller in moves.rem_black + moves.rem_white:
            if not is_cross(smaller, m, n):
                current = smaller
                break
        else:
            return current


def shrink_almost(lam: Bipartition, m: int, n: int, m2: int, n2: int) -> Bipartition:
    """Delete the top ``m-m2`` rows and left ``n-n2`` columns of the rectangle picture."""
    if not is_almost_cross(lam, m, n):
        raise NotAlmostCross(f"{lam} is not almost ({m}|{n})-cross")
    if not (0 <= m2 <= m and 0 <= n2 <= n):
        raise ValueError("need 0 <= m2 <= m and 0 <= n2 <= n")
    dr, dc = m - m2, n - n2
    black = [max(lam.black[i] - dc, 0) for i in range(dr + 1, m + 2)]
    return almost_from_black(Partition(tuple(black)), m2, n2)
