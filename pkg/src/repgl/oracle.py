"""Slow, definition-level reimplementations used to audit the fast engines.

Nothing here shares code with the diagram engine beyond the value types:
labels are computed straight from set membership on a generous fixed
window, caps are drawn by repeating the matching step until nothing
changes, and linkage is decided by trying every subset of caps.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from itertools import combinations, product

from .bipartition import Bipartition, Partition, enumerate_bipartitions
from .cross import classify, CrossStatus, is_cross
from .diagrams import cap_diagram, diagram_move, is_linked, local_move_classify, m_delta, weight_diagram
from .errors import BoundExceeded

__all__ = [
    "oracle_bound",
    "window_for",
    "labels_by_definition",
    "caps_by_steps",
    "linked_brute",
    "linked_set_brute",
    "almost_cross_brute",
    "sub_bipartitions",
    "box_moves_brute",
    "decomposition_check",
    "Violation",
    "sweep",
    "almost_cross_sweep",
]

ORACLE_BOUND_ENV = "REPGL_ORACLE_BOUND"


def oracle_bound() -> int:
    """Default size bound for brute-force oracles, overridable from the environment."""
    return int(os.environ.get(ORACLE_BOUND_ENV, "9"))


def _check_bound(size: int, bound: int | None):
    bound = oracle_bound() if bound is None else bound
    if size > bound:
        raise BoundExceeded(f"size {size} exceeds oracle bound {bound}")


def window_for(max_size: int, delta: int) -> tuple[int, int]:
    """A window outside which every diagram of size <= max_size is standard."""
    r = max_size + abs(delta) + 2
    return -r, r


def labels_by_definition(lam: Bipartition, delta: int, lo: int, hi: int) -> tuple[str, ...]:
    """Labels ``'o' '^' 'v' 'x'`` on ``lo..hi`` straight from set membership."""
    rows = hi - lo + len(lam.black) + len(lam.white) + abs(delta) + 2
    black = list(lam.black.parts) + [0] * rows
    white = list(lam.white.parts) + [0] * rows
    up = {black[i - 1] - i + 1 for i in range(1, rows + 1)}
    down = {i - delta - white[i - 1] for i in range(1, rows + 1)}
    out = []
    for v in range(lo, hi + 1):
        out.append({(False, False): "o", (True, False): "^", (False, True): "v", (True, True): "x"}[(v in up, v in down)])
    return tuple(out)


def caps_by_steps(labels: tuple[str, ...], lo: int = 0) -> set[tuple[int, int]]:
    """Draw caps by rounds: join a free ``v`` to the next free ``^`` if only
    ``o``, ``x`` or already-capped vertices lie between; repeat to a fixpoint."""
    capped: set[int] = set()
    caps: set[tuple[int, int]] = set()
    n = len(labels)
    while True:
        new = []
        for i in range(n):
            if labels[i] != "v" or i in capped:
                continue
            for j in range(i + 1, n):
                if labels[j] in "ox" or j in capped:
                    continue
                if labels[j] == "^":
                    new.append((i, j))
                break
        if not new:
            return {(lo + i, lo + j) for i, j in caps}
        for i, j in new:
            caps.add((i, j))
            capped.update((i, j))


def _swapped_variants(labels: tuple[str, ...], caps: Iterable[tuple[int, int]], lo: int):
    caps = sorted(caps)
    for k in range(len(caps) + 1):
        for chosen in combinations(caps, k):
            out = list(labels)
            for i, j in chosen:
                out[i - lo], out[j - lo] = out[j - lo], out[i - lo]
            yield tuple(out)


def linked_brute(lam: Bipartition, mu: Bipartition, delta: int, bound: int | None = None) -> bool:
    """True iff some subset of caps of ``lam``, swapped, gives the diagram of ``mu``."""
    _check_bound(max(lam.size, mu.size), bound)
    lo, hi = window_for(lam.size + mu.size, delta)
    x = labels_by_definition(lam, delta, lo, hi)
    y = labels_by_definition(mu, delta, lo, hi)
    return any(v == y for v in _swapped_variants(x, caps_by_steps(x, lo), lo))


def linked_set_brute(lam: Bipartition, delta: int, lo: int, hi: int) -> set[tuple[str, ...]]:
    """All label strings on ``lo..hi`` linked to ``lam`` (window must be generous)."""
    x = labels_by_definition(lam, delta, lo, hi)
    return set(_swapped_variants(x, caps_by_steps(x, lo), lo))


def _sub_partitions(p: Partition):
    for parts in product(*(range(x + 1) for x in p.parts)):
        if all(a >= b for a, b in zip(parts, parts[1:])):
            yield Partition(parts)


def sub_bipartitions(lam: Bipartition):
    """Every bipartition contained in ``lam`` (including ``lam``)."""
    for b in _sub_partitions(lam.black):
        for w in _sub_partitions(lam.white):
            yield Bipartition(b, w)


def almost_cross_brute(lam: Bipartition, m: int, n: int, bound: int | None = None) -> bool:
    _check_bound(lam.size, bound)
    if is_cross(lam, m, n):
        return False
    return all(is_cross(mu, m, n) for mu in sub_bipartitions(lam) if mu != lam)


def _cells(p: Partition) -> frozenset[tuple[int, int]]:
    return frozenset((r, c) for r, length in enumerate(p.parts, start=1) for c in range(1, length + 1))


def _is_young(cells: frozenset[tuple[int, int]]) -> bool:
    return all((r == 1 or (r - 1, c) in cells) and (c == 1 or (r, c - 1) in cells) for r, c in cells)


def _from_cells(cells) -> Partition:
    rows = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    return Partition(tuple(rows[r] for r in sorted(rows)))


def _corner_moves(p: Partition):
    cells = _cells(p)
    rows = len(p.parts) + 1
    cols = (p.parts[0] if p.parts else 0) + 1
    added = [cells | {cell} for cell in product(range(1, rows + 1), range(1, cols + 1)) if cell not in cells]
    removed = [cells - {cell} for cell in cells]
    return (
        {_from_cells(c) for c in added if _is_young(c)},
        {_from_cells(c) for c in removed if _is_young(c)},
    )


def box_moves_brute(lam: Bipartition) -> dict[str, set[Bipartition]]:
    """Add/remove single boxes by testing every cell of the Young diagrams."""
    add_b, rem_b = _corner_moves(lam.black)
    add_w, rem_w = _corner_moves(lam.white)
    return {
        "add_black": {Bipartition(b, lam.white) for b in add_b},
        "add_white": {Bipartition(lam.black, w) for w in add_w},
        "rem_black": {Bipartition(b, lam.white) for b in rem_b},
        "rem_white": {Bipartition(lam.black, w) for w in rem_w},
    }


def decomposition_check(left: Mapping[Bipartition, int], right: Mapping[Bipartition, int]) -> bool:
    """Exact multiset equality, ignoring zero entries."""
    return {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v}


@dataclass(frozen=True)
class Violation:
    check: str
    detail: str

    def __str__(self):
        return f"{self.check}: {self.detail}"


def sweep(max_size: int = 8, deltas: Iterable[int] = range(-4, 5), pairs: bool = True) -> list[Violation]:
    """Exhaustive invariant sweep over all bipartitions of size <= ``max_size``.

    Returns at most one violation per check, the first met in enumeration
    order, so each counterexample is a smallest one.
    """
    universe = list(enumerate_bipartitions(max_size))
    found: dict[str, Violation] = {}

    def fail(check, detail):
        found.setdefault(check, Violation(check, detail))

    for delta in deltas:
        lo, hi = window_for(2 * max_size, delta)
        diagrams = {}
        for lam in universe:
            wd = weight_diagram(lam, delta)
            labels = labels_by_definition(lam, delta, lo, hi)
            diagrams[lam] = labels
            if tuple(wd.label(v).value for v in range(lo, hi + 1)) != labels:
                fail("weight-diagram", f"{lam} at delta={delta}")
            if labels.count("x") - labels.count("o") != delta:
                fail("crosses-minus-circles", f"{lam} at delta={delta}")
            if set(cap_diagram(wd).caps) != caps_by_steps(labels, lo):
                fail("cap-schedule", f"{lam} at delta={delta}")
            cls = m_delta(lam, delta)
            if lam not in cls:
                fail("unitriangular", f"{lam} missing from its own class at delta={delta}")
            for mu in cls:
                if mu != lam and not (mu.contained_in(lam) and mu.size <= lam.size - 2 and (lam.size - mu.size) % 2 == 0):
                    fail("unitriangular", f"{mu} linked to {lam} at delta={delta}")
        by_size: dict[int, list[Bipartition]] = {}
        for lam in universe:
            by_size.setdefault(lam.size, []).append(lam)
        for lam in universe:
            for mu in by_size.get(lam.size - 1, []):
                move = diagram_move(weight_diagram(mu, delta), weight_diagram(lam, delta))
                try:
                    expected = local_move_classify(mu, lam, delta)
                except AssertionError as exc:
                    fail("one-box-tables", str(exc))
                    continue
                if move != expected:
                    fail("one-box-tables", f"{mu} vs {lam} at delta={delta}: tables give {move}, boxes give {expected}")
        if not pairs:
            continue
        index = {labels: lam for lam, labels in diagrams.items()}
        for lam in universe:
            brute = {index[v] for v in linked_set_brute(lam, delta, lo, hi) if v in index}
            fast = {mu for mu in universe if is_linked(lam, mu, delta)}
            if brute != fast:
                extra = sorted(map(str, brute ^ fast))
                fail("linkage-oracle", f"{lam} at delta={delta} disagrees on {extra}")
            if fast != {mu for mu in m_delta(lam, delta)}:
                fail("linkage-class", f"{lam} at delta={delta}")
    return list(found.values())


def almost_cross_sweep(max_size: int = 9, max_mn: int = 3) -> list[Violation]:
    """Compare the equational almost-cross test with the definition by containment."""
    found = []
    for lam in enumerate_bipartitions(max_size):
        for m in range(max_mn + 1):
            for n in range(max_mn + 1):
                fast = classify(lam, m, n) is CrossStatus.ALMOST_CROSS
                if fast != almost_cross_brute(lam, m, n, bound=max_size):
                    found.append(Violation("almost-cross-oracle", f"{lam} at (m|n)=({m}|{n})"))
                    return found
    return found
