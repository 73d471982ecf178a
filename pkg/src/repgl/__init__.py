"""Combinatorics of Deligne's category Rep(GL_delta) and its ideals.

Indecomposable objects are labelled by bipartitions.  This package computes
their weight and cap diagrams, decomposes tensor products with the natural
object and its dual at generic and integral parameter, classifies
(m|n)-cross bipartitions, and names the ideal generated by any finite set
of indecomposables.  Every engine has a brute-force twin in
:mod:`repgl.oracle`.
"""

from .bipartition import (
    EMPTY,
    Bipartition,
    BipartitionMultiset,
    BoxMoveSets,
    Partition,
    box_moves,
    contains,
    enumerate_bipartitions,
)
from .cross import (
    BumpMove,
    CrossStatus,
    Direction,
    almost_from_black,
    apply_bump,
    bump_path,
    classify,
    enumerate_almost,
    is_cross,
)
from .diagrams import (
    GENERIC,
    CapDiagram,
    Label,
    WeightDiagram,
    cap_diagram,
    is_linked,
    local_move_classify,
    m_delta,
    weight_diagram,
)
from .errors import (
    BoundExceeded,
    DoesNotFit,
    InternalContradiction,
    NoRemovableBox,
    NotAlmostCross,
    NotContained,
    ParseError,
    PeelingFailure,
    RepGLError,
)
from .ideals import (
    FullCategory,
    Nontrivial,
    ReachesAlmost,
    ReachesUnit,
    ZeroIdeal,
    ideal_of_set,
    in_ideal,
    m_star,
    principal_ideal,
    reduce_to_almost_or_unit,
)
from .tensor import (
    Generator,
    generic_one_box,
    peel,
    reach_witness,
    specialized_one_box,
    tensor_word,
)
from .textio import RenderSpec, parse_bipartition, render

__version__ = "0.1.0"
