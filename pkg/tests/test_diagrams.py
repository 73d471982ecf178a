import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repgl import GENERIC, Label, cap_diagram, enumerate_bipartitions, is_linked, local_move_classify, m_delta, weight_diagram
from repgl.diagrams import decode_labels, diagram_move
from repgl.oracle import caps_by_steps, labels_by_definition, linked_brute, window_for
from repgl.textio import parse_bipartition

from conftest import bipartition_strategy

# (bipartition, delta) -> (lo, labels, caps, linkage class in display order)
# frozen from the definition-level oracle
GOLDEN = [
    ("[|]", 0, 1, "", (), ["[|]"]),
    ("[2|1]", 1, -1, "xovx", (), ["[2|1]"]),
    ("[1|1]", 0, 0, "v^", ((0, 1),), ["[1|1]", "[|]"]),
    ("[1|1]", 2, -2, "x^vx", (), ["[1|1]"]),
    ("[3,3,1|2]", 0, -2, "oxooxx", (), ["[3,3,1|2]"]),
    ("[2,1|1,1]", 0, -1, "oxv^", ((1, 2),), ["[2,1|1,1]", "[1,1|1]"]),
    ("[2,1|2,1]", 0, -1, "v^v^", ((-1, 0), (1, 2)), ["[2,1|2,1]", "[2|1,1]", "[1,1|2]", "[1|1]"]),
    ("[2,2|2,2]", 0, -1, "vv^^", ((-1, 2), (0, 1)), ["[2,2|2,2]", "[2,1|2,1]", "[1|1]", "[|]"]),
]


@pytest.mark.parametrize("text, delta, lo, labels, caps, linked", GOLDEN)
def test_golden(text, delta, lo, labels, caps, linked):
    lam = parse_bipartition(text)
    wd = weight_diagram(lam, delta)
    assert (wd.lo, str(wd)) == (lo, labels)
    assert cap_diagram(wd).caps == caps
    assert [str(mu) for mu, _ in m_delta(lam, delta).sorted_items()] == linked
    for mu in map(parse_bipartition, linked):
        assert linked_brute(lam, mu, delta)


def test_standard_outside_window():
    wd = weight_diagram(parse_bipartition("[2|1]"), 1)
    assert wd.label(-50) is Label.UP
    assert wd.label(50) is Label.DOWN
    assert wd.labels_on(-2, 3) == tuple(Label(c) for c in "^xovxv")


def test_empty_window_is_lo_above_hi():
    wd = weight_diagram(parse_bipartition("[|]"), 0)
    assert (wd.lo, wd.hi, wd.labels) == (1, 0, ())
    assert (wd.label(0), wd.label(1)) == (Label.UP, Label.DOWN)


@pytest.mark.parametrize("delta", range(-4, 5))
def test_crosses_minus_circles(delta):
    for lam in enumerate_bipartitions(5):
        wd = weight_diagram(lam, delta)
        assert wd.count(Label.CROSS) - wd.count(Label.CIRCLE) == delta


@pytest.mark.parametrize("delta", [-3, 0, 2])
def test_labels_match_definition(delta):
    lo, hi = window_for(10, delta)
    for lam in enumerate_bipartitions(5):
        wd = weight_diagram(lam, delta)
        assert tuple(v.value for v in wd.labels_on(lo, hi)) == labels_by_definition(lam, delta, lo, hi)
        assert set(cap_diagram(wd).caps) == caps_by_steps(labels_by_definition(lam, delta, lo, hi), lo)


@given(bipartition_strategy(), st.integers(-4, 4))
def test_decode_inverts_encode(lam, delta):
    wd = weight_diagram(lam, delta)
    assert decode_labels(wd.lo, wd.labels, delta) == lam


def test_decode_rejects_wrong_charge():
    with pytest.raises(ValueError):
        decode_labels(0, [Label.DOWN], 0)


@given(bipartition_strategy(), st.integers(-4, 4))
def test_caps_are_crossingless_and_pair_down_with_up(lam, delta):
    cd = cap_diagram(weight_diagram(lam, delta))
    for i, j in cd.caps:
        assert (cd.base.label(i), cd.base.label(j)) == (Label.DOWN, Label.UP)
        assert cd.partner(i) == j and cd.partner(j) == i
        for k, l in cd.caps:
            assert not (i < k < j < l)


@given(bipartition_strategy(max_rows=3, max_part=3), bipartition_strategy(max_rows=3, max_part=3), st.integers(-3, 3))
@settings(max_examples=300)
def test_is_linked_matches_oracle(lam, mu, delta):
    assert is_linked(lam, mu, delta) == linked_brute(lam, mu, delta, bound=18)


def test_generic_linkage_is_equality():
    lam = parse_bipartition("[2,1|2,1]")
    assert dict(m_delta(lam, GENERIC)) == {lam: 1}
    assert not is_linked(lam, parse_bipartition("[1|1]"), GENERIC)
    assert pickle.loads(pickle.dumps(GENERIC)) is GENERIC


class TestLocalMoves:
    def test_black_case_four(self):
        move = local_move_classify(parse_bipartition("[|]"), parse_bipartition("[1|]"), 0)
        assert (move.colour, move.case, move.before, move.after, move.vertices) == ("black", 4, "^v", "ox", (0, 1))

    def test_white_case_four(self):
        move = local_move_classify(parse_bipartition("[|]"), parse_bipartition("[|1]"), 0)
        assert (move.colour, move.case, move.before, move.after, move.vertices) == ("white", 4, "^v", "xo", (0, 1))

    def test_not_adjacent(self):
        assert local_move_classify(parse_bipartition("[|]"), parse_bipartition("[2|]"), 0) is None
        assert local_move_classify(parse_bipartition("[1|]"), parse_bipartition("[|1]"), 0) is None

    @pytest.mark.parametrize("delta", range(-3, 4))
    def test_every_pair_hits_the_right_table(self, delta):
        seen = set()
        universe = list(enumerate_bipartitions(5))
        for lam in universe:
            for mu in universe:
                if mu.size == lam.size - 1:
                    move = local_move_classify(mu, lam, delta)
                    if move is not None:
                        seen.add((move.colour, move.case))
        assert len(seen) == 8

    def test_labels_alone_reject_unrelated_pairs(self):
        a = weight_diagram(parse_bipartition("[1|1]"), 0)
        b = weight_diagram(parse_bipartition("[2,2|]"), 0)
        assert diagram_move(a, b) is None
