"""The oracles must agree with the engines, and must notice when they don't."""

import pytest

from repgl import BoundExceeded, Bipartition, oracle
from repgl.cross import CrossStatus
from repgl.diagrams import is_linked as real_is_linked
from repgl.diagrams import m_delta as real_m_delta
from repgl.textio import parse_bipartition as P


def test_small_sweep_is_clean():
    assert oracle.sweep(4, range(-2, 3)) == []


def test_small_almost_sweep_is_clean():
    assert oracle.almost_cross_sweep(6, 2) == []


def test_bound_from_environment(monkeypatch):
    monkeypatch.setenv(oracle.ORACLE_BOUND_ENV, "3")
    assert oracle.oracle_bound() == 3
    with pytest.raises(BoundExceeded):
        oracle.linked_brute(P("[2,2|]"), P("[|]"), 0)


def test_caps_by_steps_nested():
    assert oracle.caps_by_steps(tuple("vvx^^"), -1) == {(-1, 3), (0, 2)}
    assert oracle.caps_by_steps(tuple("^v"), 0) == set()


def test_sub_bipartitions_count():
    # five partitions inside [2,1], two inside [1]
    subs = set(oracle.sub_bipartitions(P("[2,1|1]")))
    assert len(subs) == 5 * 2
    assert all(mu.contained_in(P("[2,1|1]")) for mu in subs)


def test_decomposition_check_ignores_zeros():
    assert oracle.decomposition_check({P("[|]"): 1, P("[1|]"): 0}, {P("[|]"): 1})
    assert not oracle.decomposition_check({P("[|]"): 2}, {P("[|]"): 1})


def test_sweep_catches_a_broken_linkage(monkeypatch):
    def broken(lam, mu, delta):
        # forget every link down to the unit
        if mu == Bipartition((), ()) and lam != mu:
            return False
        return real_is_linked(lam, mu, delta)

    monkeypatch.setattr(oracle, "is_linked", broken)
    found = {v.check: v for v in oracle.sweep(3, [0])}
    assert "linkage-oracle" in found
    assert "[1|1]" in found["linkage-oracle"].detail


def test_sweep_catches_a_broken_class(monkeypatch):
    def broken(lam, delta):
        return real_m_delta(lam, delta) + real_m_delta(Bipartition((5,), ()), delta)

    monkeypatch.setattr(oracle, "m_delta", broken)
    checks = {v.check for v in oracle.sweep(2, [0])}
    assert {"unitriangular", "linkage-class"} <= checks


def test_almost_sweep_catches_a_broken_classifier(monkeypatch):
    monkeypatch.setattr(oracle, "classify", lambda lam, m, n: CrossStatus.NEITHER)
    found = oracle.almost_cross_sweep(2, 1)
    assert [v.check for v in found] == ["almost-cross-oracle"]
