from fractions import Fraction

import pytest

import parity_hanoi as ph


def test_counts_small_table():
    c = ph.counts(8)
    assert c["a"] == [0, 1, 3, 5, 9, 15, 23, 35, 53]
    assert c["c"][:6] == [0, 1, 2, 5, 6, 13]


def test_routes_agree_and_stay_exact():
    ref = ph.counts(120)
    assert ph.counts(120, "higher-order") == ref
    assert ph.counts(120, "closed-form") == ref
    assert ref["h3"][120] == 2**120 - 1  # beyond 64 bits


def test_unknown_route():
    with pytest.raises(ValueError):
        ph.counts(3, "bogus")


def test_solve_and_replay():
    moves = ph.solve("d", 6)
    assert len(moves) == 18
    r = ph.check_moves("d", 6)
    assert r["ok"] and r["distance"] == 18


def test_tampered_sequence_is_rejected():
    moves = ph.solve("a", 4)
    d, f, t = moves[0]
    moves[0] = (d + 1, f, t)
    r = ph.check_moves("a", 4, moves, oracle_cap=-1)
    assert not r["ok"]
    assert r["kind"] == "illegal_move" and r["step"] == 0


def test_bfs():
    assert ph.bfs(3, "000", "212") == (4, 1)
    assert ph.bfs(5, "00000", "33333") == (15, 9)


def test_bfs_cap():
    with pytest.raises(ph.CapExceeded):
        ph.bfs(20, "0" * 20, "3" * 20)


def test_metrics_and_edges():
    m = ph.metrics(3)
    assert (m["vertices"], m["edges"], m["diameter"]) == (27, 47, 5)
    assert m["average_degree"] == Fraction(94, 27)
    assert len(ph.edges(4)) == 150
    assert len(ph.edges(3, classical=4)) == 168


def test_ratios_limits_multiply_to_two():
    last = ph.ratios("b", 20)[-1]
    assert last["limit_even_over_odd"] * last["limit_odd_over_even"] == 2
    assert abs(last["even_over_odd"] - last["limit_even_over_odd"]) < Fraction(1, 1000)


def test_verify_suite():
    rep = ph.verify("sequences", 8)
    assert rep["ok"]
    assert any(r["kind"] == "finding" for r in rep["rows"])
