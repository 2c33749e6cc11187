"""Smoke tests for the python module against known values."""

import math

import pytest

import collatzfsm as cf


def test_symbolic_step():
    assert cf.symbolic_step(27) == 82
    assert cf.symbolic_step(32) == 16
    assert cf.symbolic_step(1) == 4
    # Arbitrary-precision round trip through python ints.
    big = 10**40 + 7
    assert cf.symbolic_step(big) == 3 * big + 1


def test_encode_decode():
    states, rule = cf.encode(13)
    assert rule == "odd"
    assert states == [(3, 1, 0), (1, 0, 1)]
    assert cf.decode(states) == 13

    states32, rule32 = cf.encode(32)
    assert rule32 == "even"
    assert states32 == [(2, 1, 0), (3, 0, 1)]


def test_trajectory_values():
    rows, truncated = cf.trajectory(13)
    assert not truncated
    assert [v for v, _ in rows] == [13, 40, 20, 10, 5, 16, 8, 4, 2, 1]


def test_transition_table():
    table = cf.transition_table()
    assert len(table) == 60
    div, mul = table[(4, 1, 0)]
    assert div == [(7, 0, 0), (7, 1, 0)]
    assert mul == [(2, 0, 0), (3, 0, 0), (4, 0, 0)]


def test_ranking_zero_states():
    rho = cf.ranking()
    zero = sorted(s for s, r in rho.items() if r == 0)
    assert zero == [(1, 0, 0), (2, 0, 0), (4, 0, 0)]


def test_blocks_and_length():
    blocks, steps, truncated = cf.blocks(15)
    assert [(to, tz) for to, tz, _, _ in blocks] == [(4, 4), (1, 3)]
    assert steps == 17
    assert not truncated
    assert cf.symbolic_length(15)[:2] == (12, 17)


def test_drift_and_energy():
    assert cf.drift(15) == pytest.approx(-1.660150, abs=1e-5)
    assert cf.energy(15, 15) == pytest.approx(5.0)
    assert cf.drift_general(3, 3) == cf.drift(3)


def test_bitfsm():
    q, b, symbols = cf.quotient_decode(31)
    assert q == [31, 15, 7, 3, 1]
    assert b == [94, 47, 23, 11, 5, 2, 1]
    assert symbols == ["+1", "+2", "+2", "+2", "+2", "induced", "induced"]
    assert cf.growth_predict(161) == "+1"
    assert cf.bit_window_map("10111") == "1011"


def test_moments():
    acc = cf.MomentAccumulator()
    for x in [0.0, 0.0, 0.0, 1.0]:
        acc.push(x)
    summary = acc.summary()
    assert summary["mean"] == pytest.approx(0.25)
    assert summary["skewness"] == pytest.approx(2 / math.sqrt(3), abs=1e-12)


def test_domain_errors():
    with pytest.raises(ValueError):
        cf.symbolic_step(0)
    with pytest.raises(ValueError):
        cf.t3(4)
