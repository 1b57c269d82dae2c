import pytest
from hypothesis import given

from perichar.schur import WeightError, is_dominant
from perichar.weights import (BallMove, ball_moves, dominance_leq, from_diagram, parity,
                              render_diagram, to_diagram)

from conftest import dominant


@pytest.mark.parametrize("lam, p", [((0, 0), 0), ((1, 0), 1), ((1, 1), 1), ((2, 1), 0),
                                    ((-1, 0), 0), ((-1, -1), 1), ((2, 2), 0), ((-3,), 1)])
def test_parity(lam, p):
    assert parity(lam) == p


@given(dominant(4, bound=3))
def test_parity_shift_by_two(lam):
    # adding 2 to every entry changes the sum by 2n
    n = len(lam)
    shifted = tuple(v + 2 for v in lam)
    assert parity(shifted) == parity(lam) ^ (n % 2)
    assert parity(tuple(reversed(lam))) == parity(lam)


def test_diagrams():
    assert to_diagram((0, 0, 0)) == (2, 1, 0)
    assert to_diagram((0, -1, -3)) == (2, 0, -3)
    assert from_diagram((2, 0, -3)) == (0, -1, -3)
    with pytest.raises(WeightError):
        from_diagram((0, 0))


@given(dominant(5, bound=4))
def test_diagram_roundtrip(lam):
    assert from_diagram(to_diagram(lam)) == lam


def test_dominance_order_convention():
    assert dominance_leq((1, 0), (0, 0))
    assert dominance_leq((0, 0), (0, 0))
    assert not dominance_leq((0, -1), (1, 0))
    with pytest.raises(WeightError, match="rank mismatch"):
        dominance_leq((0,), (0, 0))


@given(dominant(3), dominant(3), dominant(3))
def test_dominance_is_partial_order(a, b, c):
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)


def test_ball_moves_examples():
    assert ball_moves((0, 0)) == [BallMove(1, 1, (1, 0)), BallMove(0, -1, (0, -1))]
    assert ball_moves((1, 0)) == [BallMove(2, 1, (2, 0)), BallMove(2, -1, (0, 0)),
                                  BallMove(0, 1, (1, 1)), BallMove(0, -1, (1, -1))]
    assert ball_moves((5,)) == [BallMove(5, 1, (6,)), BallMove(5, -1, (4,))]


@given(dominant(4, bound=3))
def test_ball_moves_are_single_steps(lam):
    for m in ball_moves(lam):
        assert is_dominant(m.target)
        diff = [b - a for a, b in zip(lam, m.target)]
        assert sorted(diff) == [0] * (len(lam) - 1) + [1] or sorted(diff) == [-1] + [0] * (len(lam) - 1)
        assert sum(diff) == m.direction


def test_render_diagram():
    text = render_diagram((0, -1, -3), -4, 4)
    beads, labels = text.split("\n")
    assert beads.replace(" ", "") == "...obooboboo..."
    assert labels.split() == [str(p) for p in range(-4, 5)]
    with pytest.raises(WeightError):
        render_diagram((0,), 3, 1)
