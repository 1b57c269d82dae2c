"""Weights of the periplectic supergroup: parity, rho, weight diagrams, ball moves.

Order convention: ``dominance_leq(lam, mu)`` means ``lam <= mu`` in the
periplectic order, which holds iff ``lam_i >= mu_i`` for every i.  This is
reversed relative to the usual componentwise order on purpose.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .schur import WeightError, check_dominant, is_dominant, rho

__all__ = [
    "WeightError", "BallMove", "parity", "rho", "is_dominant", "to_diagram",
    "from_diagram", "dominance_leq", "ball_moves", "render_diagram",
]


def parity(lam: Sequence[int]) -> int:
    """Parity of the highest weight vector.

    ``s/2 mod 2`` for even ``s = sum(lam)``, ``(s+1)/2 mod 2`` for odd ``s``.
    """
    s = sum(lam)
    if s % 2 == 0:
        return (s // 2) % 2
    return ((s + 1) // 2) % 2


def to_diagram(lam: Sequence[int]) -> tuple:
    """Bullet positions ``lam_i + n - i`` (strictly decreasing)."""
    lam = check_dominant(lam)
    n = len(lam)
    return tuple(v + r for v, r in zip(lam, rho(n)))


def from_diagram(bullets: Sequence[int]) -> tuple:
    bullets = tuple(int(b) for b in bullets)
    if any(bullets[i] <= bullets[i + 1] for i in range(len(bullets) - 1)):
        raise WeightError(f"diagram positions must be strictly decreasing: {list(bullets)}")
    n = len(bullets)
    return tuple(b - r for b, r in zip(bullets, rho(n)))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    if len(lam) != len(mu):
        raise WeightError("rank mismatch")
    return all(a >= b for a, b in zip(lam, mu))


class BallMove(NamedTuple):
    source: int      # position k of the moving ball in the diagram of lam
    direction: int   # +1 (lam + eps_i) or -1 (lam - eps_i)
    target: tuple    # the resulting dominant weight


def ball_moves(lam: Sequence[int]) -> list[BallMove]:
    """Single-ball moves to an empty neighbouring position.

    Ordered by decreasing source position, right move before left move.
    """
    lam = check_dominant(lam)
    occupied = set(to_diagram(lam))
    out = []
    for i, k in enumerate(to_diagram(lam)):
        for d in (+1, -1):
            if k + d not in occupied:
                mu = list(lam)
                mu[i] += d
                out.append(BallMove(k, d, tuple(mu)))
    return out


def render_diagram(lam: Sequence[int], lo: int, hi: int) -> str:
    """ASCII bead line over positions ``lo..hi``: ``b`` for a ball, ``o`` for empty.

    Two lines are returned: the beads, then the position labels.
    """
    if lo > hi:
        raise WeightError("empty window")
    bullets = set(to_diagram(lam))
    width = max(len(str(lo)), len(str(hi))) + 1
    beads = "..." + "".join(("b" if p in bullets else "o").rjust(width)
                             for p in range(lo, hi + 1)) + " ..."
    labels = "   " + "".join(str(p).rjust(width) for p in range(lo, hi + 1))
    return beads + "\n" + labels
