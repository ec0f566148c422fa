"""Broken-stick problem: parallel and sequential cutting of a unit stick."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonConvergence
from .rng import RngStream
from .samplers import MAX_REJECTIONS


class CutPolicy(enum.Enum):
    RANDOM_PIECE = "RandomPiece"
    LARGER_PIECE = "LargerPiece"
    SMALLER_PIECE = "SmallerPiece"


class Mode(enum.Enum):
    PARALLEL = "Parallel"
    SEQUENTIAL = "Sequential"


@dataclass(frozen=True)
class StickPieces:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0:
            raise ValueError(f"pieces must be positive: {self}")
        if abs(self.a + self.b + self.c - 1.0) > 1e-12:
            raise ValueError(f"pieces must sum to 1: {self}")


def pieces_from_cuts(u1, u2):
    """Gaps left by cutting the unit stick at ``u1`` and ``u2`` (any order)."""
    lo = np.minimum(u1, u2)
    hi = np.maximum(u1, u2)
    return np.stack([lo, hi - lo, 1.0 - hi], axis=-1)


def forms_triangle(p: StickPieces) -> bool:
    return max(p.a, p.b, p.c) < 0.5


def forms_triangle_array(pieces: np.ndarray) -> np.ndarray:
    return pieces.max(axis=-1) < 0.5


def _redraw_zero_pieces(draw, pieces):
    bad = (pieces <= 0.0).any(axis=1)
    attempts = 0
    while bad.any():
        attempts += 1
        if attempts >= MAX_REJECTIONS:
            raise NonConvergence("zero-length pieces keep recurring")
        pieces[bad] = draw(int(bad.sum()))
        bad = (pieces <= 0.0).any(axis=1)
    return pieces


def cut_parallel_array(rng: RngStream, n: int) -> np.ndarray:
    gen = rng.generator

    def draw(k):
        return pieces_from_cuts(gen.uniform(0.0, 1.0, k), gen.uniform(0.0, 1.0, k))

    return _redraw_zero_pieces(draw, draw(n))


def cut_sequential_array(policy: CutPolicy, rng: RngStream, n: int) -> np.ndarray:
    """Pieces as ``(kept, cut_a, cut_b)``: the untouched first piece, then the two halves of the re-cut piece."""
    gen = rng.generator

    def draw(k):
        x = gen.uniform(0.0, 1.0, k)
        smaller = np.minimum(x, 1.0 - x)
        larger = 1.0 - smaller
        if policy is CutPolicy.RANDOM_PIECE:
            pick_larger = gen.uniform(0.0, 1.0, k) < 0.5
        elif policy is CutPolicy.LARGER_PIECE:
            pick_larger = np.ones(k, dtype=bool)
        elif policy is CutPolicy.SMALLER_PIECE:
            pick_larger = np.zeros(k, dtype=bool)
        else:
            raise ValueError(f"unknown policy {policy!r}")
        chosen = np.where(pick_larger, larger, smaller)
        kept = 1.0 - chosen
        second = gen.uniform(0.0, 1.0, k) * chosen
        return np.stack([kept, second, chosen - second], axis=1)

    return _redraw_zero_pieces(draw, draw(n))


def _to_pieces(row) -> StickPieces:
    a, b, c = (float(v) for v in row)
    return StickPieces(a, b, c)


def cut_parallel(rng: RngStream) -> StickPieces:
    return _to_pieces(cut_parallel_array(rng, 1)[0])


def cut_sequential(policy: CutPolicy, rng: RngStream) -> StickPieces:
    return _to_pieces(cut_sequential_array(policy, rng, 1)[0])


def pdf_second_cut(x: float) -> float:
    """Chance that the second cut succeeds when the smaller first piece has length ``x``."""
    if not 0.0 <= x <= 0.5:
        raise DomainError(f"x must lie in [0, 1/2], got {x}")
    return x / (1.0 - x)


def integrate_success(lo: float, hi: float, steps: int) -> float:
    """Composite Simpson integral of :func:`pdf_second_cut` over ``[lo, hi]``.

    Odd ``steps`` are rounded up to the next even number.
    """
    if not (0.0 <= lo < hi <= 0.5):
        raise DomainError(f"need 0 <= lo < hi <= 1/2, got [{lo}, {hi}]")
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps}")
    steps += steps % 2
    x = np.linspace(lo, hi, steps + 1)
    f = x / (1.0 - x)
    h = (hi - lo) / steps
    return float(h / 3.0 * (f[0] + f[-1] + 4.0 * f[1:-1:2].sum() + 2.0 * f[2:-1:2].sum()))


def analytic_probability(mode: Mode, policy: CutPolicy | None = None) -> float:
    """Closed-form triangle-formation probability.

    For RandomPiece the larger piece is picked half the time, and given that
    choice the smaller-piece length is uniform on [0, 1/2] with density 2, so
    ``P = 1/2 * 2 * integral_0^1/2 x/(1-x) dx = ln 2 - 1/2``.
    """
    if mode is Mode.PARALLEL:
        return 0.25
    if policy is CutPolicy.RANDOM_PIECE:
        return math.log(2.0) - 0.5
    if policy is CutPolicy.LARGER_PIECE:
        return 2.0 * math.log(2.0) - 1.0
    if policy is CutPolicy.SMALLER_PIECE:
        return 0.0
    raise ValueError("sequential mode needs a cut policy")
