"""Bertrand's three random-chord constructions on the unit circle.

Method numbering:

* ``ENDPOINTS``   (method 1) two independent uniform angles on the circle.
* ``RADIUS_POINT`` (method 2) uniform point on a uniformly oriented radius,
  chord perpendicular to the radius there.
* ``DISK_POINT``  (method 3) area-uniform point in the disk taken as the
  chord midpoint.

A chord is *long* when it beats the side of the inscribed equilateral
triangle, ``sqrt(3)``; equivalently its midpoint is closer than 1/2 to the
centre.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NonConvergence
from .geometry import Point2
from .rng import RngStream
from .samplers import MAX_REJECTIONS

SQRT3 = math.sqrt(3.0)


class ChordMethod(enum.Enum):
    ENDPOINTS = "Endpoints"
    RADIUS_POINT = "RadiusPoint"
    DISK_POINT = "DiskPoint"


@dataclass(frozen=True)
class Chord:
    p1: Point2
    p2: Point2

    def __post_init__(self):
        for p in (self.p1, self.p2):
            if abs(math.hypot(p.x, p.y) - 1.0) > 1e-9:
                raise ValueError(f"{p} is not on the unit circle")
        if self.p1 == self.p2:
            raise ValueError("chord endpoints coincide")

    @classmethod
    def from_angles(cls, t1: float, t2: float) -> "Chord":
        return cls(Point2(math.cos(t1), math.sin(t1)), Point2(math.cos(t2), math.sin(t2)))

    @classmethod
    def perpendicular_at(cls, direction: float, distance: float) -> "Chord":
        """Chord perpendicular to the radius at angle ``direction``, ``distance`` from the centre."""
        half = math.acos(distance)
        return cls.from_angles(direction - half, direction + half)


ANALYTIC = {
    ChordMethod.ENDPOINTS: Fraction(1, 3),
    ChordMethod.RADIUS_POINT: Fraction(1, 2),
    ChordMethod.DISK_POINT: Fraction(1, 4),
}


def analytic_long_probability(method: ChordMethod) -> float:
    return float(ANALYTIC[method])


def chord_length(c: Chord) -> float:
    return math.hypot(c.p1.x - c.p2.x, c.p1.y - c.p2.y)


def is_long(c: Chord) -> bool:
    return chord_length(c) > SQRT3


def midpoint_distance(c: Chord) -> float:
    return math.hypot((c.p1.x + c.p2.x) / 2, (c.p1.y + c.p2.y) / 2)


def draw_chords(method: ChordMethod, rng: RngStream, n: int) -> np.ndarray:
    """``n`` chords as endpoint angles, shape ``(n, 2)``."""
    gen = rng.generator
    if method is ChordMethod.ENDPOINTS:
        return gen.uniform(0.0, 2.0 * math.pi, (n, 2))
    direction = gen.uniform(0.0, 2.0 * math.pi, n)
    if method is ChordMethod.RADIUS_POINT:
        distance = gen.uniform(0.0, 1.0, n)
    elif method is ChordMethod.DISK_POINT:
        distance = np.sqrt(gen.uniform(0.0, 1.0, n))
        # A midpoint at the exact centre leaves the chord direction undefined.
        bad = distance == 0.0
        attempts = 0
        while bad.any():
            attempts += 1
            if attempts >= MAX_REJECTIONS:
                raise NonConvergence("could not draw a non-central chord midpoint")
            distance[bad] = np.sqrt(gen.uniform(0.0, 1.0, int(bad.sum())))
            bad = distance == 0.0
    else:
        raise ValueError(f"unknown chord method {method!r}")
    half = np.arccos(distance)
    return np.stack([direction - half, direction + half], axis=1)


def chord_lengths(angles: np.ndarray) -> np.ndarray:
    p = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
    d = p[:, 0] - p[:, 1]
    return np.hypot(d[:, 0], d[:, 1])


def draw_chord(method: ChordMethod, rng: RngStream) -> Chord:
    t1, t2 = draw_chords(method, rng, 1)[0]
    return Chord.from_angles(float(t1), float(t2))


def count_long(method: ChordMethod, rng: RngStream, n: int) -> int:
    return int(np.count_nonzero(chord_lengths(draw_chords(method, rng, n)) > SQRT3))


def estimate_long_probability(
    method: ChordMethod, trials: int, rng: RngStream, chunk: int = 1 << 18
) -> float:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    hits = 0
    done = 0
    while done < trials:
        k = min(chunk, trials - done)
        hits += count_long(method, rng, k)
        done += k
    return hits / trials
