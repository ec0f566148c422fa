"""Closed-form obtuse-triangle probabilities and their Monte Carlo checks.

Two area-ratio models fix one side at unit length and let the free vertex
range over the region of admissible triangles:

* L model: the longest side is ``(0,0)-(1,0)``; the free vertex lies in
  ``x >= 1/2, y >= 0, |v| <= 1`` (area ``(pi/3 - sqrt(3)/4) / 2``), and the
  triangle is obtuse inside the circle on that side as diameter (a quarter
  disk of radius 1/2, area ``pi/16``).
* M model: the medium side is ``(0,0)-(1,0)``; the free vertex lies in
  ``y >= 0, |v - (1,0)| <= 1, |v| >= 1`` (area ``pi/6 + sqrt(3)/4``), and
  the triangle is obtuse when ``x > 1`` (a quarter disk of radius 1).

Hamming's total area ``pi/6 - sqrt(3)/2`` for the M model is wrong (it is
negative); it is deliberately not used anywhere.

The angle-line and big-angle models both give exactly 3/4.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .rng import RngStream

SQRT3 = math.sqrt(3.0)


class ObtuseModel(enum.Enum):
    L_METHOD = "LMethod"
    M_METHOD = "MMethod"
    ANGLE_LINE = "AngleLine"
    BIG_ANGLE = "BigAngle"


@dataclass(frozen=True)
class RegionAreas:
    favorable: float
    total: float

    @property
    def ratio(self) -> float:
        return self.favorable / self.total


def region_areas(model: ObtuseModel) -> RegionAreas:
    if model is ObtuseModel.L_METHOD:
        return RegionAreas(math.pi / 16, 0.5 * (math.pi / 3 - SQRT3 / 4))
    if model is ObtuseModel.M_METHOD:
        return RegionAreas(math.pi / 4, math.pi / 6 + SQRT3 / 4)
    raise ValueError(f"{model} has no area model")


def analytic_obtuse(model: ObtuseModel) -> float:
    if model in (ObtuseModel.ANGLE_LINE, ObtuseModel.BIG_ANGLE):
        return 0.75
    return region_areas(model).ratio


# Bounding boxes (x0, x1, y0, y1) that contain each total region.
BOUNDING_BOX = {
    ObtuseModel.L_METHOD: (0.5, 1.0, 0.0, SQRT3 / 2),
    ObtuseModel.M_METHOD: (0.5, 2.0, 0.0, 1.0),
}


def region_membership(model: ObtuseModel, x: np.ndarray, y: np.ndarray):
    """Return ``(in_total, in_favorable)`` masks for points ``(x, y)``."""
    if model is ObtuseModel.L_METHOD:
        total = (x >= 0.5) & (y >= 0.0) & (x * x + y * y <= 1.0)
        fav = total & ((x - 0.5) ** 2 + y * y < 0.25)
    elif model is ObtuseModel.M_METHOD:
        total = (y >= 0.0) & ((x - 1.0) ** 2 + y * y <= 1.0) & (x * x + y * y >= 1.0)
        fav = total & (x > 1.0)
    else:
        raise ValueError(f"{model} has no area model")
    return total, fav


@dataclass(frozen=True)
class HitTest:
    points: int
    box_area: float
    total_hits: int
    favorable_hits: int

    @property
    def total_area(self) -> float:
        return self.box_area * self.total_hits / self.points

    @property
    def favorable_area(self) -> float:
        return self.box_area * self.favorable_hits / self.points

    def area_se(self, hits: int) -> float:
        p = hits / self.points
        return self.box_area * math.sqrt(p * (1.0 - p) / self.points)

    @property
    def probability(self) -> float:
        return self.favorable_hits / self.total_hits


def hit_test(model: ObtuseModel, points: int, rng: RngStream, chunk: int = 1 << 20) -> HitTest:
    """Throw ``points`` uniform points at the model's bounding box."""
    x0, x1, y0, y1 = BOUNDING_BOX[model]
    gen = rng.generator
    total = fav = 0
    done = 0
    while done < points:
        k = min(chunk, points - done)
        x = gen.uniform(x0, x1, k)
        y = gen.uniform(y0, y1, k)
        t, f = region_membership(model, x, y)
        total += int(np.count_nonzero(t))
        fav += int(np.count_nonzero(f))
        done += k
    return HitTest(points, (x1 - x0) * (y1 - y0), total, fav)


def angle_line_obtuse(d1, d2):
    """Two points on a segment of length pi: is some piece longer than pi/2?"""
    lo = np.minimum(d1, d2)
    hi = np.maximum(d1, d2)
    longest = np.maximum(np.maximum(lo, hi - lo), math.pi - hi)
    return longest > math.pi / 2


def big_angle_obtuse(a):
    return np.asarray(a) > math.pi / 2


def count_angle_line(rng: RngStream, n: int) -> int:
    gen = rng.generator
    d = gen.uniform(0.0, math.pi, (2, n))
    return int(np.count_nonzero(angle_line_obtuse(d[0], d[1])))


def count_big_angle(rng: RngStream, n: int) -> int:
    a = rng.generator.uniform(math.pi / 3, math.pi, n)
    return int(np.count_nonzero(big_angle_obtuse(a)))


def _chunked(counter, trials, rng, chunk=1 << 18):
    if trials < 1:
        raise ValueError("trials must be >= 1")
    hits = done = 0
    while done < trials:
        k = min(chunk, trials - done)
        hits += counter(rng, k)
        done += k
    return hits / trials


def simulate_angle_line(trials: int, rng: RngStream) -> float:
    return _chunked(count_angle_line, trials, rng)


def simulate_big_angle(trials: int, rng: RngStream) -> float:
    return _chunked(count_big_angle, trials, rng)
