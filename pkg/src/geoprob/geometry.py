"""Planar primitives, triangle classification and side-ratio metrics.

Scalar functions work on the small dataclasses below; the ``*_array``
variants take vertex arrays of shape ``(n, 3, 2)`` and are what the
samplers and the runner use in their hot loops.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTriangle

DEGENERACY_EPS = 1e-12


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")


@dataclass(frozen=True)
class PolarPoint:
    rho: float
    theta: float

    def __post_init__(self):
        if self.rho < 0:
            raise ValueError(f"rho must be >= 0, got {self.rho}")
        if not -math.pi < self.theta <= math.pi:
            raise ValueError(f"theta must lie in (-pi, pi], got {self.theta}")


@dataclass(frozen=True)
class Triangle:
    a: Point2
    b: Point2
    c: Point2

    @classmethod
    def from_coords(cls, a, b, c) -> "Triangle":
        return cls(Point2(*a), Point2(*b), Point2(*c))

    def as_array(self) -> np.ndarray:
        return np.array([[self.a.x, self.a.y], [self.b.x, self.b.y], [self.c.x, self.c.y]])


@dataclass(frozen=True)
class SideLengths:
    """Side lengths sorted so that ``s <= m <= l``."""

    s: float
    m: float
    l: float

    def scaled(self, k: float) -> "SideLengths":
        return SideLengths(self.s * k, self.m * k, self.l * k)


class TriangleClass(enum.Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"


def twice_area(t: Triangle) -> float:
    return abs((t.b.x - t.a.x) * (t.c.y - t.a.y) - (t.b.y - t.a.y) * (t.c.x - t.a.x))


def is_degenerate(t: Triangle, eps: float = DEGENERACY_EPS) -> bool:
    if eps <= 0:
        raise ValueError("eps must be positive")
    return twice_area(t) < eps


def side_lengths(t: Triangle) -> SideLengths:
    if is_degenerate(t):
        raise DegenerateTriangle(f"degenerate triangle {t}")
    d = sorted(
        (
            math.hypot(t.b.x - t.c.x, t.b.y - t.c.y),
            math.hypot(t.a.x - t.c.x, t.a.y - t.c.y),
            math.hypot(t.a.x - t.b.x, t.a.y - t.b.y),
        )
    )
    return SideLengths(*d)


def classify(sl: SideLengths) -> TriangleClass:
    # Exact comparison on purpose: the right-angle event has measure zero.
    lhs = sl.s * sl.s + sl.m * sl.m
    rhs = sl.l * sl.l
    if lhs < rhs:
        return TriangleClass.OBTUSE
    if lhs == rhs:
        return TriangleClass.RIGHT
    return TriangleClass.ACUTE


def ratios(sl: SideLengths) -> tuple[float, float]:
    """Return ``(s/m, m/l)``, the SdM and MdL metrics."""
    return sl.s / sl.m, sl.m / sl.l


def largest_angle(sl: SideLengths) -> float:
    """Angle opposite the longest side, by the law of cosines."""
    cos_l = (sl.s * sl.s + sl.m * sl.m - sl.l * sl.l) / (2.0 * sl.s * sl.m)
    return math.acos(max(-1.0, min(1.0, cos_l)))


def _wrap_theta(theta):
    # atan2 can return exactly -pi; fold it onto +pi to keep (-pi, pi].
    return np.where(theta <= -np.pi, theta + 2.0 * np.pi, theta)


def to_polar(p: Point2) -> PolarPoint:
    theta = math.atan2(p.y, p.x)
    if theta <= -math.pi:
        theta += 2.0 * math.pi
    return PolarPoint(math.hypot(p.x, p.y), theta)


def from_polar(pp: PolarPoint) -> Point2:
    return Point2(pp.rho * math.cos(pp.theta), pp.rho * math.sin(pp.theta))


# -- array variants ---------------------------------------------------------


def twice_area_array(vertices: np.ndarray) -> np.ndarray:
    a, b, c = vertices[:, 0], vertices[:, 1], vertices[:, 2]
    ab = b - a
    ac = c - a
    return np.abs(ab[:, 0] * ac[:, 1] - ab[:, 1] * ac[:, 0])


def degenerate_mask(vertices: np.ndarray, eps: float = DEGENERACY_EPS) -> np.ndarray:
    return twice_area_array(vertices) < eps


def side_lengths_array(vertices: np.ndarray) -> np.ndarray:
    """Sorted side lengths, shape ``(n, 3)`` with columns ``s, m, l``."""
    a, b, c = vertices[:, 0], vertices[:, 1], vertices[:, 2]
    d = np.stack(
        [
            np.hypot(*(b - c).T),
            np.hypot(*(a - c).T),
            np.hypot(*(a - b).T),
        ],
        axis=1,
    )
    d.sort(axis=1)
    return d


def obtuse_mask(sides: np.ndarray) -> np.ndarray:
    s, m, l = sides[:, 0], sides[:, 1], sides[:, 2]
    return s * s + m * m < l * l


def ratios_array(sides: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return sides[:, 0] / sides[:, 1], sides[:, 1] / sides[:, 2]


def to_polar_array(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Polar coordinates of ``points[..., 2]`` with theta in (-pi, pi]."""
    rho = np.hypot(points[..., 0], points[..., 1])
    theta = _wrap_theta(np.arctan2(points[..., 1], points[..., 0]))
    return rho, theta


def from_polar_array(rho: np.ndarray, theta: np.ndarray) -> np.ndarray:
    return np.stack([rho * np.cos(theta), rho * np.sin(theta)], axis=-1)
