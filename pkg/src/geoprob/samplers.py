"""Triangle randomization methods for the obtuse-triangle experiments.

Every method is implemented as a vectorized *proposal* plus an *acceptance*
test; :func:`sample_batch` runs the shared rejection loop, which also takes
care of resampling (measure-zero) degenerate triangles. :func:`sample` is the
single-trial view of the same code path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import NonConvergence
from .geometry import (
    DEGENERACY_EPS,
    Point2,
    PolarPoint,
    Triangle,
    degenerate_mask,
    from_polar_array,
    to_polar_array,
)
from .rng import RngStream

MAX_REJECTIONS = 10**6

SIN_60 = math.sin(math.pi / 3)


class Method(enum.Enum):
    GENERATED = "Generated"
    POLAR_UNIFORM = "PolarUniform"
    HALF_NORMAL = "HalfNormal"
    ELLIPSE = "Ellipse"
    RECTANGLE = "Rectangle"
    FRACTAL = "Fractal"
    QUOTIENT = "Quotient"
    L_METHOD = "LMethod"
    M_METHOD = "MMethod"


class MVariant(enum.Enum):
    POLAR = "polar"  # uniform in (theta, rho); not area-uniform
    AREA_UNIFORM = "areaUniform"


ALLOWED_RATIOS = ((1, 1), (1, 2), (1, 3))


@dataclass(frozen=True)
class SamplerSpec:
    """One randomization method and its parameters.

    ``ratio`` is ``(a, b)`` for Ellipse (semi-axes along x and y) and
    Rectangle (height and width). ``quotient_root`` selects the radius
    ``sqrt(u / v)``; with ``False`` the plain quotient ``u / v`` is used.
    """

    method: Method
    ratio: tuple[int, int] = (1, 1)
    depth: int = 8
    quotient_bounds: tuple[float, float] = (0.09, 1.4)
    quotient_root: bool = True
    m_variant: MVariant = MVariant.AREA_UNIFORM

    def __post_init__(self):
        if not isinstance(self.method, Method):
            raise ValueError(f"unknown method {self.method!r}")
        if tuple(self.ratio) not in ALLOWED_RATIOS:
            raise ValueError(f"ratio must be one of {ALLOWED_RATIOS}, got {self.ratio}")
        if self.depth < 1:
            raise ValueError("fractal depth must be >= 1")
        lo, hi = self.quotient_bounds
        if not 0 < lo < hi:
            raise ValueError(f"quotient bounds need 0 < n < x, got {self.quotient_bounds}")
        if not isinstance(self.m_variant, MVariant):
            raise ValueError(f"unknown M-method variant {self.m_variant!r}")

    @property
    def records_all_vertices(self) -> bool:
        return self.method not in (Method.GENERATED, Method.L_METHOD, Method.M_METHOD)


@dataclass
class SampleOutcome:
    triangle: Triangle
    vertex_polar: list[PolarPoint]
    rejections: int = 0


@dataclass
class TriangleBatch:
    """``n`` triangles plus the polar observations recorded for each."""

    vertices: np.ndarray  # (n, 3, 2)
    rho: np.ndarray  # (n, k)
    theta: np.ndarray  # (n, k)
    rejections: np.ndarray = field(repr=False)  # (n,)

    def __len__(self) -> int:
        return self.vertices.shape[0]


def rejection_sample(
    propose: Callable[[np.ndarray], np.ndarray],
    accept: Callable[[np.ndarray], np.ndarray],
    n: int,
    max_rejections: int = MAX_REJECTIONS,
) -> tuple[np.ndarray, np.ndarray]:
    """Fill ``n`` slots with accepted proposals.

    ``propose(slots)`` returns one candidate per pending slot index (the
    indices let deterministic sweeps know which trial they are serving);
    ``accept(candidates)`` returns a boolean mask. Returns the accepted
    candidates and the per-slot rejection counts.
    """
    pending = np.arange(n)
    rejections = np.zeros(n, dtype=np.int64)
    out = None
    while pending.size:
        cand = propose(pending)
        ok = np.asarray(accept(cand), dtype=bool)
        if out is None:
            out = np.empty((n,) + cand.shape[1:], dtype=cand.dtype)
        out[pending[ok]] = cand[ok]
        pending = pending[~ok]
        if pending.size:
            rejections[pending] += 1
            worst = int(rejections[pending].max())
            if worst >= max_rejections:
                raise NonConvergence(f"{worst} consecutive rejections; check the region definition")
    if out is None:
        out = np.empty((0,))
    return out, rejections


# -- proposals --------------------------------------------------------------
# Each proposal returns an array of shape (k, 3 + r, 2): the three vertices
# followed by the r points whose polar coordinates get recorded.


def _with_recorded(vertices: np.ndarray, recorded: np.ndarray) -> np.ndarray:
    return np.concatenate([vertices, recorded], axis=1)


def _isotropic(rho: np.ndarray, gen: np.random.Generator) -> np.ndarray:
    theta = gen.uniform(0.0, 2.0 * math.pi, rho.shape)
    return from_polar_array(rho, theta)


def big_angle(trial_index, trial_count: int):
    """Big angle of the deterministic Generated sweep (cell midpoints)."""
    return math.pi / 3 + (np.asarray(trial_index) + 0.5) * (2.0 * math.pi / 3) / trial_count


def generated_obtuse_fraction(trial_count: int) -> Fraction:
    """Exact fraction of sweep cells whose big angle exceeds pi/2.

    ``pi/3 + (k + 1/2)(2pi/3)/N > pi/2`` reduces to ``4k + 2 > N``.
    """
    if trial_count < 1:
        raise ValueError("trial_count must be >= 1")
    first = (trial_count - 2) // 4 + 1
    first = max(first, 0)
    return Fraction(trial_count - first, trial_count)


def _propose_generated(gen, slots, start_index, trial_count):
    k = slots.size
    a = big_angle(start_index + slots, trial_count)
    # Uniform split of pi - A conditioned on both parts <= A, drawn directly
    # on the feasible interval instead of by rejection.
    lo = np.maximum(0.0, math.pi - 2.0 * a)
    hi = np.minimum(a, math.pi - a)
    b = lo + gen.uniform(0.0, 1.0, k) * (hi - lo)
    c = math.pi - a - b
    sin_a = np.sin(a)
    side_b = np.sin(b) / sin_a  # opposite angle B, i.e. |AC|
    side_c = np.sin(c) / sin_a  # opposite angle C, i.e. |AB|
    apex = _isotropic(np.sqrt(gen.uniform(0.0, 1.0, k)), gen)
    phi = gen.uniform(0.0, 2.0 * math.pi, k)
    vb = apex + side_c[:, None] * np.stack([np.cos(phi - a / 2), np.sin(phi - a / 2)], axis=1)
    vc = apex + side_b[:, None] * np.stack([np.cos(phi + a / 2), np.sin(phi + a / 2)], axis=1)
    vertices = np.stack([apex, vb, vc], axis=1)
    return _with_recorded(vertices, apex[:, None, :])


def _propose_vertices(spec: SamplerSpec, gen, k):
    shape = (k, 3)
    m = spec.method
    if m is Method.POLAR_UNIFORM:
        return _isotropic(gen.uniform(0.0, 1.0, shape), gen)
    if m is Method.HALF_NORMAL:
        return _isotropic(np.abs(gen.standard_normal(shape)), gen)
    if m is Method.ELLIPSE:
        a, b = spec.ratio
        pts = _isotropic(np.sqrt(gen.uniform(0.0, 1.0, shape)), gen)
        return pts * np.array([a, b], dtype=float)
    if m is Method.RECTANGLE:
        a, b = spec.ratio
        x = gen.uniform(-b / 2, b / 2, shape)
        y = gen.uniform(-a / 2, a / 2, shape)
        return np.stack([x, y], axis=-1)
    if m is Method.FRACTAL:
        d = spec.depth
        return d * gen.uniform(-1.0, 1.0, shape + (2, d)).sum(axis=-1)
    if m is Method.QUOTIENT:
        lo, hi = spec.quotient_bounds
        q = gen.uniform(0.0, 1.0, shape) / gen.uniform(lo, hi, shape)
        return _isotropic(np.sqrt(q) if spec.quotient_root else q, gen)
    raise AssertionError(m)


def _baseline_triangle(points: np.ndarray, recorded: np.ndarray | None = None) -> np.ndarray:
    k = points.shape[0]
    vertices = np.zeros((k, 3, 2))
    vertices[:, 1, 0] = 1.0
    vertices[:, 2] = points
    if recorded is None:
        recorded = points
    return _with_recorded(vertices, recorded[:, None, :])


def _propose_l(gen, k):
    x = gen.uniform(0.5, 1.0, k)
    y = gen.uniform(0.0, SIN_60, k)
    return _baseline_triangle(np.stack([x, y], axis=1))


def _in_l_region(cand):
    p = cand[:, 2]
    return np.hypot(p[:, 0], p[:, 1]) <= 1.0


def _propose_m(spec: SamplerSpec, gen, k):
    if spec.m_variant is MVariant.POLAR:
        theta = gen.uniform(0.0, math.pi / 3, k)
        rho = gen.uniform(1.0, (1.0 + np.cos(2 * theta)) / np.cos(theta))
        pts = from_polar_array(rho, theta)
    else:
        pts = np.stack([gen.uniform(0.5, 2.0, k), gen.uniform(0.0, 1.0, k)], axis=1)
    # Observations are taken about (2, 0), looking back along -x, so rho is
    # in [0, sqrt(3)] and theta in [0, pi/2].
    mirrored = np.stack([2.0 - pts[:, 0], pts[:, 1]], axis=1)
    return _baseline_triangle(pts, mirrored)


def _in_m_region(cand):
    p = cand[:, 2]
    return (np.hypot(p[:, 0], p[:, 1]) >= 1.0) & (np.hypot(p[:, 0] - 1.0, p[:, 1]) <= 1.0)


def sample_batch(
    spec: SamplerSpec,
    rng: RngStream,
    start_index: int,
    n: int,
    trial_count: int,
    max_rejections: int | None = None,
) -> TriangleBatch:
    """Draw trials ``start_index .. start_index + n - 1`` of a ``trial_count`` run."""
    if max_rejections is None:
        max_rejections = MAX_REJECTIONS
    if n < 0 or start_index < 0 or start_index + n > trial_count:
        raise ValueError(
            f"trial range [{start_index}, {start_index + n}) outside [0, {trial_count})"
        )
    gen = rng.generator
    method = spec.method

    if method is Method.GENERATED:
        def propose(slots):
            return _propose_generated(gen, slots, start_index, trial_count)
    elif method is Method.L_METHOD:
        def propose(slots):
            return _propose_l(gen, slots.size)
    elif method is Method.M_METHOD:
        def propose(slots):
            return _propose_m(spec, gen, slots.size)
    else:
        def propose(slots):
            v = _propose_vertices(spec, gen, slots.size)
            return _with_recorded(v, v)

    if method is Method.L_METHOD:
        region = _in_l_region
    elif method is Method.M_METHOD and spec.m_variant is MVariant.AREA_UNIFORM:
        region = _in_m_region
    else:
        region = None

    def accept(cand):
        ok = ~degenerate_mask(cand[:, :3], DEGENERACY_EPS)
        if region is not None:
            ok &= region(cand)
        return ok

    cand, rejections = rejection_sample(propose, accept, n, max_rejections)
    if n == 0:
        k = 3 if spec.records_all_vertices else 1
        return TriangleBatch(np.empty((0, 3, 2)), np.empty((0, k)), np.empty((0, k)), rejections)
    rho, theta = to_polar_array(cand[:, 3:])
    return TriangleBatch(cand[:, :3], rho, theta, rejections)


def sample(spec: SamplerSpec, rng: RngStream, trial_index: int, trial_count: int) -> SampleOutcome:
    """Draw a single triangle; ``trial_index`` only matters for Generated."""
    if not 0 <= trial_index < trial_count:
        raise ValueError(f"trial_index {trial_index} outside [0, {trial_count})")
    batch = sample_batch(spec, rng, trial_index, 1, trial_count)
    v = batch.vertices[0]
    tri = Triangle(*(Point2(float(x), float(y)) for x, y in v))
    polar = [PolarPoint(float(r), float(t)) for r, t in zip(batch.rho[0], batch.theta[0])]
    return SampleOutcome(tri, polar, int(batch.rejections[0]))


# -- catalog ----------------------------------------------------------------

CATALOG: dict[str, SamplerSpec] = {
    "generated": SamplerSpec(Method.GENERATED),
    "polar-uniform": SamplerSpec(Method.POLAR_UNIFORM),
    "half-normal": SamplerSpec(Method.HALF_NORMAL),
    "ellipse-1:1": SamplerSpec(Method.ELLIPSE, ratio=(1, 1)),
    "ellipse-1:2": SamplerSpec(Method.ELLIPSE, ratio=(1, 2)),
    "ellipse-1:3": SamplerSpec(Method.ELLIPSE, ratio=(1, 3)),
    "rectangle-1:1": SamplerSpec(Method.RECTANGLE, ratio=(1, 1)),
    "rectangle-1:2": SamplerSpec(Method.RECTANGLE, ratio=(1, 2)),
    "rectangle-1:3": SamplerSpec(Method.RECTANGLE, ratio=(1, 3)),
    "fractal": SamplerSpec(Method.FRACTAL),
    "quotient": SamplerSpec(Method.QUOTIENT),
    "l-method": SamplerSpec(Method.L_METHOD),
    "m-method": SamplerSpec(Method.M_METHOD, m_variant=MVariant.AREA_UNIFORM),
    "m-method-polar": SamplerSpec(Method.M_METHOD, m_variant=MVariant.POLAR),
}

# Reference obtuse probabilities (175000 triangles per row).
TABLE_P: dict[str, float] = {
    "generated": 0.75,
    "polar-uniform": 0.7573,
    "half-normal": 0.7914,
    "ellipse-1:1": 0.7213,
    "ellipse-1:2": 0.7929,
    "ellipse-1:3": 0.863,
    "rectangle-1:1": 0.7257,
    "rectangle-1:2": 0.7981,
    "rectangle-1:3": 0.8672,
    "fractal": 0.747,
    "quotient": 0.7508,
    "l-method": 0.6401,
    "m-method": 0.8216,
}

# Samplers whose vertex angle is uniform on the circle by construction.
ISOTROPIC = ("generated", "polar-uniform", "half-normal", "ellipse-1:1", "quotient")
