"""Mergeable summary statistics with an exact median.

Central moments are combined with the pairwise update of Chan et al. (and
its third-moment extension from Pébay), so chunk results can be reduced in
any grouping. Values are retained so the median is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InsufficientData, NonFinite


@dataclass(frozen=True)
class Summary:
    count: int
    mean: float
    median: float
    min: float
    max: float
    variance: float
    skewness: float

    def as_dict(self) -> dict:
        return {
            "mean": self.mean,
            "median": self.median,
            "min": self.min,
            "max": self.max,
            "variance": self.variance,
            "skewness": self.skewness,
        }


class SummaryStats:
    """Count, mean, M2, M3, min, max plus the retained sample."""

    __slots__ = ("count", "mean", "m2", "m3", "min", "max", "_chunks", "_pending")

    def __init__(self) -> None:
        self.count = 0
        self.mean = 0.0
        self.m2 = 0.0
        self.m3 = 0.0
        self.min = math.inf
        self.max = -math.inf
        self._chunks: list[np.ndarray] = []
        self._pending: list[float] = []

    @classmethod
    def from_values(cls, values) -> "SummaryStats":
        s = cls()
        s.extend(values)
        return s

    @property
    def values(self) -> np.ndarray:
        self._flush()
        if not self._chunks:
            return np.empty(0)
        if len(self._chunks) > 1:
            self._chunks = [np.concatenate(self._chunks)]
        return self._chunks[0]

    def _flush(self) -> None:
        if self._pending:
            self._chunks.append(np.asarray(self._pending, dtype=float))
            self._pending = []

    def push(self, x: float) -> "SummaryStats":
        x = float(x)
        if not math.isfinite(x):
            raise NonFinite(f"cannot accumulate {x}")
        n1 = self.count
        n = n1 + 1
        delta = x - self.mean
        delta_n = delta / n
        term1 = delta * delta_n * n1
        self.mean += delta_n
        self.m3 += term1 * delta_n * (n - 2) - 3.0 * delta_n * self.m2
        self.m2 += term1
        self.count = n
        self.min = min(self.min, x)
        self.max = max(self.max, x)
        self._pending.append(x)
        return self

    def extend(self, values) -> "SummaryStats":
        arr = np.asarray(values, dtype=float).ravel()
        if arr.size == 0:
            return self
        if not np.isfinite(arr).all():
            raise NonFinite("cannot accumulate non-finite values")
        lo, hi = float(arr.min()), float(arr.max())
        mean = min(max(float(arr.mean()), lo), hi)
        dev = arr - mean
        batch = SummaryStats()
        batch.count = arr.size
        batch.mean = mean
        batch.m2 = float(np.dot(dev, dev))
        batch.m3 = float(np.dot(dev * dev, dev))
        batch.min, batch.max = lo, hi
        batch._chunks = [arr.copy()]
        self._absorb(batch)
        return self

    def _absorb(self, other: "SummaryStats") -> None:
        if other.count == 0:
            return
        if self.count == 0:
            self.count, self.mean, self.m2, self.m3 = other.count, other.mean, other.m2, other.m3
            self.min, self.max = other.min, other.max
        else:
            na, nb = self.count, other.count
            n = na + nb
            delta = other.mean - self.mean
            self.m3 = (
                self.m3
                + other.m3
                + delta**3 * na * nb * (na - nb) / n**2
                + 3.0 * delta * (na * other.m2 - nb * self.m2) / n
            )
            self.m2 = self.m2 + other.m2 + delta * delta * na * nb / n
            self.mean = self.mean + delta * nb / n
            self.count = n
            self.min = min(self.min, other.min)
            self.max = max(self.max, other.max)
            self.mean = min(max(self.mean, self.min), self.max)
        self._flush()
        other._flush()
        self._chunks.extend(other._chunks)

    def copy(self) -> "SummaryStats":
        s = SummaryStats()
        s._absorb(self)
        return s

    def variance(self) -> float:
        if self.count < 2:
            raise InsufficientData("variance needs at least 2 observations")
        return self.m2 / self.count

    def skewness(self) -> float:
        """Standardized third moment g1; 0.0 for a zero-variance sample."""
        if self.count < 3:
            raise InsufficientData("skewness needs at least 3 observations")
        if self.m2 == 0.0:
            return 0.0
        n = self.count
        return (self.m3 / n) / (self.m2 / n) ** 1.5

    def median(self) -> float:
        if self.count < 1:
            raise InsufficientData("median of an empty sample")
        return float(np.median(self.values))

    def __len__(self) -> int:
        return self.count

    def __repr__(self) -> str:
        return f"SummaryStats(count={self.count}, mean={self.mean!r})"


def accumulate(s: SummaryStats, x: float) -> SummaryStats:
    return s.push(x)


def merge(a: SummaryStats, b: SummaryStats) -> SummaryStats:
    """New accumulator equal to ``a`` followed by ``b``; inputs are untouched."""
    out = a.copy()
    out._absorb(b.copy())
    return out


def finalize(s: SummaryStats) -> Summary:
    if s.count < 3:
        raise InsufficientData(f"finalize needs at least 3 observations, have {s.count}")
    return Summary(
        count=s.count,
        mean=s.mean,
        median=s.median(),
        min=s.min,
        max=s.max,
        variance=s.variance(),
        skewness=s.skewness(),
    )
