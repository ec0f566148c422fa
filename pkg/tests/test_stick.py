import math
import random

import numpy as np
import pytest

from conftest import se
from geoprob.analytic import angle_line_obtuse
from geoprob.errors import DomainError
from geoprob.rng import RngStream
from geoprob.stick import (
    CutPolicy,
    Mode,
    StickPieces,
    analytic_probability,
    cut_parallel,
    cut_parallel_array,
    cut_sequential,
    cut_sequential_array,
    forms_triangle,
    forms_triangle_array,
    integrate_success,
    pdf_second_cut,
    pieces_from_cuts,
)


class ScriptedGenerator:
    """Stands in for numpy's Generator and replays fixed uniforms."""

    def __init__(self, values):
        self.values = list(values)

    def uniform(self, lo, hi, size):
        out = [self.values.pop(0) for _ in range(size)]
        return lo + (hi - lo) * np.array(out)


class ScriptedRng:
    def __init__(self, values):
        self.generator = ScriptedGenerator(values)


def test_pieces_from_cuts():
    assert pieces_from_cuts(0.25, 0.75).tolist() == [0.25, 0.5, 0.25]


def test_colliding_cuts_are_resampled():
    with pytest.raises(ValueError):
        StickPieces(*pieces_from_cuts(0.5, 0.5))
    p = cut_parallel(ScriptedRng([0.5, 0.5, 0.25, 0.75]))
    assert (p.a, p.b, p.c) == (0.25, 0.5, 0.25)


@pytest.mark.parametrize(
    "pieces, ok", [((0.3, 0.3, 0.4), True), ((0.5, 0.25, 0.25), False), ((0.6, 0.2, 0.2), False)]
)
def test_forms_triangle(pieces, ok):
    assert forms_triangle(StickPieces(*pieces)) is ok


def test_pieces_sum_to_one(rng):
    for arr in (cut_parallel_array(rng, 10**5), cut_sequential_array(CutPolicy.RANDOM_PIECE, rng, 10**5)):
        assert np.abs(arr.sum(axis=1) - 1).max() <= 1e-12
        assert (arr > 0).all()
    cut_sequential(CutPolicy.LARGER_PIECE, rng)


@pytest.mark.parametrize("x, want", [(0, 0), (0.5, 1), (0.25, 1 / 3)])
def test_pdf_second_cut(x, want):
    assert pdf_second_cut(x) == pytest.approx(want)


@pytest.mark.parametrize("x", [-0.1, 0.6])
def test_pdf_domain(x):
    with pytest.raises(DomainError):
        pdf_second_cut(x)


def test_integrate_success_values():
    assert integrate_success(0, 0.5, 10**6) == pytest.approx(math.log(2) - 0.5, abs=1e-9)
    assert integrate_success(0, 0.5, 10**6) == pytest.approx(0.19314718, abs=1e-8)
    assert integrate_success(0, 0.25, 10**6) == pytest.approx(-0.25 - math.log(0.75), abs=1e-12)


@pytest.mark.parametrize("lo, hi, steps", [(0, 0, 10), (0.3, 0.2, 10), (0, 0.6, 10), (0, 0.5, 1)])
def test_integrate_success_domain(lo, hi, steps):
    with pytest.raises(DomainError):
        integrate_success(lo, hi, steps)


def test_simpson_fourth_order():
    exact = math.log(2) - 0.5
    errors = [abs(integrate_success(0, 0.5, n) - exact) for n in (4, 8, 16, 32, 64)]
    ratios = [a / b for a, b in zip(errors, errors[1:])]
    assert all(13 < r < 19 for r in ratios), ratios


def test_odd_steps_round_up():
    assert integrate_success(0, 0.5, 7) == integrate_success(0, 0.5, 8)


def brute_force_sequential(larger_only: bool, n: int, seed: int) -> float:
    """Plain-Python model of the sequential break, independent of the vectorized code."""
    r = random.Random(seed)
    ok = 0
    for _ in range(n):
        x = r.random()
        pieces = [x, 1 - x]
        pieces.sort()
        keep, cut = (pieces[0], pieces[1]) if larger_only or r.random() < 0.5 else (pieces[1], pieces[0])
        y = r.random() * cut
        ok += max(keep, y, cut - y) < 0.5
    return ok / n


def test_analytic_values_against_brute_force():
    n = 200_000
    larger = brute_force_sequential(True, n, 1)
    rand = brute_force_sequential(False, n, 2)
    assert abs(larger - analytic_probability(Mode.SEQUENTIAL, CutPolicy.LARGER_PIECE)) <= 4 * se(0.3863, n)
    assert abs(rand - analytic_probability(Mode.SEQUENTIAL, CutPolicy.RANDOM_PIECE)) <= 4 * se(0.1931, n)
    assert analytic_probability(Mode.PARALLEL) == 0.25
    assert analytic_probability(Mode.SEQUENTIAL, CutPolicy.SMALLER_PIECE) == 0
    assert analytic_probability(Mode.SEQUENTIAL, CutPolicy.LARGER_PIECE) == pytest.approx(0.386294, abs=1e-6)


def test_random_piece_is_half_of_density_weighted_integral():
    # P = 1/2 * (2 * integral) makes the cancellation explicit.
    assert 0.5 * 2 * integrate_success(0, 0.5, 1000) == pytest.approx(
        analytic_probability(Mode.SEQUENTIAL, CutPolicy.RANDOM_PIECE), abs=1e-12
    )


@pytest.mark.parametrize(
    "policy, want",
    [(CutPolicy.RANDOM_PIECE, 0.1931), (CutPolicy.LARGER_PIECE, 0.3863), (CutPolicy.SMALLER_PIECE, 0.0)],
)
def test_sequential_rates(policy, want):
    n = 10**6
    rate = forms_triangle_array(cut_sequential_array(policy, RngStream(5), n)).mean()
    assert rate == pytest.approx(want, abs=0.002)


def test_parallel_rate():
    rate = forms_triangle_array(cut_parallel_array(RngStream(6), 10**6)).mean()
    assert rate == pytest.approx(0.25, abs=0.002)


def test_pathwise_complement_with_angle_line():
    u = RngStream(7).uniform(size=(2, 10**6))
    tri = forms_triangle_array(pieces_from_cuts(u[0], u[1]))
    obtuse = angle_line_obtuse(math.pi * u[0], math.pi * u[1])
    assert np.array_equal(tri, ~obtuse)
    assert tri.mean() + obtuse.mean() == 1.0
