from fractions import Fraction

import pytest

from geoprob.discrete import (
    BOY,
    GIRL,
    PrisonerStrategy,
    TwoBoysProtocol,
    enumerate_prisoners,
    enumerate_two_boys,
    exact_value,
    filter_families_verdict,
    pardon_given_named,
    prisoner_outcomes,
    prisoners_counts,
    three_prisoners,
    two_boys,
)
from geoprob.rng import RngStream


def test_exact_values():
    assert exact_value(TwoBoysProtocol.FILTER_FAMILIES) == Fraction(1, 3)
    assert exact_value(TwoBoysProtocol.INFORMANT) == Fraction(1, 2)
    assert exact_value(PrisonerStrategy.SWITCH) == Fraction(2, 3)
    assert exact_value(PrisonerStrategy.STAY) + exact_value(PrisonerStrategy.SWITCH) == 1
    with pytest.raises(ValueError):
        exact_value("nope")


@pytest.mark.parametrize("protocol", list(TwoBoysProtocol))
def test_two_boys_enumeration(protocol):
    assert enumerate_two_boys(protocol) == exact_value(protocol)


@pytest.mark.parametrize("strategy", list(PrisonerStrategy))
def test_prisoners_enumeration(strategy):
    assert len(prisoner_outcomes()) == 6
    assert enumerate_prisoners(strategy) == exact_value(strategy)


def test_conditional_on_warden_naming_b():
    assert pardon_given_named("B") == {"A": Fraction(1, 3), "B": 0, "C": Fraction(2, 3)}


def test_forced_boy_boy_family_is_success():
    assert filter_families_verdict((BOY, BOY)) is True
    assert filter_families_verdict((BOY, GIRL)) is False
    assert filter_families_verdict((GIRL, GIRL)) is None


def test_two_boys_simulation():
    assert two_boys(TwoBoysProtocol.FILTER_FAMILIES, 10**6, RngStream(1)) == pytest.approx(1 / 3, abs=0.002)
    assert two_boys(TwoBoysProtocol.INFORMANT, 10**6, RngStream(2)) == pytest.approx(1 / 2, abs=0.002)


def test_prisoners_simulation():
    assert three_prisoners(PrisonerStrategy.STAY, 10**6, RngStream(3)) == pytest.approx(1 / 3, abs=0.002)
    assert three_prisoners(PrisonerStrategy.SWITCH, 10**6, RngStream(3)) == pytest.approx(2 / 3, abs=0.002)


@pytest.mark.parametrize("n", [1, 7, 1000, 12345])
def test_stay_and_switch_partition_every_batch(n):
    stay, switch = prisoners_counts(n, RngStream(n))
    assert stay + switch == n


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        two_boys(TwoBoysProtocol.INFORMANT, 0, RngStream(0))
