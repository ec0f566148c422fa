"""Two Boys and Three Prisoners: exact values, enumeration oracles, simulation."""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction

import numpy as np

from .rng import RngStream


class TwoBoysProtocol(enum.Enum):
    FILTER_FAMILIES = "FilterFamilies"
    INFORMANT = "Informant"


class PrisonerStrategy(enum.Enum):
    STAY = "Stay"
    SWITCH = "Switch"


BOY, GIRL = 0, 1
PRISONERS = ("A", "B", "C")


def exact_value(problem) -> Fraction:
    """Exact answer for a :class:`TwoBoysProtocol` or :class:`PrisonerStrategy`."""
    table = {
        TwoBoysProtocol.FILTER_FAMILIES: Fraction(1, 3),
        TwoBoysProtocol.INFORMANT: Fraction(1, 2),
        PrisonerStrategy.STAY: Fraction(1, 3),
        PrisonerStrategy.SWITCH: Fraction(2, 3),
    }
    try:
        return table[problem]
    except KeyError:
        raise ValueError(f"unknown problem {problem!r}") from None


# -- enumeration oracles ----------------------------------------------------


def enumerate_two_boys(protocol: TwoBoysProtocol) -> Fraction:
    """Exhaustive enumeration over BB, BG, GB, GG (and the informant's pick)."""
    families = list(itertools.product((BOY, GIRL), repeat=2))
    if protocol is TwoBoysProtocol.FILTER_FAMILIES:
        kept = [f for f in families if BOY in f]
        return Fraction(sum(f == (BOY, BOY) for f in kept), len(kept))
    # Each (family, named child) pair has weight 1/8.
    outcomes = [(f, f[i]) for f in families for i in (0, 1)]
    return Fraction(sum(f[0] == f[1] == named for f, named in outcomes), len(outcomes))


def prisoner_outcomes():
    """The six equiprobable (pardoned, coin) outcomes with the warden's answer.

    The warden names B or C; when A is pardoned the coin decides. The coin
    face is irrelevant otherwise but still enumerated so all six outcomes
    carry equal weight.
    """
    rows = []
    for pardoned in PRISONERS:
        for coin in (0, 1):
            if pardoned == "A":
                named = "B" if coin == 0 else "C"
            else:
                named = "C" if pardoned == "B" else "B"
            rows.append((pardoned, coin, named))
    return rows


def enumerate_prisoners(strategy: PrisonerStrategy) -> Fraction:
    rows = prisoner_outcomes()
    if strategy is PrisonerStrategy.STAY:
        wins = sum(p == "A" for p, _, _ in rows)
    else:
        wins = sum(p == ({"B", "C"} - {named}).pop() for p, _, named in rows)
    return Fraction(wins, len(rows))


def pardon_given_named(named: str) -> dict[str, Fraction]:
    """Posterior pardon distribution once the warden has named ``named``."""
    rows = [r for r in prisoner_outcomes() if r[2] == named]
    return {p: Fraction(sum(r[0] == p for r in rows), len(rows)) for p in PRISONERS}


# -- simulation -------------------------------------------------------------


def filter_families_verdict(family) -> bool | None:
    """``None`` if the family has no boy (discarded), else whether both are boys."""
    if BOY not in family:
        return None
    return tuple(family) == (BOY, BOY)


def two_boys_counts(protocol: TwoBoysProtocol, trials: int, rng: RngStream) -> tuple[int, int]:
    """Return ``(successes, kept)``; ``kept`` is the denominator of the estimate."""
    gen = rng.generator
    kids = gen.integers(0, 2, size=(trials, 2))
    if protocol is TwoBoysProtocol.FILTER_FAMILIES:
        kept = (kids == BOY).any(axis=1)
        both = (kids == BOY).all(axis=1)
        return int(np.count_nonzero(both & kept)), int(np.count_nonzero(kept))
    pick = gen.integers(0, 2, size=trials)
    named = kids[np.arange(trials), pick]
    same = (kids[:, 0] == named) & (kids[:, 1] == named)
    return int(np.count_nonzero(same)), trials


def two_boys(protocol: TwoBoysProtocol, trials: int, rng: RngStream) -> float:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    hits, kept = two_boys_counts(protocol, trials, rng)
    return hits / kept


def prisoners_counts(trials: int, rng: RngStream) -> tuple[int, int]:
    """Return ``(stay_wins, switch_wins)`` on one shared batch of draws."""
    gen = rng.generator
    pardoned = gen.integers(0, 3, size=trials)  # 0=A, 1=B, 2=C
    coin = gen.integers(0, 2, size=trials)
    named = np.where(pardoned == 0, 1 + coin, np.where(pardoned == 1, 2, 1))
    other = 3 - named  # the one of B, C that was not named
    stay = int(np.count_nonzero(pardoned == 0))
    switch = int(np.count_nonzero(pardoned == other))
    return stay, switch


def three_prisoners(strategy: PrisonerStrategy, trials: int, rng: RngStream) -> float:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    stay, switch = prisoners_counts(trials, rng)
    return (stay if strategy is PrisonerStrategy.STAY else switch) / trials
