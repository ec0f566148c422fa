"""Seedable Monte Carlo laboratory for classic geometric-probability puzzles.

Covers Bertrand's chords, the broken stick, random obtuse triangles, the Two
Boys and Three Prisoners problems, and a catalog of triangle randomization
methods with their side-ratio and polar statistics.
"""

__version__ = "0.1.0"
