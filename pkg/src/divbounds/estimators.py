"""Ratio-range estimators built from divergence ratios.

Each estimator is a ratio of divergence values that provably lies inside
the coordinate-ratio range [r, R] of the pair.  Two families are provided:
XI (t = 1..8, from the non-symmetric measure bounds) and ZETA (t = 1..4,
from the symmetric ones).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePair, VanishingDenominator
from .measures import divergence
from .simplex import Distribution

_DENOM_FLOOR = 1e-300


@dataclass(frozen=True)
class EstimatorId:
    family: str  # "XI" | "ZETA"
    t: int

    def __post_init__(self):
        limits = {"XI": 8, "ZETA": 4}
        if self.family not in limits:
            raise ValueError(f"unknown family {self.family!r}")
        if not 1 <= self.t <= limits[self.family]:
            raise ValueError(f"{self.family} index must be in 1..{limits[self.family]}")

    def __str__(self) -> str:
        return f"{self.family.lower()}{self.t}"


def _ratio(num: float, den: float) -> float:
    if abs(den) <= _DENOM_FLOOR:
        raise VanishingDenominator(f"denominator {den!r} underflowed")
    return num / den


def _xi(t: int, d) -> float:
    sqrt = math.sqrt
    if t == 1:
        return _ratio(sqrt(2 * d("F1")), sqrt(d("CHI2_ADJ")) - sqrt(2 * d("F1")))
    if t == 2:
        return _ratio(sqrt(d("KL")) - sqrt(d("F1")), sqrt(d("F1")))
    if t == 3:
        return _ratio(sqrt(d("F2")), sqrt(d("KL_ADJ")) - sqrt(d("F2")))
    if t == 4:
        return _ratio(sqrt(d("CHI2")) - sqrt(2 * d("F2")), sqrt(2 * d("F2")))
    if t == 5:
        return _ratio(4 * d("G1"), d("CHI2_ADJ") - 4 * d("G1"))
    if t == 6:
        return _ratio(d("KL_ADJ") - 2 * d("G1"), 2 * d("G1"))
    if t == 7:
        return _ratio(2 * d("G2"), d("KL") - 2 * d("G2"))
    return _ratio(d("CHI2") - 4 * d("G2"), 4 * d("G2"))


def _zeta(t: int, d) -> float:
    if t == 1:
        return _ratio(d("J") - d("KL_ADJ"), d("KL_ADJ"))
    if t == 2:
        return _ratio(d("KL"), d("J") - d("KL"))
    if t == 3:
        return _ratio(2 * d("I"), d("KL_ADJ") - 2 * d("I"))
    return _ratio(d("KL") - 2 * d("I"), 2 * d("I"))


def estimate(est: EstimatorId, P: Distribution, Q: Distribution) -> float:
    """Evaluate one estimator; raises on a coordinatewise-equal pair."""
    if len(P) == len(Q) and np.all(np.abs(P.probs - Q.probs) <= 1e-14):
        raise DegeneratePair("estimators are 0/0 at P = Q")

    cache = {}

    def d(measure: str) -> float:
        if measure not in cache:
            cache[measure] = divergence(measure, P, Q)
        return cache[measure]

    if est.family == "XI":
        return _xi(est.t, d)
    return _zeta(est.t, d)


def all_estimators() -> tuple:
    """Every EstimatorId in both families, in (family, t) order."""
    return tuple(
        [EstimatorId("XI", t) for t in range(1, 9)] + [EstimatorId("ZETA", t) for t in range(1, 5)]
    )
