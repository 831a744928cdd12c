"""Upper-bound functionals for the power-divergence family.

Three bounds on phi_s(P||Q) are provided: a data-dependent one (e_phi_s),
and two that depend only on the ratio range [r, R] (a_phi_s and b_phi_s).
They satisfy the chain

    0 <= phi_s <= e_phi_s <= a_phi_s,     phi_s <= b_phi_s <= a_phi_s,
    b_phi_s - phi_s <= a_phi_s,

with b_phi_s defined only under r <= 1 <= R, r != R.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidRange, LengthMismatch
from .generators import S_POLE_TOL
from .measures import phi_s
from .simplex import Distribution, RatioRange, ratio_range


def e_phi_s(s: float, P: Distribution, Q: Distribution) -> float:
    """Data-dependent bound (s-1)^-1 sum (p_i - q_i)(p_i/q_i)^(s-1)."""
    if len(P) != len(Q):
        raise LengthMismatch(f"lengths differ: {len(P)} vs {len(Q)}")
    p, q = P.probs, Q.probs
    x = p / q
    if abs(s - 1.0) <= S_POLE_TOL:
        return float(np.sum((p - q) * np.log(x)))
    return float(np.sum((p - q) * x ** (s - 1.0)) / (s - 1.0))


def a_phi_s(s: float, rng: RatioRange) -> float:
    """Range-only bound (R-r)^2/4 * (R^(s-1) - r^(s-1)) / ((R-r)(s-1))."""
    r, R = rng.r, rng.R
    if not 0.0 < r <= R:
        raise InvalidRange(f"need 0 < r <= R, got {rng}")
    if r == R:
        return 0.0
    if abs(s - 1.0) <= S_POLE_TOL:
        factor = (math.log(R) - math.log(r)) / (R - r)
    else:
        factor = (R ** (s - 1.0) - r ** (s - 1.0)) / ((R - r) * (s - 1.0))
    return 0.25 * (R - r) ** 2 * factor


def b_phi_s(s: float, rng: RatioRange) -> float:
    """Chord bound [(R-1)f(r) + (1-r)f(R)] / (R-r) for the power generator.

    Interpolates the generator through x = 1; requires r <= 1 <= R, r != R.
    """
    r, R = rng.r, rng.R
    if not (0.0 < r <= 1.0 <= R) or r == R:
        raise InvalidRange(f"need 0 < r <= 1 <= R with r != R, got {rng}")
    if abs(s) <= S_POLE_TOL:
        num = (R - 1.0) * math.log(1.0 / r) + (1.0 - r) * math.log(1.0 / R)
        return num / (R - r)
    if abs(s - 1.0) <= S_POLE_TOL:
        num = (R - 1.0) * r * math.log(r) + (1.0 - r) * R * math.log(R)
        return num / (R - r)
    num = (R - 1.0) * (r**s - 1.0) + (1.0 - r) * (R**s - 1.0)
    return num / ((R - r) * s * (s - 1.0))


@dataclass(frozen=True)
class TypeSBoundSet:
    """phi_s with its three bounds and the inequality-check verdicts.

    ``checks`` maps an inequality label to its slack (bound minus bounded
    quantity); every slack is nonnegative up to rounding when the chain
    holds.  ``b_bound`` is None on a degenerate range (r = R).
    """

    s: float
    range: RatioRange
    phi: float
    e_bound: float
    a_bound: float
    b_bound: Optional[float]
    checks: dict

    @property
    def holds(self) -> bool:
        return all(slack >= -1e-9 for slack in self.checks.values())


def bound_set(s: float, P: Distribution, Q: Distribution) -> TypeSBoundSet:
    """Evaluate phi_s, e/a/b bounds, and the full inequality chain."""
    rng = ratio_range(P, Q)
    phi = phi_s(s, P, Q)
    e = e_phi_s(s, P, Q)
    a = a_phi_s(s, rng)
    checks = {
        "phi_nonneg": phi,
        "phi_le_e": e - phi,
        "phi_le_a": a - phi,
        "e_le_a": a - e,
    }
    b = None
    if not rng.degenerate:
        b = b_phi_s(s, rng)
        checks["phi_le_b"] = b - phi
        checks["b_le_a"] = a - b
        checks["b_minus_phi_le_a"] = a - (b - phi)
    return TypeSBoundSet(s=s, range=rng, phi=phi, e_bound=e, a_bound=a, b_bound=b, checks=checks)
