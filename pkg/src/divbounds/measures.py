"""Closed-form evaluation of the concrete divergence measures.

All values are in nats.  The "adjoint" of a measure is the same formula with
the arguments swapped; adjoints are separate named entries (D1/D2, F1/F2,
G1/G2) because the bound tables are indexed by these names.
"""

from __future__ import annotations

import numpy as np

from .errors import LengthMismatch, NonFinite, UnknownMeasure
from .generators import S_POLE_TOL
from .simplex import Distribution


def _kl(p, q):
    return float(np.sum(p * np.log(p / q)))


def _j(p, q):
    return float(np.sum((p - q) * np.log(p / q)))


def _d1(p, q):
    return float(np.sum((p - q) * np.log((p + q) / (2 * q))))


def _f1(p, q):
    return float(np.sum(p * np.log(2 * p / (p + q))))


def _g1(p, q):
    m = (p + q) / 2
    return float(np.sum(m * np.log(m / p)))


def _i(p, q):
    m = (p + q) / 2
    return float(np.sum(p * np.log(p / m) + q * np.log(q / m)) / 2)


def _t(p, q):
    m = (p + q) / 2
    return float(np.sum(m * np.log(m / np.sqrt(p * q))))


def _b(p, q):
    return float(np.sum(np.sqrt(p * q)))


def _h(p, q):
    return float(np.sum((np.sqrt(p) - np.sqrt(q)) ** 2) / 2)


def _chi2(p, q):
    return float(np.sum((p - q) ** 2 / q))


_DISPATCH = {
    "KL": _kl,
    "KL_ADJ": lambda p, q: _kl(q, p),
    "J": _j,
    "D1": _d1,
    "D2": lambda p, q: _d1(q, p),
    "F1": _f1,
    "F2": lambda p, q: _f1(q, p),
    "G1": _g1,
    "G2": lambda p, q: _g1(q, p),
    "I": _i,
    "T": _t,
    "BHATTACHARYYA": _b,
    "HELLINGER": _h,
    "CHI2": _chi2,
    "CHI2_ADJ": lambda p, q: _chi2(q, p),
}

#: All named measures accepted by :func:`divergence`.
MEASURE_IDS = tuple(_DISPATCH)

#: Measures invariant under swapping P and Q.
SYMMETRIC_IDS = ("J", "I", "T", "HELLINGER", "BHATTACHARYYA")


def divergence(measure: str, P: Distribution, Q: Distribution) -> float:
    """Closed-form value of a named measure, in nats."""
    if len(P) != len(Q):
        raise LengthMismatch(f"lengths differ: {len(P)} vs {len(Q)}")
    try:
        fn = _DISPATCH[measure]
    except KeyError:
        raise UnknownMeasure(f"unknown measure {measure!r}") from None
    return fn(P.probs, Q.probs)


def phi_s(s: float, P: Distribution, Q: Distribution) -> float:
    """Power-divergence family: [s(s-1)]^-1 [sum p_i^s q_i^(1-s) - 1].

    The s = 0 and s = 1 poles dispatch to KL(Q||P) and KL(P||Q); the
    threshold matches the generator-level dispatch so both routes agree.
    """
    if not np.isfinite(s):
        raise NonFinite(f"s must be finite, got {s}")
    if len(P) != len(Q):
        raise LengthMismatch(f"lengths differ: {len(P)} vs {len(Q)}")
    p, q = P.probs, Q.probs
    if abs(s) <= S_POLE_TOL:
        return _kl(q, p)
    if abs(s - 1.0) <= S_POLE_TOL:
        return _kl(p, q)
    return float((np.sum(p**s * q ** (1.0 - s)) - 1.0) / (s * (s - 1.0)))
