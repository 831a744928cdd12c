"""Sandwich bounds m * phi_s <= C_f <= M * phi_s.

The key object is g(x) = x^(2-s) * f''(x).  If m <= g <= M on the ratio
range [r, R] of a pair (P, Q), then C_f(P||Q) is sandwiched between
m * phi_s(P||Q) and M * phi_s(P||Q).  For the nine catalog measures g is
monotone outside a measure-specific gap in s, giving closed-form endpoint
extrema; everywhere else an independent numeric optimizer (log-spaced scan
plus golden-section refinement) supplies (m, M).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidRange, NonPositiveX, NotTabulated, UnknownMeasure
from .generators import Generator, PhiS, eval_csiszar, get_generator
from .measures import phi_s
from .simplex import Distribution, RatioRange, ratio_range
from .type_s_bounds import a_phi_s, b_phi_s, e_phi_s

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = _INV_PHI**2


def g_eval(gen: Generator, s: float, x):
    """x^(2-s) * f''(x); accepts a positive scalar or array."""
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(arr > 0.0):
        raise NonPositiveX(f"x must be > 0, got {x}")
    out = arr ** (2.0 - s) * gen.f_second(arr)
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


@dataclass(frozen=True)
class MMBounds:
    """Extrema of g on [r, R], with provenance of how they were obtained."""

    m: float
    M: float
    method: str  # "closed_form" | "numeric" | "global"
    s: float
    range: RatioRange


def _golden_min(fn, a: float, b: float, rel_tol: float = 1e-12) -> float:
    """Minimum value of a unimodal fn on [a, b], bracket shrunk to rel_tol."""
    h = b - a
    tol = rel_tol * max(1.0, abs(a), abs(b))
    if h <= tol:
        return min(fn(a), fn(b))
    n = int(math.ceil(math.log(tol / h) / math.log(_INV_PHI)))
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    yc, yd = fn(c), fn(d)
    for _ in range(n):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= _INV_PHI
            c = a + _INV_PHI2 * h
            yc = fn(c)
        else:
            a, c, yc = c, d, yd
            h *= _INV_PHI
            d = a + _INV_PHI * h
            yd = fn(d)
    return min(yc, yd)


def mm_numeric(gen: Generator, s: float, rng: RatioRange, points: int = 4096) -> MMBounds:
    """Independent oracle for (m, M): scan + golden-section refinement.

    Evaluates g on a log-spaced grid over [r, R], then refines every
    bracketed interior extremum (sign change of the discrete slope).
    Every catalog g has at most two stationary points, so the default
    resolution cannot miss one.
    """
    r, R = rng.r, rng.R
    if not 0.0 < r <= R:
        raise InvalidRange(f"need 0 < r <= R, got {rng}")
    if r == R:
        v = g_eval(gen, s, r)
        return MMBounds(v, v, "numeric", s, rng)
    xs = np.exp(np.linspace(math.log(r), math.log(R), points))
    xs[0], xs[-1] = r, R
    gs = g_eval(gen, s, xs)
    lo = float(gs.min())
    hi = float(gs.max())
    if hi - lo <= 1e-12 * (1.0 + abs(hi)):
        # Constant up to rounding (e.g. the power generator at its own s);
        # rounding jitter would otherwise fake thousands of local extrema.
        return MMBounds(lo, hi, "numeric", s, rng)
    # Interior samples at least as extreme as both neighbors bracket a
    # stationary point (<= / >= rather than strict comparison: a symmetric
    # extremum can land exactly between two equal-valued samples).
    interior = gs[1:-1]
    min_idx = np.nonzero((interior <= gs[:-2]) & (interior <= gs[2:]))[0]
    max_idx = np.nonzero((interior >= gs[:-2]) & (interior >= gs[2:]))[0]

    def refine(indices, sign, best):
        """sign=+1 lowers `best` toward minima, sign=-1 raises it toward maxima."""
        prev = -2
        for j in indices:
            if j == prev + 1:  # same plateau / extremum, already bracketed
                prev = j
                continue
            prev = j
            a, b = float(xs[j]), float(xs[min(j + 3, points - 1)])
            v = sign * _golden_min(lambda x: sign * g_eval(gen, s, x), a, b)
            best = min(best, v) if sign > 0 else max(best, v)
        return best

    lo = refine(min_idx, 1.0, lo)
    hi = refine(max_idx, -1.0, hi)
    return MMBounds(lo, hi, "numeric", s, rng)


# Monotone regions and endpoint coefficients, one row per catalog measure:
# g is increasing on [r, R] for s <= lo and decreasing for s >= hi.  The
# coefficient functions are transcriptions of the endpoint closed forms,
# with two corrections adopted after checking against mm_numeric: the
# J-divergence supremum is (1+x)/x^s at the appropriate endpoint, and the
# G1 upper coefficient is 1/(2 x^s (x+1)).
_CLOSED = {
    "D1": (0.75, 2.0, lambda x, s: x ** (2.0 - s) * (x + 3.0) / (x + 1.0) ** 2),
    "D2": (-1.0, 0.25, lambda x, s: x ** (-s) * (3.0 * x + 1.0) / (x + 1.0) ** 2),
    "F1": (-1.0, 1.0, lambda x, s: x ** (1.0 - s) / (x + 1.0) ** 2),
    "F2": (0.0, 2.0, lambda x, s: x ** (2.0 - s) / (x + 1.0) ** 2),
    "G1": (-1.0, 0.0, lambda x, s: x ** (-s) / (2.0 * (x + 1.0))),
    "G2": (1.0, 2.0, lambda x, s: x ** (2.0 - s) / (2.0 * (x + 1.0))),
    "J": (0.0, 1.0, lambda x, s: (1.0 + x) / x**s),
    "I": (0.0, 1.0, lambda x, s: x ** (1.0 - s) / (2.0 * (1.0 + x))),
    "T": (-1.0, 2.0, lambda x, s: x ** (-s) * (1.0 + x**2) / (4.0 * (1.0 + x))),
}

#: Validity regions (s_low, s_high) of the closed-form extrema per measure.
CLOSED_FORM_REGIONS = {k: (v[0], v[1]) for k, v in _CLOSED.items()}


def mm_closed(measure, s: float, rng: RatioRange) -> Optional[MMBounds]:
    """Closed-form (m, M) where g is provably monotone; None in the gap.

    For a power-family measure PhiS(t), g(x) = x^(t-s) is monotone for
    every s, so a closed form is always returned (m = M = 1 when t = s).
    """
    r, R = rng.r, rng.R
    if not 0.0 < r <= R:
        raise InvalidRange(f"need 0 < r <= R, got {rng}")
    if isinstance(measure, PhiS):
        e = measure.s - s
        if e == 0.0:
            return MMBounds(1.0, 1.0, "closed_form", s, rng)
        lo_v, hi_v = r**e, R**e
        m, M = (lo_v, hi_v) if e > 0 else (hi_v, lo_v)
        return MMBounds(m, M, "closed_form", s, rng)
    try:
        s_lo, s_hi, coeff = _CLOSED[measure]
    except KeyError:
        raise UnknownMeasure(f"unknown measure {measure!r}") from None
    if s <= s_lo:  # g increasing
        return MMBounds(coeff(r, s), coeff(R, s), "closed_form", s, rng)
    if s >= s_hi:  # g decreasing
        return MMBounds(coeff(R, s), coeff(r, s), "closed_form", s, rng)
    return None


@dataclass(frozen=True)
class GlobalExtremum:
    """A tabulated global sup or inf of g over (0, inf)."""

    kind: str  # "sup" | "inf"
    value: float
    x: float


_SQ2 = math.sqrt(2.0)
_GLOBAL = {
    ("D1", 1.0): GlobalExtremum("sup", 9.0 / 8.0, 3.0),
    ("D2", 0.0): GlobalExtremum("sup", 9.0 / 8.0, 1.0 / 3.0),
    ("F1", 0.0): GlobalExtremum("sup", 0.25, 1.0),
    ("F1", 0.5): GlobalExtremum("sup", 3.0 * math.sqrt(3.0) / 16.0, 1.0 / 3.0),
    ("F2", 0.5): GlobalExtremum("sup", 3.0 * math.sqrt(3.0) / 16.0, 3.0),
    ("F2", 1.0): GlobalExtremum("sup", 0.25, 1.0),
    ("J", 0.5): GlobalExtremum("inf", 2.0, 1.0),
    ("I", 0.5): GlobalExtremum("sup", 0.25, 1.0),
    ("T", 0.0): GlobalExtremum("inf", (_SQ2 - 1.0) / 2.0, _SQ2 - 1.0),
    ("T", 0.5): GlobalExtremum("inf", 0.25, 1.0),
    ("T", 1.0): GlobalExtremum("inf", (_SQ2 - 1.0) / 2.0, _SQ2 + 1.0),
}


def global_extrema(measure: str, s: float) -> GlobalExtremum:
    """Tabulated global extremum of g over (0, inf) for special (measure, s)."""
    try:
        return _GLOBAL[(measure, float(s))]
    except KeyError:
        raise NotTabulated(f"no tabulated global extremum for ({measure}, s={s})") from None


def global_extrema_table() -> dict:
    """The full (measure, s) -> GlobalExtremum table."""
    return dict(_GLOBAL)


def e_cf(gen: Generator, P: Distribution, Q: Distribution) -> float:
    """Data-dependent bound functional sum (p_i - q_i) f'(p_i/q_i)."""
    p, q = P.probs, Q.probs
    if p.size != q.size:
        raise InvalidRange(f"lengths differ: {p.size} vs {q.size}")
    return float(np.sum((p - q) * gen.f_prime(p / q)))


def a_cf(gen: Generator, rng: RatioRange) -> float:
    """Range-only bound functional (R-r)/4 * (f'(R) - f'(r))."""
    r, R = rng.r, rng.R
    if not 0.0 < r <= R:
        raise InvalidRange(f"need 0 < r <= R, got {rng}")
    if r == R:
        return 0.0
    return 0.25 * (R - r) * (float(gen.f_prime(R)) - float(gen.f_prime(r)))


def b_cf(gen: Generator, rng: RatioRange) -> float:
    """Chord bound functional [(R-1)f(r) + (1-r)f(R)] / (R-r)."""
    r, R = rng.r, rng.R
    if not (0.0 < r <= 1.0 <= R) or r == R:
        raise InvalidRange(f"need 0 < r <= 1 <= R with r != R, got {rng}")
    return ((R - 1.0) * float(gen.f(r)) + (1.0 - r) * float(gen.f(R))) / (R - r)


@dataclass(frozen=True)
class BoundReport:
    """A certified sandwich lower <= value <= upper for one measure."""

    measure: object
    s: float
    lower: float
    value: float
    upper: float
    mm: MMBounds
    lower_slack: float
    upper_slack: float

    @property
    def holds(self) -> bool:
        return self.lower_slack >= -1e-9 and self.upper_slack >= -1e-9


def bound_interval(measure, s: float, P: Distribution, Q: Distribution, method: str = "auto") -> BoundReport:
    """Sandwich m * phi_s <= C_f <= M * phi_s for a catalog or PhiS measure.

    method "auto" and "closed" prefer the closed form and fall back to the
    numeric optimizer inside the gap region; "numeric" forces the oracle.
    """
    if method not in ("auto", "closed", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    rng = ratio_range(P, Q)
    gen = get_generator(measure)
    mm = None
    if method in ("auto", "closed"):
        mm = mm_closed(measure, s, rng)
    if mm is None:
        mm = mm_numeric(gen, s, rng)
    phi = phi_s(s, P, Q)
    value = eval_csiszar(gen, P, Q)
    lower = mm.m * phi
    upper = mm.M * phi
    return BoundReport(
        measure=measure,
        s=s,
        lower=lower,
        value=value,
        upper=upper,
        mm=mm,
        lower_slack=value - lower,
        upper_slack=upper - value,
    )


@dataclass(frozen=True)
class DifferenceReport:
    """Verdicts for the difference-form sandwiches on E/A/B functionals.

    For each form X in {E, A, B}, checks that X_Cf - C_f lies between
    m and M times (X_phi_s - phi_s).  ``checks`` maps a label to its
    slack; the B form is omitted on a degenerate range.
    """

    s: float
    range: RatioRange
    mm: MMBounds
    checks: dict

    @property
    def holds(self) -> bool:
        return all(slack >= -1e-9 for slack in self.checks.values())


def difference_bounds(
    gen: Generator, s: float, P: Distribution, Q: Distribution, mm: Optional[MMBounds] = None
) -> DifferenceReport:
    """Check the three difference sandwiches for an arbitrary generator.

    (m, M) must bound g on the whole ratio range; if not supplied they are
    obtained from the numeric optimizer.
    """
    rng = ratio_range(P, Q)
    if mm is None:
        mm = mm_numeric(gen, s, rng)
    cf = eval_csiszar(gen, P, Q)
    phi = phi_s(s, P, Q)
    checks = {}

    def sandwich(tag, phi_form, cf_form):
        d_phi = phi_form - phi
        d_cf = cf_form - cf
        checks[f"{tag}_lower"] = d_cf - mm.m * d_phi
        checks[f"{tag}_upper"] = mm.M * d_phi - d_cf

    sandwich("e", e_phi_s(s, P, Q), e_cf(gen, P, Q))
    sandwich("a", a_phi_s(s, rng), a_cf(gen, rng))
    if not rng.degenerate:
        sandwich("b", b_phi_s(s, rng), b_cf(gen, rng))
    return DifferenceReport(s=s, range=rng, mm=mm, checks=checks)
