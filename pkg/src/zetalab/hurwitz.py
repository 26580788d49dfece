"""Hurwitz and periodic Hurwitz zeta-functions with analytic continuation.

The Hurwitz zeta-function

    zeta(s, a) = sum_{m >= 0} (m + a)^(-s),   0 < a <= 1,

is evaluated by summing an initial segment of the series and correcting with
an Euler-Maclaurin tail,

    zeta(s, a) = sum_{m < n} (m + a)^(-s) + x^(1-s)/(s - 1) + x^(-s)/2
                 + sum_{j=1}^{J} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1),

with x = n + a.  The right-hand side continues the function to the whole
plane minus the simple pole at s = 1 (residue 1).  The correction series is
asymptotic: it needs n to grow with |Im s|, so the configured term count is
treated as a floor and raised automatically for large imaginary parts.

A periodic coefficient sequence b_0, ..., b_{k-1} of minimal period k
defines

    zeta(s, a; b) = sum_{m >= 0} b_m (m + a)^(-s)
                  = k^(-s) * sum_{l < k} b_l * zeta(s, (l + a)/k),

entire when the period mean vanishes, otherwise with a simple pole at s = 1
whose residue is that mean.  At s = 1 with zero mean the value is the limit

    zeta(1, a; b) = -(1/k) * sum_{l < k} b_l * psi((l + a)/k),

with psi the digamma function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .bernoulli import bernoulli_numbers
from .contour import derivatives_by_contour
from .errors import ContourError, PoleError


@dataclass(frozen=True)
class HurwitzParams:
    """Evaluation parameters: the shift parameter and Euler-Maclaurin knobs.

    em_terms is the floor on the directly-summed segment; em_order is the
    largest Bernoulli index used in the tail (even, between 2 and 30).
    """

    alpha: float = 1.0
    em_terms: int = 50
    em_order: int = 12

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.em_terms < 10:
            raise ValueError(f"em_terms must be >= 10, got {self.em_terms}")
        if self.em_order % 2 != 0 or not 2 <= self.em_order <= 30:
            raise ValueError(f"em_order must be even and in [2, 30], got {self.em_order}")


@lru_cache(maxsize=None)
def tail_coefficients(em_order: int) -> tuple[float, ...]:
    """B_{2j} / (2j)! for j = 1 .. em_order/2."""
    bern = bernoulli_numbers(em_order + 1)
    return tuple(float(bern[2 * j]) / math.factorial(2 * j)
                 for j in range(1, em_order // 2 + 1))


def em_segment_length(t_abs: float, em_terms: int) -> int:
    # The asymptotic tail needs the cut point to dominate |Im s|; half of it
    # plus a pad is enough at order <= 30 for the tolerances used here.
    return max(int(em_terms), int(math.ceil(0.5 * t_abs)) + 8)


def em_tail(s: complex, x: float, em_order: int) -> complex:
    """Euler-Maclaurin tail starting at x: integral, half-term, Bernoulli sum."""
    xs = complex(x) ** (-s)
    total = xs * x / (s - 1.0) + 0.5 * xs
    rising = s
    xpow = 1.0 / x
    for j, b2j in enumerate(tail_coefficients(em_order), start=1):
        total += b2j * rising * xs * xpow
        rising = rising * (s + (2 * j - 1)) * (s + 2 * j)
        xpow /= x * x
    return total


def hurwitz_zeta(s: complex, params: HurwitzParams) -> complex:
    """zeta(s, alpha), continued to the whole plane; raises at the s = 1 pole."""
    s = complex(s)
    if s == 1:
        raise PoleError("hurwitz zeta has a simple pole at s = 1", residue=1.0)
    a = params.alpha
    n = em_segment_length(abs(s.imag), params.em_terms)
    m = np.arange(n, dtype=float) + a
    direct = complex(np.sum(np.exp(-s * np.log(m))))
    return direct + em_tail(s, float(n) + a, params.em_order)


def digamma(a: float) -> float:
    """psi(a) for a > 0, by shift-and-asymptotic-series."""
    if a <= 0:
        raise ValueError(f"digamma argument must be positive, got {a}")
    shift = 0.0
    while a < 16.0:
        shift -= 1.0 / a
        a += 1.0
    inv2 = 1.0 / (a * a)
    total = math.log(a) - 0.5 / a
    power = inv2
    bern = bernoulli_numbers(13)
    for j in range(1, 7):
        total -= float(bern[2 * j]) / (2 * j) * power
        power *= inv2
    return total + shift


class PeriodicSequence:
    """One full period of complex coefficients b_0, ..., b_{k-1}.

    The stated period must be minimal: construction rejects sequences whose
    coefficients repeat with a proper divisor of k, rather than silently
    reducing (the k^(-s) factors downstream depend on k).
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = tuple(complex(b) for b in coefficients)
        if len(coeffs) == 0:
            raise ValueError("need at least one coefficient")
        if all(b == 0 for b in coeffs):
            raise ValueError("coefficients must not all be zero")
        k = len(coeffs)
        for d in range(1, k):
            if k % d == 0 and all(coeffs[m] == coeffs[m % d] for m in range(k)):
                raise ValueError(f"period {k} is not minimal (repeats with period {d})")
        self.coefficients = coeffs

    @property
    def period(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other):
        return isinstance(other, PeriodicSequence) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"PeriodicSequence({list(self.coefficients)!r})"

    def tiled(self, length: int) -> np.ndarray:
        """The sequence extended periodically to b_0 .. b_{length-1}."""
        reps = -(-length // self.period)
        return np.tile(np.asarray(self.coefficients, dtype=np.complex128), reps)[:length]


def residue(seq: PeriodicSequence) -> complex:
    """Mean of one period: the residue of the associated function at s = 1."""
    return complex(sum(seq.coefficients) / seq.period)


def periodic_hurwitz_zeta(s: complex, alpha: float, seq: PeriodicSequence,
                          params: HurwitzParams | None = None) -> complex:
    """zeta(s, alpha; seq) via the k-term decomposition into plain Hurwitz values."""
    s = complex(s)
    if params is None:
        params = HurwitzParams(alpha=1.0)
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    k = seq.period
    b = residue(seq)
    if s == 1:
        if b != 0:
            raise PoleError("periodic hurwitz zeta has a simple pole at s = 1", residue=b)
        return sum(bl * -digamma((l + alpha) / k) for l, bl in enumerate(seq)) / k
    total = 0j
    for l, bl in enumerate(seq):
        if bl == 0:
            continue
        total += bl * hurwitz_zeta(s, replace(params, alpha=(l + alpha) / k))
    return total * complex(k) ** (-s)


def periodic_hurwitz_derivatives(s0: complex, alpha: float, seq: PeriodicSequence,
                                 order_count: int, params: HurwitzParams | None = None,
                                 radius: float | None = None,
                                 nodes: int | None = None) -> np.ndarray:
    """Value and derivatives at s0 by contour quadrature around s0."""
    s0 = complex(s0)
    b = residue(seq)
    if s0 == 1 and b != 0:
        raise PoleError("cannot expand at the pole s = 1", residue=b)
    if radius is None:
        radius = 0.5 * abs(s0 - 1.0) if b != 0 else 0.5
    if b != 0 and abs(s0 - 1.0) <= radius:
        raise ContourError(f"contour of radius {radius} around {s0} encloses the pole at 1")
    return derivatives_by_contour(
        lambda z: periodic_hurwitz_zeta(z, alpha, seq, params),
        s0, order_count, radius, nodes)
