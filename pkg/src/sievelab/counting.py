"""Counting primitives: sliding window counts over a moduli set in one
residue class, crowding counts of Farey values, pair counts in an
arithmetic progression strip, and best rational approximation.

The window count A(u, k, l) asks: over the dilated set inside [lo, hi],
what is the largest number of elements = l (mod k) that fit in one
half-open window (y, y+u] with y in [lo, hi]?  The count, as a function
of y, only steps up where a window's left edge sits at q - u for an
element q, so the exact maximum is attained on the finite candidate set
{clamp(q - u, lo, hi)} together with lo (and hi, which is harmless).
Counts at element-anchored candidates are evaluated through exact
integer differences so that q - u + u == q never misfires in floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidDeltaError
from .moduli import FareyList, ModuliSet


@dataclass(frozen=True)
class RationalApprox:
    """alpha = b/r + z with gcd(b, r) = 1, r <= tau, |z| <= 1/(r*tau)."""

    b: int
    r: int
    z: float
    tau: float


@dataclass(frozen=True)
class WindowQuery:
    """Window length u, residue class l mod k, dilation factor t."""

    u: float
    k: int
    l: int
    t: int = 1

    def __post_init__(self):
        if self.k < 1 or self.t < 1:
            raise ValueError("need k >= 1 and t >= 1")
        if self.u < 0:
            raise ValueError("window length must be nonnegative")
        if math.gcd(self.k, self.l) != 1:
            raise ValueError(f"residue class l={self.l} not coprime to k={self.k}")


def dirichlet_approx(alpha: float, tau: float) -> RationalApprox:
    """Best rational b/r with r <= tau and |alpha - b/r| <= 1/(r*tau).

    Continued fraction convergents of the exact binary rational behind
    the float argument; the last convergent with denominator <= tau
    satisfies the pigeonhole guarantee because the next one exceeds tau.
    """
    if not tau >= 1:
        raise ValueError("need tau >= 1")
    if not math.isfinite(alpha):
        raise ValueError("alpha must be finite")
    x = Fraction(alpha)
    num, den = x.numerator, x.denominator
    hm2, hm1 = 0, 1
    km2, km1 = 1, 0
    best = None
    a, b = num, den
    while True:
        quot = a // b
        h, k = quot * hm1 + hm2, quot * km1 + km2
        if k > tau and best is not None:
            break
        best = (h, k)
        hm2, hm1, km2, km1 = hm1, h, km1, k
        a, b = b, a - quot * b
        if b == 0:
            break
    p, q = best
    z = alpha - p / q
    return RationalApprox(b=p, r=q, z=z, tau=float(tau))


def _class_elements(s: ModuliSet, k: int, l: int) -> np.ndarray:
    return s.elements[s.elements % k == l % k]


def count_window_ap(s_t: ModuliSet, query: WindowQuery, M: float, Q: float) -> int:
    """Max elements of s_t = l (mod k) in a window (y, y+u], y in the range.

    M and Q are the parent interval's parameters; the dilation t in the
    query scales them to [M/t, (M+Q)/t].  Exact by candidate evaluation.
    """
    t = query.t
    lo, hi = M / t, (M + Q) / t
    u = query.u
    c = _class_elements(s_t, query.k, query.l)
    if c.size == 0 or u <= 0:
        return 0
    best = _count_at(c, lo, u)
    best = max(best, _count_at(c, hi, u))
    # candidates anchored at elements: window (q_i - u, q_i], via integer diffs
    d = c[:, None] - c[None, :]
    counts = np.sum((d >= 0) & (d < u), axis=1)
    anchored = (c - u >= lo) & (c - u <= hi)
    if np.any(anchored):
        best = max(best, int(counts[anchored].max()))
    return int(best)


def _count_at(c: np.ndarray, y: float, u: float) -> int:
    return int(np.sum((c > y) & (c <= y + u)))


def window_count_profile(c: np.ndarray, u_vec: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """count_window_ap for one class-element array over a vector of u.

    Same candidate policy and comparison semantics as count_window_ap,
    batched over u for the bracket maximization.  Returns int array.
    """
    u_vec = np.asarray(u_vec, dtype=np.float64)
    out = np.zeros(u_vec.size, dtype=np.int64)
    if c.size == 0:
        return out
    d = (c[:, None] - c[None, :]).astype(np.float64)
    # evaluate in chunks to bound the (U, n, n) working set
    chunk = max(1, (1 << 22) // max(1, c.size * c.size))
    cf = c.astype(np.float64)
    for start in range(0, u_vec.size, chunk):
        u = u_vec[start : start + chunk]
        win = (d[None, :, :] >= 0) & (d[None, :, :] < u[:, None, None])
        counts = win.sum(axis=2)
        anchored = (cf[None, :] - u[:, None] >= lo) & (cf[None, :] - u[:, None] <= hi)
        counts = np.where(anchored, counts, 0)
        best = counts.max(axis=1)
        at_lo = ((cf[None, :] > lo) & (cf[None, :] <= lo + u[:, None])).sum(axis=1)
        at_hi = ((cf[None, :] > hi) & (cf[None, :] <= hi + u[:, None])).sum(axis=1)
        best = np.maximum(best, np.maximum(at_lo, at_hi))
        out[start : start + chunk] = np.where(u > 0, best, 0)
    return out


def k_delta(farey: FareyList, delta: float) -> int:
    """Largest number of Farey values within circular distance delta of
    any single point of the circle (so a closed window of width 2*delta).

    Requires 0 < delta <= 1/2.  An optimal window can be slid until its
    left edge touches a value, so left edges range over the values with
    the list doubled once for wraparound.
    """
    if not 0 < delta <= 0.5:
        raise InvalidDeltaError(f"delta={delta} outside (0, 1/2]")
    v = farey.values
    n = v.size
    if n == 0:
        return 0
    ext = np.concatenate([v, v + 1.0])
    right = np.searchsorted(ext, v + 2.0 * delta, side="right")
    best = int((right - np.arange(n)).max())
    return min(best, n)


def p_alpha(farey: FareyList, alpha: float, delta: float) -> int:
    """Number of Farey values in the real interval [alpha-delta, alpha+delta]."""
    if delta <= 0:
        raise InvalidDeltaError("delta must be positive")
    v = farey.values
    return int(np.searchsorted(v, alpha + delta, side="right")
               - np.searchsorted(v, alpha - delta, side="left"))


def p_alpha_circular(farey: FareyList, alpha: float, delta: float) -> int:
    """Number of Farey values within circular distance delta of alpha."""
    if delta <= 0:
        raise InvalidDeltaError("delta must be positive")
    d = np.abs(farey.values - alpha) % 1.0
    return int(np.sum(np.minimum(d, 1.0 - d) <= delta))


def pi_count(s: ModuliSet, b: int, r: int, z: float, delta: float, y: float) -> int:
    """Pairs (q, m): q in S within [y-delta, y+delta], m = -b*q (mod r),
    m != 0, and m inside [(y-4*delta)*r*z, (y+4*delta)*r*z].

    Exact by direct enumeration of the arithmetic progression of m per
    eligible q.  The m-interval is taken literally, so it is empty when
    its endpoints are out of order.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    el = s.elements
    qlo = np.searchsorted(el, y - delta, side="left")
    qhi = np.searchsorted(el, y + delta, side="right")
    jlo = (y - 4.0 * delta) * r * z
    jhi = (y + 4.0 * delta) * r * z
    if jhi < jlo:
        return 0
    total = 0
    for q in el[qlo:qhi]:
        if not (y - delta <= q <= y + delta):
            continue
        rho = (-b * int(q)) % r
        m = rho + r * math.ceil((jlo - rho) / r)
        while m < jlo:
            m += r
        while m - r >= jlo:
            m -= r
        while m <= jhi:
            if m != 0:
                total += 1
            m += r
    return total
