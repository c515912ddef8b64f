"""Brute-force reference implementations for cross-checking.

Every function here recomputes a fast-path quantity by the most literal
method available: per-point evaluation instead of bucketing, python
loops instead of vectorized scans, direct enumeration instead of
arithmetic shortcuts.  Where a maximum over a continuum is involved the
oracle rederives its own candidate points.  Comparison predicates are
kept textually identical to the fast path so that float rounding cannot
manufacture spurious mismatches; only the mechanism differs.
"""

from __future__ import annotations

import cmath
import math

from .arith import divisors
from .counting import WindowQuery
from .errors import InvalidDeltaError, NotCoprimeError
from .moduli import FareyList, ModuliSet, derive_subset
from .sequences import CoefficientSequence, eval_exp_sum


def naive_sieve_lhs(seq: CoefficientSequence, s: ModuliSet) -> float:
    """Double loop over moduli and reduced numerators, direct S(a/q)."""
    total = 0.0
    for q in s.elements:
        q = int(q)
        for a in range(1, q + 1):
            if math.gcd(a, q) == 1:
                total += abs(eval_exp_sum(seq, a / q)) ** 2
    return total


def count_window_oracle(s_t: ModuliSet, query: WindowQuery, m_off: float,
                        span: float) -> int:
    """Window count by scanning every candidate anchor one at a time."""
    t, u, k, l = query.t, query.u, query.k, query.l
    lo = m_off / t
    hi = (m_off + span) / t
    cls = [int(q) for q in s_t.elements if q % k == l % k]
    if not cls or u <= 0:
        return 0
    best = 0
    for y in (lo, hi):
        best = max(best, sum(1 for q in cls if y < q <= y + u))
    for qa in cls:
        if lo <= qa - u <= hi:
            best = max(best, sum(1 for q in cls if 0 <= qa - q < u))
    return best


def k_delta_oracle(farey: FareyList, delta: float) -> int:
    """Max circular crowding, one candidate window edge at a time.

    A window of circular width 2*delta attains its maximal content with
    the left edge on some fraction, so each fraction is tried as the
    edge and membership is tested by the wrapped offset.
    """
    if not 0.0 < delta <= 0.5:
        raise InvalidDeltaError(f"delta={delta} outside (0, 1/2]")
    vals = [float(v) for v in farey.values]
    best = 0
    for v in vals:
        cnt = 0
        for w in vals:
            # same float expressions as the doubled-array fast path
            if w >= v:
                cnt += w <= v + 2.0 * delta
            else:
                cnt += w + 1.0 <= v + 2.0 * delta
        best = max(best, cnt)
    return best


def p_alpha_oracle(farey: FareyList, alpha: float, delta: float) -> int:
    """Linear-scan count of fractions inside [alpha-delta, alpha+delta]."""
    lo = alpha - delta
    hi = alpha + delta
    return sum(1 for v in farey.values if lo <= v <= hi)


def pi_count_oracle(s: ModuliSet, b: int, r: int, z: float, delta: float,
                    y: float) -> int:
    """Direct double loop over set elements and integers m."""
    if r < 1:
        raise ValueError("need r >= 1")
    jlo = (y - 4.0 * delta) * r * z
    jhi = (y + 4.0 * delta) * r * z
    if jhi < jlo:
        return 0
    total = 0
    for q in s.elements:
        q = int(q)
        if not (y - delta <= q <= y + delta):
            continue
        m = math.ceil(jlo)
        while m <= jhi:
            if m != 0 and (m + b * q) % r == 0:
                total += 1
            m += 1
    return total


def gauss_sum_oracle(k: int, l: int, c: int) -> complex:
    """Term-by-term Gauss sum via cmath, no arrays."""
    if c < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(k, c) != 1:
        raise NotCoprimeError(f"k={k} shares a factor with c={c}")
    total = 0j
    for d in range(1, c + 1):
        total += cmath.exp(2j * cmath.pi * (((k * d * d + l * d) % c) / c))
    return total


def bracket_oracle(s: ModuliSet, n: int) -> tuple[float, float]:
    """Exhaustive bracket maximum for desk-scale sets.

    Breakpoints of the piecewise-constant objective are rederived by
    plain loops, the frequency sum runs over every m individually, and
    each window count goes through count_window_oracle.  Only sensible
    for tiny N and sets; this is the ground truth for the fast bracket.
    """
    span = s.Q
    best = 0
    for r in range(1, math.isqrt(n) + 1):
        z_lo = 1.0 / n
        z_hi = 1.0 / (r * math.sqrt(n))
        pts = {z_lo, z_hi}
        for t in divisors(r):
            st = derive_subset(s, t)
            j = 1
            while j * t / (6.0 * r * span) < z_hi:
                z = j * t / (6.0 * r * span)
                if z > z_lo:
                    pts.add(z)
                j += 1
            lo = s.M / t
            elems = [int(q) for q in st.elements]
            for qa in elems:
                for qb in elems:
                    if qa > qb:
                        z = 2.0 * span / (t * n * (qa - qb))
                        if z_lo < z < z_hi:
                            pts.add(z)
                if qa > lo:
                    z = 2.0 * span / (t * n * (qa - lo))
                    if z_lo < z < z_hi:
                        pts.add(z)
        zs = sorted(pts)
        probes = list(zs)
        for i in range(len(zs) - 1):
            probes.append(0.5 * (zs[i] + zs[i + 1]))
        for z in probes:
            for h in range(r):
                if math.gcd(h, r) != 1:
                    continue
                tot = 0
                for t in divisors(r):
                    st = derive_subset(s, t)
                    k = r // t
                    u = 2.0 * span / (t * z * n)
                    m_max = int(math.floor(6.0 * r * z * span / t))
                    for m in range(-m_max, m_max + 1):
                        if m == 0 or math.gcd(m, k) != 1:
                            continue
                        tot += count_window_oracle(
                            st, WindowQuery(u, k, (h * m) % k, t), s.M, s.Q)
                best = max(best, tot)
    return float(best), float(n) * (1.0 + float(best))
