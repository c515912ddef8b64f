"""Measured large-sieve sums and the named bound shapes they are held
against.

sieve_lhs measures the quantity itself: the sum of |S(a/q)|^2 over the
reduced fractions of every modulus in a set.  bound_shapes evaluates a
registry of closed-form shapes (per unit of the coefficient power Z),
with all absolute constants set to 1, so the report layer presents
ratios rather than certified inequalities.  The one exception is the
classical shape N + span^2, which is a true constant-free bound and is
certified as such in the tests.

sieve_bracket evaluates the window-count bracket N*(1+B), where B is a
maximum of dilate window counts over a rational frequency grid.
farey_crowding_shape bounds how many fractions with moduli in the set
crowd a neighborhood of a rational point b/r, again through window
counts; crowding_shape_estimates gives closed-form estimates for the
same count in several routes.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counting import WindowQuery, count_window_ap, window_count_profile
from .errors import (CapacityError, InvalidRegimeError, NotCoprimeError,
                     OutOfRangeError, ShapeDomainError)
from .moduli import ModuliSet, derive_subset
from .sequences import CoefficientSequence, eval_at_modulus
from .arith import divisors, mod_inv
from .util import fmt17

_REGIME_SLACK = 1e-12

SHAPE_NAMES = (
    "classical",
    "single_modulus",
    "squares_classical",
    "squares_summed",
    "zhao",
    "zhao_conjecture",
    "sparse_ap",
    "squares_refined",
    "squares_fourier",
    "elliott",
    "wolke",
)


def _modulus_term(seq: CoefficientSequence, q: int) -> float:
    vals = eval_at_modulus(seq, q)
    a = np.arange(1, q + 1, dtype=np.int64)
    keep = np.gcd(a, q) == 1
    return float(np.sum(np.abs(vals[keep]) ** 2))


def sieve_lhs(seq: CoefficientSequence, s: ModuliSet, threads: int = 1,
              capacity: int = 10**8) -> float:
    """Sum over q in s and reduced a mod q of |S(a/q)|^2.

    Work is split per modulus; partial sums are always reduced in
    element order, so the result is identical for every thread count.
    """
    qs = [int(q) for q in s.elements]
    if sum(qs) > capacity:
        raise CapacityError(f"{sum(qs)} fraction evaluations exceed capacity {capacity}")
    if threads > 1 and len(qs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            terms = list(pool.map(lambda q: _modulus_term(seq, q), qs))
    else:
        terms = [_modulus_term(seq, q) for q in qs]
    total = 0.0
    for term in terms:
        total += term
    return total


def bound_shapes(n, q, *, s_count=None, eps: float = 0.0, x=None,
                 require=()) -> dict[str, float]:
    """Evaluate every applicable named shape at (n, q), per unit Z.

    n is the sequence length and q the headline modulus parameter of the
    shape family (for square moduli, the cap on the roots; otherwise the
    span).  s_count is the number of moduli in the set and feeds the
    sparse_ap and elliott shapes; x is the window well-distribution
    factor of sparse_ap.  Shapes whose inputs are missing or whose
    domain conditions fail are left out of the map; listing a name in
    require turns that omission into ShapeDomainError.

    All constants are 1 and eps exponents are applied literally, so the
    values are comparison shapes, not certified bounds.
    """
    n = float(n)
    q = float(q)
    if n <= 0 or q <= 0:
        raise OutOfRangeError("n and q must be positive")
    shapes: dict[str, float] = {}
    shapes["classical"] = n + q * q
    shapes["single_modulus"] = n + q * q
    shapes["squares_classical"] = n + q**4
    shapes["squares_summed"] = q * (n + q * q)
    if q > 0.5:
        lg = math.log(2.0 * q)
        shapes["zhao"] = lg * (q**3 + (n * math.sqrt(q) + math.sqrt(n) * q * q) * n**eps)
        shapes["squares_refined"] = lg * n**eps * (q**3 + n + math.sqrt(n) * q * q)
    shapes["zhao_conjecture"] = q**eps * (q**3 + n)
    if q <= n ** (5.0 / 12.0):
        shapes["squares_fourier"] = q ** (0.6 + eps) * n
    else:
        shapes["squares_fourier"] = q ** (3.0 + eps)
    if s_count is not None:
        shapes["elliott"] = n + q * float(s_count)
        if x is not None:
            shapes["sparse_ap"] = n + q * float(x) * n**eps * (math.sqrt(n) + float(s_count))
    wolke = _wolke_shape(n, q)
    if wolke is not None:
        shapes["wolke"] = wolke
    missing = [name for name in require if name not in shapes]
    if missing:
        raise ShapeDomainError(f"required shapes unavailable here: {', '.join(missing)}")
    return shapes


def _wolke_shape(n: float, q: float):
    # needs q >= 10 and n = q^(1+d) with 0 < d < 1
    if q < 10.0:
        return None
    d = math.log(n) / math.log(q) - 1.0
    if not 0.0 < d < 1.0:
        return None
    return q * q * math.log(math.log(q)) / ((1.0 - d) * math.log(q))


def _reduced_residues(k: int) -> list[int]:
    return [l for l in range(k) if math.gcd(l, k) == 1]


def _signed_residue_counts(m_max: int, k: int, reds: list[int]) -> np.ndarray:
    """How many m with 0 < |m| <= m_max fall in each reduced class mod k."""
    out = np.zeros(len(reds), dtype=np.int64)
    if m_max < 1:
        return out
    for i, l in enumerate(reds):
        pos = (m_max - l) // k + 1 if 1 <= l <= m_max else (m_max // k if l == 0 else 0)
        lneg = (k - l) % k
        neg = (m_max - lneg) // k + 1 if 1 <= lneg <= m_max else (m_max // k if lneg == 0 else 0)
        out[i] = pos + neg
    return out


def _bracket_eval(s: ModuliSet, n: int, r: int, zs: np.ndarray,
                  subsets: dict[int, ModuliSet]) -> int:
    """Max over z in zs and reduced h mod r of the bracket's window sum."""
    if zs.size == 0:
        return 0
    span = s.Q
    per_t = []
    for t in divisors(r):
        st = subsets.get(t)
        if st is None:
            st = subsets[t] = derive_subset(s, t)
        k = r // t
        lo, hi = s.M / t, (s.M + span) / t
        reds = _reduced_residues(k)
        u_vec = 2.0 * span / (t * zs * n)
        prof = np.empty((len(reds), zs.size), dtype=np.int64)
        for i, l in enumerate(reds):
            c = st.elements[st.elements % k == l]
            prof[i] = window_count_profile(c, u_vec, lo, hi)
        m_max = np.floor(6.0 * r * zs * span / t).astype(np.int64)
        counts = np.empty((len(reds), zs.size), dtype=np.int64)
        for iz in range(zs.size):
            counts[:, iz] = _signed_residue_counts(int(m_max[iz]), k, reds)
        per_t.append((k, reds, {l: i for i, l in enumerate(reds)}, prof, counts))
    best = 0
    for h in _reduced_residues(r):
        tot = np.zeros(zs.size, dtype=np.int64)
        for k, reds, pos, prof, counts in per_t:
            perm = [pos[(h * l) % k] for l in reds]
            tot += np.sum(counts * prof[perm], axis=0)
        best = max(best, int(tot.max()))
    return best


def _grid_z(r: int, n: int, points: int) -> np.ndarray:
    z_lo = 1.0 / n
    z_hi = 1.0 / (r * math.sqrt(n))
    g = max(2, points)
    ratio = z_hi / z_lo
    # Fraction exponents make coarse grids exact subsets of refinements:
    # j/(g-1) and (65*j)/(65*(g-1)) are the same rational, hence the
    # same float, hence bit-identical z values.
    return np.array([z_lo * ratio ** float(Fraction(j, g - 1)) for j in range(g)])


def _exact_z(s: ModuliSet, n: int, r: int, subsets: dict[int, ModuliSet]) -> np.ndarray:
    """Breakpoints of the bracket objective in z, plus midpoints.

    The objective is piecewise constant in z: window counts change only
    where the width 2*span/(t*z*n) crosses an element difference or an
    element's gap to the lower endpoint, and the m-range changes only
    where 6*r*z*span/t crosses an integer.  Evaluating at every
    breakpoint and between each adjacent pair covers every value the
    objective takes, so the result is the exact maximum.
    """
    span = s.Q
    z_lo = 1.0 / n
    z_hi = 1.0 / (r * math.sqrt(n))
    pts = {z_lo, z_hi}
    for t in divisors(r):
        st = subsets.get(t)
        if st is None:
            st = subsets[t] = derive_subset(s, t)
        k = r // t
        lo = s.M / t
        jmax = int(math.floor(6.0 * r * z_hi * span / t))
        for j in range(1, jmax + 1):
            z = j * t / (6.0 * r * span)
            if z_lo < z < z_hi:
                pts.add(z)
        for l in _reduced_residues(k):
            c = st.elements[st.elements % k == l]
            widths = {float(w) for w in (c[:, None] - c[None, :]).ravel() if w > 0}
            widths.update(float(ci) - lo for ci in c if float(ci) > lo)
            for w in widths:
                z = 2.0 * span / (t * n * w)
                if z_lo < z < z_hi:
                    pts.add(z)
    zs = np.array(sorted(pts))
    mids = 0.5 * (zs[1:] + zs[:-1])
    return np.unique(np.concatenate([zs, mids]))


def sieve_bracket(s: ModuliSet, n: int, z_grid: int = 64, mode: str = "grid",
                  threads: int = 1) -> tuple[float, float]:
    """(B, N*(1+B)) with B the bracket maximum over r <= sqrt(N).

    For each r the inner maximum runs over frequencies h coprime to r
    and over z in [1/N, 1/(r*sqrt(N))], summing window counts of every
    dilate of s by a divisor of r.  In grid mode z is sampled on a
    geometric grid of z_grid points including both endpoints, so B is a
    lower bound of the true supremum that never decreases under grid
    refinement (refined grids contain the coarse points exactly).  Exact
    mode enumerates the breakpoints of the piecewise-constant objective
    instead; it is the slow reference.
    """
    n = int(n)
    if n < 4:
        raise OutOfRangeError("bracket needs N >= 4")
    if mode not in ("grid", "exact"):
        raise ValueError(f"unknown mode {mode!r}")
    subsets: dict[int, ModuliSet] = {}
    rs = range(1, math.isqrt(n) + 1)

    def one(r: int) -> int:
        zs = _grid_z(r, n, z_grid) if mode == "grid" else _exact_z(s, n, r, subsets)
        return _bracket_eval(s, n, r, zs, subsets)

    if threads > 1 and mode == "grid":
        # warm the shared dilate cache up front; workers then only read it
        for r in rs:
            for t in divisors(r):
                if t not in subsets:
                    subsets[t] = derive_subset(s, t)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            vals = list(pool.map(one, rs))
    else:
        vals = [one(r) for r in rs]
    b = float(max(vals, default=0))
    return b, float(n) * (1.0 + b)


def _check_regime(r: int, z: float, delta: float) -> None:
    if not 0.0 < delta <= 0.5:
        raise InvalidRegimeError(f"delta={delta} outside (0, 1/2]")
    lo = delta * (1.0 - _REGIME_SLACK)
    hi = math.sqrt(delta) / r * (1.0 + _REGIME_SLACK)
    if not lo <= z <= hi:
        raise InvalidRegimeError(f"z={z} outside [delta, sqrt(delta)/r] for r={r}")


def farey_crowding_shape(s: ModuliSet, b: int, r: int, z: float,
                         delta: float) -> float:
    """Window-count bound for fractions a/q, q in s, crowding b/r + z.

    Requires gcd(b, r) = 1, delta in (0, 1/2] and z in [delta,
    sqrt(delta)/r].  The value is 2 plus, for each divisor t of r, the
    window counts of the t-dilate in the classes -inverse(b)*m mod r/t
    over the nonzero frequencies m coprime to r/t with |m| bounded by
    6*r*z*span/t; window width 2*delta*span/(t*z).
    """
    if math.gcd(b, r) != 1:
        raise NotCoprimeError(f"b={b} shares a factor with r={r}")
    _check_regime(r, z, delta)
    span = s.Q
    total = 2.0
    for t in divisors(r):
        k = r // t
        st = derive_subset(s, t)
        bbar = mod_inv(b % k if k > 1 else 0, k)
        u = 2.0 * delta * span / (t * z)
        m_max = int(math.floor(6.0 * r * z * span / t))
        reds = _reduced_residues(k)
        counts = _signed_residue_counts(m_max, k, reds)
        for i, l in enumerate(reds):
            if counts[i] == 0:
                continue
            cls = (-bbar * l) % k
            a = count_window_ap(st, WindowQuery(u, k, cls, t), s.M, s.Q)
            total += float(counts[i]) * a
    return total


def crowding_shape_estimates(r: int, z: float, delta: float, q0: float,
                             s_count: float, x: float,
                             eps: float = 0.0) -> dict[str, float]:
    """Closed-form estimates for the crowding count near b/r + z.

    well_distributed assumes window counts obey the well-distribution
    factor x; window_route and fourier_route are the two unconditional
    routes for square moduli in an octave (Q0, 2*Q0], and combined is
    their balanced merge.  Same regime requirements as
    farey_crowding_shape.
    """
    _check_regime(r, z, delta)
    if q0 <= 0:
        raise OutOfRangeError("q0 must be positive")
    damp = delta ** (-eps)
    return {
        "well_distributed": 1.0 + q0 * x * damp * (r * z + delta * s_count),
        "window_route": damp * (1.0 + q0 * r * z + q0**1.5 * delta),
        "fourier_route": damp * (q0**1.5 * delta
                                 + math.sqrt(q0) * delta / (math.sqrt(r) * z)
                                 + delta**-0.25),
        "combined": damp * (q0**1.5 * delta + delta**-0.25),
    }


@dataclass(frozen=True)
class BoundReport:
    """Measured sieve sum next to every applicable shape, with ratios."""

    N: int
    Q: float
    Q0: float | None
    Z: float
    lhs: float
    shapes: dict[str, float]
    ratios: dict[str, float]
    epsilon: float = 0.0
    X: float | None = None

    def __post_init__(self):
        for name, val in self.shapes.items():
            if not val > 0:
                raise ValueError(f"shape {name} is not positive: {val}")
            want = self.lhs / (val * self.Z)
            got = self.ratios[name]
            if abs(got - want) > 1e-12 * max(abs(want), 1.0):
                raise ValueError(f"ratio for {name} inconsistent with lhs/(shape*Z)")

    def to_json(self) -> str:
        return json.dumps({
            "N": self.N, "Q": self.Q, "Q0": self.Q0, "Z": self.Z,
            "lhs": self.lhs, "shapes": self.shapes, "ratios": self.ratios,
            "epsilon": self.epsilon, "X": self.X,
        }, indent=2, sort_keys=False)

    def csv_rows(self) -> list[list[str]]:
        """Header plus one row per applicable shape, full float precision."""
        rows = [["name", "value", "ratio"]]
        for name in SHAPE_NAMES:
            if name in self.shapes:
                rows.append([name, fmt17(self.shapes[name]),
                             fmt17(self.ratios[name])])
        return rows


def build_report(seq: CoefficientSequence, s: ModuliSet, *, eps: float = 0.0,
                 x=None, s_count=None, q_shape=None, threads: int = 1) -> BoundReport:
    """Measure the sieve sum over s and compare against every shape.

    The shape parameter q defaults to the set's root cap for sets built
    as squares up to a cap, and to the interval span otherwise; override
    with q_shape when comparing against a different family.  Shapes are
    formula evaluations at the reported (N, Q), not certified bounds.
    """
    if s_count is None:
        s_count = s.size
    if q_shape is None:
        q_shape = s.param if s.kind == "squares_up_to" else s.Q
    q0 = s.param if s.kind == "squares_in_octave" else None
    lhs = sieve_lhs(seq, s, threads=threads)
    shapes = bound_shapes(seq.N, q_shape, s_count=s_count, eps=eps, x=x)
    ratios = {name: lhs / (val * seq.Z) for name, val in shapes.items()}
    return BoundReport(N=seq.N, Q=float(q_shape), Q0=q0, Z=seq.Z, lhs=lhs,
                       shapes=shapes, ratios=ratios, epsilon=eps,
                       X=None if x is None else float(x))
