"""Self-verification suite: every module invariant as a runnable check.

The helpers here are shared between the CLI verify command and the test
suite; each takes explicit size parameters so quick and full runs use
the same code.  Groups report a CheckResult with pass and fail counts;
the CLI turns any failure into exit status 1.

Measured van-der-Corput constants are compared against the frozen
calibration below; the calibration was produced by the first oracle run
of this repository and must only be changed consciously, never to make
a regression disappear.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import arith, bounds, counting, harmonic, moduli, oracles, sequences
from .util import seeded_rng

# Frozen measured constants for the three oscillatory magnitude regimes
# (linear phase, pure square-root phase, mixed phase), at the seeds used
# by measure_vdc_constants(seed=20260822).  A small relative headroom in
# the comparison absorbs libm differences between platforms.
VDC_CALIBRATION = {
    "linear_phase": 0.31830788286420664,
    "sqrt_phase": 3.0736983325345877,
    "mixed_phase": 3.5467515130020053,
}
_VDC_HEADROOM = 1e-6


@dataclass
class CheckResult:
    group: str
    passed: int = 0
    failed: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def expect(self, cond: bool, note: str = "") -> None:
        if cond:
            self.passed += 1
        else:
            self.failed += 1
            if note and len(self.notes) < 20:
                self.notes.append(note)


def _random_sequence(rng, n: int, flavor: int) -> sequences.CoefficientSequence:
    kinds = ("ones", "random_signs", "random_phases", "delta", "focused")
    if flavor % 6 == 5:
        vals = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        return sequences.CoefficientSequence(vals, n)
    kind = kinds[flavor % 6]
    kw = {}
    if kind == "delta":
        kw["n0"] = int(rng.integers(1, n + 1))
    if kind == "focused":
        kw["beta"] = float(rng.random())
    return sequences.make_sequence(kind, n, seed=int(rng.integers(2**31)), **kw)


def _random_set(rng, span_cap: int, count_cap: int, m_off: int = 0) -> moduli.ModuliSet:
    span = int(rng.integers(2, span_cap + 1))
    count = int(rng.integers(1, min(count_cap, span) + 1))
    el = np.sort(rng.choice(np.arange(m_off + 1, m_off + span + 1), size=count,
                            replace=False))
    return moduli.explicit_moduli(el, M=float(m_off), span=float(span))


# ---------------------------------------------------------------- arith

def check_factorize(limit: int) -> CheckResult:
    res = CheckResult("arith-factorize")
    for n in range(1, limit + 1):
        fac = arith.factorize(n)
        ok = arith.unfactorize(fac) == n
        ok = ok and all(e >= 1 for _, e in fac)
        ok = ok and all(fac[i][0] < fac[i + 1][0] for i in range(len(fac) - 1))
        ok = ok and ((n == 1) == (len(fac) == 0))
        res.expect(ok, f"factorize({n}) = {fac}")
    return res


def check_mod_inv(m_full: int, samples: int, seed: int) -> CheckResult:
    res = CheckResult("arith-mod-inv")
    res.expect(arith.mod_inv(5, 1) == 0, "mod_inv(5,1)")
    res.expect(arith.mod_inv(3, 7) == 5, "mod_inv(3,7)")
    for m in range(1, m_full + 1):
        for a in range(1, m + 1):
            if math.gcd(a, m) == 1:
                x = arith.mod_inv(a, m)
                res.expect(0 <= x < m and (a * x) % m == 1 % m,
                           f"mod_inv({a},{m})")
    rng = seeded_rng(seed)
    for _ in range(samples):
        m = int(rng.integers(2, 10**4 + 1))
        a = int(rng.integers(1, m))
        if math.gcd(a, m) != 1:
            continue
        x = arith.mod_inv(a, m)
        res.expect((a * x) % m == 1, f"mod_inv({a},{m})")
    return res


def quad_roots_sweep(k_max: int, pairs_per_k: int, seed: int) -> CheckResult:
    """Fast quadratic-congruence solver vs exhaustive scan, plus the
    2^(omega(k)+1) cap for coprime g and l."""
    res = CheckResult("arith-quad-roots")
    rng = seeded_rng(seed)
    for k in range(1, k_max + 1):
        cap = 2 ** (arith.omega(k) + 1)
        units = [x for x in range(1, min(k, 200) + 1) if math.gcd(x, k) == 1]
        for _ in range(pairs_per_k):
            if rng.random() < 0.75:
                g = units[int(rng.integers(len(units)))]
                l = units[int(rng.integers(len(units)))]
                coprime_pair = True
            else:
                g = int(rng.integers(1, k + 1))
                l = int(rng.integers(0, k))
                coprime_pair = False
            cnt, roots = arith.quad_cong_roots(g, l, k)
            scnt, sroots = arith.quad_cong_roots_scan(g, l, k)
            ok = cnt == scnt and roots == sroots
            if coprime_pair:
                ok = ok and cnt <= cap
            res.expect(ok, f"quad_cong_roots({g},{l},{k})")
    return res


# ------------------------------------------------------------ sequences

def parseval_trials(trials: int, seed: int) -> CheckResult:
    res = CheckResult("sequences-parseval")
    rng = seeded_rng(seed)
    for i in range(trials):
        n = int(rng.integers(1, 65))
        seq = _random_sequence(rng, n, i)
        for q in (n, n + 1, 2 * n + 3):
            total = float(np.sum(np.abs(sequences.eval_at_modulus(seq, q)) ** 2))
            want = q * seq.Z
            res.expect(abs(total - want) <= 1e-8 * max(want, 1.0),
                       f"parseval N={n} q={q}: {total} vs {want}")
    return res


def check_sequence_props(seed: int) -> CheckResult:
    res = CheckResult("sequences-eval")
    rng = seeded_rng(seed)
    for i in range(30):
        n = int(rng.integers(1, 50))
        seq = _random_sequence(rng, n, i)
        alpha = float(rng.random())
        mass = float(np.sum(np.abs(seq.values)))
        a0 = sequences.eval_exp_sum(seq, alpha)
        a1 = sequences.eval_exp_sum(seq, alpha + 1.0)
        res.expect(abs(a0 - a1) <= 1e-9 * (1.0 + mass), f"periodicity at {alpha}")
        res.expect(abs(a0) <= mass * (1 + 1e-12), "triangle bound")
    for n in (1, 7, 64, 300):
        beta = 0.37
        seq = sequences.make_sequence("focused", n, beta=beta)
        res.expect(abs(sequences.eval_exp_sum(seq, beta)) >= n * (1 - 1e-9),
                   f"focused maximizer N={n}")
    res.expect(abs(sequences.eval_exp_sum(sequences.make_sequence("ones", 4), 0.5))
               <= 1e-12, "ones alternating sum")
    return res


# --------------------------------------------------------------- moduli

def check_moduli_structure(seed: int, q0_list=(5, 48, 100, 999, 10**4, 10**6),
                           t_max: int = 100, ft_limit: int = 10**4) -> CheckResult:
    res = CheckResult("moduli-structure")
    for t in range(1, ft_limit + 1):
        f, g = moduli.square_divisor_profile(t)
        res.expect(f * f == g * t, f"f^2 = g*t at t={t}")
    for q0 in q0_list:
        s = moduli.squares_in_octave(q0)
        for t in range(1, t_max + 1):
            f, g = moduli.square_divisor_profile(t)
            got = moduli.derive_subset(s, t).elements.tolist()
            want, c = [], math.isqrt(int(q0)) // f
            while (c + 1) * (c + 1) * f * f <= 2 * q0:
                c += 1
                if c * c * f * f > q0:
                    want.append(c * c * g)
            res.expect(got == want, f"octave dilate q0={q0} t={t}")
    rng = seeded_rng(seed)
    for _ in range(25):
        s = _random_set(rng, 60, 20)
        fl = moduli.enumerate_farey(s)
        want = 0
        for q in s.elements:
            a = np.arange(1, int(q) + 1)
            want += int(np.count_nonzero(np.gcd(a, int(q)) == 1))
        res.expect(len(fl) == want, f"farey size for {s.elements}")
        res.expect(bool(np.all(np.diff(fl.values) > 0)), "farey sorted")
    return res


# ------------------------------------------------------------- counting

def window_oracle_trials(trials: int, seed: int) -> CheckResult:
    res = CheckResult("counting-window-oracle")
    rng = seeded_rng(seed)
    for i in range(trials):
        big = i % 20 == 19
        span_cap = 1000 if big else 80
        count_cap = 200 if big else 30
        m_off = int(rng.integers(0, 3)) * int(rng.integers(0, span_cap // 2 + 1))
        s = _random_set(rng, span_cap, count_cap, m_off=m_off)
        t = int(rng.integers(1, 5))
        st = moduli.derive_subset(s, t)
        k = int(rng.integers(1, 51))
        l = int(rng.integers(0, k))
        if math.gcd(l, k) != 1:
            l = 1 if k > 1 else 0
        if rng.random() < 0.3:
            u = float(int(rng.integers(0, int(s.Q) + 2)))
        else:
            u = float(rng.random() * s.Q * 1.2)
        query = counting.WindowQuery(u, k, l, t)
        fast = counting.count_window_ap(st, query, s.M, s.Q)
        slow = oracles.count_window_oracle(st, query, s.M, s.Q)
        res.expect(fast == slow, f"A_t mismatch {fast} vs {slow} at trial {i}")
    return res


def kdelta_oracle_trials(trials: int, seed: int) -> CheckResult:
    res = CheckResult("counting-kdelta-oracle")
    rng = seeded_rng(seed)
    for i in range(trials):
        big = i % 25 == 24
        s = _random_set(rng, 70 if big else 25, 25 if big else 8)
        fl = moduli.enumerate_farey(s)
        delta = 0.5 if i % 17 == 16 else float(rng.uniform(0.01, 0.5))
        fast = counting.k_delta(fl, delta)
        slow = oracles.k_delta_oracle(fl, delta)
        res.expect(fast == slow, f"K mismatch {fast} vs {slow} at trial {i}")
        for _ in range(5):
            alpha = float(rng.random())
            res.expect(fast >= counting.p_alpha_circular(fl, alpha, delta),
                       f"K maximality at trial {i}")
    return res


def p_alpha_oracle_trials(trials: int, seed: int) -> CheckResult:
    res = CheckResult("counting-palpha-oracle")
    rng = seeded_rng(seed)
    for i in range(trials):
        s = _random_set(rng, 40, 12)
        fl = moduli.enumerate_farey(s)
        alpha = float(rng.uniform(-0.2, 1.2))
        delta = float(rng.uniform(0.005, 0.5))
        fast = counting.p_alpha(fl, alpha, delta)
        slow = oracles.p_alpha_oracle(fl, alpha, delta)
        res.expect(fast == slow, f"P mismatch {fast} vs {slow} at trial {i}")
    return res


def pi_oracle_trials(trials: int, seed: int) -> CheckResult:
    res = CheckResult("counting-pi-oracle")
    rng = seeded_rng(seed)
    for i in range(trials):
        s = _random_set(rng, 120, 40)
        r = int(rng.integers(1, 31))
        b = int(rng.integers(1, r + 1))
        if math.gcd(b, r) != 1:
            b = 1
        z = float(rng.uniform(-0.5, 0.5))
        delta = float(rng.uniform(0.1, 6.0))
        y = float(rng.uniform(0, s.Q + 4))
        fast = counting.pi_count(s, b, r, z, delta, y)
        slow = oracles.pi_count_oracle(s, b, r, z, delta, y)
        res.expect(fast == slow, f"Pi mismatch {fast} vs {slow} at trial {i}")
    return res


def dirichlet_trials(trials: int, seed: int) -> CheckResult:
    res = CheckResult("counting-dirichlet")
    rng = seeded_rng(seed)
    for spot, want in (((1 / 3, 10), (1, 3)), ((0.3, 3), (1, 3)),
                       ((3 / 7 + 0.001, 7), (3, 7))):
        ap = counting.dirichlet_approx(*spot)
        res.expect((ap.b, ap.r) == want, f"dirichlet spot {spot}")
    for i in range(trials):
        alpha = float(rng.random())
        tau = float(rng.uniform(1.0, 1000.0))
        ap = counting.dirichlet_approx(alpha, tau)
        ok = (ap.r <= tau and math.gcd(ap.b, ap.r) == 1
              and abs(ap.z) <= 1.0 / (ap.r * tau) + 1e-15
              and abs(ap.b / ap.r + ap.z - alpha) <= 1e-12)
        res.expect(ok, f"dirichlet({alpha},{tau}) -> {ap}")
    return res


def square_window_sweep(q0_list, t_max: int, k_max: int) -> CheckResult:
    """A_t on octave square sets against the class-count window bound."""
    res = CheckResult("counting-square-window")
    for q0 in q0_list:
        s = moduli.squares_in_octave(q0)
        for t in range(1, t_max + 1):
            st = moduli.derive_subset(s, t)
            _, g = moduli.square_divisor_profile(t)
            lo, hi = s.M / t, (s.M + s.Q) / t
            us = np.array([1.0, float(t), s.Q / (7 * t), s.Q / (2 * t), s.Q / t])
            for k in range(1, k_max + 1):
                if k <= 12:
                    ls = range(k)
                else:
                    ls = range(0, k, max(1, k // 12))
                for l in ls:
                    cls = st.elements[st.elements % k == l % k]
                    prof = counting.window_count_profile(cls, us, lo, hi)
                    delta_t = moduli.square_class_count(t, k, l)
                    for u, a in zip(us, prof):
                        ll = math.sqrt((q0 / t + u) / g) - math.sqrt(q0 / (t * g))
                        cap = delta_t * (math.floor(ll / k) + 1)
                        res.expect(int(a) <= cap,
                                   f"A_t={a} > {cap} at q0={q0} t={t} k={k} l={l} u={u}")
    return res


# --------------------------------------------------------------- bounds

def classical_bound_trials(trials: int, seed: int) -> CheckResult:
    res = CheckResult("bounds-classical")
    rng = seeded_rng(seed)
    naive_done = 0
    for i in range(trials):
        n = int(rng.integers(1, 129))
        seq = _random_sequence(rng, n, i)
        s = _random_set(rng, 128, 128)
        lhs = bounds.sieve_lhs(seq, s)
        cap = (n + s.Q**2) * seq.Z * (1 + 1e-9)
        res.expect(lhs <= cap, f"classical bound broken: {lhs} > {cap}")
        if naive_done < 5 and sum(int(q) for q in s.elements) <= 1500:
            slow = oracles.naive_sieve_lhs(seq, s)
            res.expect(abs(lhs - slow) <= 1e-8 * max(slow, 1.0),
                       f"lhs {lhs} vs naive {slow}")
            naive_done += 1
    return res


def bracket_checks(instances: int, seed: int) -> CheckResult:
    res = CheckResult("bounds-bracket")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        empty = moduli.explicit_moduli([], span=8.0)
    b, shape = bounds.sieve_bracket(empty, 32)
    res.expect(b == 0.0 and shape == 32.0, "empty-set bracket")
    rng = seeded_rng(seed)
    exact_done = 0
    for i in range(instances):
        n = int(rng.choice([16, 25, 36, 64, 100, 144, 196, 256]))
        pick = i % 3
        if pick == 0:
            s = moduli.squares_in_octave(int(rng.integers(4, 200)))
        elif pick == 1:
            s = _random_set(rng, 48, 10, m_off=int(rng.integers(0, 30)))
        else:
            s = moduli.squares_up_to(int(rng.integers(1, 7)))
        b64, shape64 = bounds.sieve_bracket(s, n, z_grid=64)
        b4096, _ = bounds.sieve_bracket(s, n, z_grid=4096)
        res.expect(b4096 >= b64, f"grid refinement decreased B on trial {i}")
        res.expect(shape64 == n * (1.0 + b64), "shape identity")
        if exact_done < 4 and len(s) <= 5 and n <= 36:
            bex, _ = bounds.sieve_bracket(s, n, mode="exact")
            bor, _ = oracles.bracket_oracle(s, n)
            res.expect(bex == bor, f"exact {bex} vs oracle {bor} on trial {i}")
            res.expect(b4096 <= bex, "grid exceeds exact supremum")
            exact_done += 1
    one = moduli.explicit_moduli([1], span=1.0)
    bex, _ = bounds.sieve_bracket(one, 4, mode="exact")
    bor, _ = oracles.bracket_oracle(one, 4)
    res.expect(bex == bor, "desk-scale bracket vs oracle")
    return res


def shape_checks(seed: int) -> CheckResult:
    res = CheckResult("bounds-shapes")
    sh = bounds.bound_shapes(4, 3)
    res.expect(sh["classical"] == 13.0, "classical(4,3)")
    res.expect(bounds.bound_shapes(16, 2)["squares_summed"] == 40.0,
               "squares_summed(16,2)")
    res.expect(abs(bounds.bound_shapes(4096, 32)["squares_fourier"] - 32768.0)
               <= 1e-6, "squares_fourier boundary branch")
    n = 10**8
    lo = bounds.bound_shapes(n, math.floor(n**0.29), s_count=math.floor(n**0.29))
    hi = bounds.bound_shapes(n, math.floor(n**0.42), s_count=math.floor(n**0.42))
    res.expect(lo["squares_refined"] < min(lo["zhao"], lo["squares_summed"]),
               "refined shape vs summed route at the low exponent")
    res.expect(hi["squares_fourier"] < min(hi["zhao"], hi["squares_classical"],
                                           hi["squares_summed"]),
               "fourier shape dominance at the high exponent")
    res.expect("wolke" not in bounds.bound_shapes(100, 5), "wolke domain gate")
    w = bounds.bound_shapes(10**6, 10**4)
    res.expect("wolke" in w and w["wolke"] > 0, "wolke inside domain")
    try:
        bounds.bound_shapes(100, 5, require=("wolke",))
        res.expect(False, "missing required-shape error")
    except bounds.ShapeDomainError:
        res.expect(True)
    rng = seeded_rng(seed)
    seq = _random_sequence(rng, 32, 2)
    rep = bounds.build_report(seq, moduli.squares_up_to(3))
    for name, val in rep.shapes.items():
        res.expect(abs(rep.ratios[name] - rep.lhs / (val * rep.Z))
                   <= 1e-12 * max(rep.ratios[name], 1.0), f"ratio {name}")
    import json as _json
    res.expect(_json.loads(rep.to_json())["N"] == 32, "report json round trip")
    return res


def crowding_checks(seed: int) -> CheckResult:
    res = CheckResult("bounds-crowding")
    rng = seeded_rng(seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        empty = moduli.explicit_moduli([], span=4.0)
    res.expect(bounds.farey_crowding_shape(empty, 1, 1, 0.18, 0.1) == 2.0,
               "empty crowding shape")
    for i in range(40):
        delta = float(rng.uniform(0.01, 0.5))
        r = int(rng.integers(1, max(2, int(1 / math.sqrt(delta)) + 1)))
        z = float(rng.uniform(delta, math.sqrt(delta) / r))
        b = int(rng.integers(1, r + 1))
        if math.gcd(b, r) != 1:
            b = 1
        s = _random_set(rng, 40, 12)
        val = bounds.farey_crowding_shape(s, b, r, z, delta)
        res.expect(val >= 2.0, "crowding shape floor")
        est = bounds.crowding_shape_estimates(r, z, delta, q0=100.0,
                                              s_count=float(len(s)), x=1.0)
        res.expect(set(est) == {"well_distributed", "window_route",
                                "fourier_route", "combined"}, "estimate keys")
        res.expect(all(v > 0 for v in est.values()), "estimates positive")
        # balanced-z merge facts behind the combined estimate
        q0 = float(rng.uniform(4.0, 10**4))
        zb = math.sqrt(delta) * q0**-0.25 * r**-0.75
        lhs = min(q0 * r * zb, math.sqrt(q0) * delta / (math.sqrt(r) * zb))
        res.expect(lhs <= q0**0.75 * delta**0.375 * (1 + 1e-12),
                   f"min-combination fact at {(r, delta, q0)}")
        res.expect(q0**0.75 * delta**0.375
                   <= q0**1.5 * delta + delta**-0.25 + 1e-12,
                   f"mean bound fact at {(delta, q0)}")
    try:
        bounds.farey_crowding_shape(empty, 1, 2, 0.9, 0.25)
        res.expect(False, "regime gate missing")
    except bounds.InvalidRegimeError:
        res.expect(True)
    return res


# ------------------------------------------------------------- harmonic

def gauss_bound_sweep(c_max: int, seed: int) -> CheckResult:
    res = CheckResult("harmonic-gauss")
    rng = seeded_rng(seed)
    worst = -math.inf
    bad = 0
    for c in range(1, c_max + 1):
        cap = math.sqrt(2 * c) + 1e-9
        for k in range(1, c + 1):
            if math.gcd(k, c) != 1:
                continue
            mags = np.abs(harmonic.gauss_sum_row(k, c))
            m = float(mags.max())
            worst = max(worst, m - math.sqrt(2 * c))
            if m > cap:
                bad += 1
    res.expect(bad == 0, f"{bad} Gauss bound violations, worst margin {worst}")
    g4 = harmonic.gauss_sum(1, 0, 4)
    res.expect(abs(g4 - (2 + 2j)) <= 1e-9, f"equality case value {g4}")
    res.expect(abs(abs(g4) - math.sqrt(8)) <= 1e-9, "equality case magnitude")
    res.expect(harmonic.gauss_sum(1, 0, 1) == 1, "c=1 sum")
    res.expect(abs(harmonic.gauss_sum(1, 0, 3) - complex(0, math.sqrt(3)))
               <= 1e-12, "c=3 sum")
    for _ in range(25):
        c = int(rng.integers(1, min(c_max, 256) + 1))
        k = int(rng.integers(1, c + 1))
        if math.gcd(k, c) != 1:
            k = 1
        l = int(rng.integers(0, c))
        row = harmonic.gauss_sum_row(k, c)
        direct = harmonic.gauss_sum(k, l, c)
        res.expect(abs(row[l] - direct) <= 1e-9 * max(1.0, abs(direct)),
                   f"row vs direct at ({k},{l},{c})")
        if c <= 80:
            res.expect(abs(direct - oracles.gauss_sum_oracle(k, l, c)) <= 1e-9,
                       f"direct vs term-by-term at ({k},{l},{c})")
    return res


def kernel_checks(panels: int) -> CheckResult:
    res = CheckResult("harmonic-kernel")
    for s in (0.0, 0.25, -0.25, 0.5, -0.5, 0.99, -0.99, 1.5, -1.5):
        want = harmonic.phi_hat_value(s)
        got = harmonic.phi_hat_by_quadrature(s, panels=panels)
        res.expect(abs(got - want) <= 1e-6, f"phi_hat({s}): {got} vs {want}")
    xs = np.linspace(-0.5, 0.5, 1001)
    res.expect(bool(np.all(harmonic.phi_value(xs) >= 1.0 - 1e-12)),
               "phi >= 1 on the unit-half window")
    wide = np.linspace(-8, 8, 4001)
    res.expect(bool(np.all(harmonic.phi_value(wide) >= 0.0)), "phi >= 0")
    res.expect(harmonic.phi_pair(0.0)[0] == math.pi**2 / 4, "phi(0)")
    res.expect(harmonic.phi_pair(0.5)[0] == 1.0, "phi(1/2)")
    res.expect(harmonic.phi_hat_value(2.0) == 0.0, "phi_hat support")
    grid = [(1.0, 0.0), (0.5, 0.0), (1.0, 0.5), (0.25, 0.3), (0.75, 0.9),
            (1.0, 1.0 / 3), (1.0 / 3, 0.5), (0.6, 0.25), (0.9, 0.7), (0.45, 0.11)]
    for scale, shift in grid:
        r = harmonic.poisson_residual(scale, shift)
        res.expect(r <= 1e-6, f"poisson residual {r} at {(scale, shift)}")
    return res


def measure_vdc_constants(seed: int, per_regime: int = 100) -> dict[str, float]:
    """Measured magnitude constants for the three oscillatory regimes.

    Each regime draws a fixed pseudorandom family of integrals and
    records max |E| / shape, where shape is 1/(|j| z), sqrt(Q0)/|l|, and
    sqrt(r*) * Q0^(3/4) / sqrt(|l|) respectively.  Used once to produce
    the frozen calibration, then re-run to detect regressions.
    """
    out = {}
    # one generator per regime, so a shorter run draws a strict prefix
    # of a longer one and its maxima stay below the full calibration
    rng = seeded_rng(seed)
    worst = 0.0
    for _ in range(per_regime):
        j = int(rng.integers(1, 21)) * (1 if rng.random() < 0.5 else -1)
        z = float(rng.uniform(1e-4, 0.05))
        q0 = float(rng.uniform(20.0, 800.0))
        val = abs(harmonic.oscillatory_integral(j, 0, 1, z, q0))
        worst = max(worst, val * abs(j) * z)
    out["linear_phase"] = worst
    rng = seeded_rng(seed + 1)
    worst = 0.0
    for _ in range(per_regime):
        l = int(rng.integers(1, 41)) * (1 if rng.random() < 0.5 else -1)
        r_star = int(rng.integers(1, 5))
        q0 = float(rng.uniform(20.0, 800.0))
        val = abs(harmonic.oscillatory_integral(0, l, r_star, 0.0, q0))
        worst = max(worst, val * abs(l) / math.sqrt(q0))
    out["sqrt_phase"] = worst
    rng = seeded_rng(seed + 2)
    worst = 0.0
    for i in range(per_regime):
        j = int(rng.integers(1, 11)) * (1 if rng.random() < 0.5 else -1)
        l = int(rng.integers(1, 41)) * (1 if rng.random() < 0.5 else -1)
        r_star = int(rng.integers(1, 4))
        q0 = float(rng.uniform(50.0, 1000.0))
        if i % 2 == 0:
            # park the stationary point of the phase inside the range
            z = abs(l) / (2.0 * abs(j) * r_star * math.sqrt(1.5 * q0))
        else:
            z = float(rng.uniform(1e-5, 0.05))
        val = abs(harmonic.oscillatory_integral(j, l, r_star, z, q0))
        worst = max(worst, val * math.sqrt(abs(l)) / (math.sqrt(r_star) * q0**0.75))
    out["mixed_phase"] = worst
    return out


def oscillatory_checks(instances: int, seed: int, per_regime: int = 100) -> CheckResult:
    res = CheckResult("harmonic-oscillatory")
    rng = seeded_rng(seed)
    for q0 in (1.0, 100.0, 31.7):
        res.expect(harmonic.oscillatory_integral(0, 0, 1, 0.123, q0) == q0,
                   f"zero-frequency value at {q0}")
    for i in range(instances):
        j = int(rng.integers(1, 25)) * (1 if rng.random() < 0.5 else -1)
        q0 = float(rng.uniform(5.0, 1000.0))
        z = float(rng.uniform(1e-5, 10.0 / q0))
        got = harmonic.oscillatory_integral(j, 0, 1, z, q0)
        want = harmonic.linear_phase_integral(j, z, q0)
        res.expect(abs(got - want) <= 1e-6 * q0,
                   f"linear phase {got} vs {want} on trial {i}")
        res.expect(abs(got) <= 1.0 / (abs(j) * z) + 1e-6 * q0,
                   f"linear magnitude cap on trial {i}")
    measured = measure_vdc_constants(seed=20260822, per_regime=per_regime)
    for name, got in measured.items():
        cal = VDC_CALIBRATION[name]
        res.expect(got <= cal * (1 + _VDC_HEADROOM),
                   f"{name} constant regressed: {got} > {cal}")
    return res


# -------------------------------------------------------- determinism

def determinism_checks(seed: int) -> CheckResult:
    res = CheckResult("thread-determinism")
    seq = sequences.make_sequence("random_phases", 512, seed=seed)
    s = moduli.squares_up_to(5)
    one = bounds.sieve_lhs(seq, s, threads=1)
    four = bounds.sieve_lhs(seq, s, threads=4)
    res.expect(one == four, f"sieve_lhs thread drift: {one} vs {four}")
    oct_set = moduli.squares_in_octave(60)
    b1 = bounds.sieve_bracket(oct_set, 64, z_grid=128, threads=1)
    b3 = bounds.sieve_bracket(oct_set, 64, z_grid=128, threads=3)
    res.expect(b1 == b3, "bracket thread drift")
    return res


# ---------------------------------------------------------------- suite

def run_verify(quick: bool = True, seed: int = 0) -> list[CheckResult]:
    """Execute every invariant group; quick shrinks sweep sizes only."""
    q0s_win = (10, 100, 1000, 10**4) if quick else (10, 50, 100, 500, 1000,
                                                    5000, 10**4, 5 * 10**4, 10**5)
    groups = [
        check_factorize(20_000 if quick else 10**6),
        check_mod_inv(300 if quick else 10**4, 2000 if quick else 0, seed + 1),
        quad_roots_sweep(512 if quick else 4096, 4 if quick else 20, seed + 2),
        parseval_trials(10 if quick else 50, seed + 3),
        check_sequence_props(seed + 4),
        check_moduli_structure(seed + 5,
                               q0_list=(5, 100, 10**4) if quick else
                               (5, 48, 100, 999, 10**4, 10**6),
                               ft_limit=10**3 if quick else 10**5),
        window_oracle_trials(60 if quick else 200, seed + 6),
        kdelta_oracle_trials(40 if quick else 200, seed + 7),
        p_alpha_oracle_trials(60 if quick else 200, seed + 8),
        pi_oracle_trials(60 if quick else 200, seed + 9),
        dirichlet_trials(10**3 if quick else 10**4, seed + 10),
        square_window_sweep(q0s_win, 8 if quick else 20, 16 if quick else 50),
        classical_bound_trials(40 if quick else 200, seed + 11),
        bracket_checks(6 if quick else 20, seed + 12),
        shape_checks(seed + 13),
        crowding_checks(seed + 14),
        gauss_bound_sweep(128 if quick else 512, seed + 15),
        kernel_checks(800 if quick else 3000),
        oscillatory_checks(10 if quick else 50, seed + 16,
                           per_regime=20 if quick else 100),
        determinism_checks(seed + 17),
    ]
    return groups
