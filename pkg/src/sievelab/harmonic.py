"""Harmonic-analysis toolkit: the majorant kernel pair, quadratic Gauss
sums, a Poisson summation residual, and oscillatory phase integrals.

The kernel is phi(x) = (sin(pi*x)/(2*x))^2 with phi(0) = pi^2/4.  It
majorizes 1 on [-1/2, 1/2] and its Fourier transform (in the convention
fhat(s) = int f(y) e(s*y) dy) is the compactly supported triangle
phi_hat(s) = (pi^2/4) * max(1 - |s|, 0).

Gauss sums G(k, l; c) = sum_{d=1..c} e((k*d^2 + l*d)/c) are computed
over the full period with exact integer phase reduction; for coprime k
the modulus-c bound |G| <= sqrt(2*c) is attained (c=4, k=1, l=0 gives
|2+2i| = sqrt(8)).

The oscillatory integral here is int_{Q0}^{2*Q0} e(j*y*z - l*sqrt(y)/r) dy,
evaluated by Gauss-Legendre panels sized to the total phase variation,
with doubling until two refinements agree.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NotCoprimeError, QuadratureError
from .util import cexp

_QUAD_NODES = 16
_PANEL_BUDGET = 1 << 20


def phi_value(x):
    """The kernel phi, elementwise; phi(x) >= 1 for |x| <= 1/2."""
    x = np.asarray(x, dtype=np.float64)
    return (0.5 * np.pi * np.sinc(x)) ** 2


def phi_hat_value(s):
    """Fourier transform of phi: a triangle supported on [-1, 1]."""
    s = np.asarray(s, dtype=np.float64)
    return (np.pi**2 / 4.0) * np.maximum(1.0 - np.abs(s), 0.0)


def phi_pair(x: float) -> tuple[float, float]:
    """(phi(x), phi_hat(x)) at one point."""
    return float(phi_value(x)), float(phi_hat_value(x))


def _gl_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def phi_hat_by_quadrature(s: float, panels: int = 4000) -> float:
    """Independent numerical Fourier transform of phi at s.

    phi is even, so phi_hat(s) = 2 * int_0^inf phi(y) cos(2*pi*s*y) dy.
    The head [0, panels] is integrated with 32-point Gauss-Legendre per
    unit panel; the tail uses the expansion of phi into three cosine
    frequencies {|s|, |s|+1, ||s|-1|} against 1/(8*y^2), each handled by
    a four-term integration-by-parts series.  Avoid |s| so close to 1
    that a tail frequency nearly vanishes; the stock check points stay
    clear of that.
    """
    w = 2.0 * np.pi * abs(s)
    nodes, weights = _gl_nodes(32)
    starts = np.arange(panels, dtype=np.float64)
    y = starts[:, None] + 0.5 * (nodes[None, :] + 1.0)
    vals = phi_value(y) * np.cos(w * y)
    head = float(np.sum(vals @ weights) * 0.5)
    t = float(panels)
    tail = (_cos_tail(w, t) - 0.5 * _cos_tail(2 * np.pi + w, t)
            - 0.5 * _cos_tail(abs(2 * np.pi - w), t)) / 8.0
    return 2.0 * (head + tail)


def _cos_tail(omega: float, t: float) -> float:
    """int_t^inf cos(omega*y) / y^2 dy by parts, four terms."""
    if omega == 0.0:
        return 1.0 / t
    s_, c_ = math.sin(omega * t), math.cos(omega * t)
    # d/dy chains: each integration by parts trades one power of y for 1/omega
    return (-s_ / (omega * t**2)
            + 2.0 * c_ / (omega**2 * t**3)
            + 6.0 * s_ / (omega**3 * t**4)
            - 24.0 * c_ / (omega**4 * t**5))


def gauss_sum(k: int, l: int, c: int) -> complex:
    """G(k, l; c) = sum_{d=1}^{c} e((k*d^2 + l*d)/c), gcd(k, c) = 1."""
    if c < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(k, c) != 1:
        raise NotCoprimeError(f"k={k} shares a factor with c={c}")
    k %= c
    l %= c
    d = np.arange(1, c + 1, dtype=np.int64)
    ph = (k * d * d + l * d) % c
    return complex(np.sum(cexp(ph / c)))


def gauss_sum_row(k: int, c: int) -> np.ndarray:
    """G(k, l; c) for all l = 0..c-1 at once.

    The row over l is the inverse-DFT (times c) of the quadratic phase
    vector e(k*d^2/c), which keeps full-sweep checks affordable.  Agrees
    with gauss_sum entry by entry.
    """
    if c < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(k, c) != 1:
        raise NotCoprimeError(f"k={k} shares a factor with c={c}")
    k %= c
    d = np.arange(c, dtype=np.int64)
    v = cexp(((k * d * d) % c) / c)
    return c * np.fft.ifft(v)


def poisson_residual(scale: float, shift: float, trunc: int = 10**6) -> float:
    """|direct - transform| for Poisson summation of f(x) = phi((x-shift)/scale).

    Direct side truncated at |n| <= trunc; with phi <= 1/(4*x^2) the
    discarded tail is below scale^2/(2*(trunc - |shift|)), under 1e-6
    for unit-order scale.  Transform side sum_n scale * e(n*shift) *
    phi_hat(n*scale) is finite because phi_hat has compact support.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    n = np.arange(-trunc, trunc + 1, dtype=np.float64)
    direct = float(np.sum(phi_value((n - shift) / scale)))
    m_max = int(math.floor(1.0 / scale)) + 1
    m = np.arange(-m_max, m_max + 1, dtype=np.float64)
    transform = np.sum(scale * cexp(m * shift) * phi_hat_value(m * scale))
    return float(abs(direct - transform))


def linear_phase_integral(j: int, z: float, q0: float) -> complex:
    """Closed form of int_{Q0}^{2*Q0} e(j*y*z) dy for j*z != 0."""
    om = 2j * np.pi * j * z
    return complex((np.exp(om * 2 * q0) - np.exp(om * q0)) / om)


def oscillatory_integral(j: int, l: int, r_star: int, z: float, q0: float,
                         tol: float | None = None) -> complex:
    """int_{Q0}^{2*Q0} e(j*y*z - l*sqrt(y)/r_star) dy.

    Returns exactly Q0 when both frequencies vanish.  Otherwise panels
    are sized so each holds a bounded amount of phase, integrated with
    16-point Gauss-Legendre, and doubled until two successive answers
    agree within tol (default 1e-6 * Q0 absolute, split across the
    comparison).  Raises QuadratureError if the panel budget runs out.
    """
    if q0 <= 0 or r_star < 1:
        raise ValueError("need Q0 > 0 and r_star >= 1")
    if j == 0 and l == 0:
        return complex(q0)
    if tol is None:
        tol = 1e-6 * q0
    cycles = abs(j * z) * q0 + abs(l) * (math.sqrt(2 * q0) - math.sqrt(q0)) / r_star
    panels = max(16, int(math.ceil(4.0 * cycles)))
    prev = _osc_eval(j, l, r_star, z, q0, panels)
    while True:
        panels *= 2
        if panels > _PANEL_BUDGET:
            raise QuadratureError(f"oscillatory integral needs more than {_PANEL_BUDGET} panels")
        cur = _osc_eval(j, l, r_star, z, q0, panels)
        if abs(cur - prev) <= 0.5 * tol:
            return cur
        prev = cur


def _osc_eval(j: int, l: int, r_star: int, z: float, q0: float, panels: int) -> complex:
    nodes, weights = _gl_nodes(_QUAD_NODES)
    width = q0 / panels
    total = 0.0 + 0.0j
    # chunk panels so the node matrix stays within memory
    chunk = max(1, (1 << 22) // _QUAD_NODES)
    for start in range(0, panels, chunk):
        stop = min(panels, start + chunk)
        left = q0 + width * np.arange(start, stop, dtype=np.float64)
        y = left[:, None] + 0.5 * width * (nodes[None, :] + 1.0)
        ph = j * z * y - l * np.sqrt(y) / r_star
        vals = cexp(ph)
        total += complex(np.sum(vals @ weights) * 0.5 * width)
    return total
