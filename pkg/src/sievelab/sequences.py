"""Complex coefficient sequences (a_n) for n = 1..N and their
trigonometric sums S(alpha) = sum_n a_n e(n*alpha), e(x) = exp(2*pi*i*x).

Two evaluation routes are provided.  eval_exp_sum is the direct O(N)
evaluation at one real point, with the phase argument reduced mod 1
before the exponential so large n*alpha does not destroy precision.
eval_at_modulus computes S(a/q) for all a = 1..q at once by bucketing
the coefficients into residue classes mod q and applying a length-q
transform with exact rational phases; sieve sums are built on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfRangeError, SequenceFileError
from .util import cexp, seeded_rng

_KINDS = ("ones", "delta", "random_signs", "random_phases", "focused", "from_file")


@dataclass(frozen=True)
class CoefficientSequence:
    """Finitely supported coefficients; values[i] holds a_{i+1}."""

    values: np.ndarray
    N: int
    Z: float = field(default=0.0)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        if self.N != v.size or self.N < 1:
            raise ValueError("N must equal len(values) and be >= 1")
        z = float(np.sum(np.abs(v) ** 2))
        object.__setattr__(self, "Z", z)


def z_norm(seq: CoefficientSequence) -> float:
    """sum |a_n|^2, the normalizing weight in every sieve bound."""
    return seq.Z


def make_sequence(kind: str, N: int, *, n0: int | None = None, seed=0,
                  beta: float | None = None, path: str | None = None) -> CoefficientSequence:
    """Construct one of the stock test sequences.

    ones            a_n = 1
    delta           a_n = [n == n0]
    random_signs    a_n uniform on {-1, +1}, from seed
    random_phases   a_n uniform on the unit circle, from seed
    focused         a_n = e(-n*beta), so S(beta) = N
    from_file       text file, line n holds "re im"
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown sequence kind {kind!r}")
    if kind == "from_file":
        return sequence_from_file(path)
    if N < 1:
        raise OutOfRangeError("sequence length must be >= 1")
    if kind == "ones":
        v = np.ones(N, dtype=np.complex128)
    elif kind == "delta":
        if n0 is None or not 1 <= n0 <= N:
            raise OutOfRangeError(f"delta position n0={n0} outside 1..{N}")
        v = np.zeros(N, dtype=np.complex128)
        v[n0 - 1] = 1.0
    elif kind == "random_signs":
        rng = seeded_rng(seed)
        v = (rng.integers(0, 2, N) * 2 - 1).astype(np.complex128)
    elif kind == "random_phases":
        rng = seeded_rng(seed)
        v = cexp(rng.random(N))
    else:  # focused
        if beta is None or not 0.0 <= beta < 1.0:
            raise OutOfRangeError(f"focus point beta={beta} outside [0, 1)")
        v = cexp(-beta * np.arange(1, N + 1))
    return CoefficientSequence(values=v, N=N)


def sequence_from_file(path: str) -> CoefficientSequence:
    """Load a sequence from UTF-8 text, one "re im" pair per line."""
    if path is None:
        raise SequenceFileError("no path given for from_file sequence")
    rows = []
    try:
        with open(path, encoding="utf-8") as fh:
            for ln, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise SequenceFileError(f"{path}:{ln}: expected two fields, got {len(parts)}")
                try:
                    rows.append(complex(float(parts[0]), float(parts[1])))
                except ValueError as exc:
                    raise SequenceFileError(f"{path}:{ln}: {exc}") from exc
    except OSError as exc:
        raise SequenceFileError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise SequenceFileError(f"{path}: no coefficients found")
    return CoefficientSequence(values=np.array(rows), N=len(rows))


def eval_exp_sum(seq: CoefficientSequence, alpha: float) -> complex:
    """S(alpha) = sum_{n<=N} a_n e(n*alpha), argument reduced mod 1."""
    a = alpha - math.floor(alpha)
    n = np.arange(1, seq.N + 1, dtype=np.float64)
    phases = (n * a) % 1.0
    return complex(np.sum(seq.values * cexp(phases)))


def eval_at_modulus(seq: CoefficientSequence, q: int) -> np.ndarray:
    """S(a/q) for a = 1..q as a complex array (index i holds a = i+1).

    Coefficients are folded into residue buckets b_j = sum_{n = j (q)} a_n,
    then S(a/q) = sum_j b_j e(a*j/q).  All phases come from one table of
    q-th roots of unity indexed by a*j mod q, so they are exact rationals
    of the circle and the result does not drift with N.
    """
    if q < 1:
        raise ValueError("modulus must be positive")
    idx = np.arange(1, seq.N + 1, dtype=np.int64) % q
    br = np.bincount(idx, weights=seq.values.real, minlength=q)
    bi = np.bincount(idx, weights=seq.values.imag, minlength=q)
    buckets = br + 1j * bi
    roots = cexp(np.arange(q, dtype=np.float64) / q)
    j = np.arange(q, dtype=np.int64)
    out = np.empty(q, dtype=np.complex128)
    # block the a-rows so the index matrix stays small
    block = max(1, (1 << 22) // max(q, 1))
    for start in range(1, q + 1, block):
        stop = min(q + 1, start + block)
        a = np.arange(start, stop, dtype=np.int64)
        out[start - 1 : stop - 1] = roots[(a[:, None] * j[None, :]) % q] @ buckets
    return out
