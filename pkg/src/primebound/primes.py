"""Sieve-backed prime tables: von Mangoldt, Chebyshev psi and psi_1, lcm(1..m).

The central object is :class:`PrimeTable`, built once per limit:

* ``mangoldt_base[m]`` holds p when m = p^k is a prime power and 0
  otherwise, so Lambda(m) = ln(mangoldt_base[m]) with the convention
  ln(0) -> 0.  Classification uses a smallest-prime-factor sieve and a
  vectorised divide-out pass, all in numpy.
* ``psi_cum[m]`` = psi(m) = sum_{j<=m} Lambda(j) as a correctly-rounded
  float.  The cumulative sums are evaluated in double-double arithmetic
  (an unevaluated hi+lo pair per entry) via a vectorised parallel prefix
  scan.  Every Lambda value is a float, i.e. an integer multiple of the
  quantum 2^-53 once scaled, and the running totals stay below 2^20 for
  any table this package builds, so the hi+lo pair represents each
  partial sum *exactly* (the required ~73 bits fit comfortably in the
  106 available).  psi_cum is the correctly rounded head of that exact
  pair, which makes it monotone.
* ``psi1_hi/psi1_lo[m]`` = psi_1(m) = sum_{j<=m} psi(j), accumulated the
  same way but over the *stored* psi floats.  Partial sums stay below
  2^39 at limit 1e6 (2^46 at 1e7) on the same 2^-53 grid, again exact in
  double-double.  Consequence: the stored increment
  psi_1(m) - psi_1(m-1) equals the stored psi(m) exactly, bit for bit,
  which :func:`psi1_increment` exposes.

lcm(1..m) comes in two independent implementations (a pairwise-lcm fold
and a prime-power product) specifically so they can be played against
each other and against psi: ln lcm(1..m) = psi(m).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from .exact import two_sum

_LCM_CACHE_MAX = 2048
_lcm_lock = threading.Lock()

# _LCM[m] == lcm(1, ..., m); index 0 is a padding entry.
_LCM: list[int] = [1, 1]


# ----------------------------------------------------------------------
# double-double helpers (vectorised)
# ----------------------------------------------------------------------

def _two_sum_vec(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Branch-free Knuth two-sum; exact for any float inputs.
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _dd_prefix_sum(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inclusive prefix sum of ``values`` in double-double precision.

    Hillis-Steele scan: ceil(log2 n) vectorised passes, each combining
    shifted copies with two-sum and renormalising.  When all inputs and
    all partial sums are representable on a shared 2^-53 grid within 106
    bits (true for the psi/psi_1 tables, see module docstring), the
    returned (hi, lo) pairs are exact.
    """
    hi = np.array(values, dtype=np.float64, copy=True)
    lo = np.zeros_like(hi)
    n = hi.size
    d = 1
    while d < n:
        s, e = _two_sum_vec(hi[d:], hi[:-d])
        e = e + (lo[d:] + lo[:-d])
        # quick renormalisation: |e| <= ulp(s) here, so one pass suffices
        h2 = s + e
        l2 = e - (h2 - s)
        hi[d:] = h2
        lo[d:] = l2
        d *= 2
    return hi, lo


# ----------------------------------------------------------------------
# sieve and table construction
# ----------------------------------------------------------------------

def _smallest_prime_factor(limit: int) -> np.ndarray:
    """spf[m] = smallest prime factor of m (0 for m < 2), for 0 <= m <= limit."""
    dtype = np.int32 if limit < 2**31 - 1 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    if limit >= 2:
        for p in range(2, math.isqrt(limit) + 1):
            if spf[p] == 0:
                sl = spf[p * p :: p]
                sl[sl == 0] = p
        rest = spf[2:]
        idx = np.arange(2, limit + 1, dtype=dtype)
        rest[rest == 0] = idx[rest == 0]  # untouched entries are prime
    return spf


def _mangoldt_base(limit: int) -> np.ndarray:
    """base[m] = p if m = p^k (k >= 1) else 0, vectorised divide-out."""
    spf = _smallest_prime_factor(limit)
    p = spf.astype(np.int64)
    q = np.arange(limit + 1, dtype=np.int64)
    safe = np.where(p > 1, p, np.int64(2))
    active = p > 1
    # Strip the smallest prime factor repeatedly; m is a prime power
    # exactly when nothing but 1 remains.  At most log2(limit) passes.
    while active.any():
        div = active & (q % safe == 0)
        if not div.any():
            break
        q[div] //= safe[div]
        active = div & (q > 1)
    base = np.where((q == 1) & (np.arange(limit + 1) >= 2), p, np.int64(0))
    return base


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Immutable sieve product for a fixed limit.

    Fields
    ------
    limit:
        Largest integer covered; all arrays have length limit + 1.
    mangoldt_base:
        int64; entry m is p when m = p^k, else 0.
    psi_cum:
        float64; psi(m), correctly rounded, nondecreasing.
    psi1_hi, psi1_lo:
        double-double pair for psi_1(m); hi is correctly rounded and the
        pair is exact on the shared 2^-53 grid (limits up to ~1e7).
    """

    limit: int
    mangoldt_base: np.ndarray
    psi_cum: np.ndarray
    psi1_hi: np.ndarray
    psi1_lo: np.ndarray


def build_table(limit: int) -> PrimeTable:
    """Sieve and accumulate all tables up to ``limit`` (>= 1)."""
    if limit < 1:
        raise ValueError(f"build_table requires limit >= 1, got {limit}")
    base = _mangoldt_base(limit)
    lam = np.where(base > 0, np.log(np.maximum(base, 1).astype(np.float64)), 0.0)
    psi_hi, _ = _dd_prefix_sum(lam)
    # psi_hi is the correctly rounded head of the exact double-double
    # cumulative sum; the tail is deliberately dropped so that psi_1 is
    # an exact running sum over the *stored* psi values.
    psi1_hi, psi1_lo = _dd_prefix_sum(psi_hi)
    for arr in (base, psi_hi, psi1_hi, psi1_lo):
        arr.setflags(write=False)
    return PrimeTable(
        limit=limit,
        mangoldt_base=base,
        psi_cum=psi_hi,
        psi1_hi=psi1_hi,
        psi1_lo=psi1_lo,
    )


# ----------------------------------------------------------------------
# queries
# ----------------------------------------------------------------------

def _check_range(table: PrimeTable, x: float, lo: float) -> int:
    if not (lo <= x <= table.limit):
        raise ValueError(
            f"argument {x} outside table range [{lo}, {table.limit}]"
        )
    return int(math.floor(x))


def mangoldt(table: PrimeTable, m: int) -> int | None:
    """The prime p with m = p^k, or None when Lambda(m) = 0.  1 <= m <= limit."""
    if m != int(m):
        raise ValueError(f"mangoldt requires an integer, got {m}")
    idx = _check_range(table, int(m), 1)
    p = int(table.mangoldt_base[idx])
    return p if p else None


def psi(table: PrimeTable, x: float) -> float:
    """Chebyshev psi(x) = sum_{m <= x} Lambda(m), for 0 <= x <= limit."""
    return float(table.psi_cum[_check_range(table, x, 0)])


def psi1(table: PrimeTable, x: float) -> float:
    """psi_1(x) = sum_{m <= x} psi(m) = integral of psi, for 0 <= x <= limit."""
    return float(table.psi1_hi[_check_range(table, x, 0)])


def psi1_increment(table: PrimeTable, m: int) -> float:
    """psi_1(m) - psi_1(m-1) evaluated exactly in the stored double-double pairs.

    By construction this equals the stored psi(m) bit for bit; it exists
    so that consumers (and tests) can witness the identity without
    re-deriving the accumulation scheme.  Requires 1 <= m <= limit.
    """
    if m != int(m):
        raise ValueError(f"psi1_increment requires an integer, got {m}")
    idx = _check_range(table, int(m), 1)
    hi = table.psi1_hi
    lo = table.psi1_lo
    s, e = two_sum(float(hi[idx]), -float(hi[idx - 1]))
    e += float(lo[idx]) - float(lo[idx - 1])
    return s + e


# ----------------------------------------------------------------------
# lcm(1..m), two ways
# ----------------------------------------------------------------------

def lcm_upto(m: int) -> int:
    """d_m = lcm(1, 2, ..., m) by a pairwise fold, with a bounded cache."""
    if m < 1:
        raise ValueError(f"lcm_upto requires m >= 1, got {m}")
    if m < len(_LCM):
        return _LCM[m]
    top = min(m, _LCM_CACHE_MAX)
    with _lcm_lock:
        while len(_LCM) <= top:
            _LCM.append(math.lcm(_LCM[-1], len(_LCM)))
    if m < len(_LCM):
        return _LCM[m]
    v = _LCM[-1]
    for k in range(len(_LCM), m + 1):
        v = math.lcm(v, k)
    return v


def lcm_upto_prime_powers(m: int) -> int:
    """d_m as the product over primes p <= m of the largest p^k <= m.

    Independent of :func:`lcm_upto` (no shared code path, no cache); used
    as its cross-checking oracle.
    """
    if m < 1:
        raise ValueError(f"lcm_upto_prime_powers requires m >= 1, got {m}")
    is_comp = bytearray(m + 1)
    result = 1
    for p in range(2, m + 1):
        if not is_comp[p]:
            for mult in range(p * p, m + 1, p):
                is_comp[mult] = 1
            pw = p
            while pw * p <= m:
                pw *= p
            result *= pw
    return result
