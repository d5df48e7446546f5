"""Hankel beta-moment determinants, a two-sided determinant lemma, and
lcm integrality inequalities — all exact.

The objects
-----------
For integers alpha, beta >= 1 the Hankel matrix of interest has entries

    H[i][j] = (beta-1)! / (alpha+i+j-2)_beta
            = B(alpha+i+j-2, beta)          (a beta-function moment),

for 1 <= i, j <= n, with (x)_k the rising factorial.  Its determinant has
the closed form

    det H = prod_{j=0}^{n-1} (alpha+j-1)! (beta+j-1)! j! / (alpha+beta+n+j-2)!

This module verifies that identity literally (exact rational elimination
against the exact product), derives it a second way through a polynomial
determinant lemma, generalises the row indices from consecutive integers
to arbitrary ones, and attaches the lcm inequalities that turn these
determinants into prime-counting information:

* every entry times d_{alpha+beta+i+j-1} is a positive integer, where
  d_m = lcm(1..m) — because the entry is an integral of x^(a-1)(1-x)^(b-1)
  expanded by partial fractions with denominators below the lcm cutoff;
* a sharper product form bounds det H itself:
      prod_{i=1}^{n} d_{alpha+beta+n+i-3} (n-i)! (beta+i-2)! / (alpha+i-1)_{beta+n-1}  >= 1,
  whose non-lcm part is exactly det H (reindex the factorials to see it).

The determinant lemma
---------------------
For variables X_1..X_n and parameters A_2..A_n, B_2..B_n,

    det( (X_i+B_2)...(X_i+B_j) * (X_i+A_{j+1})...(X_i+A_n) )_{i,j=1..n}
        = prod_{1<=i<j<=n} (X_i - X_j) * prod_{2<=i<=j<=n} (B_i - A_j).

Both sides are integers for integer inputs, so the identity is checked on
seeded random integer instances plus the fully expanded n in {1, 2} cases.
Specialising X_i = i, B_i = alpha+i-3, A_i = alpha+beta+i-3 recovers the
Hankel determinant up to the explicit row-scaling

    det M = det H * prod_{i=1}^{n} (alpha+i-1)_{beta+n-1} / (beta-1)!^n .

Selberg cross-check
-------------------
The n-dimensional Selberg integral with positive-integer parameters is a
ratio of factorials; at gamma = 1 it matches n! * det H, and for n <= 2
it is also computed by direct Gauss-Legendre quadrature, tying the exact
algebra back to actual integrals.

Exact linear algebra
--------------------
Integer determinants use fraction-free Bareiss elimination (intermediate
entries are minors, divisions are exact); rational matrices are cleared
to integers row by row.  A naive Fraction Gaussian elimination is kept as
an independent cross-check, not as a fast path.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import CompensatedSum, binomial, factorial, pochhammer
from .primes import lcm_upto

# ----------------------------------------------------------------------
# specs
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class HankelSpec:
    """Parameters (alpha, beta, n) of one Hankel beta-moment matrix."""

    alpha: int
    beta: int
    n: int

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"HankelSpec.{name} must be an integer >= 1, got {v!r}")


@dataclass(frozen=True)
class KrattenthalerInstance:
    """One instance (X_1..X_n; A_2..A_n; B_2..B_n) of the determinant lemma.

    ``a[t]`` holds A_{t+2} and ``b[t]`` holds B_{t+2} (the parameter
    subscripts start at 2 in the identity).
    """

    x: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.x)
        if n < 1:
            raise ValueError("KrattenthalerInstance needs at least one variable")
        if len(self.a) != n - 1 or len(self.b) != n - 1:
            raise ValueError(
                f"need len(a) == len(b) == len(x)-1 == {n - 1}, "
                f"got {len(self.a)} and {len(self.b)}"
            )


@dataclass(frozen=True)
class GeneralizedSpec:
    """Row indices x_1..x_n (distinct integers >= 0) and a column shift beta."""

    xs: tuple[int, ...]
    beta: int

    def __post_init__(self) -> None:
        if len(self.xs) < 1:
            raise ValueError("GeneralizedSpec needs at least one index")
        if any((not isinstance(v, int)) or v < 0 for v in self.xs):
            raise ValueError(f"indices must be integers >= 0, got {self.xs!r}")
        if len(set(self.xs)) != len(self.xs):
            raise ValueError(f"indices must be distinct, got {self.xs!r}")
        if not isinstance(self.beta, int) or self.beta < 1:
            raise ValueError(f"beta must be an integer >= 1, got {self.beta!r}")


@dataclass(frozen=True)
class SelbergSpec:
    """Parameters (alpha, beta, gamma, n) of the n-dimensional Selberg integral.

    alpha and beta may be any positive reals; gamma and n must be
    positive integers (the only regime the closed product needs here).
    """

    alpha: float
    beta: float
    gamma: int
    n: int

    def __post_init__(self) -> None:
        if not (self.alpha > 0 and self.beta > 0):
            raise ValueError(
                f"SelbergSpec needs alpha, beta > 0, got {(self.alpha, self.beta)!r}"
            )
        for name in ("gamma", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"SelbergSpec.{name} must be an integer >= 1, got {v!r}")


# ----------------------------------------------------------------------
# exact determinants
# ----------------------------------------------------------------------


def bareiss_det(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix, fraction-free.

    Bareiss elimination: every intermediate entry is a minor of the input
    (so sizes stay polynomial) and every division is exact.  Row swaps on
    zero pivots keep the division property, flipping the sign.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("bareiss_det requires a nonempty square matrix")
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def fraction_det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix via row clearing + Bareiss."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("fraction_det requires a nonempty square matrix")
    cleared: list[list[int]] = []
    den = 1
    for row in rows:
        fr = [Fraction(v) for v in row]
        scale = math.lcm(*(f.denominator for f in fr))
        cleared.append([f.numerator * (scale // f.denominator) for f in fr])
        den *= scale
    return Fraction(bareiss_det(cleared), den)


def fraction_det_naive(rows: list[list[Fraction]]) -> Fraction:
    """Plain Gaussian elimination over Fraction with partial pivoting.

    Slower and structurally unrelated to :func:`fraction_det`; exists as
    an independent witness that the fast path eliminates correctly.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("fraction_det_naive requires a nonempty square matrix")
    m = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for r in range(k + 1, n):
            if m[r][k]:
                factor = m[r][k] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[k])]
    return det


# ----------------------------------------------------------------------
# Hankel beta-moment matrices
# ----------------------------------------------------------------------


def hankel_entry(spec: HankelSpec, i: int, j: int) -> Fraction:
    """Entry (beta-1)! / (alpha+i+j-2)_beta at position (i, j), 1-based."""
    if not (1 <= i <= spec.n and 1 <= j <= spec.n):
        raise ValueError(f"entry index ({i}, {j}) outside 1..{spec.n}")
    return Fraction(
        factorial(spec.beta - 1),
        pochhammer(spec.alpha + i + j - 2, spec.beta),
    )


def hankel_matrix(spec: HankelSpec) -> list[list[Fraction]]:
    n = spec.n
    return [[hankel_entry(spec, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def hankel_det(spec: HankelSpec) -> Fraction:
    """det of the Hankel beta-moment matrix, by exact elimination."""
    d = fraction_det(hankel_matrix(spec))
    if d == 0:
        raise RuntimeError(
            "Hankel beta-moment matrix eliminated to a zero determinant; "
            "this cannot happen for valid parameters and signals a fault"
        )
    return d


def closed_form_det(spec: HankelSpec) -> Fraction:
    """The factorial product form of the same determinant."""
    a, b, n = spec.alpha, spec.beta, spec.n
    num = 1
    den = 1
    for j in range(n):
        num *= factorial(a + j - 1) * factorial(b + j - 1) * factorial(j)
        den *= factorial(a + b + n + j - 2)
    return Fraction(num, den)


def partial_fraction_sum(alpha: int, beta: int, m: int) -> Fraction:
    """sum_k (-1)^k C(beta-1, k) / (alpha+m+k-2)  ==  the (i+j=m) Hankel entry.

    This is the beta-moment integral expanded by partial fractions; every
    denominator is at most alpha+beta+m-3, which is what powers the lcm
    integrality inequality.
    """
    if alpha < 1 or beta < 1 or m < 2:
        raise ValueError(f"need alpha, beta >= 1 and m >= 2, got {(alpha, beta, m)}")
    total = Fraction(0)
    for k in range(beta):
        term = Fraction(binomial(beta - 1, k), alpha + m + k - 2)
        total += -term if k & 1 else term
    return total


# ----------------------------------------------------------------------
# determinant lemma and its Hankel specialisation
# ----------------------------------------------------------------------


def krattenthaler_matrix(inst: KrattenthalerInstance) -> list[list[int]]:
    """Matrix with entry (i, j) = prod_{t=2}^{j} (X_i+B_t) * prod_{t=j+1}^{n} (X_i+A_t)."""
    n = len(inst.x)
    rows = []
    for xi in inst.x:
        row = []
        for j in range(1, n + 1):
            v = 1
            for t in range(2, j + 1):
                v *= xi + inst.b[t - 2]
            for t in range(j + 1, n + 1):
                v *= xi + inst.a[t - 2]
            row.append(v)
        rows.append(row)
    return rows


def krattenthaler_sides(inst: KrattenthalerInstance) -> tuple[int, int]:
    """(determinant, closed-form product) for one lemma instance; equal iff it holds."""
    n = len(inst.x)
    lhs = bareiss_det(krattenthaler_matrix(inst))
    rhs = 1
    for i in range(n):
        for j in range(i + 1, n):
            rhs *= inst.x[i] - inst.x[j]
    # prod over 2 <= i <= j <= n of (B_i - A_j)
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            rhs *= inst.b[i - 2] - inst.a[j - 2]
    return lhs, rhs


def random_krattenthaler(rng: random.Random, max_n: int = 6, bound: int = 50) -> KrattenthalerInstance:
    """A seeded random lemma instance with 1 <= n <= max_n, values in [-bound, bound]."""
    n = rng.randint(1, max_n)
    x = tuple(rng.randint(-bound, bound) for _ in range(n))
    a = tuple(rng.randint(-bound, bound) for _ in range(n - 1))
    b = tuple(rng.randint(-bound, bound) for _ in range(n - 1))
    return KrattenthalerInstance(x=x, a=a, b=b)


def specialize_to_hankel(spec: HankelSpec) -> KrattenthalerInstance:
    """The substitution X_i = i, B_i = alpha+i-3, A_i = alpha+beta+i-3."""
    n = spec.n
    return KrattenthalerInstance(
        x=tuple(range(1, n + 1)),
        b=tuple(spec.alpha + i - 3 for i in range(2, n + 1)),
        a=tuple(spec.alpha + spec.beta + i - 3 for i in range(2, n + 1)),
    )


def specialization_scale(spec: HankelSpec) -> Fraction:
    """det(specialised lemma matrix) / det(Hankel matrix), as an exact ratio.

    Row i of the Hankel matrix times (alpha+i-1)_{beta+n-1} / (beta-1)!
    is row i of the specialised polynomial matrix, hence the factor.
    """
    num = 1
    for i in range(1, spec.n + 1):
        num *= pochhammer(spec.alpha + i - 1, spec.beta + spec.n - 1)
    return Fraction(num, factorial(spec.beta - 1) ** spec.n)


# ----------------------------------------------------------------------
# lcm integrality inequalities
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class IntegralityWitness:
    """d = lcm(1..cutoff) and the entry scaled by it (an integer >= 1 when valid)."""

    cutoff: int
    d: int
    scaled: Fraction


def basic_integrality(alpha: int, beta: int, i: int, j: int) -> IntegralityWitness:
    """Scale the (i, j) entry by d_{alpha+beta+i+j-1}; the result is integral.

    Wasteful on purpose: the partial-fraction denominators only reach
    alpha+beta+i+j-3, so the lcm cutoff has two spare indices.  The
    sharper per-row inequality is :func:`improved_product`.
    """
    if min(alpha, beta, i, j) < 1:
        raise ValueError(f"all of alpha, beta, i, j must be >= 1, got {(alpha, beta, i, j)}")
    cutoff = alpha + beta + i + j - 1
    d = lcm_upto(cutoff)
    entry = Fraction(factorial(beta - 1), pochhammer(alpha + i + j - 2, beta))
    return IntegralityWitness(cutoff=cutoff, d=d, scaled=d * entry)


def improved_product(spec: HankelSpec) -> Fraction:
    """prod_i d_{alpha+beta+n+i-3} (n-i)! (beta+i-2)! / (alpha+i-1)_{beta+n-1}.

    Always >= 1; equals 1 exactly at the degenerate corners (e.g. alpha =
    beta = 1 with n <= 2).  The non-lcm factor is det H itself, so this
    is the determinant-level integrality statement.
    """
    a, b, n = spec.alpha, spec.beta, spec.n
    num = 1
    den = 1
    for i in range(1, n + 1):
        num *= lcm_upto(a + b + n + i - 3) * factorial(n - i) * factorial(b + i - 2)
        den *= pochhammer(a + i - 1, b + n - 1)
    return Fraction(num, den)


def generalized_sides(spec: GeneralizedSpec) -> tuple[Fraction, Fraction]:
    """Both sides of the non-consecutive-index determinant identity.

    lhs = det( (beta-1)! / (x_i+j+1)_beta )_{i,j=1..n}
    rhs = [ (beta-1)! (beta)! ... (beta+n-2)! /
            prod_i (x_i+2)_{beta+n-1} ] * prod_{i<j} (x_j - x_i)

    The Vandermonde factor follows the *input* order of the indices, so
    the sign flips under row exchange exactly as a determinant should.
    """
    xs, b = spec.xs, spec.beta
    n = len(xs)
    matrix = [
        [Fraction(factorial(b - 1), pochhammer(x + j + 1, b)) for j in range(1, n + 1)]
        for x in xs
    ]
    lhs = fraction_det(matrix)
    num = 1
    den = 1
    for mth in range(n):
        num *= factorial(b - 1 + mth)
    for x in xs:
        den *= pochhammer(x + 2, b + n - 1)
    vmd = 1
    for i in range(n):
        for j in range(i + 1, n):
            vmd *= xs[j] - xs[i]
    return lhs, Fraction(num * vmd, den)


def generalized_inequality(spec: GeneralizedSpec) -> Fraction:
    """rhs of the generalized identity, indices sorted ascending, times prod_i d_{x_i+beta+n}.

    Sorting makes the Vandermonde factor positive, so the scaled quantity
    is a positive integer-bounded value >= 1.
    """
    xs = tuple(sorted(spec.xs))
    _, rhs = generalized_sides(GeneralizedSpec(xs=xs, beta=spec.beta))
    scale = 1
    n = len(xs)
    for x in xs:
        scale *= lcm_upto(x + spec.beta + n)
    return scale * rhs


def random_generalized(
    rng: random.Random, max_n: int = 6, max_beta: int = 5, max_index: int = 30
) -> GeneralizedSpec:
    """A seeded random index set (distinct, >= 0) and shift beta."""
    n = rng.randint(1, max_n)
    xs = tuple(rng.sample(range(max_index + 1), n))
    return GeneralizedSpec(xs=xs, beta=rng.randint(1, max_beta))


def consecutive_spec(alpha_two_n: int, beta: int) -> GeneralizedSpec:
    """x_i = i - 1 for i = 1..n: the generalized identity collapses to alpha = 2."""
    return GeneralizedSpec(xs=tuple(range(alpha_two_n)), beta=beta)


# ----------------------------------------------------------------------
# Selberg integral: closed form, float form, quadrature oracle
# ----------------------------------------------------------------------


def selberg_rhs_exact(spec: SelbergSpec) -> Fraction:
    """The Selberg product for positive-integer parameters, as a Fraction.

    prod_{j=0}^{n-1} Gamma(a+j g) Gamma(b+j g) Gamma(1+(j+1) g)
                     / ( Gamma(a+b+(n+j-1) g) Gamma(1+g) )
    with every Gamma(k) = (k-1)! exact.  Requires integer alpha, beta.
    """
    if spec.alpha != int(spec.alpha) or spec.beta != int(spec.beta):
        raise ValueError(
            "selberg_rhs_exact needs integer alpha and beta; "
            "use selberg_rhs for real parameters"
        )
    a, b, g, n = int(spec.alpha), int(spec.beta), spec.gamma, spec.n
    num = 1
    den = 1
    for j in range(n):
        num *= (
            factorial(a + j * g - 1)
            * factorial(b + j * g - 1)
            * factorial((j + 1) * g)
        )
        den *= factorial(a + b + (n + j - 1) * g - 1) * factorial(g)
    return Fraction(num, den)


def selberg_rhs(spec: SelbergSpec) -> float:
    """Float Selberg product via lgamma, compensated; ~1e-13 relative error."""
    a, b, g, n = spec.alpha, spec.beta, spec.gamma, spec.n
    acc = CompensatedSum()
    for j in range(n):
        acc.add(math.lgamma(a + j * g))
        acc.add(math.lgamma(b + j * g))
        acc.add(math.lgamma(1 + (j + 1) * g))
        acc.add(-math.lgamma(a + b + (n + j - 1) * g))
        acc.add(-math.lgamma(1 + g))
    return math.exp(acc.value)


def selberg_vs_det(spec: HankelSpec) -> tuple[Fraction, Fraction]:
    """(n! * det H, Selberg product at gamma = 1) — equal for all valid specs.

    At gamma = 1 the symmetrised Selberg integrand is the squared
    Vandermonde beta-moment, which is n! times the Hankel determinant.
    """
    lhs = factorial(spec.n) * hankel_det(spec)
    rhs = selberg_rhs_exact(
        SelbergSpec(alpha=spec.alpha, beta=spec.beta, gamma=1, n=spec.n)
    )
    return lhs, rhs


_LEGENDRE_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _unit_legendre(k: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights mapped from [-1, 1] to [0, 1]."""
    if k not in _LEGENDRE_CACHE:
        t, w = np.polynomial.legendre.leggauss(k)
        _LEGENDRE_CACHE[k] = ((t + 1.0) / 2.0, w / 2.0)
    return _LEGENDRE_CACHE[k]


def quadrature_oracle(spec: SelbergSpec) -> float:
    """Direct numerical evaluation of the Selberg integral for n <= 2.

    The integrand x^(a-1)(1-x)^(b-1) [* same in y * |x-y|^(2g)] is a
    polynomial of total degree a+b-2+2g(n-1) per axis, so Gauss-Legendre
    with enough nodes is exact up to rounding; node count is chosen from
    the degree with margin.  Deliberately independent of all the exact
    machinery — this is the end-to-end sanity anchor.
    """
    a, b, g, n = spec.alpha, spec.beta, spec.gamma, spec.n
    if n > 2:
        raise ValueError(f"quadrature oracle only supports n <= 2, got n={n}")
    if min(a, b) < 1:
        raise ValueError(f"quadrature oracle needs alpha, beta >= 1, got {(a, b)}")
    degree = a + b - 2 + 2 * g * (n - 1)
    k = max(24, int(math.ceil(degree / 2)) + 2)
    x, w = _unit_legendre(k)
    fx = x ** (a - 1) * (1.0 - x) ** (b - 1)
    if n == 1:
        return float(np.dot(w, fx))
    diff = np.abs(x[:, None] - x[None, :]) ** (2 * g)
    vals = (fx * w)[:, None] * (fx * w)[None, :] * diff
    return float(vals.sum())
