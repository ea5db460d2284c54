"""Complex-order polylogarithm series, closed forms, and real zeta values.

The series evaluator Li_s(z) = sum_{k>=1} z^k k^-s uses the principal
real logarithm in k^-s := exp(-s ln k) and certifies its truncation with
a geometric-dominance tail bound. Closed forms cover order 1 and the
non-positive integer orders; zeta_real covers the x = 1 product mode.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, NonConvergence
from .numerics import KahanSum, dirichlet_tail, log1m, power_geometric_tail, require_finite

# Arguments must stay this far inside the unit circle for the series.
EPS_DOMAIN = 1e-3
# Real zeta orders must exceed 1 by this margin.
EPS_ZETA = 1e-3
# Hard ceiling on summed terms per series; exceeding it is an error.
TERM_CAP = 10_000_000


@dataclass(frozen=True)
class SeriesResult:
    """A certified series evaluation.

    value: the partial sum (complex; an mpmath mpc in extended mode).
    terms_used: number of series terms summed.
    tail_bound: certified upper bound on |true value - value| from
        truncation alone; rounding is separate and of order ulp.
    """

    value: complex
    terms_used: int
    tail_bound: float


def _series_tail(k: int, sigma_minus: float, r: float) -> float:
    # |z^j j^-s| <= j^sigma_minus r^j for j > k, sigma_minus = max(0, -Re s)
    return power_geometric_tail(k, sigma_minus, r)


def polylog(
    s: complex,
    z: complex,
    tol: float = 1e-12,
    *,
    eps_domain: float = EPS_DOMAIN,
    term_cap: int = TERM_CAP,
    dps: int | None = None,
) -> SeriesResult:
    """Evaluate Li_s(z) by direct series with a certified tail bound.

    Args:
        s: complex order; k^-s = exp(-s ln k) with the real principal log.
        z: argument with |z| <= 1 - eps_domain.
        tol: positive truncation target; summation stops once the
            certified tail bound falls below it.
        eps_domain: required gap to the unit circle.
        term_cap: raise NonConvergence past this many terms.
        dps: when set, run the same loop in mpmath arithmetic with this
            many significant digits (extended-precision mode).

    Raises:
        DomainError: |z| too large.
        NonConvergence: tolerance unreachable within term_cap.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = complex(s)
    z = complex(z) if dps is None else z
    r = abs(z)
    if r > 1.0 - eps_domain:
        raise DomainError(f"|z| = {r!r} exceeds 1 - eps_domain = {1.0 - eps_domain!r}")
    if dps is not None:
        return _polylog_mp(s, z, tol, term_cap, dps)
    if z == 0:
        return SeriesResult(0j, 1, 0.0)
    sigma_minus = max(0.0, -s.real)
    acc = KahanSum()
    zk = 1 + 0j
    for k in range(1, term_cap + 1):
        zk *= z
        term = zk if k == 1 else zk * cmath.exp(-s * math.log(k))
        acc.add(term)
        bound = _series_tail(k, sigma_minus, float(r))
        if bound <= tol:
            return SeriesResult(require_finite(acc.value, "polylog"), k, bound)
    raise NonConvergence(
        f"polylog(s={s!r}, z={z!r}) did not reach tol={tol!r} within {term_cap} terms"
    )


def _polylog_mp(s: complex, z, tol: float, term_cap: int, dps: int) -> SeriesResult:
    from mpmath import mp, mpc, mpf

    with mp.workdps(dps):
        zc = mpc(z)
        sc = mpc(s)
        if zc == 0:
            return SeriesResult(mpc(0), 1, 0.0)
        r = abs(zc)
        sigma_minus = max(0.0, -float(sc.real))
        total = mpc(0)
        zk = mpc(1)
        tolm = mpf(tol)
        for k in range(1, term_cap + 1):
            zk *= zc
            total += zk if k == 1 else zk * mp.exp(-sc * mp.log(k))
            bound = power_geometric_tail(k, sigma_minus, float(r))
            if bound <= tolm:
                return SeriesResult(total, k, bound)
    raise NonConvergence(
        f"polylog(s={s!r}, z={z!r}, dps={dps}) did not reach tol={tol!r} within {term_cap} terms"
    )


def polylog_partial(s: complex, z: complex, n_terms: int) -> complex:
    """Plain partial sum of the Li_s(z) series over exactly n_terms terms.

    No domain or tolerance logic; used for tail-bound validation.
    """
    s = complex(s)
    z = complex(z)
    acc = KahanSum()
    zk = 1 + 0j
    for k in range(1, n_terms + 1):
        zk *= z
        acc.add(zk if k == 1 else zk * cmath.exp(-s * math.log(k)))
    return acc.value


def polylog_closed_form(n: int, z: complex) -> complex:
    """Closed form of Li_n(z) for n in {1, 0, -1, -2, -3, -4}.

    Li_1(z) = -log(1 - z) on the principal branch; the non-positive
    orders are rational functions with a pole at z = 1 only.

    Raises:
        DomainError: unsupported order, z at the pole, or z on the
            branch cut [1, inf) for n = 1.
    """
    if n not in (1, 0, -1, -2, -3, -4):
        raise DomainError(f"no closed form wired for order {n!r}")
    z = complex(z)
    if z == 1:
        raise DomainError("z = 1 is a pole of every wired closed form")
    if n == 1:
        if z.imag == 0.0 and z.real >= 1.0:
            raise DomainError("z on the branch cut [1, inf) of Li_1")
        return -log1m(z)
    return polylog_neg_int(-n, z)


@lru_cache(maxsize=None)
def _neg_order_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of P_n with Li_{-n}(z) = P_n(z)/(1-z)^{n+1}.

    P_0 = z and P_{n+1}(z) = z * ((1 - z) P_n'(z) + (n + 1) P_n(z)),
    which is the z d/dz recurrence applied to the rational form.
    """
    if n == 0:
        return (0, 1)
    p = _neg_order_poly(n - 1)
    dp = [i * p[i] for i in range(1, len(p))]
    # (1 - z) * P' : subtract the shifted derivative
    q = [0] * (len(dp) + 1)
    for i, c in enumerate(dp):
        q[i] += c
        q[i + 1] -= c
    # + n * P
    for i, c in enumerate(p):
        if i < len(q):
            q[i] += n * c
        else:
            q.append(n * c)
    while q and q[-1] == 0:
        q.pop()
    # * z
    return tuple([0] + q)


def polylog_neg_int(n: int, z: complex) -> complex:
    """Li_{-n}(z) for integer n >= 0 via exact rational closed form.

    The numerator polynomial is built once per order from the
    z d/dz recurrence and cached with exact integer coefficients.

    Raises:
        DomainError: n negative or non-integer, or z = 1 (the pole).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"polylog_neg_int expects an integer n >= 0, got {n!r}")
    z = complex(z)
    if z == 1:
        raise DomainError("z = 1 is the pole of Li_{-n}")
    coeffs = _neg_order_poly(n)
    num = 0j
    for c in reversed(coeffs):
        num = num * z + c
    return num / (1 - z) ** (n + 1)


def zeta_real(
    s: float,
    tol: float = 1e-12,
    *,
    eps_zeta: float = EPS_ZETA,
    term_cap: int = TERM_CAP,
    dps: int | None = None,
) -> SeriesResult:
    """zeta(s) for real s > 1 + eps_zeta with a certified remainder.

    The head sum_{k < N} k^-s is summed directly and the tail from N is
    evaluated by Euler-Maclaurin corrections; the reported tail_bound is
    the classical first-omitted-correction remainder bound. N adapts
    upward until the bound meets tol. Direct summation alone cannot
    reach 1e-12 for s = 2 within any sane term budget, which is why the
    corrected tail is used.

    Raises:
        DomainError: s too close to (or below) 1.
        NonConvergence: no admissible N within term_cap meets tol.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if isinstance(s, complex):
        raise DomainError("zeta_real takes a real order")
    s = float(s)
    if s < 1.0 + eps_zeta:
        raise DomainError(f"zeta_real requires s >= 1 + {eps_zeta!r}, got {s!r}")
    if dps is not None:
        return _zeta_real_mp(s, tol, term_cap, dps)
    n = 16
    while True:
        tail_val, rem = dirichlet_tail(s, n)
        if rem <= tol:
            break
        n *= 2
        if n > term_cap:
            raise NonConvergence(f"zeta_real(s={s!r}) cannot meet tol={tol!r}")
    acc = KahanSum()
    for k in range(1, n):
        acc.add(complex(k ** -s))
    value = acc.value + tail_val
    return SeriesResult(require_finite(value, "zeta_real").real, n - 1, rem)


def _zeta_real_mp(s: float, tol: float, term_cap: int, dps: int) -> SeriesResult:
    from mpmath import mp, mpf

    from .numerics import _BERNOULLI

    with mp.workdps(dps):
        sm = mpf(s)
        corrections = 7  # first omitted correction is B_16, the last one wired
        n = 16
        while True:
            nm = mpf(n)
            # Euler-Maclaurin in working precision, mirroring dirichlet_tail
            val = nm ** (1 - sm) / (sm - 1) + nm ** (-sm) / 2
            poch = sm
            for j in range(1, corrections + 1):
                b2j = mpf(_BERNOULLI[j - 1].numerator) / _BERNOULLI[j - 1].denominator
                val += b2j / mp.factorial(2 * j) * poch * nm ** (-sm - 2 * j + 1)
                poch *= (sm + 2 * j - 1) * (sm + 2 * j)
            m = corrections
            rem = (
                abs(mpf(_BERNOULLI[m].numerator) / _BERNOULLI[m].denominator)
                / mp.factorial(2 * m + 2) * poch * nm ** (-sm - 2 * m - 1)
            )
            if rem <= tol:
                break
            n *= 2
            if n > term_cap:
                raise NonConvergence(f"zeta_real(s={s!r}, dps={dps}) cannot meet tol={tol!r}")
        head = mpf(0)
        for k in range(1, n):
            head += mpf(k) ** (-sm)
        return SeriesResult(head + val, n - 1, float(rem))
