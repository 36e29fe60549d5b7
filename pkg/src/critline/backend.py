"""Bridging helpers between mpmath (public number type) and gmpy2 (hot loops).

All public APIs in this package speak mpmath ``mpf``/``mpc``.  The inner
Euler-Maclaurin summation runs on gmpy2's MPFR/MPC types, which are about
three times faster per transcendental call.  Conversions below are exact
(mantissa/exponent transfers, no decimal round trips) provided the active
gmpy2 context carries enough precision; callers wrap core work in
``with gmpy_context(bits):``.
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2
import mpmath
from mpmath import mp
from mpmath.libmp import from_man_exp

__all__ = [
    "bits_for_digits",
    "gmpy_context",
    "to_mpfr",
    "to_gmpy_mpc",
    "mpf_from_mpfr",
    "mpc_from_gmpy",
    "mpf_pow10",
]

LOG2_10 = math.log2(10)


def bits_for_digits(digits) -> int:
    """Binary precision comfortably covering `digits` decimal digits."""
    return int(digits * LOG2_10) + 12


def gmpy_context(bits: int) -> "gmpy2.context":
    """A gmpy2 context manager at `bits` precision (round-to-nearest)."""
    return gmpy2.context(precision=bits, allow_complex=True)


def to_mpfr(x) -> "gmpy2.mpfr":
    """mpf / int / Fraction / decimal string -> mpfr under the active context."""
    if isinstance(x, gmpy2.mpfr):
        return x
    if isinstance(x, (int, float, str)):
        return gmpy2.mpfr(x)
    if isinstance(x, Fraction):
        return gmpy2.mpfr(x.numerator) / gmpy2.mpfr(x.denominator)
    # mpmath mpf: exact mantissa/exponent transfer
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return gmpy2.mpfr(0)
    m = gmpy2.mpfr(-man if sign else man)
    return gmpy2.mul_2exp(m, exp) if exp >= 0 else gmpy2.div_2exp(m, -exp)


def to_gmpy_mpc(z) -> "gmpy2.mpc":
    z = mpmath.mpc(z)
    return gmpy2.mpc(to_mpfr(z.real), to_mpfr(z.imag))


def mpf_from_mpfr(x: "gmpy2.mpfr") -> mpmath.mpf:
    """Exact gmpy2.mpfr -> mpmath.mpf (no rounding)."""
    if gmpy2.is_nan(x):
        return mp.nan
    if gmpy2.is_infinite(x):
        return mp.inf if x > 0 else mp.ninf
    if gmpy2.is_zero(x):
        return mp.mpf(0)
    man, exp = x.as_mantissa_exp()
    return mp.make_mpf(from_man_exp(int(man), int(exp)))


def mpc_from_gmpy(z: "gmpy2.mpc") -> mpmath.mpc:
    return mp.make_mpc((mpf_from_mpfr(z.real)._mpf_, mpf_from_mpfr(z.imag)._mpf_))


def mpf_pow10(log10_value: float) -> mpmath.mpf:
    """10**log10_value as an mpf, safe for exponents far below float range."""
    if log10_value == -math.inf:
        return mp.mpf(0)
    n = int(math.floor(log10_value))
    frac = log10_value - n
    return mp.mpf(10.0 ** frac) * mp.mpf(10) ** n
