"""The two conjugate Dirichlet characters mod 5 and their derived constants.

The whole construction is pinned down by one convention: the character
labelled ``chi2`` is the one with chi(2) = i (the index-2 character of
modulus 5 in the Mathematica labelling), and ``chi3`` is its complex
conjugate.  Everything else -- the Gauss sum tau(chi), the root number
eps(chi) = tau(chi)/(i*sqrt(5)), and the rotation angle theta with
e^{2i*theta} = eps(chi) -- follows from that table.

theta enters every evaluation of the main combined function, so it is
never a fixed literal: all constants are computed at the caller's
requested precision and cached per precision level.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Literal

from mpmath import mp, mpc, mpf

__all__ = [
    "CharacterMod5",
    "ThetaConstants",
    "character",
    "gauss_sum",
    "epsilon",
    "epsilon_from_radicals",
    "theta_constants",
]

Label = Literal["chi2", "chi3"]

_GUARD_DIGITS = 10

_cache_lock = threading.Lock()
_gauss_cache: dict = {}
_theta_cache: dict = {}


@dataclass(frozen=True)
class CharacterMod5:
    """Value table of a Dirichlet character mod 5, indexed by residue 0..4."""

    label: Label
    values: tuple

    def __call__(self, n: int) -> mpc:
        return self.values[n % 5]

    def conjugate(self) -> "CharacterMod5":
        other = "chi3" if self.label == "chi2" else "chi2"
        return character(other)


@dataclass(frozen=True)
class ThetaConstants:
    """The rotation constants defined by e^{2i*theta} = eps(chi).

    tan_theta is the positive root of
        tan^2(theta) = (sqrt(2) - sqrt(1 + 1/sqrt(5)))
                     / (sqrt(2) + sqrt(1 + 1/sqrt(5)))
    and theta is taken in (0, pi/4), the branch consistent with
    tan(theta) = 0.284079... > 0.
    """

    tan_theta: mpf
    theta: mpf
    sec_theta: mpf
    epsilon_chi: mpc
    prec: int


# chi2(2) = i forces the rest of the table: 2^2 = 4, 2^3 = 3 (mod 5).
_CHI2_VALUES = (mpc(0), mpc(1), mpc(0, 1), mpc(0, -1), mpc(-1))
_CHI3_VALUES = tuple(v.conjugate() for v in _CHI2_VALUES)


def character(label: Label) -> CharacterMod5:
    """Full value table for ``chi2`` (chi(2) = i) or its conjugate ``chi3``.

    The entries are exact Gaussian units, so no precision argument is
    needed; they convert losslessly at any working precision.
    """
    if label == "chi2":
        return CharacterMod5("chi2", _CHI2_VALUES)
    if label == "chi3":
        return CharacterMod5("chi3", _CHI3_VALUES)
    raise ValueError(f"unknown character label: {label!r}")


def gauss_sum(chi: CharacterMod5, prec: int) -> mpc:
    """tau(chi) = sum_{k=1..5} chi(k) e^{2 pi i k / 5} at `prec` digits.

    For chi2 this equals 2(-sin(pi/5) + i sin(2 pi/5)); the conjugate
    character gives the conjugate sum.
    """
    _check_prec(prec)
    key = (chi.label, prec)
    with _cache_lock:
        hit = _gauss_cache.get(key)
    if hit is not None:
        return hit
    with mp.workdps(prec + _GUARD_DIGITS):
        total = mpc(0)
        for k in range(1, 6):
            total += chi(k) * mp.expjpi(mpf(2 * k) / 5)
        total = mpc(total)
    with _cache_lock:
        _gauss_cache[key] = total
    return total


def epsilon(chi: CharacterMod5, prec: int) -> mpc:
    """Root number eps(chi) = tau(chi) / (i sqrt(5)); unit modulus."""
    _check_prec(prec)
    with mp.workdps(prec + _GUARD_DIGITS):
        tau = gauss_sum(chi, prec + _GUARD_DIGITS)
        return mpc(tau / (mpc(0, 1) * mp.sqrt(5)))


def epsilon_from_radicals(prec: int) -> mpc:
    """The nested-radical closed form of eps(chi2):

        (1/sqrt(2)) * ( sqrt(1 + 1/sqrt(5)) + i sqrt(1 - 1/sqrt(5)) ).

    Kept as an independent route for consistency checks against
    :func:`epsilon`.
    """
    _check_prec(prec)
    with mp.workdps(prec + _GUARD_DIGITS):
        r5 = 1 / mp.sqrt(5)
        re = mp.sqrt(1 + r5)
        im = mp.sqrt(1 - r5)
        return mpc((re + mpc(0, 1) * im) / mp.sqrt(2))


def theta_constants(prec: int) -> ThetaConstants:
    """tan(theta), theta, sec(theta) and eps(chi) at `prec` digits, cached."""
    _check_prec(prec)
    with _cache_lock:
        hit = _theta_cache.get(prec)
    if hit is not None:
        return hit
    with mp.workdps(prec + _GUARD_DIGITS):
        root = mp.sqrt(1 + 1 / mp.sqrt(5))
        tan2 = (mp.sqrt(2) - root) / (mp.sqrt(2) + root)
        tan_theta = mp.sqrt(tan2)
        theta = mp.atan(tan_theta)
        sec_theta = 1 / mp.cos(theta)
        eps = epsilon(character("chi2"), prec + _GUARD_DIGITS)
        consts = ThetaConstants(
            tan_theta=mpf(tan_theta),
            theta=mpf(theta),
            sec_theta=mpf(sec_theta),
            epsilon_chi=mpc(eps),
            prec=prec,
        )
    with _cache_lock:
        _theta_cache[prec] = consts
    return consts


def _check_prec(prec: int) -> None:
    if prec < 10:
        raise ValueError(f"precision must be at least 10 digits, got {prec}")
