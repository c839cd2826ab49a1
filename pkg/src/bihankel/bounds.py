"""Closed-form bounds on |a2*a4 - a3^2| for bi-starlike and bi-convex maps.

The triangle-inequality argument that produces the bounds replaces the two
free disk parameters by their moduli (lam, mu) and majorizes

    |a2 a4 - a3^2| <= t1 + t2 (lam + mu) + t3 (lam^2 + mu^2)
                      + t4 (lam + mu)^2

with c-dependent coefficients t1..t4 (t1, t2, t4 >= 0 and t3 <= 0 on
[0, 2]).  The surface attains its maximum at the corner lam = mu = 1, where
it collapses to an even quartic in c:

    STARLIKE: Q(c) = (1-b)^2/48  * [(16 b^2 - 26 b + 5) c^4
                                    + 24 (2 - b) c^2 + 48]
    CONVEX:   Q(c) = (1-b)^2/288 * [(3 b^2 - 3 b - 4) c^4
                                    + 4 (8 - 3 b) c^2 + 32]

Maximizing Q over c in [0, 2] gives the closed-form bounds:

    STARLIKE: (4/3)(1-b)^2 (4 b^2 - 8 b + 5)          for b <= (29-sqrt(137))/32
              (1-b)^2 (13 b^2 - 14 b - 7)
                      / (16 b^2 - 26 b + 5)            otherwise (interior max)
    CONVEX:   (1-b)^2/24 * (5 b^2 + 8 b - 32)
                      / (3 b^2 - 3 b - 4)               (always interior max)

Everything here is a pure function of scalars (or numpy arrays in c), so
grid-based verification can evaluate the same expressions the closed forms
are made of.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .functionals import FamilyId


class Branch(enum.Enum):
    BOUNDARY_C2 = "BOUNDARY_C2"
    INTERIOR_CRITICAL = "INTERIOR_CRITICAL"


@dataclass(frozen=True)
class BoundResult:
    """Bound value for one (family, beta) with its active branch."""

    family: FamilyId
    beta: float
    bound: float
    branch: Branch
    critical_c: float


@dataclass(frozen=True)
class Thresholds:
    """The two beta values organizing the starlike branch analysis.

    quartic_sign_change: (13 - sqrt(89))/16, where the c^4 coefficient of
    the starlike quartic changes sign (~0.222876).
    branch_split: (29 - sqrt(137))/32, where the interior critical point
    crosses c = 2 and the bound switches branch (~0.540478).
    """

    quartic_sign_change: float
    branch_split: float


def thresholds() -> Thresholds:
    return Thresholds(
        quartic_sign_change=(13.0 - math.sqrt(89.0)) / 16.0,
        branch_split=(29.0 - math.sqrt(137.0)) / 32.0,
    )


def check_beta(beta: float) -> float:
    """Validate beta in [0, 1); out-of-domain values raise, never clamp."""
    beta = float(beta)
    if not 0.0 <= beta < 1.0:
        raise DomainError(f"beta must lie in [0, 1), got {beta}")
    return beta


def _check_c(c) -> None:
    arr = np.asarray(c)
    if np.any(arr < 0.0) or np.any(arr > 2.0):
        raise DomainError("c must lie in [0, 2]")


def _check_unit(value, name: str) -> None:
    arr = np.asarray(value)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError(f"{name} must lie in [0, 1]")


def starlike_surrogate_terms(c, beta: float):
    """The four c-profiles of the starlike majorant; accepts arrays in c.

    t1 = (1-b)^2/12 * [(1 + 4 (1-b)^2) c^4 - 2 c^3 + 8 c]
    t2 = (1-b)^2/48 * c^2 (4 - c^2) (7 - 3 b)
    t3 = (1-b)^2/24 * c (4 - c^2) (c - 2)
    t4 = (1-b)^2/64 * (4 - c^2)^2
    """
    beta = check_beta(beta)
    _check_c(c)
    w2 = (1.0 - beta) ** 2
    gap = 4.0 - c * c
    t1 = w2 / 12.0 * ((1.0 + 4.0 * w2) * c**4 - 2.0 * c**3 + 8.0 * c)
    t2 = w2 / 48.0 * c * c * gap * (7.0 - 3.0 * beta)
    t3 = w2 / 24.0 * c * gap * (c - 2.0)
    t4 = w2 / 64.0 * gap * gap
    return t1, t2, t3, t4


def convex_surrogate_terms(c, beta: float):
    """The four c-profiles of the convex majorant; accepts arrays in c.

    t1 = (1-b)^2/96  * [(1 + (1-b)^2) c^4 - 2 c^3 + 8 c]
    t2 = (1-b)^2/192 * c^2 (4 - c^2) (3 - b)
    t3 = (1-b)^2/192 * c (4 - c^2) (c - 2)
    t4 = (1-b)^2/576 * (4 - c^2)^2
    """
    beta = check_beta(beta)
    _check_c(c)
    w2 = (1.0 - beta) ** 2
    gap = 4.0 - c * c
    t1 = w2 / 96.0 * ((1.0 + w2) * c**4 - 2.0 * c**3 + 8.0 * c)
    t2 = w2 / 192.0 * c * c * gap * (3.0 - beta)
    t3 = w2 / 192.0 * c * gap * (c - 2.0)
    t4 = w2 / 576.0 * gap * gap
    return t1, t2, t3, t4


def surrogate_terms(family: FamilyId, c, beta: float):
    if family is FamilyId.STARLIKE:
        return starlike_surrogate_terms(c, beta)
    return convex_surrogate_terms(c, beta)


@dataclass(frozen=True)
class QuarticProfile:
    """Even quartic Q(c) = alpha4 c^4 + alpha2 c^2 + alpha0 of one family.

    Q is the corner value of the majorant surface; `terms` exposes the
    underlying c-profiles so that Q(c) = t1 + 2 t2 + 2 t3 + 4 t4 can be
    cross-checked term by term.
    """

    family: FamilyId
    beta: float
    alpha4: float
    alpha2: float
    alpha0: float

    def terms(self, c):
        return surrogate_terms(self.family, c, self.beta)

    def value(self, c):
        _check_c(c)
        c2 = c * c
        return self.alpha4 * c2 * c2 + self.alpha2 * c2 + self.alpha0

    def derivative(self, c):
        _check_c(c)
        return 4.0 * self.alpha4 * c**3 + 2.0 * self.alpha2 * c

    def second_derivative(self, c):
        _check_c(c)
        return 12.0 * self.alpha4 * c * c + 2.0 * self.alpha2

    def surface(self, lam, mu, c):
        """Majorant F(lam, mu) at fixed c; accepts arrays in lam and mu."""
        _check_unit(lam, "lambda")
        _check_unit(mu, "mu")
        t1, t2, t3, t4 = self.terms(c)
        s = lam + mu
        return t1 + t2 * s + t3 * (lam * lam + mu * mu) + t4 * s * s


def quartic_profile(family: FamilyId, beta: float) -> QuarticProfile:
    beta = check_beta(beta)
    w2 = (1.0 - beta) ** 2
    if family is FamilyId.STARLIKE:
        scale = w2 / 48.0
        return QuarticProfile(
            family,
            beta,
            alpha4=scale * (16.0 * beta * beta - 26.0 * beta + 5.0),
            alpha2=scale * 24.0 * (2.0 - beta),
            alpha0=scale * 48.0,
        )
    scale = w2 / 288.0
    return QuarticProfile(
        family,
        beta,
        alpha4=scale * (3.0 * beta * beta - 3.0 * beta - 4.0),
        alpha2=scale * 4.0 * (8.0 - 3.0 * beta),
        alpha0=scale * 32.0,
    )


def corner_value(family: FamilyId, c, beta: float):
    """Q(c): the majorant surface at lam = mu = 1."""
    return quartic_profile(family, beta).value(c)


def surrogate_surface(profile: QuarticProfile, lam, mu, c):
    return profile.surface(lam, mu, c)


def critical_point(family: FamilyId, beta: float) -> float | None:
    """Interior stationary point of Q, when the quartic has one.

    STARLIKE: None while 16 b^2 - 26 b + 5 >= 0, else
              sqrt(-12 (2 - b) / (16 b^2 - 26 b + 5)).
    CONVEX:   always sqrt(2 (3 b - 8) / (3 b^2 - 3 b - 4)); the denominator
              is negative throughout [0, 1), and the value never exceeds 2.
    """
    beta = check_beta(beta)
    if family is FamilyId.STARLIKE:
        lead = 16.0 * beta * beta - 26.0 * beta + 5.0
        if lead >= 0.0:
            return None
        return math.sqrt(-12.0 * (2.0 - beta) / lead)
    lead = 3.0 * beta * beta - 3.0 * beta - 4.0
    return math.sqrt(2.0 * (3.0 * beta - 8.0) / lead)


def starlike_h22_bound(beta: float) -> BoundResult:
    """max over [0, 2] of the starlike quartic, in closed form.

    Up to and including the branch split the quartic is nondecreasing and
    the maximum sits on the boundary c = 2; past it the interior critical
    point takes over.  Both branches agree at the split.
    """
    beta = check_beta(beta)
    w2 = (1.0 - beta) ** 2
    if beta <= thresholds().branch_split:
        bound = 4.0 * w2 * (4.0 * beta * beta - 8.0 * beta + 5.0) / 3.0
        return BoundResult(FamilyId.STARLIKE, beta, bound, Branch.BOUNDARY_C2, 2.0)
    lead = 16.0 * beta * beta - 26.0 * beta + 5.0
    bound = w2 * (13.0 * beta * beta - 14.0 * beta - 7.0) / lead
    c_star = critical_point(FamilyId.STARLIKE, beta)
    assert c_star is not None
    return BoundResult(
        FamilyId.STARLIKE, beta, bound, Branch.INTERIOR_CRITICAL, c_star
    )


def convex_h22_bound(beta: float) -> BoundResult:
    """max over [0, 2] of the convex quartic; the critical point always wins."""
    beta = check_beta(beta)
    w2 = (1.0 - beta) ** 2
    lead = 3.0 * beta * beta - 3.0 * beta - 4.0
    bound = w2 / 24.0 * (5.0 * beta * beta + 8.0 * beta - 32.0) / lead
    c_star = critical_point(FamilyId.CONVEX, beta)
    return BoundResult(
        FamilyId.CONVEX, beta, bound, Branch.INTERIOR_CRITICAL, c_star
    )


def h22_bound(family: FamilyId, beta: float) -> BoundResult:
    if family is FamilyId.STARLIKE:
        return starlike_h22_bound(beta)
    return convex_h22_bound(beta)


def fekete_szego_bound(family: FamilyId, beta: float, mu: float) -> float:
    """Piecewise bound on |a3 - mu a2^2| for the two families.

    STARLIKE: 1 - b on mu in [1/2, 3/2], else 2 (1-b) |mu - 1|.
    CONVEX:   (1-b)/3 on mu in [2/3, 4/3], else (1-b) |mu - 1|.
    Both pieces agree at the joins.
    """
    beta = check_beta(beta)
    w = 1.0 - beta
    mu = float(mu)
    if family is FamilyId.STARLIKE:
        if 0.5 <= mu <= 1.5:
            return w
        return 2.0 * w * abs(mu - 1.0)
    if 2.0 / 3.0 <= mu <= 4.0 / 3.0:
        return w / 3.0
    return w * abs(mu - 1.0)
