"""Coefficient reconstruction and Hankel/Fekete-Szego functionals.

For f(z) = z + a2 z^2 + a3 z^3 + ... whose compositional inverse g is
subject to the same geometric condition, matching Taylor coefficients in

    z f'(z)/f(z)      = beta + (1 - beta) p(z)   (starlike of order beta)
    1 + z f''(z)/f'(z) = beta + (1 - beta) p(z)   (convex of order beta)

for f and for g yields two coefficient triples (c1, c2, c3) and
(d1, d2, d3) with d1 = -c1.  Solving the difference equations gives closed
forms for (a2, a3, a4); `reconstruct` evaluates them.  Deliberately, only
the differences c2 - d2 and c3 - d3 are used: the sum constraint implied by
the full system is *not* enforced, so the feasible set here matches the
relaxation under which the closed-form bounds are derived.

`verify_coefficient_system` closes the loop in the other direction: it
rebuilds f and g as truncated series, extracts the functional coefficients
by series division, and reports how far the six hand-derived identities
are from what the series algebra produces.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

from . import series as ts
from .caratheodory import PCoefficients
from .errors import ConstraintViolation, DomainError, InsufficientCoefficients

# |p.c1 + q.c1| above this violates the d1 = -c1 coupling
C1_COUPLING_TOL = 1e-12


class FamilyId(enum.Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"


@dataclass(frozen=True)
class Order:
    """Order parameter beta of the geometric condition, 0 <= beta < 1."""

    beta: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.beta < 1.0:
            raise DomainError(f"beta must lie in [0, 1), got {self.beta}")


@dataclass(frozen=True)
class BiCoefficients:
    """Reconstructed Taylor coefficients (a2, a3, a4)."""

    a2: complex
    a3: complex
    a4: complex

    def __post_init__(self) -> None:
        for name in ("a2", "a3", "a4"):
            v = complex(getattr(self, name))
            if not (cmath.isfinite(v)):
                raise ConstraintViolation(f"{name} must be finite, got {v}")

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return (complex(self.a2), complex(self.a3), complex(self.a4))


def reconstruct(
    family: FamilyId, order: Order, p: PCoefficients, q: PCoefficients
) -> BiCoefficients:
    """Closed-form (a2, a3, a4) from a coefficient pair with d1 = -c1.

    STARLIKE:
        a2 = (1-b) c1
        a3 = (1-b)^2 c1^2 + (1-b)(c2 - d2)/4
        a4 = (2/3)(1-b)^3 c1^3 + (5/8)(1-b)^2 c1 (c2 - d2)
             + (1/6)(1-b)(c3 - d3)
    CONVEX:
        a2 = (1-b) c1 / 2
        a3 = (1-b)^2 c1^2 / 4 + (1-b)(c2 - d2)/12
        a4 = (5/48)(1-b)^3 c1^3 + (5/48)(1-b)^2 c1 (c2 - d2)
             + (1/24)(1-b)(c3 - d3)
    """
    if abs(p.c1 + q.c1) > C1_COUPLING_TOL:
        raise ConstraintViolation(
            f"expected q.c1 = -p.c1, got p.c1={p.c1!r}, q.c1={q.c1!r}"
        )
    w = 1.0 - order.beta
    c1 = complex(p.c1)
    dc2 = complex(p.c2) - complex(q.c2)
    dc3 = complex(p.c3) - complex(q.c3)
    if family is FamilyId.STARLIKE:
        a2 = w * c1
        a3 = w * w * c1 * c1 + w * dc2 / 4.0
        a4 = (2.0 / 3.0) * w**3 * c1**3 + (5.0 / 8.0) * w * w * c1 * dc2 \
            + w * dc3 / 6.0
    else:
        a2 = w * c1 / 2.0
        a3 = w * w * c1 * c1 / 4.0 + w * dc2 / 12.0
        a4 = (5.0 / 48.0) * w**3 * c1**3 + (5.0 / 48.0) * w * w * c1 * dc2 \
            + w * dc3 / 24.0
    return BiCoefficients(a2, a3, a4)


def hankel_2_2(a: BiCoefficients) -> complex:
    """Second Hankel determinant a2*a4 - a3^2."""
    return complex(a.a2) * complex(a.a4) - complex(a.a3) ** 2


def fekete_szego(a: BiCoefficients, mu: float) -> complex:
    """Generalized Fekete-Szego functional a3 - mu*a2^2."""
    return complex(a.a3) - mu * complex(a.a2) ** 2


def hankel_matrix_det(coeffs, n: int, q: int) -> complex:
    """Determinant of the q x q Hankel matrix of Taylor coefficients.

    `coeffs` lists a1, a2, ... (so coeffs[0] is a1 = 1 for normalized
    functions); entry (i, j) of the matrix is a_{n+i+j}.  Only q <= 3
    arises here, so the determinant is expanded directly.
    """
    if n < 1 or q < 1:
        raise DomainError(f"need n >= 1 and q >= 1, got n={n}, q={q}")
    if q > 3:
        raise DomainError("Hankel determinants beyond 3x3 are out of scope")
    needed = n + 2 * q - 2
    if len(coeffs) < needed:
        raise InsufficientCoefficients(
            f"need coefficients through a_{needed}, got {len(coeffs)}"
        )

    def a(m: int) -> complex:
        return complex(coeffs[m - 1])

    if q == 1:
        return a(n)
    if q == 2:
        return a(n) * a(n + 2) - a(n + 1) ** 2
    return (
        a(n) * (a(n + 2) * a(n + 4) - a(n + 3) ** 2)
        - a(n + 1) * (a(n + 1) * a(n + 4) - a(n + 2) * a(n + 3))
        + a(n + 2) * (a(n + 1) * a(n + 3) - a(n + 2) ** 2)
    )


def series_from_bicoefficients(
    a: BiCoefficients, order: int = 4
) -> ts.TruncatedSeries:
    """The normalized polynomial z + a2 z^2 + a3 z^3 + a4 z^4."""
    return ts.TruncatedSeries.from_coeffs([0, 1, a.a2, a.a3, a.a4], order)


# closed-form left-hand sides of the six coefficient equations, per family
def _lhs_starlike(a2: complex, a3: complex, a4: complex):
    direct = (
        a2,
        2.0 * a3 - a2 * a2,
        3.0 * a4 - 3.0 * a3 * a2 + a2**3,
    )
    inverse = (
        -a2,
        3.0 * a2 * a2 - 2.0 * a3,
        -10.0 * a2**3 + 12.0 * a3 * a2 - 3.0 * a4,
    )
    return direct, inverse


def _lhs_convex(a2: complex, a3: complex, a4: complex):
    direct = (
        2.0 * a2,
        6.0 * a3 - 4.0 * a2 * a2,
        12.0 * a4 - 18.0 * a3 * a2 + 8.0 * a2**3,
    )
    inverse = (
        -2.0 * a2,
        8.0 * a2 * a2 - 6.0 * a3,
        -32.0 * a2**3 + 42.0 * a3 * a2 - 12.0 * a4,
    )
    return direct, inverse


@dataclass(frozen=True)
class SystemReport:
    """Residuals of the six coefficient equations for one (family, beta, a)."""

    family: FamilyId
    beta: float
    p: PCoefficients
    q: PCoefficients
    residuals: tuple[float, ...]

    @property
    def max_residual(self) -> float:
        return max(self.residuals)


def verify_coefficient_system(
    family: FamilyId, order: Order, a: BiCoefficients
) -> SystemReport:
    """Check the hand-derived coefficient equations against series algebra.

    Builds f = z + a2 z^2 + a3 z^3 + a4 z^4 and its compositional inverse,
    extracts (c1..c3) and (d1..d3) from the family's functional by solving
    beta + (1-beta) p = functional, and reports |lhs_k - (1-beta) c_k| for
    all six equations.  The equations are algebraic identities, so residuals
    are rounding-level whenever the series engine is correct.
    """
    functional = (
        ts.starlike_functional
        if family is FamilyId.STARLIKE
        else ts.convex_functional
    )
    w = 1.0 - order.beta
    f = series_from_bicoefficients(a)
    g = ts.invert_composition(f)
    func_f = functional(f)
    func_g = functional(g)
    p = PCoefficients(*(func_f[k] / w for k in (1, 2, 3)))
    q = PCoefficients(*(func_g[k] / w for k in (1, 2, 3)))

    a2, a3, a4 = a.as_tuple()
    lhs = _lhs_starlike if family is FamilyId.STARLIKE else _lhs_convex
    direct, inverse = lhs(a2, a3, a4)
    residuals = tuple(
        abs(val - func[k + 1])
        for func, side in ((func_f, direct), (func_g, inverse))
        for k, val in enumerate(side)
    )
    return SystemReport(family, order.beta, p, q, residuals)
