"""Numerical verification of the integral identities behind the cipher.

The cipher's coefficient transform rests on the identity

    integral_0^inf exp(-x) * x^(s+n-1) dx = (s+n-1)!

i.e. the transform of exp(-x) * x^n evaluated at s equals Gamma(s+n). This
module checks that identity, plus the scaling and exponent-shift properties
of the transform, by actually integrating.

The integrands are exp(-x) times a polynomial, so Gauss-Laguerre quadrature
with m nodes is exact for polynomial degree up to 2m-1; we always take at
least one node more than exactness requires, leaving floating-point rounding
as the only error source. Scaled integrands exp(-a*x) with a != 1 fall
outside that weight family and are handled by adaptive quadrature instead.

Exponents default to a bound of 40, where the exact factorial still
compares meaningfully as a double. ``log_space=True`` switches the sum and
the comparison to log scale (log-sum-exp against the log-factorial), which
extends the usable range to exponents of several hundred.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.special import logsumexp, roots_laguerre

from .cipher import factorial
from .errors import ExactnessBoundExceeded, InvalidParameter, InvalidScale

DEFAULT_EXACTNESS_BOUND = 40
LOG_SPACE_EXACTNESS_BOUND = 300


@dataclass(frozen=True)
class OracleResult:
    """A numeric integral next to its exact factorial reference."""

    numeric: float
    exact: int
    relative_error: float

    @classmethod
    def from_numeric(cls, numeric: float, exact: int) -> "OracleResult":
        return cls(numeric, exact, abs(numeric - exact) / exact)


@lru_cache(maxsize=None)
def _laguerre_rule(node_count: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = roots_laguerre(node_count)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _auto_node_count(degree: int) -> int:
    # one node beyond the exactness minimum ceil((degree+1)/2)
    return degree // 2 + 2


def _moment(degree: int, node_count: int) -> float:
    """Quadrature of exp(-x) * x^degree with the given node count."""
    nodes, weights = _laguerre_rule(node_count)
    return float(weights @ nodes**degree)


def _log_moment(degree: int, node_count: int) -> float:
    nodes, weights = _laguerre_rule(node_count)
    return float(logsumexp(np.log(weights) + degree * np.log(nodes)))


def _resolve_bound(exactness_bound: int | None, log_space: bool) -> int:
    if exactness_bound is not None:
        return exactness_bound
    return LOG_SPACE_EXACTNESS_BOUND if log_space else DEFAULT_EXACTNESS_BOUND


def numeric_mellin(
    n: int,
    s: int,
    *,
    nodes: int | None = None,
    exactness_bound: int | None = None,
    log_space: bool = False,
) -> OracleResult:
    """Integrate exp(-x) * x^n against x^(s-1) and compare to (s+n-1)!.

    The node count defaults to one more than polynomial exactness requires;
    pass ``nodes`` to request a (still exact) larger rule. Exponents beyond
    ``exactness_bound`` raise :class:`ExactnessBoundExceeded`; the bound
    defaults to 40, or 300 in log-space mode.
    """
    if n < 1 or s < 1:
        raise InvalidParameter(f"n and s must be >= 1, got n={n}, s={s}")
    degree = s + n - 1
    bound = _resolve_bound(exactness_bound, log_space)
    if degree > bound:
        raise ExactnessBoundExceeded(degree, bound)
    minimum = (degree + 2) // 2
    node_count = _auto_node_count(degree) if nodes is None else nodes
    if node_count < minimum:
        raise InvalidParameter(
            f"{node_count} nodes cannot integrate degree {degree} exactly (need >= {minimum})"
        )
    exact = factorial(degree)
    if log_space:
        log_numeric = _log_moment(degree, node_count)
        relative_error = abs(math.expm1(log_numeric - math.log(exact)))
        try:
            numeric = math.exp(log_numeric)
        except OverflowError:
            numeric = math.inf
        return OracleResult(numeric, exact, relative_error)
    return OracleResult.from_numeric(_moment(degree, node_count), exact)


def gamma_identity_check(
    n: int,
    s: int,
    tol: float,
    *,
    exactness_bound: int | None = None,
    log_space: bool = False,
) -> bool:
    """True iff the quadrature matches (s+n-1)! to within relative tol."""
    if tol <= 0:
        raise InvalidParameter(f"tolerance must be > 0, got {tol}")
    result = numeric_mellin(n, s, exactness_bound=exactness_bound, log_space=log_space)
    return result.relative_error <= tol


def scaling_check(
    a: float,
    n: int,
    s: int,
    tol: float,
    *,
    exactness_bound: int | None = None,
) -> bool:
    """Verify the scaling property: transforming exp(-a*x)*(a*x)^n at s
    multiplies the unscaled value by a^(-s).

    The integrand is no longer exp(-x) times a polynomial for a != 1, so it
    is integrated adaptively over [0, inf) and compared against
    a^(-s) * (s+n-1)!.
    """
    if a <= 0:
        raise InvalidScale(f"scale factor must be > 0, got {a}")
    if n < 1 or s < 1:
        raise InvalidParameter(f"n and s must be >= 1, got n={n}, s={s}")
    if tol <= 0:
        raise InvalidParameter(f"tolerance must be > 0, got {tol}")
    degree = s + n - 1
    bound = _resolve_bound(exactness_bound, log_space=False)
    if degree > bound:
        raise ExactnessBoundExceeded(degree, bound)

    def integrand(x: float) -> float:
        return math.exp(-a * x) * (a * x) ** n * x ** (s - 1)

    numeric, _ = quad(integrand, 0.0, np.inf, epsabs=0.0, epsrel=1e-12, limit=200)
    reference = a ** (-s) * factorial(degree)
    return abs(numeric - reference) / reference <= tol


def shift_check(
    a: int,
    n: int,
    s: int,
    tol: float,
    *,
    exactness_bound: int | None = None,
) -> bool:
    """Verify that multiplying the integrand by x^a shifts the transform
    argument: the transform of x^a * exp(-x) * x^n at s agrees with the
    transform of exp(-x) * x^n at s+a.

    Both sides are degree s+a+n-1 quadratures; they are computed with
    different node counts so the agreement is between two genuinely distinct
    sums, and the verdict uses a symmetric relative difference.
    """
    if a < 0:
        raise InvalidParameter(f"shift must be >= 0, got {a}")
    if n < 1 or s < 1:
        raise InvalidParameter(f"n and s must be >= 1, got n={n}, s={s}")
    if tol <= 0:
        raise InvalidParameter(f"tolerance must be > 0, got {tol}")
    degree = s + a + n - 1
    bound = _resolve_bound(exactness_bound, log_space=False)
    if degree > bound:
        raise ExactnessBoundExceeded(degree, bound)
    base = _auto_node_count(degree)
    lifted = _moment(degree, base)  # x^a folded into the integrand, evaluated at s
    shifted = _moment(degree, base + 2)  # plain integrand evaluated at s+a
    return abs(lifted - shifted) / max(abs(lifted), abs(shifted)) <= tol
