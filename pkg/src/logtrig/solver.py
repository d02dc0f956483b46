"""Inversion of alpha = K'(k)/K(k) for the modulus.

The map k -> K'/K is strictly decreasing from +inf (k -> 0) to 0 (k -> 1),
so bisection always succeeds inside a bracket.  To keep full relative
accuracy the solve always targets the smaller of the pair (k, k'): for
alpha < 1 the mirrored problem 1/alpha is solved and the roles swapped,
since alpha(k') = 1/alpha(k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import EllipticParams, agm, complementary_modulus, complete_e
from .errors import DomainError, SolverError

__all__ = ["SolverConfig", "alpha_from_modulus", "modulus_from_alpha"]


@dataclass(frozen=True)
class SolverConfig:
    tol_alpha: float = 1e-13
    max_iter: int = 200
    bracket_lo: float = 1e-12
    bracket_hi: float = 1.0 - 1e-12

    def __post_init__(self):
        if not (0.0 < self.bracket_lo < self.bracket_hi < 1.0):
            raise DomainError("bracket must satisfy 0 < lo < hi < 1")
        if self.tol_alpha <= 0.0 or self.max_iter <= 0:
            raise DomainError("tol_alpha and max_iter must be positive")


def alpha_from_modulus(k: float) -> float:
    """K(k')/K(k), computed as agm(1, k')/agm(1, k) to dodge cancellation."""
    if not 0.0 < k < 1.0:
        raise DomainError(f"modulus must lie strictly inside (0, 1), got {k}")
    return agm(1.0, complementary_modulus(k)) / agm(1.0, k)


def _solve_decreasing(alpha: float, cfg: SolverConfig) -> float:
    """Bisection for alpha(k) = alpha with alpha >= 1, so k <= 1/sqrt(2)."""
    lo, hi = cfg.bracket_lo, cfg.bracket_hi
    if alpha > 10.0:
        # asymptotic seed k ~ 4 sqrt(q) keeps the bracket tight
        seed = 4.0 * math.exp(-0.5 * math.pi * alpha)
        lo = max(5e-300, 0.25 * seed)
        hi = min(hi, max(4.0 * seed, 1e-8))
    f_lo = alpha_from_modulus(lo) - alpha
    f_hi = alpha_from_modulus(hi) - alpha
    if f_lo < 0.0 or f_hi > 0.0:
        raise SolverError(f"alpha={alpha} not bracketed by ({lo}, {hi})",
                          bracket=(lo, hi))
    for _ in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if alpha_from_modulus(mid) - alpha > 0.0:
            lo = mid
        else:
            hi = mid
    k = 0.5 * (lo + hi)
    if abs(alpha_from_modulus(k) - alpha) > cfg.tol_alpha * alpha:
        raise SolverError(
            f"residual above tol_alpha={cfg.tol_alpha} for alpha={alpha}",
            bracket=(lo, hi))
    return k


def modulus_from_alpha(alpha: float, cfg: SolverConfig | None = None) -> EllipticParams:
    """Parameter bundle whose ratio K'/K equals the prescribed alpha."""
    if not alpha > 0.0 or math.isinf(alpha) or math.isnan(alpha):
        raise DomainError(f"alpha must be a positive real, got {alpha}")
    cfg = cfg or SolverConfig()
    if alpha >= 1.0:
        k = _solve_decreasing(alpha, cfg)
        k_prime = complementary_modulus(k)
    else:
        k_prime = _solve_decreasing(1.0 / alpha, cfg)
        k = complementary_modulus(k_prime)
    if not (0.0 < k < 1.0 and 0.0 < k_prime < 1.0):
        # one modulus is within half an ulp of 1; the pair cannot be carried
        # in double precision (roughly alpha outside (0.09, 13))
        raise SolverError(
            f"modulus pair for alpha={alpha} degenerates in double precision")
    m_direct = agm(1.0, k_prime)
    m_comp = agm(1.0, k)
    return EllipticParams(
        alpha=alpha,
        k=k,
        k_prime=k_prime,
        big_k=math.pi / (2.0 * m_direct),
        big_k_prime=math.pi / (2.0 * m_comp),
        big_e=complete_e(k),
        big_e_prime=complete_e(k_prime),
        q=math.exp(-math.pi * alpha),
    )
