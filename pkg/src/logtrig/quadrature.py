"""Adaptive quadrature for integrands that mix x with log(2 cos x) type terms.

Two engines cooperate here:

* ``integrate_adaptive`` is a nested Gauss-Kronrod (7, 15) pair with
  bisection driven by the worst-panel error, the workhorse for smooth and
  mildly singular panels.
* ``integrate_endpoint_oscillatory`` handles the interval ends where
  log(2 cos x), log(2 sin x) or log(2 sin(x/2)) diverges.  Near such an end
  the substitution t = -log(...) maps the endpoint to t -> infinity, where
  the transformed integrand decays like exp(-t) while any trigonometric
  dependence on the log term becomes exactly periodic in t.  The tail is
  then accumulated period by period until a whole period stops mattering.

A fixed-rule tanh-sinh integrator is included as an independent route for
defining-integral oracles and endpoint-singular panels.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import AccuracyError, DomainError

__all__ = [
    "QuadratureResult",
    "EndpointOscillation",
    "integrate_adaptive",
    "integrate_endpoint_oscillatory",
    "tanh_sinh",
    "tail_split",
    "jump_points_arctan",
]


@dataclass(frozen=True)
class QuadratureResult:
    """Value of an integration run plus its a-posteriori error bound."""

    value: float
    error_estimate: float
    evaluations: int
    subdivisions: int

    def __post_init__(self):
        if self.error_estimate < 0 or self.evaluations < 1:
            raise ValueError("inconsistent quadrature result")


@dataclass(frozen=True)
class EndpointOscillation:
    """Describes one interval end where the log-trig argument blows up.

    ``freq`` is the multiplier c in trig(c * log(...) / alpha); the tail
    oscillation is periodic in t with period 2*pi*alpha/c.  ``freq = 0``
    means the tail decays without oscillating and is chunked in fixed steps.
    """

    endpoint: float
    map_kind: str  # "log-cos" | "log-sin" | "log-sin-half"
    alpha: float
    freq: float = 1.0

    def period(self) -> float | None:
        if self.freq <= 0.0:
            return None
        return 2.0 * math.pi * self.alpha / self.freq


# 15-point Kronrod nodes with the embedded 7-point Gauss rule.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _qk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    for j in range(7):
        dx = h * _XGK[j]
        s = f(c - dx) + f(c + dx)
        resk += _WGK[j] * s
        if j % 2 == 1:
            resg += _WG[(j - 1) // 2] * s
    return resk * h, abs((resk - resg) * h)


def _initial_segments(a: float, b: float, points: Iterable[float]) -> list[tuple[float, float]]:
    cuts = sorted({p for p in points if a < p < b})
    edges = [a] + cuts + [b]
    return [(edges[i], edges[i + 1]) for i in range(len(edges) - 1)]


def integrate_adaptive(f: Callable[[float], float], a: float, b: float,
                       tol: float = 1e-10, *, atol: float = 1e-14,
                       points: Sequence[float] = (),
                       limit: int = 4096) -> QuadratureResult:
    """Integrate f over [a, b] to relative tolerance ``tol`` (floor ``atol``).

    ``points`` lists interior abscissae where the integrand has known
    features (near-poles, jumps, boundary layers); they become panel
    boundaries so bisection can chase the feature from both sides.
    """
    if not a < b:
        raise DomainError(f"need a < b, got [{a}, {b}]")
    evaluations = 0
    subdivisions = 0
    heap: list[tuple[float, int, float, float, float, float]] = []
    frozen_vals: list[float] = []
    frozen_err = 0.0
    counter = 0
    total_val = 0.0
    total_err = 0.0
    for lo, hi in _initial_segments(a, b, points):
        val, err = _qk15(f, lo, hi)
        evaluations += 15
        counter += 1
        heapq.heappush(heap, (-err, counter, lo, hi, val, err))
        total_val += val
        total_err += err
    while total_err > max(atol, tol * abs(total_val)):
        if not heap:
            break
        if len(heap) + len(frozen_vals) >= limit:
            raise AccuracyError(
                f"subdivision limit {limit} reached (err {total_err:.3e})",
                best=total_val, error_estimate=total_err, evaluations=evaluations)
        neg_err, _, lo, hi, val, err = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            # panel narrower than float spacing; accept as is
            frozen_vals.append(val)
            frozen_err += err
            total_err = frozen_err + sum(e for (ne, c, l, h, v, e) in heap)
            continue
        v1, e1 = _qk15(f, lo, mid)
        v2, e2 = _qk15(f, mid, hi)
        evaluations += 30
        subdivisions += 1
        counter += 2
        heapq.heappush(heap, (-e1, counter - 1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, counter, mid, hi, v2, e2))
        total_val += v1 + v2 - val
        total_err += e1 + e2 - err
    vals = frozen_vals + [v for (_, _, _, _, v, _) in heap]
    errs = frozen_err + math.fsum(e for (_, _, _, _, _, e) in heap)
    value = math.fsum(vals)
    if errs > max(atol, tol * abs(value)) * 1.001:
        raise AccuracyError(
            f"tolerance not reached (err {errs:.3e})",
            best=value, error_estimate=errs, evaluations=evaluations)
    return QuadratureResult(value, errs, evaluations, subdivisions)


def tanh_sinh(f: Callable[[float], float], a: float, b: float,
              eps: float = 1e-13, max_level: int = 12) -> QuadratureResult:
    """Tanh-sinh rule on [a, b]; robust for integrable endpoint singularities.

    Doubles the node density per level until two successive levels agree to
    ``eps`` relative.  Endpoint nodes that round onto a or b are skipped,
    their weights being negligible by then.
    """
    if not a < b:
        raise DomainError(f"need a < b, got [{a}, {b}]")
    half = 0.5 * (b - a)
    piover2 = 0.5 * math.pi
    evaluations = 0
    prev = None
    value = 0.0
    err = math.inf
    for level in range(3, max_level + 1):
        h = 0.5 ** level
        total = 0.0
        j = 0
        small = 0
        while True:
            u = j * h
            sh = piover2 * math.sinh(u)
            # distance of the node to its endpoint, free of cancellation:
            # 1 - tanh(sh) = 2 e^{-2 sh} / (1 + e^{-2 sh})
            e2 = math.exp(-2.0 * sh)
            delta = half * 2.0 * e2 / (1.0 + e2)
            w = piover2 * math.cosh(u) * 4.0 * e2 / (1.0 + e2) ** 2
            if delta <= 0.0 or w <= 0.0:
                break
            contrib = w * f(b - delta)
            evaluations += 1
            if j > 0:
                contrib += w * f(a + delta)
                evaluations += 1
            total += contrib
            if abs(contrib) <= 1e-18 * (abs(total) + 1e-300) and j * h > 3.0:
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
            j += 1
            if j * h > 7.0:
                break
        value = total * h * half
        if prev is not None:
            err = abs(value - prev)
            if err <= eps * max(1.0, abs(value)):
                return QuadratureResult(value, err, evaluations, level)
        prev = value
    raise AccuracyError("tanh-sinh did not converge", best=value,
                        error_estimate=err, evaluations=evaluations)


# ---------------------------------------------------------------------------
# endpoint substitution machinery


def _log_value(map_kind: str, x: float) -> float:
    if map_kind == "log-cos":
        return math.log(2.0 * math.cos(x))
    if map_kind == "log-sin":
        return math.log(2.0 * math.sin(x))
    if map_kind == "log-sin-half":
        return math.log(2.0 * math.sin(0.5 * x))
    raise DomainError(f"unknown map kind {map_kind!r}")


def _tail_x(map_kind: str, endpoint: float, t: float) -> float:
    """Abscissa at which the log-trig value equals -t, on the endpoint's side."""
    u = 0.5 * math.exp(-t)
    if map_kind == "log-cos":
        return math.copysign(math.acos(u), endpoint)
    if map_kind == "log-sin":
        return math.asin(u) if endpoint < 1.0 else math.pi - math.asin(u)
    if map_kind == "log-sin-half":
        return 2.0 * math.asin(u) if endpoint < 1.0 else 2.0 * math.pi - 2.0 * math.asin(u)
    raise DomainError(f"unknown map kind {map_kind!r}")


def _tail_measure(map_kind: str, t: float) -> float:
    u = 0.5 * math.exp(-t)
    base = math.exp(-t) / (2.0 * math.sqrt(1.0 - u * u))
    return 2.0 * base if map_kind == "log-sin-half" else base


def tail_split(period: float | None) -> float:
    """t at which integration switches from x-space to the transformed tail.

    One full oscillation period into the tail, floored so the interior
    keeps a little slowly-varying room and capped so the split abscissa
    stays representable away from the interval end.
    """
    if period is None or period <= 0.0:
        return 2.0
    return max(2.0, min(period, 30.0))


def integrate_endpoint_oscillatory(
        f: Callable[[float, float], float], a: float, b: float,
        oscillations: Sequence[EndpointOscillation],
        tol: float = 1e-9, *, atol: float = 1e-11,
        points: Sequence[float] = (), t_max: float = 60.0,
        tail_points: Callable[[float, float], Sequence[float]] | None = None
        ) -> QuadratureResult:
    """Integrate f(x, w) over [a, b], w being the case's log-trig value.

    The interior panel evaluates w directly from x.  Near each flagged
    endpoint the integral continues in t = -w, so the integrand receives the
    exact pair (x(t), -t); one chunk spans one oscillation period (a fixed
    step when ``freq`` is 0) with panel boundaries on the quarter-period
    lattice, which is where tan poles and cos = -1 spikes sit.  Chunks are
    accumulated until two consecutive whole chunks fall below tolerance.
    """
    if not oscillations:
        raise DomainError("need at least one endpoint descriptor")
    map_kind = oscillations[0].map_kind
    for osc in oscillations:
        if osc.map_kind != map_kind:
            raise DomainError("mixed map kinds in one integral")

    evaluations = 0
    subdivisions = 0
    pieces: list[float] = []
    err_total = 0.0

    # interior bounds from each tail's split point
    x_lo, x_hi = a, b
    tails = []
    for osc in oscillations:
        period = osc.period()
        t_split = tail_split(period)
        x_edge = _tail_x(map_kind, osc.endpoint, t_split)
        if abs(osc.endpoint - a) < abs(osc.endpoint - b):
            x_lo = max(x_lo, x_edge)
        else:
            x_hi = min(x_hi, x_edge)
        tails.append((osc, t_split, period))

    if x_hi > x_lo:
        interior = integrate_adaptive(
            lambda x: f(x, _log_value(map_kind, x)), x_lo, x_hi,
            tol=0.4 * tol, atol=0.4 * atol,
            points=[p for p in points if x_lo < p < x_hi], limit=8192)
        pieces.append(interior.value)
        err_total += interior.error_estimate
        evaluations += interior.evaluations
        subdivisions += interior.subdivisions

    chunk_tol = max(0.2 * tol, 1e-13)
    chunk_atol = max(0.05 * atol, 1e-17)
    for osc, t_split, period in tails:
        endpoint = osc.endpoint

        def g(t: float) -> float:
            return f(_tail_x(map_kind, endpoint, t), -t) * _tail_measure(map_kind, t)

        step = period if period is not None else 2.0
        quarter = step / 4.0 if period is not None else None
        t = t_split
        small_streak = 0
        running = math.fsum(pieces)
        last_chunk = 0.0
        while t < t_max:
            t_next = min(t + step, t_max)
            cuts: list[float] = []
            if quarter is not None:
                j = math.floor(t / quarter) + 1
                while j * quarter < t_next:
                    cuts.append(j * quarter)
                    j += 1
            if tail_points is not None:
                # caller-supplied ladders around features too narrow for the
                # error estimator to notice from panel-scale nodes
                cuts.extend(tail_points(t, t_next))
            res = integrate_adaptive(g, t, t_next, tol=chunk_tol,
                                     atol=chunk_atol, points=cuts, limit=4096)
            pieces.append(res.value)
            err_total += res.error_estimate
            evaluations += res.evaluations
            subdivisions += res.subdivisions
            running += res.value
            last_chunk = abs(res.value)
            stop_at = max(0.25 * atol, 0.25 * tol * abs(running), 1e-16)
            if last_chunk <= stop_at:
                small_streak += 1
                if small_streak >= 2:
                    break
            else:
                small_streak = 0
            t = t_next
        decay = math.exp(-step)
        truncation = last_chunk * decay / (1.0 - decay)
        if t >= t_max and small_streak < 2 and truncation > max(atol, tol * abs(running)):
            raise AccuracyError("oscillatory tail did not settle",
                                best=running, error_estimate=truncation,
                                evaluations=evaluations)
        err_total += truncation

    value = math.fsum(pieces)
    return QuadratureResult(value, err_total, evaluations, subdivisions)


def jump_points_arctan(alpha: float, t_max: float = 35.0) -> list[float]:
    """Abscissae in (0, 2*pi) where tan(3*log(2 sin(x/2))/(2*alpha)) blows up.

    These solve 2 sin(x/2) = exp((2m+1)*pi*alpha/3) for integer m; each
    admissible level yields a pair symmetric about x = pi.  Levels above 2
    have no solution, and levels below exp(-t_max) are left to the endpoint
    transform, which meets them as quarter-period panel boundaries.
    """
    if alpha <= 0.0:
        raise DomainError("alpha must be positive")
    xs: list[float] = []
    m = 0
    while True:
        s = (2 * m + 1) * math.pi * alpha / 3.0
        if s > t_max:
            break
        level = math.exp(s)
        if level >= 2.0:
            break
        half = math.asin(0.5 * level)
        xs += [2.0 * half, 2.0 * math.pi - 2.0 * half]
        m += 1
    j = 1
    while True:
        s = (2 * j - 1) * math.pi * alpha / 3.0
        if s > t_max:
            break
        half = math.asin(0.5 * math.exp(-s))
        xs += [2.0 * half, 2.0 * math.pi - 2.0 * half]
        j += 1
    return sorted(xs)
