"""Link planning for a two-lane transmission system.

The main lane carries the K native symbols of each generation at high rate
over distance d_main; an error-free auxiliary lane carries the R coded
symbols. This module derives, from the FEC residual statistics:

  * the minimal redundancy R = ceil(P_s * K),
  * the combined code rate R_F*K/(K+R) and its overhead complement,
  * per-lane total delays (transmission plus propagation),
  * the auxiliary rate that makes both lanes of one generation arrive
    simultaneously, which exists only while the auxiliary distance stays
    below  K*s*c / (R_F*C_main) + d_main.

All distances are metres, rates bits/second, times seconds. Everything is
a pure function of immutable inputs; sweep points can be planned in
parallel without coordination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fec import FecDerived, FecParams, derive

LIGHT_SPEED = 3e8  # m/s, fixed propagation speed for both lanes

_INT_EPS = 1e-9


class InfeasibleAuxDistanceError(ValueError):
    """Auxiliary distance at or beyond the delay-matching feasibility bound."""


def _ceil_int(x: float) -> int:
    nearest = round(x)
    if abs(x - nearest) < _INT_EPS:
        return int(nearest)
    return math.ceil(x)


@dataclass(frozen=True)
class LinkParams:
    """Full parameter set for one planned link."""

    fec: FecParams
    main_rate: float  # bits/s on the main lane
    main_distance: float  # m
    aux_distance: float  # m
    light_speed: float = LIGHT_SPEED

    def __post_init__(self):
        if self.main_rate <= 0:
            raise ValueError("main_rate must be > 0")
        if self.main_distance < 0 or self.aux_distance < 0:
            raise ValueError("distances must be >= 0")
        if self.light_speed != LIGHT_SPEED:
            raise ValueError(f"light_speed is fixed at {LIGHT_SPEED!r} m/s")


@dataclass(frozen=True)
class LinkPlan:
    """Everything derived from a LinkParams by plan()."""

    fec: FecDerived
    redundancy: int  # coded symbols per generation
    total_rate: float  # combined FEC + coding rate
    overhead: float  # 1 - total_rate
    aux_rate: float  # bits/s; 0 when no redundancy is needed
    t_main: float  # s
    t_aux: float  # s; 0 when no auxiliary transmission happens
    aux_distance_max: float  # m, strict upper bound on aux_distance


def main_rate_from_baud(baud_rate: float, bits_per_symbol: int) -> float:
    """Bit rate of a lane driven at ``baud_rate`` with 2^L-level modulation."""
    if baud_rate <= 0:
        raise ValueError("baud_rate must be > 0")
    if bits_per_symbol < 1:
        raise ValueError("bits_per_symbol must be >= 1")
    return baud_rate * bits_per_symbol


def redundancy(residual_ser: float, k: int) -> int:
    """Minimal integer number of coded symbols covering the expected erasures."""
    if not 0 <= residual_ser <= 1:
        raise ValueError("residual_ser must be in [0, 1]")
    if k < 1:
        raise ValueError("k must be >= 1")
    return max(0, _ceil_int(residual_ser * k))


def total_code_rate(k: int, r: int, code_rate: float) -> float:
    """Combined rate of FEC and coding redundancy: code_rate * k / (k + r)."""
    if k < 1 or r < 0:
        raise ValueError("need k >= 1 and r >= 0")
    if not 0 < code_rate <= 1:
        raise ValueError("code_rate must be in (0, 1]")
    return code_rate * k / (k + r)


def overhead(total_rate: float) -> float:
    """Fraction of transmitted bits that is not payload: 1 - total_rate."""
    if not 0 < total_rate <= 1:
        raise ValueError("total_rate must be in (0, 1]")
    return 1.0 - total_rate


def lane_times(link: LinkParams, r: int, aux_rate: float) -> tuple[float, float]:
    """Total per-generation delay (transmission + propagation) of each lane.

    With no redundancy there is no auxiliary transmission and t_aux is
    reported as 0.
    """
    p = link.fec
    t_main = p.k * p.s / (p.code_rate * link.main_rate) + link.main_distance / link.light_speed
    if r == 0:
        return t_main, 0.0
    if aux_rate <= 0:
        raise ValueError("auxiliary lane required: redundancy > 0 but its rate is 0")
    t_aux = r * p.s / (p.code_rate * aux_rate) + link.aux_distance / link.light_speed
    return t_main, t_aux


def aux_distance_bound(link: LinkParams) -> float:
    """Strict upper bound on the auxiliary distance for delay matching."""
    p = link.fec
    return p.k * p.s * link.light_speed / (p.code_rate * link.main_rate) + link.main_distance


def aux_rate(link: LinkParams, r: int) -> float:
    """Auxiliary rate that lands both lanes of a generation simultaneously.

    Zero exactly when r is zero (no auxiliary lane is established). Raises
    InfeasibleAuxDistanceError when the auxiliary distance is not strictly
    below aux_distance_bound(), where the matching rate would diverge or
    turn negative.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    p = link.fec
    denom = (
        p.code_rate * link.main_rate * (link.main_distance - link.aux_distance)
        + link.light_speed * p.k * p.s
    )
    if denom <= 0:
        raise InfeasibleAuxDistanceError(
            f"auxiliary distance {link.aux_distance} m is not below the "
            f"feasibility bound {aux_distance_bound(link)} m"
        )
    if r == 0:
        return 0.0
    return r * p.s * link.light_speed * link.main_rate / denom


def plan(link: LinkParams) -> LinkPlan:
    """Run the full chain from FEC statistics to lane timing for one link."""
    d = derive(link.fec)
    r = redundancy(d.residual_ser, link.fec.k)
    rate = aux_rate(link, r)
    t_main, t_aux = lane_times(link, r, rate)
    rt = total_code_rate(link.fec.k, r, link.fec.code_rate)
    return LinkPlan(
        fec=d,
        redundancy=r,
        total_rate=rt,
        overhead=overhead(rt),
        aux_rate=rate,
        t_main=t_main,
        t_aux=t_aux,
        aux_distance_max=aux_distance_bound(link),
    )
