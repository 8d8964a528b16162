"""Scenario files, distance sweeps, Monte Carlo binding and CSV output.

A scenario is a plain-text ``key = value`` file ('#' starts a comment).
Schema (distances in centimetres, converted to metres internally):

    K = 30                      symbols per generation
    s = 8                       bits per symbol
    fec_code_rate = 0.8         FEC code rate, in (0, 1]
    channel = B                 BER-table channel id
    modulation = 16PSK          BER-table modulation id
    main_rate_bps = 8e11        main-lane bit rate; alternatively give
    # baud_rate = 2e11            baud_rate and bits_per_symbol and the
    # bits_per_symbol = 4         rate is their product
    d_main_start_cm = 200       sweep grid over the main-lane distance
    d_main_stop_cm = 2000
    d_main_step_cm = 50
    d_aux_policy = fixed        'fixed' (needs d_aux_cm) or 'equal_to_main'
    d_aux_cm = 150
    ber_table = path.csv        optional; CLI --ber-table overrides; the
                                special value 'builtin' selects the packaged
                                synthetic fixture
    output = out.csv            optional; CLI --out overrides
    seed = 7                    optional, default 0

Sweep output is a CSV with exactly the header

    d_main_cm,p_e,P_b,P_s,R,R_T,theta,C_aux_bps,T_main_s,T_aux_s

one row per feasible grid distance. A grid point whose auxiliary distance
breaks the feasibility bound becomes a recorded row error and the sweep
continues. Floats are serialised with repr() so files re-parse to
identical values.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace

from .bertable import BerTable
from .fec import FecParams
from .planner import InfeasibleAuxDistanceError, LinkParams, main_rate_from_baud, plan
from .sim import SimConfig, SimReport, run

AUX_POLICIES = ("fixed", "equal_to_main")

SWEEP_COLUMNS = (
    "d_main_cm",
    "p_e",
    "P_b",
    "P_s",
    "R",
    "R_T",
    "theta",
    "C_aux_bps",
    "T_main_s",
    "T_aux_s",
)

SIM_COLUMNS = (
    "d_main_cm",
    "p_e",
    "P_s",
    "R",
    "generations",
    "decoded",
    "decode_failure_rate",
    "analytic_failure_rate",
    "observed_erasure_rate",
    "insufficient_failures",
    "singular_failures",
    "mean_lane_skew_s",
)


class ScenarioError(ValueError):
    """Malformed or incomplete scenario input."""


@dataclass(frozen=True)
class Scenario:
    k: int
    s: int
    code_rate: float
    channel: str
    modulation: str
    main_rate: float  # bits/s
    d_start_cm: float
    d_stop_cm: float
    d_step_cm: float
    aux_policy: str  # 'fixed' | 'equal_to_main'
    aux_distance_cm: float | None = None
    ber_table: str | None = None
    output: str | None = None
    seed: int = 0

    def __post_init__(self):
        if self.aux_policy not in AUX_POLICIES:
            raise ScenarioError(f"d_aux_policy must be one of {AUX_POLICIES}")
        if self.aux_policy == "fixed" and self.aux_distance_cm is None:
            raise ScenarioError("d_aux_policy 'fixed' requires d_aux_cm")
        if self.d_step_cm <= 0:
            raise ScenarioError("d_main_step_cm must be > 0")
        if self.d_stop_cm < self.d_start_cm:
            raise ScenarioError("d_main_stop_cm must be >= d_main_start_cm")

    def distances_cm(self) -> list[float]:
        n = int(math.floor((self.d_stop_cm - self.d_start_cm) / self.d_step_cm + 1e-9)) + 1
        return [self.d_start_cm + i * self.d_step_cm for i in range(n)]

    def aux_distance_for(self, d_main_cm: float) -> float:
        if self.aux_policy == "equal_to_main":
            return d_main_cm
        return float(self.aux_distance_cm)

    def link_for(self, d_main_cm: float, bit_error_rate: float) -> LinkParams:
        return LinkParams(
            fec=FecParams(
                k=self.k,
                s=self.s,
                code_rate=self.code_rate,
                bit_error_rate=bit_error_rate,
            ),
            main_rate=self.main_rate,
            main_distance=d_main_cm / 100.0,
            aux_distance=self.aux_distance_for(d_main_cm) / 100.0,
        )


_REQUIRED_KEYS = (
    "K",
    "s",
    "fec_code_rate",
    "channel",
    "modulation",
    "d_main_start_cm",
    "d_main_stop_cm",
    "d_main_step_cm",
    "d_aux_policy",
)
_OPTIONAL_KEYS = (
    "main_rate_bps",
    "baud_rate",
    "bits_per_symbol",
    "d_aux_cm",
    "ber_table",
    "output",
    "seed",
)


def parse_scenario(text: str, source: str = "<string>") -> Scenario:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(f"{source}: line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in values:
            raise ScenarioError(f"{source}: line {lineno}: duplicate key {key!r}")
        if key not in _REQUIRED_KEYS and key not in _OPTIONAL_KEYS:
            raise ScenarioError(f"{source}: line {lineno}: unknown key {key!r}")
        values[key] = value

    missing = [k for k in _REQUIRED_KEYS if k not in values]
    if missing:
        raise ScenarioError(f"{source}: missing keys: {', '.join(missing)}")

    def number(key: str) -> float:
        try:
            return float(values[key])
        except ValueError:
            raise ScenarioError(f"{source}: key {key!r}: not a number: {values[key]!r}") from None

    if "main_rate_bps" in values:
        if "baud_rate" in values or "bits_per_symbol" in values:
            raise ScenarioError(
                f"{source}: give either main_rate_bps or baud_rate + bits_per_symbol, not both"
            )
        main_rate = number("main_rate_bps")
    elif "baud_rate" in values and "bits_per_symbol" in values:
        main_rate = main_rate_from_baud(number("baud_rate"), int(number("bits_per_symbol")))
    else:
        raise ScenarioError(
            f"{source}: main-lane rate missing: main_rate_bps or baud_rate + bits_per_symbol"
        )

    try:
        return Scenario(
            k=int(number("K")),
            s=int(number("s")),
            code_rate=number("fec_code_rate"),
            channel=values["channel"],
            modulation=values["modulation"],
            main_rate=main_rate,
            d_start_cm=number("d_main_start_cm"),
            d_stop_cm=number("d_main_stop_cm"),
            d_step_cm=number("d_main_step_cm"),
            aux_policy=values["d_aux_policy"],
            aux_distance_cm=number("d_aux_cm") if "d_aux_cm" in values else None,
            ber_table=values.get("ber_table"),
            output=values.get("output"),
            seed=int(number("seed")) if "seed" in values else 0,
        )
    except ValueError as exc:
        raise ScenarioError(f"{source}: {exc}") from None


def load_scenario(path) -> Scenario:
    """Parse a scenario file.

    A relative ber_table path (other than the special value 'builtin') is
    resolved against the scenario file's directory.
    """
    with open(path, "r", encoding="utf-8") as f:
        sc = parse_scenario(f.read(), source=str(path))
    if sc.ber_table and sc.ber_table != "builtin" and not os.path.isabs(sc.ber_table):
        sc = replace(sc, ber_table=os.path.join(os.path.dirname(os.path.abspath(path)), sc.ber_table))
    return sc


@dataclass(frozen=True)
class SweepRow:
    d_main_cm: float
    p_e: float
    p_residual_bit: float
    p_residual_symbol: float
    redundancy: int
    total_rate: float
    overhead: float
    aux_rate_bps: float
    t_main_s: float
    t_aux_s: float

    def csv_values(self) -> tuple:
        return (
            self.d_main_cm,
            self.p_e,
            self.p_residual_bit,
            self.p_residual_symbol,
            self.redundancy,
            self.total_rate,
            self.overhead,
            self.aux_rate_bps,
            self.t_main_s,
            self.t_aux_s,
        )


@dataclass(frozen=True)
class RowError:
    d_main_cm: float
    message: str


def plan_point(sc: Scenario, table: BerTable, d_main_cm: float, interpolate: bool = False) -> SweepRow:
    """Plan one grid distance; raises on an infeasible auxiliary distance."""
    p_e = table.lookup(sc.channel, sc.modulation, d_main_cm, interpolate=interpolate)
    lp = plan(sc.link_for(d_main_cm, p_e))
    return SweepRow(
        d_main_cm=d_main_cm,
        p_e=p_e,
        p_residual_bit=lp.fec.residual_ber,
        p_residual_symbol=lp.fec.residual_ser,
        redundancy=lp.redundancy,
        total_rate=lp.total_rate,
        overhead=lp.overhead,
        aux_rate_bps=lp.aux_rate,
        t_main_s=lp.t_main,
        t_aux_s=lp.t_aux,
    )


def sweep(
    sc: Scenario, table: BerTable, interpolate: bool = False
) -> tuple[list[SweepRow], list[RowError]]:
    """Plan every grid distance; infeasible points become recorded errors."""
    rows: list[SweepRow] = []
    errors: list[RowError] = []
    for d in sc.distances_cm():
        try:
            rows.append(plan_point(sc, table, d, interpolate=interpolate))
        except InfeasibleAuxDistanceError as exc:
            errors.append(RowError(d_main_cm=d, message=str(exc)))
    return rows, errors


def _format(value) -> str:
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def write_rows_csv(path_or_file, columns, rows_of_values) -> None:
    def _write(f):
        f.write(",".join(columns) + "\n")
        for values in rows_of_values:
            f.write(",".join(_format(v) for v in values) + "\n")

    if hasattr(path_or_file, "write"):
        _write(path_or_file)
    else:
        with open(path_or_file, "w", encoding="utf-8", newline="\n") as f:
            _write(f)


def write_sweep_csv(rows: list[SweepRow], path_or_file) -> None:
    write_rows_csv(path_or_file, SWEEP_COLUMNS, (r.csv_values() for r in rows))


def read_sweep_csv(path) -> list[SweepRow]:
    with open(path, "r", encoding="utf-8") as f:
        lines = [ln for ln in f.read().splitlines() if ln]
    if not lines or tuple(lines[0].split(",")) != SWEEP_COLUMNS:
        raise ScenarioError(f"{path}: not a sweep CSV")
    rows = []
    for ln in lines[1:]:
        parts = ln.split(",")
        rows.append(
            SweepRow(
                d_main_cm=float(parts[0]),
                p_e=float(parts[1]),
                p_residual_bit=float(parts[2]),
                p_residual_symbol=float(parts[3]),
                redundancy=int(parts[4]),
                total_rate=float(parts[5]),
                overhead=float(parts[6]),
                aux_rate_bps=float(parts[7]),
                t_main_s=float(parts[8]),
                t_aux_s=float(parts[9]),
            )
        )
    return rows


def binomial_tail_above(k: int, p: float, r: int) -> float:
    """Pr[Binomial(k, p) > r], the analytic decode-failure probability."""
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    if r >= k:
        return 0.0
    acc = 0.0
    for i in range(r + 1, k + 1):
        acc += math.comb(k, i) * p**i * (1 - p) ** (k - i)
    return min(1.0, acc)


def classify_aux_technology(rate_bps: float) -> str:
    """Coarse technology label for an auxiliary-lane rate.

    Brackets: 0 -> none, up to 600 Mbps -> WLAN-802.11n, up to 10 Gbps ->
    FSO, up to 100 Gbps -> fiber, above -> THz. The upper two edges are
    labelling conveniences to make the classification total, nothing more.
    """
    if rate_bps < 0:
        raise ValueError("rate_bps must be >= 0")
    if rate_bps == 0:
        return "none"
    if rate_bps <= 600e6:
        return "WLAN-802.11n"
    if rate_bps <= 10e9:
        return "FSO"
    if rate_bps <= 100e9:
        return "fiber"
    return "THz"


@dataclass(frozen=True)
class SimRow:
    d_main_cm: float
    p_e: float
    p_residual_symbol: float
    redundancy: int
    generations: int
    decoded: int
    decode_failure_rate: float
    analytic_failure_rate: float
    observed_erasure_rate: float
    insufficient_failures: int
    singular_failures: int
    mean_lane_skew_s: float

    def csv_values(self) -> tuple:
        return (
            self.d_main_cm,
            self.p_e,
            self.p_residual_symbol,
            self.redundancy,
            self.generations,
            self.decoded,
            self.decode_failure_rate,
            self.analytic_failure_rate,
            self.observed_erasure_rate,
            self.insufficient_failures,
            self.singular_failures,
            self.mean_lane_skew_s,
        )


def simulate(
    sc: Scenario,
    table: BerTable,
    generations: int,
    mode: str = "analytic-erasure",
    interpolate: bool = False,
    seed: int | None = None,
) -> tuple[list[SimRow], list[RowError]]:
    """Monte Carlo per grid distance, next to the analytic predictions."""
    if generations < 1:
        raise ValueError("generations must be >= 1")
    base_seed = sc.seed if seed is None else seed
    rows: list[SimRow] = []
    errors: list[RowError] = []
    for i, d in enumerate(sc.distances_cm()):
        try:
            p_e = table.lookup(sc.channel, sc.modulation, d, interpolate=interpolate)
            link = sc.link_for(d, p_e)
            lp = plan(link)
        except InfeasibleAuxDistanceError as exc:
            errors.append(RowError(d_main_cm=d, message=str(exc)))
            continue
        report: SimReport = run(
            SimConfig(
                link=link,
                plan=lp,
                generations=generations,
                rng_seed=base_seed + i,
                error_mode=mode,
            )
        )
        rows.append(
            SimRow(
                d_main_cm=d,
                p_e=p_e,
                p_residual_symbol=lp.fec.residual_ser,
                redundancy=lp.redundancy,
                generations=generations,
                decoded=report.decoded_generations,
                decode_failure_rate=report.decode_failure_rate,
                analytic_failure_rate=binomial_tail_above(
                    sc.k, lp.fec.residual_ser, lp.redundancy
                ),
                observed_erasure_rate=report.symbol_erasure_rate,
                insufficient_failures=report.insufficient_failures,
                singular_failures=report.singular_failures,
                mean_lane_skew_s=report.mean_lane_skew,
            )
        )
    return rows, errors


def write_sim_csv(rows: list[SimRow], path_or_file) -> None:
    write_rows_csv(path_or_file, SIM_COLUMNS, (r.csv_values() for r in rows))
