"""Tabular channel-BER input.

The raw bit error rate of the main lane is not modelled here; it is
ingested as a CSV table with header ``channel_id,modulation,distance_cm,p_e``
holding one curve per (channel, modulation) pair, sampled at strictly
increasing distances. Lookups are exact-match by default; linear
interpolation between neighbouring distances is available behind a flag.

A synthetic fixture ships with the package (``data/ber_table_synthetic.csv``)
so sweeps and demos run out of the box: four curves of the form

    p_e(d) = p0 * exp((d_cm - d_cross) / 1000)

where p0 = 0.8 * 29 / 240 is the correction-budget threshold of the default
configuration (K=30, s=8, code rate 0.8), so each curve starts needing
redundancy at the first 50 cm grid point past its d_cross. The fixture is
synthetic and qualitative only (monotone in distance, worse for higher
modulation levels and for channel C); it is not measured data.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

HEADER = ("channel_id", "modulation", "distance_cm", "p_e")

_DISTANCE_TOL = 1e-9


class BerTableError(ValueError):
    """Malformed or inconsistent BER table input."""


@dataclass(frozen=True)
class BerPoint:
    channel: str
    modulation: str
    distance_cm: float
    bit_error_rate: float


class BerTable:
    """Validated set of BER curves, keyed by (channel, modulation)."""

    def __init__(self, points: list[BerPoint]):
        if not points:
            raise BerTableError("empty table")
        groups: dict[tuple[str, str], list[BerPoint]] = {}
        for p in points:
            if not 0 <= p.bit_error_rate <= 1:
                raise BerTableError(
                    f"p_e {p.bit_error_rate} out of [0, 1] at "
                    f"({p.channel}, {p.modulation}, {p.distance_cm} cm)"
                )
            groups.setdefault((p.channel, p.modulation), []).append(p)
        for key, rows in groups.items():
            for a, b in zip(rows, rows[1:]):
                if b.distance_cm <= a.distance_cm:
                    raise BerTableError(
                        f"distances not strictly increasing for {key}: "
                        f"{a.distance_cm} then {b.distance_cm}"
                    )
        self._groups = groups
        self.points = list(points)

    def groups(self) -> list[tuple[str, str]]:
        return sorted(self._groups)

    def curve(self, channel: str, modulation: str) -> list[BerPoint]:
        key = (channel, modulation)
        if key not in self._groups:
            raise BerTableError(f"no rows for channel {channel!r} modulation {modulation!r}")
        return list(self._groups[key])

    def lookup(
        self,
        channel: str,
        modulation: str,
        distance_cm: float,
        interpolate: bool = False,
    ) -> float:
        """BER at one distance: exact grid match, or linear if asked."""
        rows = self.curve(channel, modulation)
        for p in rows:
            if abs(p.distance_cm - distance_cm) <= _DISTANCE_TOL:
                return p.bit_error_rate
        if not interpolate:
            raise BerTableError(
                f"no table point at {distance_cm} cm for ({channel}, {modulation}); "
                "rerun with interpolation enabled or adjust the sweep grid"
            )
        if distance_cm < rows[0].distance_cm or distance_cm > rows[-1].distance_cm:
            raise BerTableError(
                f"{distance_cm} cm outside the tabulated range "
                f"[{rows[0].distance_cm}, {rows[-1].distance_cm}] for ({channel}, {modulation})"
            )
        for a, b in zip(rows, rows[1:]):
            if a.distance_cm <= distance_cm <= b.distance_cm:
                frac = (distance_cm - a.distance_cm) / (b.distance_cm - a.distance_cm)
                return a.bit_error_rate + frac * (b.bit_error_rate - a.bit_error_rate)
        raise BerTableError(f"interpolation failed at {distance_cm} cm")  # unreachable


def parse_ber_table(text: str, source: str = "<string>") -> BerTable:
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        raise BerTableError(f"{source}: empty table")
    if tuple(h.strip() for h in rows[0]) != HEADER:
        raise BerTableError(
            f"{source}: header must be {','.join(HEADER)}, got {','.join(rows[0])}"
        )
    points = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 4:
            raise BerTableError(f"{source}: row {lineno}: expected 4 fields, got {len(row)}")
        channel, modulation = row[0].strip(), row[1].strip()
        try:
            distance = float(row[2])
            ber = float(row[3])
        except ValueError as exc:
            raise BerTableError(f"{source}: row {lineno}: {exc}") from None
        if not 0 <= ber <= 1:
            raise BerTableError(f"{source}: row {lineno}: p_e {ber} out of [0, 1]")
        points.append(BerPoint(channel, modulation, distance, ber))
    if not points:
        raise BerTableError(f"{source}: empty table")
    try:
        return BerTable(points)
    except BerTableError as exc:
        raise BerTableError(f"{source}: {exc}") from None


def load_ber_table(path) -> BerTable:
    with open(path, "r", encoding="utf-8") as f:
        return parse_ber_table(f.read(), source=str(path))


def load_builtin_table() -> BerTable:
    """The synthetic fixture shipped inside the package."""
    from importlib.resources import files

    text = files("twolane").joinpath("data/ber_table_synthetic.csv").read_text("utf-8")
    return parse_ber_table(text, source="builtin ber_table_synthetic.csv")


def save_ber_table(table: BerTable, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(",".join(HEADER) + "\n")
        for p in table.points:
            f.write(f"{p.channel},{p.modulation},{p.distance_cm!r},{p.bit_error_rate!r}\n")


# Threshold BER below which the default configuration needs no redundancy.
_P_ANCHOR = 0.8 * 29 / 240.0

_SYNTHETIC_CURVES = {
    # (channel, modulation): distance (cm) where the curve crosses _P_ANCHOR
    ("B", "16PSK"): 640.0,
    ("B", "8PSK"): 740.0,
    ("C", "16PSK"): 490.0,
    ("C", "8PSK"): 590.0,
}
_SYNTHETIC_SCALE_CM = 1000.0


def synthetic_ber(channel: str, modulation: str, distance_cm: float) -> float:
    """Closed form behind the shipped fixture."""
    d_cross = _SYNTHETIC_CURVES[(channel, modulation)]
    return min(1.0, _P_ANCHOR * math.exp((distance_cm - d_cross) / _SYNTHETIC_SCALE_CM))


def synthetic_ber_table(
    start_cm: float = 200.0, stop_cm: float = 2000.0, step_cm: float = 50.0
) -> BerTable:
    """The shipped fixture: 4 curves on a regular distance grid."""
    points = []
    for (channel, modulation), _ in sorted(_SYNTHETIC_CURVES.items()):
        n = int(round((stop_cm - start_cm) / step_cm)) + 1
        for i in range(n):
            d = start_cm + i * step_cm
            points.append(
                BerPoint(channel, modulation, d, synthetic_ber(channel, modulation, d))
            )
    return BerTable(points)
