"""Shared reference oracles for the test suite.

The GF(2^8) reference here is deliberately independent of the library's
table-based implementation: carry-less polynomial multiply followed by
explicit modular reduction, no lookup tables.
"""

REDUCTION_POLY = 0x11B


def gf_mul_ref(a: int, b: int, poly: int = REDUCTION_POLY) -> int:
    """Brute-force field product: carry-less multiply, then reduce."""
    prod = 0
    for i in range(8):
        if (b >> i) & 1:
            prod ^= a << i
    for bit in range(15, 7, -1):
        if (prod >> bit) & 1:
            prod ^= poly << (bit - 8)
    return prod


def gf_inv_ref(a: int) -> int:
    """Exhaustive-search inverse against the brute-force product."""
    for x in range(1, 256):
        if gf_mul_ref(a, x) == 1:
            return x
    raise ValueError(f"no inverse found for {a}")


def scenario_text(
    channel: str = "B",
    modulation: str = "16PSK",
    d_start: float = 200,
    d_stop: float = 2000,
    d_step: float = 50,
    aux_policy: str = "fixed",
    aux_cm: float | None = 150,
    main_rate: float = 8e11,
    seed: int = 7,
    extra: str = "",
) -> str:
    lines = [
        "K = 30",
        "s = 8",
        "fec_code_rate = 0.8",
        f"channel = {channel}",
        f"modulation = {modulation}",
        f"main_rate_bps = {main_rate!r}",
        f"d_main_start_cm = {d_start}",
        f"d_main_stop_cm = {d_stop}",
        f"d_main_step_cm = {d_step}",
        f"d_aux_policy = {aux_policy}",
        f"seed = {seed}",
    ]
    if aux_policy == "fixed" and aux_cm is not None:
        lines.append(f"d_aux_cm = {aux_cm}")
    if extra:
        lines.append(extra)
    return "\n".join(lines) + "\n"
