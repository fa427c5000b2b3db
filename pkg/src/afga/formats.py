"""Text emitters and parsers for schedules and simulation traces.

The schedule table format is three `name = value` header lines, one
tab-separated label line, and num_steps + 1 tab-separated data rows; all
angles are in degrees and every float is printed as %.4e with negative
zero normalized to 0.0000e+00.  The CSV emitters keep full precision via
repr and exist for downstream plotting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .asymptotics import ContinuumTrace
from .qubit_sim import ErrTrace
from .schedule import AfgaParams, ScheduleRow
from .search_sim import SearchTrace

__all__ = [
    "AFGA_COLUMNS",
    "AfgaTable",
    "emit_afga_txt",
    "parse_afga_txt",
    "schedule_csv",
    "err_trace_csv",
    "search_csv",
    "continuum_csv",
]

AFGA_COLUMNS = (
    "j",
    "gam_j(degs)",
    "alp_j(degs)",
    "vr_x",
    "vr_y",
    "vr_z",
    "vs_x",
    "vs_y",
    "vs_z",
)


def _sci(v: float) -> str:
    """%.4e with -0.0 flushed to +0.0 so emitted tables are sign-stable."""
    if v == 0.0:
        v = 0.0
    return f"{v:.4e}"


def _row_fields(row: ScheduleRow) -> list[str]:
    values = [
        math.degrees(row.gamma_j),
        math.degrees(row.alpha_j),
        *row.r_j,
        *row.s_j,
    ]
    return [str(row.j)] + [_sci(v) for v in values]


def emit_afga_txt(rows: list[ScheduleRow], params: AfgaParams) -> str:
    """Render a schedule as the tab-separated fixed-format table."""
    lines = [
        f"gamma(degs) = {_sci(math.degrees(params.gamma))}",
        f"del_lam(degs) = {_sci(math.degrees(params.del_lam))}",
        f"num_steps = {params.num_steps}",
        "\t".join(AFGA_COLUMNS),
    ]
    lines.extend("\t".join(_row_fields(row)) for row in rows)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AfgaTable:
    """Parsed form of the fixed-format table; data has one row per step."""

    gamma_degs: float
    del_lam_degs: float
    num_steps: int
    data: np.ndarray


def parse_afga_txt(text: str) -> AfgaTable:
    """Parse a fixed-format table back into header values and a float array."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 4:
        raise ValueError("truncated table: need 3 header lines and a label line")
    gamma_degs = float(lines[0].split("=", 1)[1])
    del_lam_degs = float(lines[1].split("=", 1)[1])
    num_steps = int(lines[2].split("=", 1)[1])
    data = np.array([[float(tok) for tok in ln.split()] for ln in lines[4:]])
    if data.shape != (num_steps + 1, len(AFGA_COLUMNS)):
        raise ValueError(
            f"expected {num_steps + 1} rows of {len(AFGA_COLUMNS)} fields, "
            f"got shape {data.shape}"
        )
    return AfgaTable(gamma_degs, del_lam_degs, num_steps, data)


def schedule_csv(rows: list[ScheduleRow]) -> str:
    """Full-precision CSV of a schedule, angles in degrees."""
    lines = ["j,gam_j_degs,alp_j_degs,vr_x,vr_y,vr_z,vs_x,vs_y,vs_z"]
    for row in rows:
        values = [
            math.degrees(row.gamma_j),
            math.degrees(row.alpha_j),
            *row.r_j,
            *row.s_j,
        ]
        lines.append(",".join([str(row.j)] + [repr(float(v)) for v in values]))
    return "\n".join(lines) + "\n"


def err_trace_csv(trace: ErrTrace) -> str:
    """CSV of miss probability and z-component per step."""
    lines = ["j,err,s_fin_z"]
    lines.extend(
        f"{j},{float(e)!r},{float(z)!r}"
        for j, (e, z) in enumerate(zip(trace.err, trace.s_fin_z))
    )
    return "\n".join(lines) + "\n"


def search_csv(trace: SearchTrace) -> str:
    """CSV of success probability per step."""
    lines = ["j,success"]
    lines.extend(f"{j},{float(p)!r}" for j, p in enumerate(trace.success))
    return "\n".join(lines) + "\n"


def continuum_csv(trace: ContinuumTrace) -> str:
    """CSV of the accepted integration samples."""
    lines = ["t,g"]
    lines.extend(
        f"{float(t)!r},{float(g)!r}" for t, g in zip(trace.t, trace.g)
    )
    return "\n".join(lines) + "\n"
