import pathlib

import numpy as np
from loguru import logger
from pydantic import BaseModel

from ..models import PhaseFunction, PhasePlane
from .base_repo import PathLike

HEATMAP_HEADER = "x,omega,value"


class ReportRepository:
    """JSON reports and plot-ready heatmap CSVs under one output directory."""

    def __init__(self, output_dir: PathLike):
        self.output_dir = pathlib.Path(output_dir)

    def path(self, name: str) -> pathlib.Path:
        return self.output_dir / name

    def save_json(self, report: BaseModel, name: str) -> pathlib.Path:
        path = self.path(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.debug(f"wrote report {path}")
        return path

    def save_heatmap(self, data: PhaseFunction | PhasePlane, name: str) -> pathlib.Path:
        """|values| on the grid: integer residues for phase functions,
        sample coordinates for phase planes."""
        if isinstance(data, PhasePlane):
            x, w = data.mesh()
        else:
            x, w = np.meshgrid(np.arange(data.N), np.arange(data.N), indexing="ij")
        table = np.column_stack(
            [x.reshape(-1), w.reshape(-1), np.abs(data.values).reshape(-1)]
        )
        path = self.path(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        fmt = ["%d", "%d", "%.17g"] if isinstance(data, PhaseFunction) else "%.17g"
        np.savetxt(path, table, fmt=fmt, delimiter=",", header=HEATMAP_HEADER, comments="")
        logger.debug(f"wrote heatmap {path}")
        return path
