import csv
import math
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

import numpy as np
import ujson

from chaos_probe.logging import logger
from chaos_probe.settings import settings

Cell = float | int | str | None


class ResultsDAO:
    """Class for writing result tables and the run manifest."""

    def __init__(self, out_dir: str | Path, precision: int | None = None) -> None:
        self.out_dir = Path(out_dir)
        self.precision = settings.csv_precision if precision is None else precision
        self.files: list[str] = []

    def _format(self, value: Cell) -> str:
        if value is None:
            return ""
        if isinstance(value, (bool, np.bool_)):
            return str(bool(value)).lower()
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, (float, np.floating)):
            number = float(value)
            if math.isnan(number):
                return ""
            # -0 and 0 print the same
            return format(number + 0.0, f".{self.precision}g")
        return str(value)

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> Path:
        """
        Write a UTF-8 CSV table with a header row.

        :param name: file name inside the output directory.
        :param header: column names.
        :param rows: table rows, one cell per column.
        :returns: path of the written file.
        """
        self.out_dir.mkdir(parents=True, exist_ok=True)
        path = self.out_dir / name
        count = 0
        with path.open("w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                if len(row) != len(header):
                    raise ValueError(f"{name}: row of {len(row)} cells for {len(header)} columns")
                writer.writerow([self._format(cell) for cell in row])
                count += 1
        self.files.append(name)
        logger.info(f"Wrote {count} rows to {path}")
        return path

    def write_manifest(self, manifest: dict[str, Any]) -> Path:
        """
        Write manifest.json with the given content and the produced files.

        :param manifest: config, seed, version and timing of the run.
        :returns: path of the manifest.
        """
        self.out_dir.mkdir(parents=True, exist_ok=True)
        path = self.out_dir / "manifest.json"
        content = {**manifest, "files": list(self.files)}
        with path.open("w", encoding="utf-8") as f:
            ujson.dump(content, f, indent=2, ensure_ascii=False)
        logger.info(f"Manifest written: {path}")
        return path

    @staticmethod
    def load_config(path: str | Path) -> dict[str, Any]:
        """
        Read a run config, or the config stored in a manifest.

        :param path: JSON file.
        :returns: raw config mapping.
        """
        with Path(path).open(encoding="utf-8") as f:
            data = ujson.load(f)
        if not isinstance(data, dict):
            raise ValueError(f"{path}: expected a JSON object")
        if isinstance(data.get("config"), dict):
            logger.info(f"Reading the run config from manifest {path}")
            return dict(data["config"])
        return data
