import csv
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Sequence

from src.core.ports.report_ports import ReportSinkPort

from ..serialization import format_float, to_jsonable

logger = logging.getLogger(__name__)

RUN_INFO_FILE = "run_info.json"


class FileReportSink(ReportSinkPort):
    """Writes sorted-key JSON and CSV files into one output directory"""

    def __init__(self, output_dir: str | Path, formats: Sequence[str] = ("json", "csv")) -> None:
        self.output_dir = Path(output_dir)
        self.formats = tuple(formats)

    def write_json(self, name: str, payload: Dict[str, Any]) -> Path:
        path = self._target(f"{name}.json")
        if "json" not in self.formats:
            return path
        text = json.dumps(to_jsonable(payload), indent=2, sort_keys=True, allow_nan=False)
        path.write_text(text + "\n", encoding="utf-8")
        logger.info("wrote %s", path)
        return path

    def write_csv(self, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
        path = self._target(f"{name}.csv")
        if "csv" not in self.formats:
            return path
        with open(path, 'w', encoding='utf-8', newline='') as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(header)
            writer.writerows([_cell(value) for value in row] for row in rows)
        logger.info("wrote %s (%d rows)", path, len(rows))
        return path

    def write_run_info(self, command: str, payload: Dict[str, Any]) -> Path:
        """Sidecar carrying the wall-clock timestamp, kept out of the report files"""
        path = self._target(RUN_INFO_FILE)
        created_at = datetime.now(timezone.utc).isoformat().replace('+00:00', 'Z')
        info = {"command": command, "created_at": created_at, **payload}
        path.write_text(
            json.dumps(to_jsonable(info), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        return path

    def _target(self, filename: str) -> Path:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir / filename


def _cell(value: Any) -> Any:
    if isinstance(value, float):
        return format_float(value)
    return value
