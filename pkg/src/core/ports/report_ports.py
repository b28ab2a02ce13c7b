from pathlib import Path
from typing import Any, Dict, Protocol, Sequence


class ReportSinkPort(Protocol):
    def write_json(self, name: str, payload: Dict[str, Any]) -> Path:
        ...

    def write_csv(self, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
        ...


class ConfigLoaderPort(Protocol):
    def load_config(self, path: str | None) -> Dict[str, Any]:
        ...
