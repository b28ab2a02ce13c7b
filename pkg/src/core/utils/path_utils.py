from functools import lru_cache
from pathlib import Path


@lru_cache(maxsize=1)
def get_project_root(marker_files: tuple[str, ...] = ('pyproject.toml', '.git')) -> Path:
    start = Path(__file__).resolve()
    for parent in start.parents:
        if any((parent / marker).exists() for marker in marker_files):
            return parent
    raise RuntimeError(f"no project root above {start} (markers: {', '.join(marker_files)})")


def resolve_path(path: str | Path) -> Path:
    """Absolute paths pass through; relative ones are taken from the project root"""
    candidate = Path(path)
    return candidate if candidate.is_absolute() else get_project_root() / candidate
