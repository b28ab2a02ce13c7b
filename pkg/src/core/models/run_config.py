from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..errors import ConfigurationError

ModelName = Literal["two-component-cos", "piecewise-linear", "cyclic"]
OutputFormat = Literal["json", "csv"]


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GridSection(_Section):
    index_min: Optional[int] = None
    index_max: Optional[int] = None

    @model_validator(mode="after")
    def _check_range(self) -> "GridSection":
        if (self.index_min is None) != (self.index_max is None):
            raise ValueError("index_min and index_max must be given together")
        if self.index_min is not None and self.index_max is not None:
            if not self.index_min <= 0 <= self.index_max:
                raise ValueError(
                    f"grid [{self.index_min}, {self.index_max}] must contain index 0"
                )
        return self

    @property
    def index_range(self) -> tuple[int, int] | None:
        if self.index_min is None or self.index_max is None:
            return None
        return self.index_min, self.index_max


class ModelSection(_Section):
    name: ModelName = "piecewise-linear"
    tau: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    dimension: Optional[int] = Field(default=None, alias="D")
    centered: bool = True
    symmetrize: bool = False

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)


class QuadratureSection(_Section):
    nodes_per_panel: Optional[int] = Field(default=None, ge=2)
    panels: Optional[int] = Field(default=None, ge=1)
    tolerance: Optional[float] = Field(default=None, gt=0)
    max_refinements: Optional[int] = Field(default=None, ge=0)


class ToleranceSection(_Section):
    abs_tol: Optional[float] = Field(default=None, gt=0)
    rel_tol: Optional[float] = Field(default=None, ge=0)
    exact_model: Optional[float] = Field(default=None, gt=0)
    identity: Optional[float] = Field(default=None, gt=0)
    uncertainty: Optional[float] = Field(default=None, gt=0)
    fd_step_fraction: Optional[float] = Field(default=None, gt=0, lt=0.1)


class OutputSection(_Section):
    dir: Optional[str] = None
    formats: tuple[OutputFormat, ...] = ("json", "csv")


class SweepSection(_Section):
    dimensions: tuple[int, ...] = (32, 64, 128, 256)

    @model_validator(mode="after")
    def _check_dimensions(self) -> "SweepSection":
        if not self.dimensions:
            raise ValueError("sweep needs at least one dimension")
        if list(self.dimensions) != sorted(set(self.dimensions)):
            raise ValueError("sweep dimensions must be strictly increasing")
        return self


class RunConfig(_Section):
    """Validated run configuration; every section rejects unknown keys"""
    grid: GridSection = GridSection()
    model: ModelSection = ModelSection()
    quadrature: QuadratureSection = QuadratureSection()
    tolerances: ToleranceSection = ToleranceSection()
    output: OutputSection = OutputSection()
    sweep: SweepSection = SweepSection()
    seed: int = 7

    @model_validator(mode="after")
    def _check_cyclic_grid(self) -> "RunConfig":
        index_range = self.grid.index_range
        if self.model.name != "cyclic":
            if self.model.dimension is not None:
                raise ValueError(f"D only applies to the cyclic model, not '{self.model.name}'")
            return self
        if self.model.dimension is None:
            raise ValueError("the cyclic model needs a cycle dimension D")
        if index_range is not None:
            width = index_range[1] - index_range[0] + 1
            if width > self.model.dimension:
                raise ValueError(
                    f"grid of {width} indices is wider than the cycle D = {self.model.dimension}"
                )
        return self

    def with_overrides(self, overrides: Dict[str, Any]) -> "RunConfig":
        """Create a new instance with values replaced, dropping None values.

        Section overrides are dicts merged into the section; scalars such as
        ``seed`` replace the value.
        """
        data = self.model_dump(by_alias=True, exclude_none=True)
        model_changes = overrides.get("model") or {}
        renamed = model_changes.get("name")
        if renamed not in (None, "cyclic") and model_changes.get("D") is None:
            data["model"].pop("D", None)
        for key, value in overrides.items():
            if isinstance(value, dict):
                changes = {name: item for name, item in value.items() if item is not None}
                if changes:
                    data[key] = {**data.get(key, {}), **changes}
            elif value is not None:
                data[key] = value
        return parse_run_config(data)


def parse_run_config(data: Dict[str, Any] | None) -> RunConfig:
    try:
        return RunConfig.model_validate(data or {})
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or 'config'}: {error['msg']}"
            for error in e.errors()
        )
        raise ConfigurationError(f"invalid run configuration: {problems}") from e
