from pydantic import Field
from pydantic_settings import BaseSettings

from src.core.models.tolerances import Tolerances


class Settings(BaseSettings):
    config_file_path: str = Field(
        default="resources/clock_config.yaml",
        description="Path of the default run configuration YAML file"
    )
    output_dir: str = Field(
        default="clocklab-out",
        description="Directory receiving JSON reports and CSV tables"
    )
    log_level: str = Field(default="INFO", description="Root logger level")

    abs_tolerance: float = Field(default=1e-10, gt=0)
    rel_tolerance: float = Field(default=1e-8, ge=0)
    exact_model_tolerance: float = Field(
        default=1e-8,
        gt=0,
        description="Tolerance for theorem identities on exactly unitary models"
    )
    identity_tolerance: float = Field(
        default=1e-12,
        gt=0,
        description="Tolerance for c-function identities on exactly unitary models"
    )
    uncertainty_tolerance: float = Field(default=1e-6, gt=0)
    fd_step_fraction: float = Field(
        default=1e-5,
        gt=0,
        description="Finite-difference step as a fraction of tau"
    )

    quadrature_nodes: int = Field(default=16, ge=2)
    quadrature_panels: int = Field(default=4, ge=1)
    quadrature_max_refinements: int = Field(default=3, ge=0)
    quadrature_tolerance: float = Field(default=1e-9, gt=0)

    model_config = {
        "env_file": ".env",
        "case_sensitive": False,
        "extra": "ignore"
    }

    def tolerances(self) -> Tolerances:
        return Tolerances(
            abs_tol=self.abs_tolerance,
            rel_tol=self.rel_tolerance,
            exact_model=self.exact_model_tolerance,
            identity=self.identity_tolerance,
            uncertainty=self.uncertainty_tolerance,
            fd_step_fraction=self.fd_step_fraction,
        )
