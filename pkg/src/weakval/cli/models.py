"""Validated run configuration shared by every CLI command."""

from pathlib import Path
from typing import Any, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

CommandType = Literal["weakvalue", "fig1", "fig2", "quasiprob", "simulate", "convergence"]
ObservableType = Literal["p2", "q2", "energy", "p", "q"]
PointerShapeType = Literal["gaussian", "mixture"]
QuasiprobType = Literal["standard", "kirkwood", "margenau-hill", "wigner"]
FormatType = Literal["csv", "json", "binary"]


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


class RunConfig(BaseModel):
    """Every parameter of a CLI run, with documented ranges.

    The resolved model is embedded in the header of every file the CLI writes.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: CommandType = Field(..., description="Subcommand to run")
    alpha_r: float = Field(
        default=0.0, ge=-6.0, le=6.0, description="Coherent amplitude quadrature alpha_r"
    )
    alpha_i: float = Field(
        default=0.0, ge=-6.0, le=6.0, description="Coherent amplitude quadrature alpha_i"
    )
    obs: ObservableType = Field(default="p2", description="Object observable")
    epsilon: float = Field(default=0.01, ge=0.0, le=1.0, description="Coupling strength")
    epsilons: list[float] = Field(
        default=[0.005, 0.01, 0.02],
        min_length=2,
        description="Coupling strengths for the convergence study",
    )
    q_min: float = Field(default=-16.0, description="Left edge of the object grid")
    q_max: float = Field(default=16.0, description="Right edge of the object grid")
    n_points: int = Field(
        default=1024, ge=8, le=8192, description="Object grid points (power of two)"
    )
    pointer_shape: PointerShapeType = Field(default="gaussian", description="Pointer state")
    pointer_sigma: float = Field(
        default=1.0, gt=0.0, le=10.0, description="Pointer position standard deviation"
    )
    pointer_points: int = Field(
        default=512, ge=8, le=8192, description="Pointer grid points (power of two)"
    )
    pointer_span: float = Field(
        default=12.0, gt=0.0, le=100.0, description="Pointer grid half-width in units of sigma"
    )
    pointer_drift: float = Field(
        default=0.0, ge=-10.0, le=10.0, description="Mean pointer momentum (must be zero)"
    )
    classical: bool = Field(default=False, description="Run the classical Liouville simulator")
    samples: int = Field(default=1_000_000, ge=1, le=10_000_000, description="Classical samples")
    seed: int = Field(default=0, ge=0, description="Random seed")
    bins: int = Field(default=64, ge=1, le=1024, description="Number of q bins")
    kind: QuasiprobType = Field(default="margenau-hill", description="Quasiprobability kind")
    alpha_i_min: float = Field(default=0.0, ge=-6.0, le=6.0, description="fig1 alpha_i sweep start")
    alpha_i_max: float = Field(default=3.0, ge=-6.0, le=6.0, description="fig1 alpha_i sweep end")
    alpha_i_steps: int = Field(default=61, ge=1, le=10_000, description="fig1 alpha_i sweep size")
    output: Path | None = Field(default=None, description="Output file (stdout if omitted)")
    format: FormatType | None = Field(default=None, description="Output format")
    state_file: Path | None = Field(default=None, description="Preselected state to load")
    dump_state: Path | None = Field(default=None, description="Where to save the prepared state")

    @field_validator("n_points", "pointer_points")
    @classmethod
    def _power_of_two(cls, value: int) -> int:
        if not _is_power_of_two(value):
            raise ValueError(f"must be a power of two, got {value}")
        return value

    @field_validator("epsilons")
    @classmethod
    def _epsilons_in_range(cls, values: list[float]) -> list[float]:
        if any(not 0.0 <= e <= 1.0 for e in values):
            raise ValueError("every epsilon must lie in [0, 1]")
        return values

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        if self.q_max <= self.q_min:
            raise ValueError(f"q_max ({self.q_max}) must exceed q_min ({self.q_min})")
        if self.alpha_i_max < self.alpha_i_min:
            raise ValueError("alpha_i_max must not be below alpha_i_min")
        if self.format == "binary" and self.command not in ("fig2", "quasiprob", "simulate"):
            raise ValueError(f"binary output is only available for 2-D fields, not {self.command}")
        if self.command == "simulate" and self.classical and self.format == "binary":
            raise ValueError("the classical simulator writes tables only")
        exact = self.command == "convergence" or (self.command == "simulate" and not self.classical)
        if exact and self.obs == "energy":
            raise ValueError(
                "the exact simulator needs an observable diagonal in q or p; "
                "use simulate --classical for energy"
            )
        return self

    @property
    def resolved_format(self) -> FormatType:
        """Explicit format, else binary for fields written to a file, else CSV."""
        if self.format is not None:
            return self.format
        if self.command in ("fig2", "quasiprob") and self.output is not None:
            return "binary"
        return "csv"

    def header(self) -> dict[str, Any]:
        """The full resolved configuration for file headers.

        The output path is left out so that identical runs produce identical bytes
        wherever they are written.
        """
        meta = self.model_dump(mode="json", exclude={"output"})
        meta["format"] = self.resolved_format
        return meta
