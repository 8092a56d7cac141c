"""Pydantic request/response models for the experiment service."""

from pydantic import BaseModel, Field

from ..experiment import DEFAULT_SEED, DEFAULT_TRIALS

OverrideMap = dict[str, int | float | str]


class RunRequest(BaseModel):
    function: str
    mode: str
    trials: int = Field(default=DEFAULT_TRIALS, ge=1)
    seed: int = DEFAULT_SEED
    overrides: OverrideMap = Field(default_factory=dict)


class CompareRequest(BaseModel):
    functions: list[str] = Field(min_length=1)
    trials: int = Field(default=DEFAULT_TRIALS, ge=1)
    seed: int = DEFAULT_SEED
    overrides: OverrideMap = Field(default_factory=dict)


class SummaryStats(BaseModel):
    function: str
    mode: str
    n_trials: int
    mean_best: float
    max_best: float
    cv_percent: float
    mean_convergence_gen: float


class ExportFile(BaseModel):
    name: str
    content: str


class RunResponse(BaseModel):
    function: str
    mode: str
    trials: int
    seed: int
    summary: SummaryStats
    files: list[ExportFile]


class FunctionComparison(BaseModel):
    function: str
    sga: SummaryStats
    atga: SummaryStats


class CompareResponse(BaseModel):
    trials: int
    seed: int
    comparisons: list[FunctionComparison]
    files: list[ExportFile]


class PresetInfo(BaseModel):
    function: str
    n_variables: int
    lower_bound: float
    upper_bound: float
    bits_per_variable: int
    chromosome_length: int
    global_optimum_value: float
    global_optimum_point: list[float]
    pop_size: int
    p_c: float
    p_m: float
    tournament_size: int
    max_generations: int
