"""Run configuration: GA parameters, twin-operator parameters, mode flags."""

from dataclasses import dataclass, field, replace

from .benchmarks import BenchmarkSpec
from .errors import ConfigError

SGA = "sga"
ATGA = "atga"
MODES = (SGA, ATGA)


@dataclass(frozen=True)
class TwinParams:
    """Parameters of the twin operator and its adaptive probability.

    The operator only fires while the best fitness sits strictly inside
    (gate_low, gate_high); inside that window the probability is the gap
    between the two best fitnesses, clamped into [prob_min, prob_max).
    ``separability`` is the fraction of differing genes flipped when a
    twin mate is built.  ``fixed_probability`` bypasses adaptation
    entirely (regression/testing escape hatch).
    """

    gate_low: float = 0.5
    gate_high: float = 0.95
    prob_min: float = 0.05
    prob_max: float = 0.4
    separability: float = 0.5
    fixed_probability: float | None = None

    def __post_init__(self):
        if not 0.0 < self.gate_low < self.gate_high <= 1.0:
            raise ConfigError(
                "twin gates must satisfy 0 < gate_low < gate_high <= 1, got "
                f"gate_low={self.gate_low}, gate_high={self.gate_high}"
            )
        if not 0.0 < self.prob_min < self.prob_max <= 1.0:
            raise ConfigError(
                "twin probability bounds must satisfy 0 < prob_min < prob_max <= 1, "
                f"got prob_min={self.prob_min}, prob_max={self.prob_max}"
            )
        if not 0.0 < self.separability <= 1.0:
            raise ConfigError(
                f"separability must be in (0, 1], got {self.separability}"
            )
        if self.fixed_probability is not None and not 0.0 <= self.fixed_probability <= 1.0:
            raise ConfigError(
                f"fixed_probability must be in [0, 1], got {self.fixed_probability}"
            )


@dataclass(frozen=True)
class GaConfig:
    """Everything that determines one run, including the master seed."""

    benchmark: BenchmarkSpec
    mode: str
    master_seed: int
    pop_size: int = 40
    bits_per_variable: int | None = None
    p_c: float = 1.0
    p_m: float = 0.01
    tournament_size: int = 2
    max_generations: int = 15
    twin: TwinParams = field(default_factory=TwinParams)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.pop_size < 4:
            raise ConfigError(f"pop_size must be >= 4, got {self.pop_size}")
        if not 0.0 <= self.p_c <= 1.0:
            raise ConfigError(f"p_c must be in [0, 1], got {self.p_c}")
        if not 0.0 <= self.p_m <= 1.0:
            raise ConfigError(f"p_m must be in [0, 1], got {self.p_m}")
        if self.tournament_size < 1:
            raise ConfigError(f"tournament_size must be >= 1, got {self.tournament_size}")
        if self.max_generations < 1:
            raise ConfigError(f"max_generations must be >= 1, got {self.max_generations}")
        if self.bits_per_variable is None:
            object.__setattr__(self, "bits_per_variable", self.benchmark.bits_per_variable)
        if self.bits_per_variable < 1:
            raise ConfigError(f"bits_per_variable must be >= 1, got {self.bits_per_variable}")

    @property
    def effective_benchmark(self) -> BenchmarkSpec:
        """Benchmark spec with any bits-per-variable override applied."""
        if self.bits_per_variable == self.benchmark.bits_per_variable:
            return self.benchmark
        return replace(self.benchmark, bits_per_variable=self.bits_per_variable)

    @property
    def chromosome_length(self) -> int:
        return self.benchmark.n_variables * self.bits_per_variable
