"""Standard optimization test functions with their binary encodings.

Each preset fixes the dimensionality, box bounds, bits per variable and
the known global optimum, so a run is fully specified by a function name
plus the GA parameters.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .encoding import Chromosome, decode_variable
from .errors import ConfigError, EncodingError, InputError

# Magnitude of the normalized Schwefel optimum; used both to report raw
# values and to scale its fitness onto [0, 1].
SCHWEFEL_OPTIMUM_MAGNITUDE = 418.9829

MINIMIZE_TO_ZERO = "minimize_to_zero"
SCHWEFEL_NORMALIZED = "schwefel_normalized"


def himmelblau(x1: float, x2: float) -> float:
    """Two-variable sum of squared residuals; minimum 0 at (3, 2)."""
    return (x1 * x1 + x2 - 11.0) ** 2 + (x1 + x2 * x2 - 7.0) ** 2


def sphere(x: Sequence[float]) -> float:
    """Sum of squares; minimum 0 at the origin."""
    if len(x) == 0:
        raise InputError("sphere requires at least one variable")
    return sum(v * v for v in x)


def rosenbrock(x: Sequence[float]) -> float:
    """Banana-valley function; minimum 0 at all ones."""
    if len(x) < 2:
        raise InputError("rosenbrock requires at least two variables")
    total = 0.0
    for i in range(len(x) - 1):
        total += 100.0 * (x[i + 1] - x[i] * x[i]) ** 2 + (1.0 - x[i]) ** 2
    return total


def rastrigin(x: Sequence[float]) -> float:
    """Sphere plus cosine ripple; highly multimodal, minimum 0 at the origin."""
    if len(x) == 0:
        raise InputError("rastrigin requires at least one variable")
    return 10.0 * len(x) + sum(v * v - 10.0 * math.cos(2.0 * math.pi * v) for v in x)


def normalized_schwefel(x: Sequence[float]) -> float:
    """Dimension-normalized Schwefel sum; minimum -418.9829 near x_i = 420.968."""
    if len(x) == 0:
        raise InputError("normalized schwefel requires at least one variable")
    return sum(-v * math.sin(math.sqrt(abs(v))) for v in x) / len(x)


_EVALUATORS = {
    "himmelblau": lambda x: himmelblau(x[0], x[1]),
    "sphere": sphere,
    "rosenbrock": rosenbrock,
    "rastrigin": rastrigin,
    "schwefel": normalized_schwefel,
}


@dataclass(frozen=True)
class BenchmarkSpec:
    """A test function together with its encoding and known optimum."""

    name: str
    n_variables: int
    lo: float
    hi: float
    bits_per_variable: int
    global_optimum_value: float
    global_optimum_point: tuple[float, ...]
    fitness_kind: str = MINIMIZE_TO_ZERO

    @property
    def chromosome_length(self) -> int:
        return self.n_variables * self.bits_per_variable

    def evaluate(self, variables: Sequence[float]) -> float:
        return _EVALUATORS[self.name](variables)


def decode_genome(c: Chromosome, spec: BenchmarkSpec) -> tuple[float, ...]:
    """Split the bit string into consecutive fields and decode each variable."""
    width = spec.bits_per_variable
    expected = spec.n_variables * width
    if len(c) != expected:
        raise EncodingError(
            f"{spec.name} expects {expected} bits "
            f"({spec.n_variables} x {width}), got {len(c)}"
        )
    return tuple(
        decode_variable(c.bits[i * width : (i + 1) * width], spec.lo, spec.hi)
        for i in range(spec.n_variables)
    )


PRESETS: dict[str, BenchmarkSpec] = {
    "himmelblau": BenchmarkSpec(
        name="himmelblau",
        n_variables=2,
        lo=0.0,
        hi=6.0,
        bits_per_variable=20,
        global_optimum_value=0.0,
        global_optimum_point=(3.0, 2.0),
    ),
    "sphere": BenchmarkSpec(
        name="sphere",
        n_variables=3,
        lo=-5.12,
        hi=5.12,
        bits_per_variable=20,
        global_optimum_value=0.0,
        global_optimum_point=(0.0, 0.0, 0.0),
    ),
    "rosenbrock": BenchmarkSpec(
        name="rosenbrock",
        n_variables=2,
        lo=-2.048,
        hi=2.048,
        bits_per_variable=20,
        global_optimum_value=0.0,
        global_optimum_point=(1.0, 1.0),
    ),
    "rastrigin": BenchmarkSpec(
        name="rastrigin",
        n_variables=2,
        lo=-5.12,
        hi=5.12,
        bits_per_variable=10,
        global_optimum_value=0.0,
        global_optimum_point=(0.0, 0.0),
    ),
    "schwefel": BenchmarkSpec(
        name="schwefel",
        n_variables=2,
        lo=-500.0,
        hi=500.0,
        bits_per_variable=22,
        global_optimum_value=-SCHWEFEL_OPTIMUM_MAGNITUDE,
        global_optimum_point=(420.968, 420.968),
        fitness_kind=SCHWEFEL_NORMALIZED,
    ),
}


def get_preset(name: str) -> BenchmarkSpec:
    try:
        return PRESETS[name]
    except KeyError:
        valid = ", ".join(sorted(PRESETS))
        raise ConfigError(f"unknown function {name!r}; valid presets: {valid}") from None
