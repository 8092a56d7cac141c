"""Generational binary GA: evaluation, selection, reproduction, run loop.

Every generation keeps an exact copy of the best individual, runs one
twin-eligible mating built around the runner-up (see ``twin``), and
fills the remaining slots with tournament matings.  The baseline and
twin-adaptive modes share this structure; the mode only decides whether
the twin operator can fire, so two runs with equal seeds stay draw-for-
draw identical until the first twin event.
"""

import math
from dataclasses import dataclass

from .benchmarks import (
    SCHWEFEL_NORMALIZED,
    SCHWEFEL_OPTIMUM_MAGNITUDE,
    BenchmarkSpec,
    decode_genome,
)
from .config import GaConfig
from .encoding import Chromosome, mutate, random_chromosome, single_point_crossover
from .errors import EvaluationError, InvalidStateError
from .rng import RandomStream
from .twin import resolve_twin_probability, twin_reproduction


@dataclass(frozen=True)
class Individual:
    """A chromosome together with its decoded variables, objective and fitness."""

    chromosome: Chromosome
    variables: tuple[float, ...]
    objective: float
    fitness: float


@dataclass
class Population:
    members: list[Individual]
    generation: int = 0

    def ranked(self) -> list[Individual]:
        """Members by descending fitness; ties keep their original order."""
        return sorted(self.members, key=lambda m: -m.fitness)


def objective_to_fitness(objective: float, spec: BenchmarkSpec) -> float:
    """Scale a raw objective onto a maximization fitness in [0, 1].

    Minimize-to-zero functions use 1 / (1 + F), which puts the optimum at
    exactly 1.  The normalized Schwefel objective is negative at good
    points, so its fitness is the fraction of the optimum magnitude
    attained, floored at 0.
    """
    if not math.isfinite(objective):
        raise EvaluationError(f"non-finite objective {objective!r}")
    if spec.fitness_kind == SCHWEFEL_NORMALIZED:
        return max(0.0, -objective / SCHWEFEL_OPTIMUM_MAGNITUDE)
    return 1.0 / (1.0 + objective)


def evaluate_chromosome(c: Chromosome, spec: BenchmarkSpec) -> Individual:
    variables = decode_genome(c, spec)
    objective = spec.evaluate(variables)
    if not math.isfinite(objective):
        raise EvaluationError(
            f"{spec.name} returned non-finite value at {variables}", variables=variables
        )
    return Individual(
        chromosome=c,
        variables=variables,
        objective=objective,
        fitness=objective_to_fitness(objective, spec),
    )


def tournament_select(pop: Population, k: int, rng: RandomStream) -> Individual:
    """Draw k members uniformly with replacement; the fittest of the draw wins.

    Ties go to the earliest draw, so a single-member population (or an
    all-equal one) reduces to a uniform pick.
    """
    if not pop.members:
        raise InvalidStateError("cannot select from an empty population")
    if k < 1:
        raise ValueError(f"tournament size must be >= 1, got {k}")
    n = len(pop.members)
    winner = pop.members[rng.randrange(n)]
    for _ in range(k - 1):
        contender = pop.members[rng.randrange(n)]
        if contender.fitness > winner.fitness:
            winner = contender
    return winner


def step_generation(pop: Population, config: GaConfig, rng: RandomStream) -> Population:
    """Produce the next generation of exactly pop_size members.

    Slot order is pinned: the elite copy, then the designated mating's
    mutated children (2, or 4 when twins fired), then tournament matings
    (crossover with probability p_c, both children mutated) until the
    population is full; the surplus child of the last mating is dropped.
    The elite is never mutated.
    """
    spec = config.effective_benchmark
    elite = pop.ranked()[0]
    next_members = [elite]
    event = twin_reproduction(pop, config, rng)
    for child in [mutate(c, config.p_m, rng) for c in event.children]:
        if len(next_members) < config.pop_size:
            next_members.append(evaluate_chromosome(child, spec))
    while len(next_members) < config.pop_size:
        parent_a = tournament_select(pop, config.tournament_size, rng)
        parent_b = tournament_select(pop, config.tournament_size, rng)
        if rng.random() < config.p_c:
            child_a, child_b = single_point_crossover(
                parent_a.chromosome, parent_b.chromosome, rng
            )
        else:
            child_a, child_b = parent_a.chromosome, parent_b.chromosome
        child_a = mutate(child_a, config.p_m, rng)
        child_b = mutate(child_b, config.p_m, rng)
        next_members.append(evaluate_chromosome(child_a, spec))
        if len(next_members) < config.pop_size:
            next_members.append(evaluate_chromosome(child_b, spec))
    return Population(next_members, pop.generation + 1)


@dataclass(frozen=True)
class GenerationEntry:
    """Per-generation trace row."""

    generation: int
    best_fitness: float
    second_best_fitness: float
    avg_fitness: float
    twin_probability: float


@dataclass(frozen=True)
class TrialRecord:
    """Complete trace of one run: generation 0 plus every step."""

    trial_index: int
    entries: tuple[GenerationEntry, ...]
    final_best: Individual
    convergence_generation: int


def _first_attainment(entries: tuple[GenerationEntry, ...]) -> int:
    final = entries[-1].best_fitness
    for entry in entries:
        if entry.best_fitness >= final - 1e-12:
            return entry.generation
    return entries[-1].generation


def convergence_generation(record: TrialRecord) -> int:
    """First generation whose best fitness reaches the run's final best fitness."""
    return _first_attainment(record.entries)


def _record_entry(pop: Population, config: GaConfig) -> GenerationEntry:
    ranked = pop.ranked()
    best, runner_up = ranked[0].fitness, ranked[1].fitness
    return GenerationEntry(
        generation=pop.generation,
        best_fitness=best,
        second_best_fitness=runner_up,
        avg_fitness=sum(m.fitness for m in pop.members) / len(pop.members),
        twin_probability=resolve_twin_probability(best, runner_up, config),
    )


def run(config: GaConfig, trial_index: int = 0) -> TrialRecord:
    """Run one seeded GA from a fresh random population to the generation budget."""
    rng = RandomStream(config.master_seed)
    spec = config.effective_benchmark
    length = config.chromosome_length
    pop = Population(
        [evaluate_chromosome(random_chromosome(length, rng), spec) for _ in range(config.pop_size)]
    )
    entries = [_record_entry(pop, config)]
    for _ in range(config.max_generations):
        pop = step_generation(pop, config, rng)
        entries.append(_record_entry(pop, config))
    final_best = pop.ranked()[0]
    frozen = tuple(entries)
    return TrialRecord(
        trial_index=trial_index,
        entries=frozen,
        final_best=final_best,
        convergence_generation=_first_attainment(frozen),
    )
