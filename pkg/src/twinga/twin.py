"""Twin-offspring operator: mates for crossover children, adaptive firing rate.

One mating per generation is twin-eligible.  It pairs the generation's
runner-up with a uniformly random member, crosses them, and then (with
the current twin probability) gives each crossover child a "twin mate":
a copy that flips a fixed fraction of the genes where the child differs
from each parent, leaving every other gene untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .config import ATGA, TwinParams
from .encoding import Chromosome, single_point_crossover
from .errors import EncodingError, InvalidStateError, RankingError
from .rng import RandomStream

if TYPE_CHECKING:
    from .ga import GaConfig, Individual, Population

# Values at or above prob_max clamp to just below it, keeping the
# half-open output range while staying as permissive as allowed.
CEILING_MARGIN = 1e-9


def unequal_positions(a: Chromosome, b: Chromosome) -> set[int]:
    """Positions where two chromosomes disagree; its size is their Hamming distance."""
    if len(a) != len(b):
        raise EncodingError(f"chromosome lengths differ: {len(a)} vs {len(b)}")
    return {i for i, (x, y) in enumerate(zip(a.bits, b.bits)) if x != y}


def make_twin_mate(
    child: Chromosome,
    diff_p1: set[int],
    diff_p2: set[int],
    separability: float,
    rng: RandomStream,
) -> Chromosome:
    """Flip floor(separability * |set|) randomly chosen positions from each set.

    Positions are sampled without replacement from each set in ascending
    order (diff_p1 first), so the draw sequence is reproducible.  All
    genes outside the selected positions are kept identical to the child.
    """
    if not 0.0 < separability <= 1.0:
        raise ValueError(f"separability must be in (0, 1], got {separability}")
    length = len(child)
    for pos in diff_p1 | diff_p2:
        if not 0 <= pos < length:
            raise EncodingError(f"position {pos} out of range for length {length}")
    bits = list(child.bits)
    for diff in (diff_p1, diff_p2):
        count = int(separability * len(diff))
        for pos in rng.sample(sorted(diff), count):
            bits[pos] = 1 - bits[pos]
    return Chromosome(tuple(bits))


def adaptive_twin_probability(
    best_fitness: float, runner_up_fitness: float, params: TwinParams
) -> float:
    """Twin probability from the gap between the two best fitnesses.

    Returns 0 (operator disabled) unless the best fitness lies strictly
    inside (gate_low, gate_high).  Inside the gate the gap is clamped
    into [prob_min, prob_max), so the result is never 0 there.
    """
    if runner_up_fitness > best_fitness:
        raise RankingError(
            f"runner-up fitness {runner_up_fitness} exceeds best fitness {best_fitness}"
        )
    if best_fitness <= params.gate_low or best_fitness >= params.gate_high:
        return 0.0
    gap = best_fitness - runner_up_fitness
    if gap < params.prob_min:
        return params.prob_min
    if gap >= params.prob_max:
        return params.prob_max - CEILING_MARGIN
    return gap


def resolve_twin_probability(
    best_fitness: float, runner_up_fitness: float, config: GaConfig
) -> float:
    """Twin probability in effect for a generation with the given top fitnesses.

    The baseline mode never produces twins; the adaptive mode uses the
    fitness-gap rule unless a fixed override is configured.
    """
    if config.mode != ATGA:
        return 0.0
    if config.twin.fixed_probability is not None:
        return config.twin.fixed_probability
    return adaptive_twin_probability(best_fitness, runner_up_fitness, config.twin)


@dataclass(frozen=True)
class TwinEvent:
    """Record of one twin-eligible mating.

    ``children`` holds the pre-mutation chromosomes: two crossover
    children, plus their twin mates in positions 2 and 3 when the
    operator fired (pairs are (0, 2) and (1, 3)).  The diff sets record,
    per crossover child, where it disagreed with each parent.
    """

    parent1: Individual
    parent2: Individual
    parent2_index: int
    probability: float
    applied: bool
    children: tuple[Chromosome, ...]
    child1_diff_p1: frozenset[int] | None = None
    child1_diff_p2: frozenset[int] | None = None
    child2_diff_p1: frozenset[int] | None = None
    child2_diff_p2: frozenset[int] | None = None


def twin_reproduction(pop: Population, config: GaConfig, rng: RandomStream) -> TwinEvent:
    """Run the designated mating: runner-up x random member, twins if drawn.

    Draw order is pinned: random-mate index, crossover cut, firing
    uniform, then (only if fired) the twin-mate position samples for
    child 1 followed by child 2.
    """
    members = pop.members
    if len(members) < 2:
        raise InvalidStateError("twin reproduction needs a population of at least 2")
    ranked = pop.ranked()
    p1 = ranked[1]
    p_twin = resolve_twin_probability(ranked[0].fitness, p1.fitness, config)
    mate_index = rng.randrange(len(members))
    p2 = members[mate_index]
    child1, child2 = single_point_crossover(p1.chromosome, p2.chromosome, rng)
    fired = rng.random() < p_twin
    if not fired:
        return TwinEvent(
            parent1=p1,
            parent2=p2,
            parent2_index=mate_index,
            probability=p_twin,
            applied=False,
            children=(child1, child2),
        )
    c1_diff_p1 = unequal_positions(child1, p1.chromosome)
    c1_diff_p2 = unequal_positions(child1, p2.chromosome)
    twin1 = make_twin_mate(child1, c1_diff_p1, c1_diff_p2, config.twin.separability, rng)
    c2_diff_p1 = unequal_positions(child2, p1.chromosome)
    c2_diff_p2 = unequal_positions(child2, p2.chromosome)
    twin2 = make_twin_mate(child2, c2_diff_p1, c2_diff_p2, config.twin.separability, rng)
    return TwinEvent(
        parent1=p1,
        parent2=p2,
        parent2_index=mate_index,
        probability=p_twin,
        applied=True,
        children=(child1, child2, twin1, twin2),
        child1_diff_p1=frozenset(c1_diff_p1),
        child1_diff_p2=frozenset(c1_diff_p2),
        child2_diff_p1=frozenset(c2_diff_p1),
        child2_diff_p2=frozenset(c2_diff_p2),
    )
