"""Fixed-length binary chromosomes and the operators that act on them."""

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import BoundsError, EncodingError
from .rng import RandomStream


@dataclass(frozen=True)
class Chromosome:
    """Immutable bit string; the genotype of one individual."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) == 0:
            raise EncodingError("chromosome must contain at least one gene")
        if any(b != 0 and b != 1 for b in self.bits):
            raise EncodingError("chromosome genes must be 0 or 1")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @classmethod
    def from_string(cls, text: str) -> "Chromosome":
        if any(ch not in "01" for ch in text):
            raise EncodingError(f"invalid chromosome string {text!r}")
        return cls(tuple(int(ch) for ch in text))


def random_chromosome(length: int, rng: RandomStream) -> Chromosome:
    """Uniform random bit string; one float draw per gene."""
    if length < 1:
        raise EncodingError(f"chromosome length must be >= 1, got {length}")
    return Chromosome(tuple(1 if rng.random() < 0.5 else 0 for _ in range(length)))


def decode_variable(bits: Sequence[int], lo: float, hi: float) -> float:
    """Map a bit field onto [lo, hi] on a uniform grid of 2^len(bits) points.

    Bits are read MSB-first; all-zeros decodes to lo and all-ones to hi,
    with constant step (hi - lo) / (2^len(bits) - 1) between codes.
    """
    if len(bits) == 0:
        raise EncodingError("cannot decode an empty bit field")
    if not lo < hi:
        raise BoundsError(f"invalid bounds: lo={lo} must be below hi={hi}")
    code = 0
    for b in bits:
        code = (code << 1) | b
    return lo + code * (hi - lo) / ((1 << len(bits)) - 1)


def single_point_crossover(
    p1: Chromosome, p2: Chromosome, rng: RandomStream
) -> tuple[Chromosome, Chromosome]:
    """Exchange tails at a cut drawn uniformly from {1, ..., L-1}.

    The cut domain excludes 0 and L, so the children always mix genes from
    both parents (a no-op only when the parents are identical).
    """
    if len(p1) != len(p2):
        raise EncodingError(f"parent lengths differ: {len(p1)} vs {len(p2)}")
    length = len(p1)
    if length < 2:
        raise EncodingError("crossover needs chromosomes of length >= 2")
    cut = 1 + rng.randrange(length - 1)
    child1 = Chromosome(p1.bits[:cut] + p2.bits[cut:])
    child2 = Chromosome(p2.bits[:cut] + p1.bits[cut:])
    return child1, child2


def mutate(c: Chromosome, p_m: float, rng: RandomStream) -> Chromosome:
    """Flip each gene independently with probability p_m.

    Implemented by sampling geometric gaps between flips (inverse CDF), so
    the number of draws scales with the expected flip count rather than
    the chromosome length; the per-gene flip distribution is unchanged.
    """
    if not 0.0 <= p_m <= 1.0:
        raise ValueError(f"mutation probability must be in [0, 1], got {p_m}")
    if p_m == 0.0:
        return c
    if p_m == 1.0:
        return Chromosome(tuple(1 - b for b in c.bits))
    length = len(c)
    log_keep = math.log1p(-p_m)
    flipped: list[int] | None = None
    i = math.floor(math.log1p(-rng.random()) / log_keep)
    while i < length:
        if flipped is None:
            flipped = list(c.bits)
        flipped[i] = 1 - flipped[i]
        i += 1 + math.floor(math.log1p(-rng.random()) / log_keep)
    if flipped is None:
        return c
    return Chromosome(tuple(flipped))
