"""Deterministic 64-bit random streams for reproducible runs.

The generator is xoshiro256** (Blackman & Vigna, public domain), seeded
from a single 64-bit value through the SplitMix64 mixer, exactly as the
reference C implementation recommends.  Both algorithms are implemented
here in full so the byte-level stream is pinned by this module alone and
can never drift with an interpreter or library upgrade.

Independent streams for parallel trials are derived with
``derive_seed(master_seed, index)``: the derived seed is the
``index+1``-th output of a SplitMix64 sequence started at the master
seed, so trials are reproducible regardless of execution order.
"""

MASK64 = (1 << 64) - 1

_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """SplitMix64 output function: avalanching finalizer of a 64-bit state."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, index: int) -> int:
    """Seed for substream ``index`` of ``master_seed`` (index >= 0)."""
    if index < 0:
        raise ValueError(f"substream index must be >= 0, got {index}")
    state = (master_seed + (index + 1) * _SPLITMIX_GAMMA) & MASK64
    return _mix64(state)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class RandomStream:
    """Seedable xoshiro256** stream with the few draws the GA needs.

    All methods consume a fixed, documented number of 64-bit outputs per
    call, so any two runs with equal seeds replay identical draws.
    """

    def __init__(self, seed: int):
        state = seed & MASK64
        words = []
        for _ in range(4):
            state = (state + _SPLITMIX_GAMMA) & MASK64
            words.append(_mix64(state))
        if not any(words):  # xoshiro must never start at the all-zero state
            words[0] = _SPLITMIX_GAMMA
        self._s0, self._s1, self._s2, self._s3 = words
        self.seed = seed & MASK64

    def next_uint64(self) -> int:
        """Next raw 64-bit output."""
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision (one output)."""
        return (self.next_uint64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) without modulo bias (rejection sampling)."""
        if n <= 0:
            raise ValueError(f"randrange() bound must be positive, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_uint64()
            if r < limit:
                return r % n

    def sample(self, items: list, k: int) -> list:
        """k distinct elements, uniformly without replacement (partial Fisher-Yates).

        Draw order is pinned: one randrange per selected element, walking
        the list front to back.
        """
        n = len(items)
        if not 0 <= k <= n:
            raise ValueError(f"sample size {k} out of range for {n} items")
        pool = list(items)
        for i in range(k):
            j = i + self.randrange(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
