"""Deterministic exact sampling of simplex points.

A splitmix64 generator drives draws from the rational lattice
{0, 1/q, ..., 1}; sorting m-1 lattice cuts and taking consecutive differences
yields an exact probability vector, so every downstream majorization or bound
test stays in exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

_MASK64 = (1 << 64) - 1

DEFAULT_LATTICE = 10**6


class SplitMix64:
    """Tiny deterministic 64-bit generator (splitmix64)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("need a positive bound")
        limit = _MASK64 + 1 - (_MASK64 + 1) % n
        while True:
            draw = self.next_u64()
            if draw < limit:
                return draw % n


def simplex_lattice_point(m: int, rng: SplitMix64, q: int = DEFAULT_LATTICE) -> tuple:
    """Exact point of the (m-1)-simplex with coordinates on the 1/q lattice."""
    if m < 1:
        raise ValueError("need m >= 1")
    if m == 1:
        return (Fraction(1),)
    cuts = sorted(rng.below(q + 1) for _ in range(m - 1))
    edges = [0] + cuts + [q]
    return tuple(
        Fraction(edges[k + 1] - edges[k], q) for k in range(m)
    )
