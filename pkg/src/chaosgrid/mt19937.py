"""From-scratch MT19937 (32-bit Mersenne Twister), the comparison baseline.

Standard parameters: 624-word state, period 2^19937 - 1. Output is checked
against a committed reference vector (tests/fixtures), including the
well-known first output 3499211612 for seed 5489.
"""

from __future__ import annotations

_N = 624
_M = 397
_MATRIX_A = 0x9908B0DF
_UPPER_MASK = 0x80000000
_LOWER_MASK = 0x7FFFFFFF


class MT19937:
    """One generator stream; single-owner mutable state, one stream per instance."""

    def __init__(self, seed: int):
        if not isinstance(seed, int):
            raise TypeError("seed must be an integer")
        self._mt = [0] * _N
        self._mt[0] = seed & 0xFFFFFFFF
        for i in range(1, _N):
            prev = self._mt[i - 1]
            self._mt[i] = (1812433253 * (prev ^ (prev >> 30)) + i) & 0xFFFFFFFF
        self._index = _N  # forces a twist before the first output

    def _twist(self):
        mt = self._mt
        for k in range(_N):
            y = (mt[k] & _UPPER_MASK) | (mt[(k + 1) % _N] & _LOWER_MASK)
            mt[k] = mt[(k + _M) % _N] ^ (y >> 1)
            if y & 1:
                mt[k] ^= _MATRIX_A
        self._index = 0

    def next_u32(self) -> int:
        """Next tempered 32-bit word."""
        if self._index >= _N:
            self._twist()
        y = self._mt[self._index]
        self._index += 1
        y ^= y >> 11
        y ^= (y << 7) & 0x9D2C5680
        y ^= (y << 15) & 0xEFC60000
        y ^= y >> 18
        return y & 0xFFFFFFFF

    def next_real(self) -> float:
        """Next real in [0,1) with 53-bit resolution (two words per draw)."""
        a = self.next_u32() >> 5
        b = self.next_u32() >> 6
        return (a * 67108864.0 + b) / 9007199254740992.0  # (a*2^26 + b) / 2^53

    def reals(self, n: int) -> list[float]:
        """Convenience: n consecutive next_real() draws."""
        return [self.next_real() for _ in range(n)]
