"""Per-prime lookup tables behind the vectorized sweep paths.

Everything here is derived from enumeration over residues mod p, so the
tables are only practical (and only int64-safe) for p < 2**31.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

from .arith import primitive_root

_MAX_TABLE_PRIME = 1 << 31
_BLOCK = 1 << 21  # elements per block when enumerating pairs


class PrimeTables:
    def __init__(self, p: int):
        if p >= _MAX_TABLE_PRIME:
            raise ValueError(f"p={p} is too large for table-driven enumeration")
        self.p = p
        self.half = (p - 1) // 2

    @cached_property
    def chi(self) -> np.ndarray:
        """chi[x] = (x/p) for 0 <= x < p, from the set of squares."""
        p = self.p
        table = np.full(p, -1, dtype=np.int8)
        i = np.arange(1, self.half + 1, dtype=np.int64)
        table[i * i % p] = 1
        table[0] = 0
        return table

    @cached_property
    def nr_prefix(self) -> np.ndarray:
        """nr_prefix[k] = number of nonresidues in [0, k), doubled for wraparound."""
        nr = (self.chi == -1).astype(np.int64)
        out = np.zeros(2 * self.p + 1, dtype=np.int64)
        np.cumsum(np.concatenate([nr, nr]), out=out[1:])
        return out

    @cached_property
    def inverses(self) -> np.ndarray:
        p = self.p
        inv = np.zeros(p, dtype=np.int64)
        g, logs, powers = self.discrete_log
        k = logs[1:]
        inv[1:] = powers[(p - 1 - k) % (p - 1)]
        return inv

    @cached_property
    def discrete_log(self) -> tuple[int, np.ndarray, np.ndarray]:
        """(g, log, power) with power[k] = g^k and log[power[k]] = k."""
        p = self.p
        g = primitive_root(p)
        powers = np.empty(p - 1, dtype=np.int64)
        x = 1
        for k in range(p - 1):
            powers[k] = x
            x = x * g % p
        logs = np.zeros(p, dtype=np.int64)
        logs[powers] = np.arange(p - 1, dtype=np.int64)
        return g, logs, powers

    def _ratio_counts(self, triangle: bool) -> np.ndarray:
        # counts[x] = #{(i, j) in region : j = i*x (mod p)}
        p, h = self.p, self.half
        counts = np.zeros(p, dtype=np.int64)
        j = np.arange(1, h + 1, dtype=np.int64)
        rows = max(1, _BLOCK // max(h, 1))
        for i0 in range(1, h + 1, rows):
            i = np.arange(i0, min(h, i0 + rows - 1) + 1, dtype=np.int64)[:, None]
            x = j[None, :] * self.inverses[i] % p
            if triangle:
                x = x[j[None, :] > i]
            counts += np.bincount(x.ravel(), minlength=p)
        return counts

    @cached_property
    def triangle_counts(self) -> np.ndarray:
        """Pairs 0 < i < j < p/2 grouped by x = j/i; equals |M_p(x)| for x >= 2."""
        return self._ratio_counts(triangle=True)

    @cached_property
    def square_counts(self) -> np.ndarray:
        """Pairs in [1, (p-1)/2]^2 grouped by x = j/i."""
        return self._ratio_counts(triangle=False)

    @cached_property
    def l_set_sizes(self) -> np.ndarray:
        """sizes[j] = |{i <= (p-1)/2 : {i(j-1)} < p/2 < {ij}}| for every j."""
        p, h = self.p, self.half
        sizes = np.zeros(p, dtype=np.int64)
        j = np.arange(p, dtype=np.int64)
        rows = max(1, _BLOCK // p)
        for i0 in range(1, h + 1, rows):
            i = np.arange(i0, min(h, i0 + rows - 1) + 1, dtype=np.int64)[:, None]
            hi = i * j[None, :] % p
            lo = (hi - i) % p
            sizes += ((2 * lo < p) & (2 * hi > p)).sum(axis=0)
        return sizes

    def gauss_mask(self, s: int) -> np.ndarray:
        """Boolean mask over i = 1..(p-1)/2 selecting E_p(s)."""
        i = np.arange(1, self.half + 1, dtype=np.int64)
        return 2 * (i * (s % self.p) % self.p) > self.p

    def count_nonresidues(self, start: int, length: int) -> int:
        """Nonresidues among the residues start, start+1, ..., start+length-1 (cyclic)."""
        start %= self.p
        return int(self.nr_prefix[start + length] - self.nr_prefix[start])


@lru_cache(maxsize=4)
def tables(p: int) -> PrimeTables:
    return PrimeTables(p)
