"""Reproducible randomness built on the Philox counter-based generator.

All randomized routines in the package draw from streams keyed by
``(seed, stream_index)``.  Philox is a pure counter-based generator, so a
stream is a deterministic function of its key on every platform, and Monte
Carlo totals are independent of how sample chunks are assigned to workers:
chunk ``c`` of a run always uses the stream keyed ``(seed, c)``.
"""

from __future__ import annotations

import numpy as np

MC_CHUNK = 1 << 14  # fixed Monte Carlo chunk size; part of the stream contract


def stream(seed: int, index: int = 0) -> np.random.Generator:
    """Independent generator for (seed, index), stable across platforms."""
    return np.random.Generator(np.random.Philox(key=(seed & (2**64 - 1), index & (2**64 - 1))))


def integer_points(seed: int, count: int, dim: int, low: int = -9, high: int = 9):
    """``count`` integer vectors with entries uniform in [low, high]."""
    gen = stream(seed, 0)
    pts = gen.integers(low, high + 1, size=(count, dim))
    return [[int(x) for x in row] for row in pts]


def integer_matrix(seed: int, rows: int, cols: int, low: int = -9, high: int = 9) -> np.ndarray:
    gen = stream(seed, 0)
    return gen.integers(low, high + 1, size=(rows, cols))


def complex_s_samples(seed: int, count: int, re_range=(0.05, 0.45), im_range=(-1.0, 1.0)):
    """Complex test arguments staying away from half-integer lattice lines.

    Real parts are drawn in a window well inside (0, 1/2) and nudged off
    rational points; imaginary parts are nonzero except possibly by chance.
    """
    gen = stream(seed, 1)
    out = []
    while len(out) < count:
        re = gen.uniform(*re_range) + 0.012345
        im = gen.uniform(*im_range)
        s = complex(re, im)
        if min(abs(2 * re - round(2 * re)), 1.0) > 1e-3:
            out.append(s)
    return out
