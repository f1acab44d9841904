"""Deterministic, counter-addressed random streams for Monte Carlo trials.

Every trial gets its own substream keyed by ``(seed, stream, trial)`` through
``numpy.random.SeedSequence``'s spawn-key mechanism, so the values a trial
consumes never depend on execution order, trial-level parallelism, or the
total trial count.  Draw order within a substream is fixed: uniforms first,
then standard normals.
"""

import numpy as np
from numpy.random import PCG64, Generator, SeedSequence

# stream ids, one per sampling context (avoid reuse across protocols)
STREAM_VERIFY = 1
STREAM_PHASE_UNCERTAINTY = 2
STREAM_ENSEMBLE = 3
STREAM_CPI_CW = 4
STREAM_CPI_CCW = 5
STREAM_TOPO_A = 6
STREAM_TOPO_B = 7
STREAM_GUESS = 8
STREAM_ENSEMBLE_NULL = 9
STREAM_DEPHASE = 10


def trial_rng(seed: int, stream: int, trial: int) -> Generator:
    """Generator for one trial's substream."""
    return Generator(PCG64(SeedSequence(entropy=int(seed), spawn_key=(int(stream), int(trial)))))


def trial_blocks(seed: int, stream: int, trials: int, n_uniform: int, n_normal: int):
    """Per-trial uniforms and normals, shape (trials, n_uniform) / (trials, n_normal).

    Row i is drawn from substream (seed, stream, i) regardless of ``trials``.
    """
    u = np.empty((trials, n_uniform)) if n_uniform else np.empty((trials, 0))
    z = np.empty((trials, n_normal)) if n_normal else np.empty((trials, 0))
    for i in range(trials):
        g = trial_rng(seed, stream, i)
        if n_uniform:
            u[i] = g.random(n_uniform)
        if n_normal:
            z[i] = g.standard_normal(n_normal)
    return u, z
