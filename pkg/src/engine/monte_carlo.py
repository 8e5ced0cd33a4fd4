"""
Monte Carlo Estimation
Sample uniformly drawn bipartitions {C, complement} (both sides nonempty) and
average a kernel's per-decomposition divisiveness over them.

The whole sample sequence is drawn from the seed before any evaluation, and
chunk results are merged in chunk order, so (seed, samples) fixes the output
whatever the number of worker threads.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np

from ..model.errors import ProfileInputError
from .kernels import DivergenceKernel

logger = logging.getLogger(__name__)

CHUNK_SIZE = 2048


def draw_coalitions(n: int, samples: int, seed: int) -> np.ndarray:
    """
    Boolean (samples x n) membership masks of C.

    Agent 0 is pinned to C and the other n-1 agents join with probability 1/2;
    rows putting everybody in C are redrawn, which leaves each of the
    2^(n-1) - 1 bipartitions equally likely.
    """
    if samples < 1:
        raise ProfileInputError(f"samples must be >= 1, got {samples}")
    if n < 2:
        raise ProfileInputError(f"sampling bipartitions needs at least 2 agents, got {n}")
    rng = np.random.default_rng(seed)
    bits = rng.random((samples, n - 1)) < 0.5
    full = bits.all(axis=1)
    while full.any():
        bits[full] = rng.random((int(full.sum()), n - 1)) < 0.5
        full = bits.all(axis=1)
    pinned = np.ones((samples, 1), dtype=bool)
    return np.hstack([pinned, bits])


def _chunks(masks: np.ndarray, size: int) -> List[np.ndarray]:
    return [masks[start:start + size] for start in range(0, masks.shape[0], size)]


def estimate_monte_carlo(
    kernel: DivergenceKernel,
    samples: int,
    seed: int,
    workers: int = 1,
) -> Tuple[List[float], List[float]]:
    """
    Estimate E[div(R, x, C, complement)] for every proposal.

    Returns:
        (means, standard errors), one entry per proposal. A single-agent
        profile has no bipartition and estimates 0 with error 0.
    """
    m, n = kernel.m, kernel.n
    if samples < 1:
        raise ProfileInputError(f"samples must be >= 1, got {samples}")
    if n < 2:
        return [0.0] * m, [0.0] * m

    masks = draw_coalitions(n, samples, seed)
    chunks = _chunks(masks, CHUNK_SIZE)
    logger.debug("[MonteCarlo] %s: n=%d, %d samples in %d chunks, seed=%d",
                 kernel.name, n, samples, len(chunks), seed)

    if workers > 1 and kernel.vectorised and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(kernel.sample_matrix, chunks))
    else:
        blocks = [kernel.sample_matrix(chunk) for chunk in chunks]

    values = np.vstack(blocks)
    means = values.mean(axis=0)
    if samples > 1:
        stderr = values.std(axis=0, ddof=1) / np.sqrt(samples)
    else:
        stderr = np.zeros(m)
    return [float(v) for v in means], [float(v) for v in stderr]
