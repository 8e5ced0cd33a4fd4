"""Divisiveness engine: bipartitions, kernels, Monte Carlo and the DSF constructions."""
