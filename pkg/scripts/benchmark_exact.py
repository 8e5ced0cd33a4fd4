"""
Exact bipartition walk timing on m=5, n=20 (524287 bipartitions per DSF).
"""
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pandas as pd

from src.axioms.generators import random_profile
from src.engine.dsf import ScfBasedDsf, ScoreBasedDsf
from src.rules.scoring import ScoringScheme
from src.rules.voting import borda_rule, plurality_rule


def run_benchmark(m=5, n=20, seed=7):
    profile = random_profile(m, n, seed)
    dsfs = [ScoreBasedDsf(ScoringScheme.parse(s)) for s in ('nborda', 'borda', 'nplurality', 'copeland')]
    dsfs += [ScfBasedDsf(borda_rule()), ScfBasedDsf(plurality_rule())]
    rows = []
    for dsf in dsfs:
        started = time.perf_counter()
        report = dsf.report(profile)
        elapsed = time.perf_counter() - started
        rows.append({'method': dsf.name, 'seconds': round(elapsed, 2),
                     'selection': ','.join(report.selected_labels())})
        print(f"  {dsf.name:<20} {elapsed:7.2f}s")
    return pd.DataFrame(rows)


if __name__ == "__main__":
    print("=" * 60)
    print("EXACT ENUMERATION BENCHMARK (m=5, n=20)")
    print("=" * 60)
    print(run_benchmark().to_string(index=False))
