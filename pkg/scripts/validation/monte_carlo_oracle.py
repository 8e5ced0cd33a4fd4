"""
Monte Carlo vs exact: 20 seeded profiles (m=4, n=8), 20000 samples each.
Every estimate must sit within 0.05 of the exact value and at least 18 of
the 20 selections must match.
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.axioms.generators import random_profiles
from src.engine.dsf import DecompositionScheme, ScfBasedDsf, ScoreBasedDsf
from src.rules.scoring import normalized_borda
from src.rules.voting import borda_rule

PROFILES = 20
M, N = 4, 8
SAMPLES = 20000
TOLERANCE = 0.05
MIN_MATCHES = 18


def run_oracle(seed=7):
    ok = True
    for label, make in (
        ("score[nborda]", lambda d: ScoreBasedDsf(normalized_borda(), d)),
        ("scf[borda]", lambda d: ScfBasedDsf(borda_rule(), d)),
    ):
        print(f"\n{label}: {PROFILES} profiles, m={M}, n={N}, {SAMPLES} samples")
        worst = 0.0
        matches = 0
        for i, profile in enumerate(random_profiles(PROFILES, M, N, seed)):
            exact = make(DecompositionScheme.exact()).report(profile)
            sampled = make(DecompositionScheme.monte_carlo(SAMPLES, seed + i)).report(profile)
            gap = max(abs(float(e) - s) for e, s in zip(exact.values, sampled.values))
            worst = max(worst, gap)
            matches += exact.selection == sampled.selection
        passed = worst < TOLERANCE and matches >= MIN_MATCHES
        ok = ok and passed
        print(f"  worst gap:          {worst:.4f} (limit {TOLERANCE})")
        print(f"  matching selection: {matches}/{PROFILES} (need {MIN_MATCHES})")
        print(f"  {'✅ PASS' if passed else '❌ FAIL'}")
    return 0 if ok else 1


if __name__ == "__main__":
    print("=" * 60)
    print("MONTE CARLO ORACLE")
    print("=" * 60)
    sys.exit(run_oracle())
