"""
Every shipped DSF on perfectly uniform profiles (m in 2..4, k in 1..2):
where anonymity and neutrality pass, uniformity must pass too.
Exact bipartition DSFs beyond the electorate cap show as 'skipped'.
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.axioms.suites import uniformity_frame, uniformity_meta_check
from src.engine.dsf import IndexBasedDsf, NavarreteDsf, RankVarianceDsf, ScfBasedDsf, ScoreBasedDsf
from src.rules.scoring import normalized_borda, normalized_plurality


def main():
    dsfs = [
        RankVarianceDsf(),
        NavarreteDsf(normalized_borda()),
        ScoreBasedDsf(normalized_borda()),
        ScoreBasedDsf(normalized_plurality()),
        ScfBasedDsf(),
        IndexBasedDsf(),
    ]
    print("=" * 60)
    print("UNIFORMITY META-CHECK")
    print("=" * 60)
    frame = uniformity_frame(uniformity_meta_check(dsfs))
    print(frame.to_string(index=False))
    bad = int((~frame['consistent']).sum())
    print("=" * 60)
    print("✅ consistent" if bad == 0 else f"❌ {bad} inconsistent row(s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
