"""
Index-based DSF over average Kendall tau: clones are selected together or
not at all, on every profile with m, n <= 4.
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.axioms.suites import clone_consistency_suite


def main(max_m=4, max_n=4):
    print("=" * 60)
    print("CLONE CONSISTENCY SUITE (index[kendall])")
    print("=" * 60)
    result = clone_consistency_suite(max_m=max_m, max_n=max_n)
    print(f"profiles with clones: {result.profiles_with_clones}")
    print(f"clone pairs split:    {result.split_profiles}")
    print(f"violations:           {result.violations}")
    if result.first_split:
        print(f"first split:          {result.first_split}")
    print("✅ clean" if result.clean else "❌ NOT clean")
    return 0 if result.clean else 1


if __name__ == "__main__":
    sys.exit(main())
