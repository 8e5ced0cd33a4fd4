"""
Score-based DSFs with normalized positional scoring never select a
fixed-position proposal unless they select everything. Searched exhaustively
(m, n <= 4) and over 1000 random profiles (m=5, n=6).
"""
import argparse
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.axioms.suites import weak_position_unanimity_suite
from src.cli.main import seed_arg
from src.infrastructure.logging_setup import configure_logging


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument('--max-m', type=int, default=4)
    parser.add_argument('--max-n', type=int, default=4)
    parser.add_argument('--random', type=int, default=1000)
    parser.add_argument('--seed', type=seed_arg, default=7)
    parser.add_argument('--threads', type=int, default=1)
    args = parser.parse_args()
    configure_logging('INFO')

    print("=" * 60)
    print("WEAK POSITION UNANIMITY SUITE")
    print("=" * 60)
    results = weak_position_unanimity_suite(
        max_m=args.max_m, max_n=args.max_n, random_count=args.random, seed=args.seed, workers=args.threads,
    )
    for result in results:
        print(("❌ " if result.found else "✅ ") + result.describe())
    failed = sum(r.found for r in results)
    print("=" * 60)
    print(f"RESULT: {len(results) - failed}/{len(results)} searches clean")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
