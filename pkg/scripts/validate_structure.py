#!/usr/bin/env python3
"""Validate repository structure."""
import os
import sys


def check_file(path, description):
    exists = os.path.exists(path)
    status = "✅" if exists else "❌"
    print(f"{status} {description}: {path}")
    return exists


def main():
    print("=" * 60)
    print("REPOSITORY STRUCTURE VALIDATION")
    print("=" * 60)

    checks = [
        ("src/model/profile.py", "Profile model"),
        ("src/rules/scoring.py", "Scoring functions"),
        ("src/rules/voting.py", "Voting rules"),
        ("src/rules/indices.py", "Profile indices"),
        ("src/engine/dsf.py", "Divisiveness selection functions"),
        ("src/engine/kernels.py", "Bipartition kernels"),
        ("src/engine/monte_carlo.py", "Monte Carlo estimation"),
        ("src/axioms/checks.py", "Axiom checks"),
        ("src/axioms/search.py", "Counterexample search"),
        ("src/axioms/theorems.py", "Impossibility certificates"),
        ("src/infrastructure/formats.py", "Profile formats"),
        ("src/cli/main.py", "CLI entry point"),
        ("bin/divisiveness.py", "Launcher"),
        ("scripts/validation/monte_carlo_oracle.py", "Monte Carlo oracle"),
        ("VERSION.txt", "Version Marker"),
        ("QUICK_START.md", "Quick Reference"),
    ]

    passed = sum(check_file(path, desc) for path, desc in checks)
    total = len(checks)

    print("=" * 60)
    print(f"RESULT: {passed}/{total} checks passed")

    if passed == total:
        print("✅ Repository structure is CORRECT")
        return 0
    else:
        print("❌ Repository structure has ISSUES")
        return 1


if __name__ == "__main__":
    sys.exit(main())
