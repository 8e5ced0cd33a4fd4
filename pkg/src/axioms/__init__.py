"""Axiom checks, profile generators, counterexample search and certificates."""
