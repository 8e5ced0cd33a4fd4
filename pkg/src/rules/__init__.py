"""Scoring functions, voting rules and profile indices."""
