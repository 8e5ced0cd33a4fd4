"""Preference-profile data model."""
