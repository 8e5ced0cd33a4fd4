"""
Tests package for the divisiveness toolkit
"""
