"""Quasiprobability tests."""
