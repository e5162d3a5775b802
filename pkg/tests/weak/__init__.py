"""Weak-value tests."""
