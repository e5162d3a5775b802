"""Weak-measurement simulation tests."""
