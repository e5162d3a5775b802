"""Classical simulation tests."""
