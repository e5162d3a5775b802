"""State construction and transform tests."""
