"""weakval test suite."""
