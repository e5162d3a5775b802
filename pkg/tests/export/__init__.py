"""Export format tests."""
