"""Integration tests for end-to-end workflows."""
