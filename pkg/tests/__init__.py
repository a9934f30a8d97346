"""
Test suite for News Literacy Highlighting System.

Includes unit tests, integration tests, and performance tests.
"""
