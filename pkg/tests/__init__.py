"""
Recolor Test Suite
------------------
Tests for the recolor tool.
"""
