"""Tests for chaos_probe."""
