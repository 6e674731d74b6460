"""Tests for Soglia."""
