"""Soglia command-line interface."""
from cli.main import build_parser, cmd_check, cmd_sweep, cmd_threshold, main

__all__ = ["main", "build_parser", "cmd_check", "cmd_threshold", "cmd_sweep"]
