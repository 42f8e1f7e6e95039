"""Test package for orbit-audit."""
