"""Test package for hypertope-extensions."""
