"""Command-line interface and run configuration."""
