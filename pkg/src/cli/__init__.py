"""Command-line front end: configuration, anchored checks, reports."""
