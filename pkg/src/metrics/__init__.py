"""Pseudometric values: closed forms, optimizer upper bounds, certified witnesses."""
