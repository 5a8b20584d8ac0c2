# __init__.py
"""Shared error hierarchy, logging setup and regime settings."""
