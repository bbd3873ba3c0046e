"""Shared exception base for the package."""


class GkmError(Exception):
    """Base class for every error raised by this package."""
