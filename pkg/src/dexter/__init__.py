"""The dexter order on Dyck paths: slides, intervals, meets and invariants."""

from .dyck import IntervalRef, parse, to_string
from .order import covers, hasse

__all__ = ["IntervalRef", "covers", "hasse", "parse", "to_string"]
