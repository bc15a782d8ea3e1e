"""Counting right quasigroups with identity up to isomorphism."""

__version__ = "0.1.0"
