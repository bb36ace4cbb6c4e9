"""Block decompositions of partition algebras from partition combinatorics."""

from __future__ import annotations

__version__ = "0.1.0"
