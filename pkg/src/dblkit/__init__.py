"""dblkit: a workbench for finite double categories and Verity double bicategories."""

from __future__ import annotations

__version__ = "0.1.0"
