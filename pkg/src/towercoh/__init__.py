"""Bott cohomology on towers of Grassmann bundles, exceptional-collection checks, and
symmetric-pair coordinates of G(3,6)."""

from __future__ import annotations

from .bott import CohomologyTable, cohomology
from .tower import Tower, builtin_towers, get_tower
from .weights import RepSum, bott_sort

__version__ = "0.1.0"

__all__ = ["CohomologyTable", "RepSum", "Tower", "bott_sort", "builtin_towers", "cohomology", "get_tower"]
