"""Kernel dispatch: compiled extension when available, pure Python otherwise.

The compiled kernels handle up to 63 edges (single mask word); larger
inputs always route to the Python implementation, whose ints are
unbounded.
"""

from __future__ import annotations

from typing import Sequence

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built; pure Python still covers everything
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None
_COMPILED_MAX_EDGES = 63


def backend_name() -> str:
    return "compiled" if COMPILED_AVAILABLE else "python"


def count_matchings(conflicts: Sequence[int]) -> list[int]:
    """Counts of matchings by size over an edge-conflict mask table."""
    if COMPILED_AVAILABLE and len(conflicts) <= _COMPILED_MAX_EDGES:
        return _compiled.count_matchings(list(conflicts))
    return _kernels_py.count_matchings(conflicts)


def connected_subset_masks(adjacency: Sequence[int], cap: int) -> list[int]:
    """All nonempty connected edge subsets as bitmasks (at most ``cap``)."""
    if COMPILED_AVAILABLE and len(adjacency) <= _COMPILED_MAX_EDGES:
        return _compiled.connected_subset_masks(list(adjacency), cap)
    return _kernels_py.connected_subset_masks(adjacency, cap)
