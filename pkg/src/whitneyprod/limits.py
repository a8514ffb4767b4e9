"""Size guards for product construction and guarded recursions."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_product_vertices: int = 20000
    max_recursion_vertices: int = 40


DEFAULT_LIMITS = Limits()
