"""Gauss-Legendre quadrature plumbing shared across the package.

All integrals in the package are computed on fixed node sets (no
randomness), so outputs are deterministic given the configuration.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = ["gauss_legendre", "panel_rule", "panels_progressive"]


@lru_cache(maxsize=64)
def gauss_legendre(n: int):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def panel_rule(a: float, b: float, n_panels: int, nodes_per_panel: int = 16):
    """Composite Gauss-Legendre rule on [a, b] with equal panels.

    Returns flat arrays (nodes, weights) with n_panels * nodes_per_panel
    entries.
    """
    if b <= a:
        raise ValueError(f"empty interval [{a}, {b}]")
    x, w = gauss_legendre(nodes_per_panel)
    edges = np.linspace(a, b, n_panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def panels_progressive(edges, nodes_per_panel: int = 16):
    """Composite rule on the panels defined by an increasing edge sequence."""
    edges = np.asarray(edges, dtype=float)
    x, w = gauss_legendre(nodes_per_panel)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights
