"""Derivatives of analytic functions by trapezoid quadrature on a circle.

The trapezoid rule on a uniform circular contour is a DFT of the boundary
samples; for f analytic on the closed disk the quadrature error decays
geometrically in the node count.  This works wherever the function can be
evaluated, in particular in strips where termwise differentiation of a
series representation is unavailable.
"""

from __future__ import annotations

from math import factorial

import numpy as np


def derivatives_by_contour(f, s0: complex, order_count: int, radius: float,
                           nodes: int | None = None) -> np.ndarray:
    """f(s0), f'(s0), ..., f^(order_count-1)(s0) from samples on |s - s0| = radius.

    f must be analytic on the closed disk of that radius.  Evaluator
    exceptions propagate to the caller.
    """
    if order_count < 1:
        raise ValueError(f"order_count must be >= 1, got {order_count}")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if nodes is None:
        nodes = max(32, 8 * order_count)
    if nodes < 8 * order_count:
        raise ValueError(f"need nodes >= 8 * order_count = {8 * order_count}, got {nodes}")
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    points = s0 + radius * np.exp(1j * theta)
    samples = np.array([f(p) for p in points], dtype=np.complex128)
    orders = np.arange(order_count)
    # j-th Fourier coefficient of the boundary samples times j! / radius^j
    coeffs = np.exp(-1j * np.outer(orders, theta)) @ samples / nodes
    scale = np.array([factorial(j) for j in orders], dtype=float) / radius**orders.astype(float)
    return coeffs * scale
