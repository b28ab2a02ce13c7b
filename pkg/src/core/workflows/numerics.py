import logging
import math
from functools import lru_cache
from typing import Callable

import numpy as np
import numpy.typing as npt

from ..errors import NumericsError, WindowError
from ..models.quadrature_rule import QuadratureResult, QuadratureRule
from ..models.reports import DerivativeEstimate
from ..ports.clock_model_ports import ClockModel

logger = logging.getLogger(__name__)

KINK_TOLERANCE = 1e-6
WINDOW_SLACK_FRACTION = 1e-9

Vector = npt.NDArray[np.float64]


@lru_cache(maxsize=32)
def gauss_legendre_nodes(rule: QuadratureRule) -> tuple[Vector, Vector]:
    """Composite nodes and weights, mirror-symmetric about u = 0"""
    x, w = np.polynomial.legendre.leggauss(rule.nodes_per_panel)
    x = (x - x[::-1]) / 2
    w = (w + w[::-1]) / 2
    edges = rule.boundaries
    nodes = []
    weights = []
    for a, b in zip(edges[:-1], edges[1:]):
        half = (b - a) / 2
        nodes.append((a + b) / 2 + half * x)
        weights.append(half * w)
    all_nodes = np.concatenate(nodes)
    all_weights = np.concatenate(weights)
    all_nodes.setflags(write=False)
    all_weights.setflags(write=False)
    return all_nodes, all_weights


def integrate(f: Callable[[float], complex], rule: QuadratureRule) -> QuadratureResult:
    value = _apply_rule(f, rule)
    refined = _apply_rule(f, rule.refined())
    return QuadratureResult(value=value, error_estimate=abs(value - refined))


def integrate_interval(
    f: Callable[[float], complex],
    a: float,
    b: float,
    rule: QuadratureRule,
) -> QuadratureResult:
    """int_a^b f over pieces no longer than tau, each mapped onto the window"""
    if a == b:
        return QuadratureResult(value=0j, error_estimate=0.0)
    pieces = max(1, math.ceil(abs(b - a) / rule.tau))
    length = (b - a) / pieces
    scale = length / rule.tau
    value = 0j
    error = 0.0
    for piece in range(pieces):
        center = a + (piece + 0.5) * length
        part = integrate(lambda u, c=center: scale * complex(f(c + scale * u)), rule)
        value += part.value
        error += part.error_estimate
    return QuadratureResult(value=value, error_estimate=error)


def integrate_array(
    f: Callable[[float], npt.NDArray[np.complex128]],
    rule: QuadratureRule,
) -> tuple[npt.NDArray[np.complex128], float]:
    """Integrate an array-valued integrand, refining until the estimate converges.

    Returns the accepted value and the max-entry error estimate.
    """
    current = rule
    value = _apply_rule_array(f, current)
    for attempt in range(rule.max_refinements + 1):
        refined = _apply_rule_array(f, current.refined())
        error = float(np.max(np.abs(value - refined))) if value.size else 0.0
        if error <= rule.tolerance:
            return value, error
        logger.debug(
            "quadrature estimate %.3g above %.3g with %d nodes per panel",
            error, rule.tolerance, current.nodes_per_panel,
        )
        if attempt == rule.max_refinements:
            break
        current, value = current.refined(), refined
    raise NumericsError(
        f"quadrature did not converge: estimate {error:.3g} above {rule.tolerance:.3g} "
        f"after {rule.max_refinements} refinements"
    )


def window_samples(tau: float, count: int) -> Vector:
    """Uniform closed grid over the window, endpoints included"""
    if count < 2:
        raise NumericsError("at least two window samples are required")
    samples = np.linspace(-tau / 2, tau / 2, count)
    return (samples - samples[::-1]) / 2


def richardson_derivative(
    f: Callable[[float], npt.NDArray[np.complex128]],
    at: float,
    h: float,
) -> npt.NDArray[np.complex128]:
    d_h = (f(at + h) - f(at - h)) / (2 * h)
    d_half = (f(at + h / 2) - f(at - h / 2)) / h
    return (4 * d_half - d_h) / 3


def central_diff(
    f: Callable[[float], complex],
    at: float,
    h: float,
    window: tuple[float, float] | None = None,
) -> DerivativeEstimate:
    """Symmetric difference with one Richardson level plus one-sided slopes"""
    if not h > 0:
        raise NumericsError(f"finite-difference step must be positive, got {h}")
    if window is not None:
        low, high = window
        slack = WINDOW_SLACK_FRACTION * (high - low)
        if at - 2 * h < low - slack or at + 2 * h > high + slack:
            raise WindowError(
                f"difference stencil around {at} with step {h} leaves [{low}, {high}]"
            )

    def sample(u: float) -> complex:
        value = complex(f(u))
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NumericsError(f"non-finite sample at u = {u}")
        return value

    center = sample(at)
    symmetric = complex(richardson_derivative(lambda u: np.asarray(sample(u)), at, h))
    right = (
        2 * (sample(at + h / 2) - center) / (h / 2) - (sample(at + h) - center) / h
    )
    left = (
        2 * (center - sample(at - h / 2)) / (h / 2) - (center - sample(at - h)) / h
    )
    kinked = abs(right - left) > KINK_TOLERANCE * max(1.0, abs(right), abs(left))
    return DerivativeEstimate(
        value=symmetric, left_slope=left, right_slope=right, kinked=kinked
    )


def tail_estimate(model: ClockModel, u_samples: Vector) -> float:
    """Largest outer-decade contribution to sum |n| |c^{n0}(u)| on the grid"""
    grid = model.grid
    offsets = grid.indices()
    mask = grid.boundary_mask()
    if model.support_radius is not None:
        mask = mask & (np.abs(offsets) <= model.support_radius)
    if not mask.any():
        return 0.0
    edge_offsets = offsets[mask]
    weights = np.abs(edge_offsets).astype(np.float64)
    tail = 0.0
    for u in u_samples:
        column = model.c0_column(edge_offsets, float(u))
        tail = max(tail, float(np.sum(weights * np.abs(column))))
    return tail


def _apply_rule(f: Callable[[float], complex], rule: QuadratureRule) -> complex:
    nodes, weights = gauss_legendre_nodes(rule)
    samples = np.array([complex(f(float(u))) for u in nodes], dtype=np.complex128)
    if not np.all(np.isfinite(samples)):
        raise NumericsError("integrand returned a non-finite sample")
    return complex(np.dot(weights, samples))


def _apply_rule_array(
    f: Callable[[float], npt.NDArray[np.complex128]],
    rule: QuadratureRule,
) -> npt.NDArray[np.complex128]:
    nodes, weights = gauss_legendre_nodes(rule)
    total: npt.NDArray[np.complex128] | None = None
    for u, w in zip(nodes, weights):
        sample = np.asarray(f(float(u)), dtype=np.complex128)
        if not np.all(np.isfinite(sample)):
            raise NumericsError(f"integrand returned a non-finite sample at u = {u}")
        total = w * sample if total is None else total + w * sample
    assert total is not None
    return total
