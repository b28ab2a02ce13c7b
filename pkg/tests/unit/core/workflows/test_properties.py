import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.core.models.clock_grid import ClockGrid
from src.core.models.clock_specs import CyclicClockSpec, cosine_profile
from src.core.models.clock_state import ClockState
from src.core.models.quadrature_rule import QuadratureRule
from src.core.workflows.charfn import c
from src.core.workflows.clock_models import make_cyclic, make_two_component
from src.core.workflows.clock_states import random_state, scalar_product
from src.core.workflows.numerics import integrate
from src.core.workflows.operators import apply, build_pc, evolve

GRID = ClockGrid.centered(1.0, 6)
CYCLIC = make_cyclic(CyclicClockSpec(dimension=12, tau=1.0), ClockGrid.centered_cycle(1.0, 12))
COSINE = make_two_component(GRID, cosine_profile(1.0))

seeds = st.integers(min_value=0, max_value=2**32 - 1)
offsets = st.floats(min_value=-0.5, max_value=0.5, allow_nan=False)
coefficients = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)
times = st.floats(min_value=-5, max_value=5, allow_nan=False)


@given(seeds, seeds)
def test_scalar_product_is_conjugate_symmetric(first, second):
    phi = random_state(GRID, first, support=4)
    psi = random_state(GRID, second, support=4)

    assert scalar_product(phi, psi) == pytest.approx(scalar_product(psi, phi).conjugate(), abs=1e-14)


@given(coefficients, coefficients, st.integers(min_value=0, max_value=6))
@settings(max_examples=30)
def test_quadrature_is_linear(a, b, degree):
    rule = QuadratureRule(tau=1.0)

    def f(u):
        return u ** degree

    def g(u):
        return math.cos(3 * u)

    combined = integrate(lambda u: a * f(u) + b * g(u), rule).value
    separate = a * integrate(f, rule).value + b * integrate(g, rule).value

    assert combined == pytest.approx(separate, abs=1e-11)


@given(
    st.integers(min_value=-6, max_value=4),
    st.integers(min_value=-6, max_value=4),
    offsets,
)
def test_shift_identity_on_the_cycle(m, n, u):
    assert c(CYCLIC, m + 1, n + 1, u) == pytest.approx(CYCLIC.c0(m - n, u), abs=1e-13)
    assert CYCLIC.c0(m - n + 12, u) == pytest.approx(CYCLIC.c0(m - n, u), abs=1e-13)


@given(st.integers(min_value=-2, max_value=2), offsets)
def test_two_component_symmetry(n, u):
    assert COSINE.c0(-n, -u) == pytest.approx(COSINE.c0(n, u).conjugate(), abs=1e-15)


@given(seeds, times, times)
@settings(max_examples=25, deadline=None)
def test_cyclic_evolution_is_a_group(seed, s, t):
    state = random_state(CYCLIC.grid, seed)

    stepwise = evolve(CYCLIC, evolve(CYCLIC, state, s).state, t).state
    direct = evolve(CYCLIC, state, s + t).state

    assert np.allclose(stepwise.coefficients, direct.coefficients, rtol=0, atol=1e-10)


@given(
    arrays(np.complex128, GRID.size, elements=coefficients),
    arrays(np.complex128, GRID.size, elements=coefficients),
    coefficients,
)
def test_operator_action_is_linear(first, second, a):
    pc = build_pc(GRID)
    phi = ClockState(grid=GRID, coefficients=first)
    psi = ClockState(grid=GRID, coefficients=second)
    combined = ClockState(grid=GRID, coefficients=first + a * second)

    expected = apply(pc, phi).coefficients + a * apply(pc, psi).coefficients

    assert np.allclose(apply(pc, combined).coefficients, expected, rtol=1e-12, atol=1e-9)
