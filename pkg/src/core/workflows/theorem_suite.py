import logging
import math
from functools import cached_property
from typing import Sequence

import numpy as np
import scipy.linalg

from ..models.clock_state import ClockState
from ..models.operator_matrix import OperatorBundle
from ..models.quadrature_rule import QuadratureRule
from ..models.reports import (
    CheckName,
    ProbeState,
    SuiteResult,
    SummaryValue,
    TheoremContext,
    TheoremReport,
)
from ..models.suite_options import DEFAULT_SUITE_OPTIONS, SuiteOptions
from ..ports.clock_model_ports import ClockModel
from .charfn import c_dot0
from .clock_models import TwoComponentClock
from .clock_states import click_state, diagnose_membership, random_state, superposition
from .numerics import integrate, integrate_interval, richardson_derivative, window_samples
from .operators import (
    assemble_operators,
    commutator_expectation,
    evolve,
    expectation,
    hamiltonian_norm_bound,
    pc_commutator_on_clicks,
    reading_span,
    reading_table,
    seam_leak_rate,
    symmetrize,
    tc_row_growth,
    variance,
)

logger = logging.getLogger(__name__)

LOOSE_PROFILE_BOUND = math.sqrt(2) / 2
FINITE_SIZE_NOTE = "finite-size shadow: the seam of the cycle or the grid edge breaks the index shift"


def default_probes(model: ClockModel, options: SuiteOptions = DEFAULT_SUITE_OPTIONS) -> list[ProbeState]:
    grid = model.grid
    return [
        ProbeState(label="click_0", state=click_state(grid, 0)),
        ProbeState(label="click_0_1", state=superposition(grid, [0, 1])),
        ProbeState(
            label="random",
            state=random_state(grid, options.seed, options.random_support),
            seed=options.seed,
        ),
    ]


def consistency_defect(
    model: ClockModel,
    quad: QuadratureRule | None = None,
    options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
    operators: OperatorBundle | None = None,
) -> float:
    """max_u || d/du phi_C(u) + i H phi_C(u) || along the click curve"""
    hamiltonian = (
        operators.hamiltonian if operators is not None
        else assemble_operators(model, _rule(model, quad), step_fraction=options.tolerances.fd_step_fraction).hamiltonian
    )
    origin = click_state(model.grid, 0)
    step = model.grid.tau * options.tolerances.fd_step_fraction
    worst = 0.0
    for u in window_samples(model.grid.tau, options.consistency_samples):
        derivative = richardson_derivative(
            lambda s: evolve(model, origin, s).state.coefficients, float(u), step
        )
        current = evolve(model, origin, float(u)).state.coefficients
        residual = derivative + 1j * (hamiltonian.entries @ current)
        worst = max(worst, float(np.linalg.norm(residual)))
    return worst


def check_lemma1(
    model: ClockModel,
    states: Sequence[ProbeState],
    t_samples: Sequence[float] | None = None,
    quad: QuadratureRule | None = None,
    options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
) -> list[TheoremReport]:
    return TheoremSuite(model, _rule(model, quad), options).check_lemma1(states, t_samples)


def check_lemma2(
    model: ClockModel,
    state: ProbeState,
    quad: QuadratureRule | None = None,
    options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
) -> TheoremReport:
    return TheoremSuite(model, _rule(model, quad), options).check_lemma2(state)


def check_seam_law(
    model: ClockModel,
    state: ProbeState,
    quad: QuadratureRule | None = None,
    options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
) -> list[TheoremReport]:
    return TheoremSuite(model, _rule(model, quad), options).check_seam_law(state)


def check_theorem(
    model: ClockModel,
    states: Sequence[ProbeState],
    quad: QuadratureRule | None = None,
    options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
) -> list[TheoremReport]:
    return TheoremSuite(model, _rule(model, quad), options).check_theorem(states)


def check_no_eigenstate(
    model: ClockModel,
    quad: QuadratureRule | None = None,
    options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
) -> TheoremReport:
    return TheoremSuite(model, _rule(model, quad), options).check_no_eigenstate()


def run_suite(
    model: ClockModel,
    quad: QuadratureRule,
    options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
    operators: OperatorBundle | None = None,
) -> SuiteResult:
    model.grid.require_theorem_ready()
    return TheoremSuite(model, quad, options, operators).run()


class TheoremSuite:
    """Executable lemma and theorem checks sharing one set of assembled operators"""

    def __init__(
        self,
        model: ClockModel,
        quad: QuadratureRule,
        options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
        operators: OperatorBundle | None = None,
    ) -> None:
        self.model = model
        self.quad = quad
        self.options = options
        self._given_operators = operators

    @cached_property
    def operators(self) -> OperatorBundle:
        if self._given_operators is not None:
            return self._given_operators
        return assemble_operators(
            self.model, self.quad, step_fraction=self.options.tolerances.fd_step_fraction
        )

    @cached_property
    def consistency(self) -> float:
        return consistency_defect(self.model, self.quad, self.options, self.operators)

    @cached_property
    def derivative_sum(self) -> float:
        return math.sqrt(
            hamiltonian_norm_bound(self.model, self.options.tolerances.fd_step_fraction)
        )

    @property
    def tau(self) -> float:
        return float(self.model.grid.tau)

    @property
    def exact_tolerance(self) -> float:
        return self.options.tolerances.exact_model

    def run(self) -> SuiteResult:
        probes = default_probes(self.model, self.options)
        reports: list[TheoremReport] = [self.check_consistency()]
        reports.extend(self.check_lemma1(probes))
        for probe in probes:
            reports.append(self.check_lemma2(probe))
            reports.extend(self.check_seam_law(probe))
        reports.extend(self.check_theorem(probes))
        reports.append(self.check_clock_reading())
        reports.append(self.check_reading_at_zero())
        reports.append(self.check_no_eigenstate())
        reports.append(self.check_pc_not_clock())
        reports.append(self.check_tc_eigenstates())
        reports.extend(self.check_uncertainty_quadratic(probe) for probe in probes)
        profile = self.check_profile_bound()
        if profile is not None:
            reports.append(profile)

        failures = [report.check_name for report in reports if report.failed_enforced]
        if failures:
            logger.warning("model '%s' failed enforced checks: %s", self.model.name, failures)
        return SuiteResult(
            model_name=self.model.name,
            reports=tuple(reports),
            summary=self.summary(),
            reading_rows=tuple(self.reading_rows),
        )

    @cached_property
    def reading_limit(self) -> float:
        return reading_span(self.model, self.options.reading_span * self.tau)

    @cached_property
    def reading_rows(self) -> list[tuple[float, float]]:
        return reading_table(
            self.model,
            self.operators.tc,
            self.reading_limit,
            self.options.reading_points,
        )

    def summary(self) -> dict[str, SummaryValue]:
        origin = click_state(self.model.grid, 0)
        ops = self.operators
        sigma_t = math.sqrt(variance(ops.tc, origin))
        sigma_h = math.sqrt(variance(ops.hamiltonian, origin))
        commutator = commutator_expectation(ops.tc, ops.hamiltonian, origin)
        row_intercept, row_slope = tc_row_growth(ops.tc)
        summary: dict[str, SummaryValue] = {
            "model": self.model.name,
            "tau": self.tau,
            "index_min": int(self.model.grid.index_min),
            "index_max": int(self.model.grid.index_max),
            "exact_model": self.model.exact,
            "sigma_T": sigma_t,
            "sigma_T_over_tau": sigma_t / self.tau,
            "sigma_H": sigma_h,
            "uncertainty_product": sigma_t * sigma_h,
            "reading_at_zero": expectation(ops.tc, origin).real,
            "commutator_re": commutator.real,
            "commutator_im": commutator.imag,
            "commutator_error": abs(commutator - 1j),
            "lemma2_difference": self.pc_shift(origin)[0],
            "consistency_defect": self.consistency,
            "hermitian_defect_H": ops.hamiltonian.hermitian_defect,
            "hermitian_defect_T_C": ops.tc.hermitian_defect,
            "quadrature_error_T_C": ops.tc.quadrature_error,
            "tc_row_growth_intercept": row_intercept,
            "tc_row_growth_slope": row_slope,
            "reading_span": self.reading_limit,
            "seed": self.options.seed,
        }
        if isinstance(self.model, TwoComponentClock):
            verdict = "pass" if sigma_t < LOOSE_PROFILE_BOUND * self.tau else "fail"
            summary["bound_check"] = f"< {LOOSE_PROFILE_BOUND:.2f}·τ: {verdict}"
        return summary

    def check_consistency(self) -> TheoremReport:
        return self._report(
            "consistency_defect",
            measured=self.consistency,
            target=0.0,
            state=click_state(self.model.grid, 0),
            note="max_u ||d/du phi_C(u) + i H phi_C(u)||",
        )

    def check_lemma1(
        self,
        states: Sequence[ProbeState],
        t_samples: Sequence[float] | None = None,
    ) -> list[TheoremReport]:
        times = [t * self.tau for t in (t_samples or self.options.t_samples)]
        hamiltonian = self.operators.hamiltonian
        bound = self.derivative_sum
        reports = []
        for probe in states:
            applied = hamiltonian.entries @ probe.state.coefficients
            norm_squared = float(np.vdot(applied, applied).real)
            finite = math.isfinite(norm_squared)
            seminorm = float(np.sum(np.abs(self.model.grid.indices()) * np.abs(applied)))
            reports.append(self._report(
                f"lemma1a_h_bound:{probe.label}",
                measured=norm_squared,
                target=bound * bound,
                abs_error=max(0.0, norm_squared - bound * bound) if finite else math.inf,
                probe=probe,
                note=f"weighted seminorm of H phi = {seminorm:.6g}",
            ))

            at_zero = expectation(hamiltonian, probe.state)
            deviations = [
                (abs(expectation(hamiltonian, evolve(self.model, probe.state, t).state) - at_zero), t)
                for t in times
            ]
            worst, worst_t = max(deviations)
            reports.append(self._report(
                f"lemma1b_energy_constancy:{probe.label}",
                measured=expectation(hamiltonian, evolve(self.model, probe.state, worst_t).state),
                target=at_zero,
                abs_error=worst,
                probe=probe,
                note=f"i * c_dot^00(0) = {1j * c_dot0(self.model, 0):.6g}; worst t = {worst_t:.6g}",
            ))

            energy = abs(at_zero)
            reports.append(self._report(
                f"lemma1c_energy_bound:{probe.label}",
                measured=energy,
                target=bound,
                abs_error=max(0.0, energy - bound),
                probe=probe,
            ))
        return reports

    def check_lemma2(self, probe: ProbeState) -> TheoremReport:
        difference, leak = self.pc_shift(probe.state)
        grid = self.model.grid
        enforced = self.model.exact and not grid.periodic and self.model.support_radius is not None
        return self._report(
            f"lemma2_shift:{probe.label}",
            measured=difference,
            target=self.tau,
            probe=probe,
            enforced=enforced,
            seam_leak=leak,
            note="" if leak is None or abs(leak) <= self.exact_tolerance else FINITE_SIZE_NOTE,
        )

    def check_seam_law(self, probe: ProbeState) -> list[TheoremReport]:
        """Periodic grids only: exact finite-cycle laws for the click shift and the commutator"""
        if not self.model.grid.periodic:
            return []
        difference, leak = self.pc_shift(probe.state)
        assert leak is not None
        commutator = commutator_expectation(self.operators.tc, self.operators.hamiltonian, probe.state)
        return [
            self._report(
                f"lemma2_seam_law:{probe.label}",
                measured=difference,
                target=self.tau + leak,
                probe=probe,
                seam_leak=leak,
            ),
            self._report(
                f"theorem_b_seam_law:{probe.label}",
                measured=commutator,
                target=1j * difference / self.tau,
                probe=probe,
                seam_leak=leak,
            ),
            self.check_drift_law(probe, leak),
        ]

    def check_drift_law(self, probe: ProbeState, leak: float | None = None) -> TheoremReport:
        """Reading drift of an arbitrary state against its integrated seam leak"""
        rows = [
            (t, *self.drift_law(probe.state, t * self.tau)) for t in self.options.t_samples
        ]
        worst_t, drift, law = max(rows, key=lambda row: abs(row[1] - row[2]))
        bound = max(abs(row[2]) for row in rows)
        return self._report(
            f"theorem_c_drift_law:{probe.label}",
            measured=drift,
            target=law,
            probe=probe,
            seam_leak=leak,
            note=f"|drift| <= tau^-1 int |leak| = {bound:.6g} over sampled t, worst t = {worst_t:.6g}",
        )

    def check_theorem(self, states: Sequence[ProbeState]) -> list[TheoremReport]:
        ops = self.operators
        tc, hamiltonian = ops.tc, ops.hamiltonian
        reports = []
        for position, probe in enumerate(states):
            phi = probe.state.coefficients
            psi = states[(position + 1) % len(states)].state.coefficients
            asymmetry = abs(np.vdot(tc.entries @ phi, psi) - np.vdot(phi, tc.entries @ psi))
            reports.append(self._report(
                f"theorem_a_symmetry:{probe.label}",
                measured=float(asymmetry),
                target=0.0,
                probe=probe,
            ))

            commutator = commutator_expectation(tc, hamiltonian, probe.state)
            reports.append(self._report(
                f"theorem_b_commutator:{probe.label}",
                measured=commutator,
                target=1j,
                probe=probe,
                enforced=False,
                seam_leak=self.pc_shift(probe.state)[1],
                note=FINITE_SIZE_NOTE,
            ))

            start = expectation(tc, probe.state).real
            drift = max(
                abs(expectation(tc, evolve(self.model, probe.state, t * self.tau).state).real
                    - t * self.tau - start)
                for t in self.options.t_samples
            )
            reports.append(self._report(
                f"theorem_c_shift_law:{probe.label}",
                measured=drift,
                target=0.0,
                probe=probe,
                enforced=False,
                note=FINITE_SIZE_NOTE,
            ))

            sigma_t = math.sqrt(variance(tc, probe.state))
            sigma_h = math.sqrt(variance(hamiltonian, probe.state))
            product = sigma_t * sigma_h
            reports.append(self._report(
                f"theorem_d_uncertainty:{probe.label}",
                measured=product,
                target=0.5,
                abs_error=max(0.0, 0.5 - product),
                tolerance=self.options.tolerances.uncertainty,
                probe=probe,
                note=f"sigma_T = {sigma_t:.6g}, sigma_H = {sigma_h:.6g}",
            ))
        return reports

    def check_clock_reading(self) -> TheoremReport:
        worst, worst_t = max((abs(value - t), t) for t, value in self.reading_rows)
        return self._report(
            "theorem_c_clock_reading",
            measured=worst,
            target=0.0,
            state=click_state(self.model.grid, 0),
            enforced=False,
            note=(
                f"max |reading(t) - t| over {len(self.reading_rows)} times in "
                f"[-{self.reading_limit:.6g}, {self.reading_limit:.6g}], worst t = {worst_t:.6g}"
            ),
        )

    def check_reading_at_zero(self) -> TheoremReport:
        origin = click_state(self.model.grid, 0)
        return self._report(
            "theorem_c_reading_at_zero",
            measured=expectation(self.operators.tc, origin).real,
            target=0.0,
            state=origin,
        )

    def check_no_eigenstate(self) -> TheoremReport:
        grid = self.model.grid
        origin = click_state(grid, 0)
        if grid.size < 2:
            return self._report(
                "no_eigenstate",
                measured=0.0,
                target=0.0,
                state=origin,
                enforced=False,
                note="skipped: a one-click grid has no index pairs to compare",
            )
        hermitian = symmetrize(self.operators.hamiltonian).entries
        _, vectors = scipy.linalg.eigh(hermitian)
        interior = np.ones(grid.size, dtype=bool) if grid.periodic else ~grid.boundary_mask()
        if not interior.any():
            interior = np.ones(grid.size, dtype=bool)
        magnitudes = np.abs(vectors[interior, :])
        uniformity = magnitudes.max(axis=0) - magnitudes.min(axis=0)
        best = int(np.argmin(uniformity))
        closest = ClockState(grid=grid, coefficients=vectors[:, best])
        return self._report(
            "no_eigenstate",
            measured=float(uniformity[best]),
            target=0.0,
            state=closest,
            enforced=False,
            note=(
                "most uniform eigenvector of the truncated H; on the full index line "
                "|d^m| = |d^n| for all m, n forces d = 0, here the finite index set "
                "keeps the uniform vector normalizable"
            ),
        )

    def check_pc_not_clock(self) -> TheoremReport:
        return self._report(
            "pc_not_clock",
            measured=pc_commutator_on_clicks(self.operators.pc, self.operators.hamiltonian),
            target=0.0,
            state=click_state(self.model.grid, 0),
            note="every click is a P_C eigenstate, so <[P_C, H]> vanishes on clicks",
        )

    def check_tc_eigenstates(self) -> TheoremReport:
        tc, hamiltonian = self.operators.tc, self.operators.hamiltonian
        _, vectors = scipy.linalg.eigh(symmetrize(tc).entries)
        commutator = tc.entries @ hamiltonian.entries - hamiltonian.entries @ tc.entries
        values = np.abs(np.einsum("ij,ik,kj->j", vectors.conj(), commutator, vectors))
        return self._report(
            "tc_eigenstates",
            measured=float(values.max()),
            target=0.0,
            state=click_state(self.model.grid, 0),
            note="eigenvectors of T_C have <[T_C, H]> = 0, so an exact clock admits none",
        )

    def check_uncertainty_quadratic(self, probe: ProbeState) -> TheoremReport:
        tc, hamiltonian = self.operators.tc, self.operators.hamiltonian
        state = probe.state
        var_t = variance(tc, state)
        var_h = variance(hamiltonian, state)
        commutator = commutator_expectation(tc, hamiltonian, state)
        d = state.coefficients / state.norm
        centered_t = tc.entries @ d - expectation(tc, state).real * d
        centered_h = hamiltonian.entries @ d - expectation(hamiltonian, state).real * d
        deviation = 0.0
        for k in self.options.quadratic_ks:
            omega = centered_t + 1j * k * centered_h
            direct = float(np.vdot(omega, omega).real)
            formula = var_t + k * k * var_h - k * commutator.imag
            deviation = max(deviation, abs(direct - formula))
        hermitian = max(tc.hermitian_defect, hamiltonian.hermitian_defect)
        return self._report(
            f"uncertainty_quadratic:{probe.label}",
            measured=deviation,
            target=0.0,
            probe=probe,
            enforced=self.model.exact and hermitian <= self.options.tolerances.abs_tol,
            note="||Omega(k) phi||^2 = Var T_C + k^2 Var H - k Im<[T_C, H]>",
        )

    def check_profile_bound(self) -> TheoremReport | None:
        if not isinstance(self.model, TwoComponentClock):
            return None
        profile = self.model.profile
        tau = self.tau
        integral = integrate(lambda u: abs(profile(u - tau)) if u >= 0 else 0.0, self.quad)
        bound = math.sqrt(2) * integral.value.real
        origin = click_state(self.model.grid, 0)
        sigma_t = math.sqrt(variance(self.operators.tc, origin))
        return self._report(
            "profile_bound",
            measured=sigma_t,
            target=bound,
            abs_error=max(0.0, sigma_t - bound),
            state=origin,
            note=f"sigma_T <= sqrt(2) int_0^tau/2 |g(u - tau)| du < {LOOSE_PROFILE_BOUND:.4f} tau",
        )

    def pc_shift(self, state: ClockState) -> tuple[float, float | None]:
        """<P_C> at +tau/2 minus <P_C> at -tau/2, and the seam leak on periodic grids"""
        pc = self.operators.pc
        half = self.tau / 2
        plus = evolve(self.model, state, half).state
        minus = evolve(self.model, state, -half).state
        difference = expectation(pc, plus).real - expectation(pc, minus).real
        if not self.model.grid.periodic:
            return difference, None
        return difference, seam_leak_rate(self.model, state, -half)

    def drift_law(self, state: ClockState, t: float) -> tuple[float, float]:
        """(<T_C>(t) - <T_C>(0) - t, tau^-1 int_{-tau/2}^{t-tau/2} leak(s) ds)

        On a periodic grid U(tau) is an exact cyclic shift, so the reading
        drifts only through the seam leak and the two values agree at any D.
        Every leak term is non-positive, so the integral is also the
        per-state bound on |drift|.
        """
        tc = self.operators.tc
        start = expectation(tc, state).real
        drift = expectation(tc, evolve(self.model, state, t).state).real - t - start
        half = self.tau / 2
        leak = integrate_interval(
            lambda s: seam_leak_rate(self.model, state, s), -half, t - half, self.quad
        )
        return drift, leak.value.real / self.tau

    def _report(
        self,
        name: str,
        measured: complex,
        target: complex,
        abs_error: float | None = None,
        tolerance: float | None = None,
        probe: ProbeState | None = None,
        state: ClockState | None = None,
        enforced: bool | None = None,
        seam_leak: float | None = None,
        note: str = "",
    ) -> TheoremReport:
        context_state = probe.state if probe is not None else state
        assert context_state is not None
        grid = self.model.grid
        seam_distance = None
        if grid.periodic:
            dominant = int(np.argmax(np.abs(context_state.coefficients))) + grid.index_min
            seam_distance = grid.edge_distance(dominant)
        context = TheoremContext(
            model_name=self.model.name,
            index_min=int(grid.index_min),
            index_max=int(grid.index_max),
            boundary_mass=diagnose_membership(context_state).boundary_mass,
            consistency_defect=self.consistency,
            seam_distance=seam_distance,
            seam_leak=seam_leak,
            seed=probe.seed if probe is not None else None,
            note=note,
        )
        return TheoremReport(
            check_name=CheckName(name),
            measured=measured,
            target=target,
            abs_error=abs(measured - target) if abs_error is None else abs_error,
            tolerance=self.options.tolerances.allowance(
                target, self.exact_tolerance if tolerance is None else tolerance
            ),
            context=context,
            enforced=self.model.exact if enforced is None else enforced,
        )


def _rule(model: ClockModel, quad: QuadratureRule | None) -> QuadratureRule:
    return quad if quad is not None else QuadratureRule(tau=float(model.grid.tau))


__all__ = [
    "TheoremSuite",
    "check_lemma1",
    "check_lemma2",
    "check_no_eigenstate",
    "check_seam_law",
    "check_theorem",
    "consistency_defect",
    "default_probes",
    "run_suite",
]
