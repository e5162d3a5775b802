"""Command handlers: build the objects a run needs, compute, and emit plot-ready data."""

import logging
import sys
import time
from typing import Any

import numpy as np
import pandas as pd

from weakval.classical import (
    apply_kick,
    classical_symbol,
    classical_weak_values,
    coherent_density,
    conditional_mean_Q,
    default_bins,
    pointer_density,
    sample_product_state,
)
from weakval.cli.models import RunConfig
from weakval.core import ObservableSpec, QuasiprobKind, WaveFunction
from weakval.core.errors import ConfigError
from weakval.export import format_csv, format_json, write_field, write_table
from weakval.measurement import (
    PointerState,
    conditional_means_frame,
    evolve_joint,
    gaussian_mixture_pointer,
    gaussian_pointer,
    shift_convergence_study,
    validate_pointer,
)
from weakval.quasiprob import DISTRIBUTIONS, QuasiprobField, negativity_volume
from weakval.states import (
    alpha_from_quadratures,
    coherent_state_from_quadratures,
    in_position,
    make_grid,
    read_state,
    write_state,
)
from weakval.weak import (
    negativity_probability,
    negativity_probability_numeric,
    negativity_region,
    observed_negativity_probability,
    weak_value,
)

logger = logging.getLogger(__name__)

# Widths of the two-Gaussian mixture pointer, in units of --pointer-sigma.
MIXTURE_WIDTHS = (0.8, 1.2)

OBSERVABLES = {
    "p2": ObservableSpec.p_squared,
    "q2": ObservableSpec.q_squared,
    "energy": ObservableSpec.energy,
    "p": lambda: ObservableSpec.diagonal_in_p(lambda p: p, label="p"),
    "q": lambda: ObservableSpec.diagonal_in_q(lambda q: q, label="q"),
}


def _observable(config: RunConfig) -> ObservableSpec:
    return OBSERVABLES[config.obs]()


def _object_state(config: RunConfig) -> WaveFunction:
    """Preselected state: loaded from --state-file, else the coherent state of the config."""
    if config.state_file is not None:
        state = in_position(read_state(config.state_file)).normalized()
        logger.info(f"loaded state from {config.state_file} on {state.grid}")
    else:
        grid = make_grid(config.q_min, config.q_max, config.n_points)
        state = coherent_state_from_quadratures(config.alpha_r, config.alpha_i, grid)
    if config.dump_state is not None:
        write_state(config.dump_state, state)
    return state


def _pointer(config: RunConfig) -> PointerState:
    sigma = config.pointer_sigma
    if config.pointer_shape == "mixture":
        if config.pointer_drift != 0.0:
            raise ConfigError("--pointer-drift applies to the gaussian pointer only")
        return gaussian_mixture_pointer(
            [w * sigma for w in MIXTURE_WIDTHS],
            span=config.pointer_span / max(MIXTURE_WIDTHS),
            n_points=config.pointer_points,
        )
    return gaussian_pointer(
        sigma,
        momentum=config.pointer_drift,
        span=config.pointer_span,
        n_points=config.pointer_points,
    )


def _emit_table(config: RunConfig, frame: pd.DataFrame, results: dict[str, Any]) -> None:
    meta = {**config.header(), **results}
    fmt = config.resolved_format
    if fmt == "binary":
        raise ConfigError(f"binary output is only available for 2-D fields, not {config.command}")
    if config.output is None:
        sys.stdout.write(format_csv(frame, meta) if fmt == "csv" else format_json(frame, meta))
        return
    write_table(config.output, frame, meta, fmt)
    logger.info(f"wrote {len(frame)} rows to {config.output}")


def _emit_field(
    config: RunConfig, values: np.ndarray, field_header: dict[str, Any], results: dict[str, Any]
) -> None:
    if config.output is None:
        raise ConfigError("binary output needs --output")
    write_field(config.output, values, {**field_header, "meta": {**config.header(), **results}})
    logger.info(f"wrote field {values.shape} to {config.output}")


def _field_results(field: QuasiprobField) -> dict[str, Any]:
    total = field.total()
    results: dict[str, Any] = {
        "field_kind": field.kind.value,
        "total_re": total.real,
        "total_im": total.imag,
        "minimum": field.minimum(),
    }
    if field.kind.is_real:
        results["negativity_volume"] = negativity_volume(field)
    return results


def _write_quasiprob(config: RunConfig, field: QuasiprobField) -> None:
    results = _field_results(field)
    if config.resolved_format == "binary":
        _emit_field(config, field.values, field.header(), results)
    else:
        _emit_table(config, field.to_frame(), results)


def cmd_weakvalue(config: RunConfig) -> int:
    """Weak-value profile; for p^2 on coherent input also prints the negativity region."""
    state = _object_state(config)
    profile = weak_value(_observable(config), state)
    results: dict[str, Any] = {
        "observed_negativity_probability": observed_negativity_probability(profile),
    }
    if config.state_file is None and config.obs == "p2":
        alpha = alpha_from_quadratures(config.alpha_r, config.alpha_i)
        low, high = negativity_region(alpha)
        results["negativity_region"] = [low, high]
        results["negativity_probability"] = negativity_probability(alpha)
        print(f"# negativity region: Re(p^2)_w < 0 for q < {low!r} or q > {high!r}")
    _emit_table(config, profile.to_frame(), results)
    return 0


def cmd_fig1(config: RunConfig) -> int:
    """Probability of a negative weak value of p^2 against alpha_i."""
    grid = make_grid(config.q_min, config.q_max, config.n_points)
    alpha_i = np.linspace(config.alpha_i_min, config.alpha_i_max, config.alpha_i_steps)
    alphas = [alpha_from_quadratures(config.alpha_r, a) for a in alpha_i]
    frame = pd.DataFrame(
        {
            "alpha_i": alpha_i,
            "probability": [negativity_probability(a) for a in alphas],
            "numeric": [negativity_probability_numeric(a, grid) for a in alphas],
        }
    )
    results = {"max_abs_difference": float((frame["probability"] - frame["numeric"]).abs().max())}
    _emit_table(config, frame, results)
    return 0


def cmd_fig2(config: RunConfig) -> int:
    """Margenau-Hill field of the (displaced) vacuum."""
    state = _object_state(config)
    field = DISTRIBUTIONS[QuasiprobKind.MARGENAU_HILL].compute(state)
    _write_quasiprob(config, field)
    return 0


def cmd_quasiprob(config: RunConfig) -> int:
    """Any supported quasiprobability field of the preselected state."""
    state = _object_state(config)
    field = DISTRIBUTIONS[QuasiprobKind(config.kind)].compute(state)
    _write_quasiprob(config, field)
    return 0


def _simulate_quantum(config: RunConfig) -> int:
    state = _object_state(config)
    obs = _observable(config)
    pointer = _pointer(config)
    validate_pointer(pointer)
    start = time.perf_counter()
    joint = evolve_joint(state, pointer, obs, config.epsilon)
    logger.info(f"exact evolution took {time.perf_counter() - start:.2f}s")
    results = {"total": joint.total(), "pointer_sigma": pointer.sigma}
    if config.resolved_format == "binary":
        _emit_field(config, joint.values, joint.header(), results)
        return 0
    frame = conditional_means_frame(joint)
    profile = weak_value(obs, state)
    frame["eps_times_cw"] = config.epsilon * profile.real
    _emit_table(config, frame, results)
    return 0


def _simulate_classical(config: RunConfig) -> int:
    system = coherent_density(config.alpha_r, config.alpha_i)
    pointer = pointer_density(config.pointer_sigma, config.pointer_drift)
    obs = _observable(config)
    start = time.perf_counter()
    ensemble = sample_product_state(system, pointer, config.samples, config.seed)
    kicked = apply_kick(ensemble, obs, config.epsilon)
    logger.info(f"sampled and kicked {config.samples} particles in {time.perf_counter() - start:.2f}s")
    edges = default_bins(system, config.bins)
    centers = 0.5 * (edges[1:] + edges[:-1])
    c_w, _ = classical_weak_values(classical_symbol(obs), system, centers)
    sigma = pointer.x_std()
    report = conditional_mean_Q(kicked, edges, config.epsilon * c_w, sigma)
    results = {"pointer_sigma": sigma, "flagged_bins": int(report.flagged.sum())}
    _emit_table(config, report.to_frame(), results)
    return 0


def cmd_simulate(config: RunConfig) -> int:
    """Quantum exact simulation, or the classical Liouville ensemble with --classical."""
    if config.classical:
        return _simulate_classical(config)
    return _simulate_quantum(config)


def cmd_convergence(config: RunConfig) -> int:
    """Epsilon-convergence study of the first-order pointer-shift law."""
    state = _object_state(config)
    pointer = _pointer(config)
    validate_pointer(pointer)
    report = shift_convergence_study(state, pointer, _observable(config), config.epsilons)
    results = {"compared_points": report.compared_points, "weakness_flagged": report.flagged}
    _emit_table(config, report.to_frame(), results)
    return 0


COMMANDS = {
    "weakvalue": cmd_weakvalue,
    "fig1": cmd_fig1,
    "fig2": cmd_fig2,
    "quasiprob": cmd_quasiprob,
    "simulate": cmd_simulate,
    "convergence": cmd_convergence,
}
