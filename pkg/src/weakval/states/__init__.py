"""Quadrature wavefunctions: constructors, transforms and operators."""

from weakval.states.constructors import (
    alpha_from_quadratures,
    as_mixed,
    coherent_state,
    coherent_state_from_quadratures,
    default_grid,
    fock_state,
    make_grid,
    mix,
    quadratures_of,
)
from weakval.states.io import format_state, parse_state, read_state, write_state
from weakval.states.operators import (
    apply_observable,
    expectation,
    momentum_moments,
    position_moments,
)
from weakval.states.transforms import in_momentum, in_position, to_momentum, to_position

__all__ = [
    "alpha_from_quadratures",
    "apply_observable",
    "as_mixed",
    "coherent_state",
    "coherent_state_from_quadratures",
    "default_grid",
    "expectation",
    "fock_state",
    "format_state",
    "in_momentum",
    "in_position",
    "make_grid",
    "mix",
    "momentum_moments",
    "parse_state",
    "position_moments",
    "quadratures_of",
    "read_state",
    "to_momentum",
    "to_position",
    "write_state",
]
