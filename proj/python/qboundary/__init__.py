"""Certification of boundary-separable, eps-entangled and discordant states.

Matrices are numpy complex arrays in the lexicographic product basis
(|i>|j> at index i * dB + j); ``dims`` lists the subsystem dimensions.
"""

import json

from ._core import (
    DEFAULT_SEED,
    PSD_TOL,
    Error,
    bell_phi_plus,
    bell_psi_minus,
    catalogue_ids,
    classify,
    cq_state,
    dephase,
    depolarize_classify,
    embedded_psi_plus,
    epsilon_entangled_from_void,
    example5_state,
    find_boundary,
    gurvits_barnum,
    hermitian_eig,
    nine_state_mixture,
    partial_trace,
    partial_transpose,
    peres_check,
    state_from_json,
    state_to_json,
    thermal_state,
    trace_distance,
    void_degree,
    werner,
)
from . import _core


def run_experiment(experiment_id, params=None, tol=PSD_TOL, seed=DEFAULT_SEED):
    """Runs a catalogue experiment and returns its report as a dict."""
    params = {str(k): str(v) for k, v in (params or {}).items()}
    return json.loads(_core.run_experiment_json(experiment_id, params, tol, seed))


def certify(rho, dims, tol=PSD_TOL):
    """Peres check, void degree, classicality and ball position as a report dict."""
    return json.loads(_core.certify_json(rho, list(dims), tol))


__all__ = [name for name in dir() if not name.startswith("_")]
