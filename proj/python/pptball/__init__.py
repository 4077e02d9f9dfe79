"""Robustness analysis of bound entangled states built from unextendible product bases."""

import json

from . import _pptball
from ._pptball import (
    Error,
    ball_membership,
    catalog_names,
    eigh,
    entanglement_threshold,
    grid_oracle_lambda,
    is_ppt_all_cuts,
    omega,
    partial_transpose,
    purity_branch,
    upb_entanglement_threshold,
    upb_projector,
    witness,
)

__version__ = _pptball.__version__


def export_upb(name):
    return json.loads(_pptball.upb_json(name))


def compute_lambda(name, restarts=200, seed=0):
    return json.loads(_pptball.lambda_json(name, restarts, seed))


def profile(name, grid=50, restarts=200, seed=0, bound_mode="tight"):
    return json.loads(_pptball.profile_json(name, grid, restarts, seed, bound_mode))


def verify(name, trials=1000, seed=0, restarts=200):
    return json.loads(_pptball.verify_json(name, trials, seed, restarts))


def crossing_x0(n, dim, lambda_):
    return json.loads(_pptball.crossing_x0_json(n, dim, lambda_))
