"""Paley-type graphs on products of Pythagorean primes."""

import json as _json

from ._core import (
    Error,
    Graph,
    PrimeSet,
    __version__,
    brute_force_aut_count,
    build_paley_type,
    classify,
    closed_form_spectrum,
    crt_join,
    crt_split,
    euler_phi,
    find_cycle_of_length,
    full_census,
    jacobi_symbol,
    numeric_spectrum,
    quadratic_residues,
    validate_primes,
)
from ._core import verify_json as _verify_json


def verify(primes, **options):
    """Run the verification suite and return the report as a dict."""
    ps = primes if isinstance(primes, PrimeSet) else validate_primes(list(primes))
    return _json.loads(_verify_json(ps, **options))


__all__ = [
    "Error",
    "Graph",
    "PrimeSet",
    "brute_force_aut_count",
    "build_paley_type",
    "classify",
    "closed_form_spectrum",
    "crt_join",
    "crt_split",
    "euler_phi",
    "find_cycle_of_length",
    "full_census",
    "jacobi_symbol",
    "numeric_spectrum",
    "quadratic_residues",
    "validate_primes",
    "verify",
]
