"""Symbolic-numeric calculus on germs at 0+ and on integer sequences
sampled along irrational rotations.

Expressions travel as strings in the same grammar the command line uses,
numbers as decimal strings, and structured results as dicts decoded from
the engine's JSON wire format. Engine failures raise :class:`EngineError`
with the stable error code in front of the message, e.g.
``"domain_error: n must be positive"``.
"""

import json as _json

try:
    from hypergerm._hypergerm import EngineError
    from hypergerm import _hypergerm as _core
except ImportError:  # in-tree build: the extension sits next to the package
    from _hypergerm import EngineError
    import _hypergerm as _core

__version__ = "0.1.0"

__all__ = [
    "EngineError",
    "chain_rule_holds",
    "check_dimensions",
    "compose",
    "d_gamma",
    "delta_quotients",
    "derive",
    "equality_report",
    "gamma_value",
    "germ_equal",
    "hindman_search",
    "hindman_verify",
    "lift_point",
    "rm",
    "set_precision",
    "solve_ode",
    "standard_part",
    "witnesses",
]

set_precision = _core.set_precision
derive = _core.derive
standard_part = _core.standard_part
germ_equal = _core.germ_equal
compose = _core.compose
chain_rule_holds = _core.chain_rule_holds
lift_point = _core.lift_point
gamma_value = _core.gamma_value
rm = _core.rm
witnesses = _core.witnesses


def equality_report(lhs, rhs, order=32):
    """Full evidence behind a germ equality decision, as a dict."""
    return _json.loads(_core.equality_report(lhs, rhs, order))


def solve_ode(residual, g0, g1, max_iter=25):
    """Secant iteration on a residual template over Y, X, F."""
    return _json.loads(_core.solve_ode(residual, g0, g1, max_iter))


def delta_quotients(gamma, fn, n, depth=12, eps=""):
    """Difference quotients of a sequence along small-remainder witnesses."""
    return _json.loads(_core.delta_quotients(gamma, fn, str(n), depth, eps))


def d_gamma(gamma, fn, n, depth=12, eps=""):
    """Limit estimate for the difference quotients: kind plus value."""
    return _json.loads(_core.d_gamma(gamma, fn, str(n), depth, eps))


def check_dimensions(gamma, outer, ns, depth=12, tolerance="1e-6"):
    """Derivative of a periodized outer function vs the outer derivative."""
    return _json.loads(
        _core.check_dimensions(gamma, outer, [str(n) for n in ns], depth,
                               tolerance))


def hindman_search(coloring, k, window):
    """Smallest monochromatic sum set in 1..window, or None."""
    raw = _core.hindman_search(coloring, k, window)
    return None if raw is None else _json.loads(raw)


def hindman_verify(coloring, certificate):
    """Recompute every subset sum of a certificate under the coloring."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _core.hindman_verify(coloring, certificate)
