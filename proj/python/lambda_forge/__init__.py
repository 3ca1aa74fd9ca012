"""Exact tools for the n-qubit stabilizer polytope.

Operators, states and circuits use the same JSON layout as the lambda-forge CLI; this module
accepts and returns plain Python dicts and lists.
"""

import json as _json

from . import _core

SCHEMA_VERSION = _core.SCHEMA_VERSION
InfeasibleError = _core.InfeasibleError


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def membership(operator):
    """Facet certificate: member flag, facet values, active set and the violated facet if any."""
    return _json.loads(_core.membership(_dump(operator)))


def is_vertex(operator):
    return _json.loads(_core.is_vertex(_dump(operator)))


def stabilizer_states(n):
    return _json.loads(_core.stabilizer_states(n))


def cnc_vertices(n):
    return _json.loads(_core.cnc_vertices(n))


def cnc_operator(cnc_set):
    return _json.loads(_core.cnc_operator(_dump(cnc_set)))


def orbit_family():
    """Parameters (I, gamma, collection, gamma_prime) of the 1920 two-qubit orbit vertices."""
    return _json.loads(_core.orbit_family())


def orbit_vertex(params):
    return _json.loads(_core.orbit_vertex(_dump(params)))


def alpha0():
    return _json.loads(_core.alpha0())


def phi(operator, params):
    return _json.loads(_core.phi(_dump(operator), _dump(params)))


def project(operator, label, outcome):
    return _json.loads(_core.project(_dump(operator), label, outcome))


def reduce(request, coins=()):
    return _json.loads(_core.reduce(_dump(request), list(coins)))


def simulate_exact(circuit, oracle_fallback=False):
    return _json.loads(_core.simulate_exact(_dump(circuit), oracle_fallback))


def sample(circuit, seed, shots, jobs=0, oracle_fallback=False):
    return _json.loads(_core.sample(_dump(circuit), seed, shots, jobs, oracle_fallback))


def lemma_check(samples=100, seed=1):
    return _json.loads(_core.lemma_check(samples, seed))


def poset():
    return _json.loads(_core.poset())


def parse_field(value):
    """Float value of a serialized field element ("p/q" or {"a": "p/q", "b": "p/q"})."""
    from fractions import Fraction

    if isinstance(value, dict):
        return float(Fraction(value["a"])) + float(Fraction(value["b"])) * 2 ** 0.5
    return float(Fraction(str(value)))
