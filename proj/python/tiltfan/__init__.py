"""Python front end for the tiltfan library.

Fans, graphs and matrices are plain dicts in the same JSON layout the
command-line tool reads and writes.
"""

import json

from . import _core
from ._core import DEFAULT_BUDGET, SCHEMA_VERSION, TiltfanError

__all__ = [
    "DEFAULT_BUDGET",
    "SCHEMA_VERSION",
    "TiltfanError",
    "analyze",
    "brauer_fan",
    "classify",
    "cluster_fan",
    "coxeter_fan",
    "eulerian",
    "kase_fan",
    "mutate",
]


def cluster_fan(B, budget=DEFAULT_BUDGET):
    """g-fan of a skew-symmetric matrix; partial when the budget runs out."""
    return json.loads(_core.cluster_fan(json.dumps({"n": len(B), "B": B}), budget))


def mutate(B, sequence):
    """Extended seed after mutating at the 1-based directions in order."""
    return json.loads(_core.mutate_sequence(json.dumps({"n": len(B), "B": B}), list(sequence)))


def brauer_fan(graph):
    return json.loads(_core.brauer_fan(json.dumps(graph)))


def coxeter_fan(type_, n):
    return json.loads(_core.coxeter_fan(type_, n))


def kase_fan(l, m):
    return json.loads(_core.kase_fan(l, m))


def analyze(fan, ehrhart=4):
    return json.loads(_core.analyze(json.dumps(fan), ehrhart))


def classify(fan):
    return json.loads(_core.classify(json.dumps(fan)))


def eulerian(type_, n):
    return list(_core.eulerian(type_, n))
