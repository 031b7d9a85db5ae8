"""Unit-distance dimension of graphs: formulas, constructions and numeric search.

Graphs, partitions and embeddings are plain dicts using the same JSON shapes
as the ``dimcrit`` command-line tool::

    {"n": 4, "edges": [[0, 1], [1, 2]]}
    {"parts": [2, 3]}
    {"d": 2, "points": [[0.0, 0.0], [1.0, 0.0]]}
"""

import json

from . import _dimcrit
from ._dimcrit import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "arcsin",
    "build_multipartite",
    "critical_formula",
    "critical_test",
    "cycle_circle",
    "deletion_table",
    "dim_formula",
    "estimate",
    "hunt",
    "prune",
    "reproduce",
    "run_cli",
    "verify",
]


def _spec(parts):
    if isinstance(parts, dict):
        return json.dumps(parts)
    return json.dumps({"parts": list(parts)})


def dim_formula(parts):
    """Dimension of the complete multipartite graph with these part sizes."""
    return _dimcrit.dim_formula(_spec(parts))


def critical_formula(parts):
    return json.loads(_dimcrit.critical_formula(_spec(parts)))


def deletion_table(parts):
    return json.loads(_dimcrit.deletion_table(_spec(parts)))


def build_multipartite(parts):
    return json.loads(_dimcrit.build_multipartite(_spec(parts)))


def verify(graph, embedding, tol=1e-9):
    return json.loads(_dimcrit.verify(json.dumps(graph), json.dumps(embedding), tol))


def estimate(graph, seed=0, restarts=50, tol=1e-7, families=True):
    """Certified bounds on the dimension, with an embedding when one is known."""
    return json.loads(_dimcrit.estimate(json.dumps(graph), seed, restarts, tol, families))


def critical_test(graph, seed=0, restarts=50, tol=1e-7):
    return json.loads(_dimcrit.critical_test(json.dumps(graph), seed, restarts, tol))


def prune(graph, target, seed=0, restarts=50, tol=1e-7):
    return json.loads(_dimcrit.prune(json.dumps(graph), target, seed, restarts, tol))


def hunt(kind, max_vertices=5, seed=0):
    """Sweep small connected graphs for edge or vertex deletions that drop the dimension."""
    return json.loads(_dimcrit.hunt(kind, max_vertices, seed))


def cycle_circle(r_squared, length):
    return json.loads(_dimcrit.cycle_circle(str(r_squared), length))


def arcsin(r):
    return json.loads(_dimcrit.arcsin(str(r)))


def reproduce(check="all", seed=0):
    return json.loads(_dimcrit.reproduce(check, seed))


def run_cli(args):
    """Runs the command-line tool in-process. Returns (exit_code, stdout, stderr)."""
    return _dimcrit.run_cli([str(a) for a in args])
