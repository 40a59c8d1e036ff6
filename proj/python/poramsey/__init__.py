"""Ramsey constructions for finite posets with linear extensions.

Structures are plain dicts in the JSON layout the command-line tool reads:
{"p": 1, "size": 3, "partial_order": [[0, 1], ...], "linear_orders": [[0, 1, 2]]}.
"""

import json

from . import _poramsey
from ._poramsey import InfeasibleError, count_rs, rigid_surjections, search_product

__all__ = [
    "InfeasibleError",
    "antichain",
    "chain",
    "construct_witness",
    "copies",
    "count_rs",
    "extensions",
    "grid",
    "interpretation_holds",
    "minimal_witness",
    "rigid_surjections",
    "search_product",
    "to_dot",
    "validate",
    "verify_product",
    "verify_witness",
]


def _enc(structure):
    return structure if isinstance(structure, str) else json.dumps(structure)


def validate(structure):
    """Validated, normalized copy; raises ValueError on a bad structure."""
    return json.loads(_poramsey.validate(_enc(structure)))


def chain(n, p=1):
    return json.loads(_poramsey.chain(n, p))


def antichain(n, p=1):
    return json.loads(_poramsey.antichain(n, p))


def to_dot(structure):
    return _poramsey.to_dot(_enc(structure))


def extensions(structure, order_index=0):
    return _poramsey.extensions(_enc(structure), order_index)


def copies(x, z):
    return _poramsey.copies(_enc(x), _enc(z))


def verify_witness(z, x, y, d, max_colorings=2**32, jobs=1):
    return json.loads(_poramsey.verify_witness(_enc(z), _enc(x), _enc(y), d, str(max_colorings), jobs))


def verify_product(n, d, k, l, m, max_colorings=2**32):
    return json.loads(_poramsey.verify_product(n, d, k, l, m, str(max_colorings)))


def grid(n, m, anchor=(0,)):
    return json.loads(_poramsey.grid(n, m, list(anchor)))


def construct_witness(x, y, d):
    return json.loads(_poramsey.construct_witness(_enc(x), _enc(y), d))


def minimal_witness(x, y, d, bound=6):
    return json.loads(_poramsey.minimal_witness(_enc(x), _enc(y), d, bound))


def interpretation_holds(x, y, n, anchor=(0,), m=1):
    return _poramsey.interpretation_holds(_enc(x), _enc(y), n, list(anchor), m)
