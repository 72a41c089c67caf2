"""Python front end for the rcclab C++ core.

Groups, automorphisms, polynomials and matrices are plain dicts in the same
JSON shapes the command-line tool reads and writes.
"""

import json as _json

from . import _rcclab
from ._rcclab import BoundExceeded, InvalidInput, f_function

__all__ = [
    "BoundExceeded",
    "InvalidInput",
    "analyze",
    "catalog",
    "check_rcc",
    "construct",
    "f_function",
    "frobenius",
    "poly_order",
    "regular_basis",
]


def _enc(value):
    return _json.dumps(value)


def catalog(name):
    """Cayley-table dict for a catalog group such as ``"cyclic(6)"``."""
    return _json.loads(_rcclab.catalog(name))


def construct(kind, **params):
    """Build ``"sg120-8"``, ``"g-o"`` (primes, exps) or ``"many-prime"`` (order)."""
    if kind == "sg120-8":
        text = _rcclab.construct_sg120_8()
    elif kind == "g-o":
        text = _rcclab.construct_go(list(params.get("primes", (3, 5, 7))), list(params.get("exps", (1, 1, 1))))
    elif kind == "many-prime":
        text = _rcclab.construct_many_prime(int(params["order"]))
    else:
        raise ValueError(f"unknown construction {kind!r}")
    return _json.loads(text)


def analyze(group, records=True, all_certificates=False):
    """Enumerate Aut(G) and report the RCC per automorphism.

    ``group`` may be a catalog name, a table or permutation-group dict, or a
    ``construct`` result (its packaged automorphism is reported separately).
    """
    return _json.loads(_rcclab.analyze(_enc(group), records, all_certificates))


def check_rcc(group, automorphism, all_certificates=False):
    return _json.loads(_rcclab.check_rcc(_enc(group), _enc(automorphism), all_certificates))


def poly_order(p, coeffs):
    """Order of X modulo the polynomial with the given coefficients (lowest first)."""
    return _json.loads(_rcclab.poly_order(_json.dumps({"p": p, "coeffs": list(coeffs)})))


def frobenius(p, entries):
    return _json.loads(_rcclab.frobenius(_json.dumps({"p": p, "entries": [list(r) for r in entries]})))


def regular_basis(p, entries):
    return _json.loads(_rcclab.regular_basis(_json.dumps({"p": p, "entries": [list(r) for r in entries]})))
