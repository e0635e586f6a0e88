"""Checks, theorem suites and model search for autometrized lattice-ordered monoids."""

import json as _json

from . import _almg
from ._almg import (
    Algebra,
    ParseError,
    canonical_form,
    drl_difference,
    element_labels,
    fixty_triangles,
    has_fixty,
    iv_intersect,
    iv_star,
    iv_union,
    lattice_between,
    metric_between,
    model,
    set_threads,
    version,
)

__version__ = version()

AXIOMS = ("lattice", "monoid", "metric", "contractions", "axiom2", "axiom4", "semiregular")


def classify(alg, witness_cap=16):
    return _json.loads(_almg._classify(alg, witness_cap))


def check(alg, axiom, witness_cap=16):
    return _json.loads(_almg._check(alg, axiom, witness_cap))


def theorem_suite(alg, witness_cap=16):
    return _json.loads(_almg._theorem_suite(alg, witness_cap))


def _with_algebras(raw):
    result = _json.loads(raw)
    result["algebras"] = [Algebra.from_text(t) for t in result["algebras"]]
    return result


def enumerate_al_monoids(n, budget=100_000_000, dedup=True):
    return _with_algebras(_almg._enumerate(n, budget, dedup))


def search(size, require=(), violate=(), budget=100_000_000, dedup=True, first=False):
    return _with_algebras(
        _almg._search(size, list(require), list(violate), budget, dedup, first)
    )


def interval_demo(name):
    return _json.loads(_almg._demo(name))
