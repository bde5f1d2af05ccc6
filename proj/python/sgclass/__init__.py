"""Classification of graded affine semigroup rings (Cohen-Macaulay, level,
nearly and almost Gorenstein) backed by the C++ engine."""

import json

from . import _core
from ._core import SgclassError

__all__ = ["SgclassError", "classify", "family", "fixture", "fixture_names", "check", "check_ids",
           "oracle"]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def classify(document, max_degree=None, multiple_bound=64):
    """Full report as a dict. `document` is a dict or a JSON string."""
    return json.loads(_core.classify_json(_text(document), max_degree, multiple_bound))


def family(n, k):
    """Input document for the two-parameter family S(n, k)."""
    return json.loads(_core.family_json(n, k))


def fixture(name):
    """Fixture document plus its expected values under "expected"."""
    return json.loads(_core.fixture_json(name))


def fixture_names():
    return _core.fixture_names()


def check(check_id, document):
    """Run one validator; returns (verdict, detail)."""
    return _core.check(check_id, _text(document))


def check_ids():
    return _core.check_ids()


def oracle(document, samples=1000, seed=1):
    """Compare staircase membership with direct membership on random samples."""
    return _core.oracle(_text(document), samples, seed)
