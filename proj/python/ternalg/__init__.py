"""Exact checkers and constructions for ternary algebra structures.

Documents and reports are exchanged as JSON; the helpers here accept dicts or
JSON strings and return dicts.
"""

import json

from . import _core
from ._core import PreconditionError, TernalgError

__all__ = [
    "PreconditionError",
    "TernalgError",
    "catalog",
    "check",
    "check_kinds",
    "derive",
    "derive_names",
    "emit",
    "eval_defect",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def check(kind, *documents, rep=False, map="", max_counterexamples=1, jobs=1, complete_skew=False):
    """Run a checker; returns the report as a dict with a "verdict" of "pass" or "fail"."""
    return json.loads(
        _core.check(kind, [_text(d) for d in documents], rep, map, max_counterexamples, jobs, complete_skew)
    )


def derive(construction, *documents, map="", anchor="", complete_skew=False):
    """Run a construction; returns the derived document as a dict."""
    return json.loads(_core.derive(construction, [_text(d) for d in documents], map, anchor, complete_skew))


def eval_defect(identity, document, *vectors):
    """Defect of a named identity at the given vectors (entries may be ints or "p/q" strings)."""
    args = [[str(x) for x in v] for v in vectors]
    return _core.eval_defect(identity, _text(document), args)


def catalog():
    """Names of the built-in examples."""
    return _core.catalog_names()


def emit(name):
    """A built-in example as a dict."""
    return json.loads(_core.catalog_emit(name))


check_kinds = _core.check_kinds
derive_names = _core.derive_names
