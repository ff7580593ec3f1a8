"""Python access to the dmod operator workbench.

    >>> import dmod
    >>> rep = dmod.run("test", dmod.fixture_source("kalman"))
    >>> rep["result"]["verdict"]
    'torsion_free'
"""

import json

from ._core import DmodError, __version__, canonical, digest, fixture_ids, fixture_source
from . import _core

__all__ = ["DmodError", "__version__", "canonical", "demo", "digest", "fixture_ids", "fixture_source", "run"]


def run(command, source, max_order=None, subst=(), seed=1, timing=False):
    """Run a command on .sys source text and return the report as a dict."""
    text, code = _core.run(command, source, max_order, list(subst), seed, timing)
    report = json.loads(text)
    report["exit_code"] = code
    return report


def demo(fixture_id):
    """Run a fixture's check suite ("--all" for every fixture)."""
    text, code = _core.demo(fixture_id)
    report = json.loads(text)
    report["exit_code"] = code
    return report
