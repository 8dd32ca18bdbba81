"""Homotopy colimits over dg-categories.

Workspaces and reports cross the C++ boundary as canonical-form JSON text;
this wrapper decodes them into plain dicts.
"""

import json

from ._hocolim import (
    WorkspaceError,
    builtin_workspace,
    canonical,
)
from . import _hocolim

__all__ = [
    "WorkspaceError",
    "builtin_workspace",
    "canonical",
    "homology",
    "replace",
    "wcolim",
    "verify",
]


def homology(workspace, name):
    """Per-degree homology report of a named complex, as a dict."""
    return json.loads(_hocolim.homology(workspace, name))


def replace(workspace, diagram, mode="direct", truncation=4, away_from=()):
    """Pointwise cofibrant replacement: (report dict, output workspace str)."""
    report, output = _hocolim.replace(
        workspace, diagram, mode, truncation, list(away_from)
    )
    return json.loads(report), output


def wcolim(workspace, weight, diagram, check_quillen=""):
    """Weighted colimit report, optionally checking WE preservation."""
    return json.loads(_hocolim.wcolim(workspace, weight, diagram, check_quillen))


def verify(workspace, suite="counterexample", seed=0):
    """Run an invariant suite; returns the report dict."""
    return json.loads(_hocolim.verify(workspace, suite, seed))
