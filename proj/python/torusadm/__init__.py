"""Exact admissibility of rank-one local systems on line arrangement
complements.

Thin convenience layer over the compiled ``_core`` module: every function
parses the JSON report emitted by the C++ kernel and returns plain dicts.
"""

import json

from ._core import (  # noqa: F401
    BudgetExceeded,
    InputFormatError,
    SemanticError,
    __version__,
    run_json,
)


def run(verb, arrangement, point="", weights="", *, betti=False,
        essential=False, budget=None, jobs=1, forms=""):
    """Run one verb and return the full report document as a dict."""
    raw = run_json(verb, str(arrangement), str(point), str(weights),
                   betti=betti, essential=essential, budget=budget,
                   jobs=jobs, forms=forms)
    return json.loads(raw)


def phi(arrangement, point):
    """Forms of Phi taking integer values at the point (its real part)."""
    return run("phi", arrangement, point)["payload"]["phi_t"]


def check(arrangement, point, *, betti=False):
    """Admissibility verdict with its certificate."""
    return run("check", arrangement, point, betti=betti)["payload"]


def is_admissible(arrangement, point):
    return check(arrangement, point)["admissible"]


def strata(arrangement, *, essential=False, budget=None, jobs=1, forms=""):
    """Maximal non-admissible strata as translated subtori."""
    doc = run("strata", arrangement, essential=essential, budget=budget,
              jobs=jobs, forms=forms)
    return doc["payload"]["strata"]


def components(arrangement, forms):
    """Structure of the subtorus cut out by the named forms."""
    return run("components", arrangement, forms=forms)["payload"]["subtorus"]


def resonance(arrangement, weights):
    """First Aomoto cohomology of the weight vector in the given file."""
    return run("resonance", arrangement, weights=weights)["payload"]


def report(arrangement, point):
    """Combined report: incidence data, Phi_t, verdict, stratum."""
    return run("report", arrangement, point)["payload"]
