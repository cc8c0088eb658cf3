"""Python front end for the tjkernel library.

Instances are passed around in the text format read by the ``tjisr`` CLI.
"""
import json

from . import _core
from ._core import GenerationError, ParseError, gen_gadget, gen_planar, normalize

__all__ = ["GenerationError", "ParseError", "gen_gadget", "gen_planar", "kernelize", "normalize", "size_bound",
           "solve", "stats", "verify"]


def solve(text, max_states=5_000_000, max_millis=60_000):
    """BFS decision with a shortest sequence. Returns a dict with verdict, states and jumps."""
    out = json.loads(_core.solve(text, max_states, max_millis))
    out["jumps"] = [tuple(j) for j in out["jumps"]]
    return out


def kernelize(text, mode="general", r=3, strict=False):
    """Runs the general or planar kernel; the reduced instance comes back as text."""
    out = json.loads(_core.kernelize(text, mode, r, strict))
    if "certificate" in out:
        out["certificate"] = [tuple(j) for j in out["certificate"]]
    return out


def verify(text, jumps):
    """(ok, failing_step) for a list of (from, to) jumps."""
    return _core.verify(text, list(jumps))


def stats(text):
    return json.loads(_core.stats(text))


def size_bound(r, k, planar):
    """Exact theoretical kernel bound as a Python int."""
    return int(_core.size_bound(r, k, planar))
