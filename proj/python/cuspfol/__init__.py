"""Python access to the cuspfol C++ core."""

import json

from ._core import ParseError, normalize, parse_form, reduce, schwarzian, sigma
from ._core import run as _run

__all__ = ["ParseError", "command", "normalize", "parse_form", "reduce", "schwarzian", "sigma"]


def command(*args):
    """Run a CLI subcommand and return (exit_code, parsed JSON output)."""
    code, out, _ = _run([str(a) for a in args] + ["--json"])
    return code, json.loads(out)
