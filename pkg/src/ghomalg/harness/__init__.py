"""Fixture language, fixture registry, verification reports and the command line."""

from .parser import ParseError, parse_session, format_session
from .fixtures import Fixture, FixtureError, load_fixture, list_fixtures
from .verify import Report, Check, verify_main, verify_loc, verify_supp, verify_window, verify_expectations

__all__ = ["ParseError", "parse_session", "format_session", "Fixture", "FixtureError",
           "load_fixture", "list_fixtures", "Report", "Check", "verify_main", "verify_loc",
           "verify_supp", "verify_window", "verify_expectations", "run_cli"]


def run_cli(argv=None):
    from .cli import run_cli as _run
    return _run(argv)
