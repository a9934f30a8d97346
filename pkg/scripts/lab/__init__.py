"""
Command-line lab: argument parsing, run configuration and JSON reports.
"""

from .cli import build_parser, main, run
from .elements import parse_hecke_element, parse_render_target, parse_twisted_element, split_terms
from .run import SCHEMA_VERSION, RunConfig, RunOutcome, build_report, dump_report

__all__ = [
    'build_parser',
    'main',
    'run',
    'parse_hecke_element',
    'parse_render_target',
    'parse_twisted_element',
    'split_terms',
    'SCHEMA_VERSION',
    'RunConfig',
    'RunOutcome',
    'build_report',
    'dump_report',
]
