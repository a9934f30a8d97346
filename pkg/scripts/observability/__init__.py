"""
Observability module for logging, run tracking and metrics collection.

This module provides:
- Structured logging stamped with the current run id
- Run context management (seed, command, arbitrary fields)
- Metrics collection and aggregation
"""

from .logging_config import setup_logging, get_logger
from .context import run_context, get_run_id, set_run_id
from .metrics import metrics

__all__ = [
    'setup_logging',
    'get_logger',
    'run_context',
    'get_run_id',
    'set_run_id',
    'metrics',
]
