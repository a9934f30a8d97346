"""
Structured logging for the lab.

Records carry the run id of the command that produced them. Reports own
stdout, so console logging goes to stderr through tqdm.write and never
tears a progress bar in half. A rotating file log is optional.
"""

import logging
import logging.handlers
from pathlib import Path
from typing import Optional

from pythonjsonlogger import jsonlogger
from tqdm import tqdm

from .context import get_run_id

# Fields a computation may pass in ``extra`` that are promoted to top level
COMPUTATION_FIELDS = ('n', 'm', 'seed', 'ideal', 'dimension', 'rank', 'elapsed_ms')

LOG_FILE = 'lab.log'


class RunIdFilter(logging.Filter):
    """Stamps every record with the current run id."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.run_id = get_run_id() or 'none'
        return True


class LabJsonFormatter(jsonlogger.JsonFormatter):
    """One JSON object per record: timestamp, level, component, run_id, message."""

    def add_fields(self, log_record, record, message_dict):
        super().add_fields(log_record, record, message_dict)
        if not log_record.get('timestamp'):
            log_record['timestamp'] = self.formatTime(record, self.datefmt)
        log_record['level'] = record.levelname
        log_record['component'] = record.name
        if not log_record.get('run_id'):
            log_record['run_id'] = getattr(record, 'run_id', 'none')
        for name in COMPUTATION_FIELDS:
            if name not in log_record and hasattr(record, name):
                log_record[name] = getattr(record, name)


class TqdmHandler(logging.StreamHandler):
    """Writes through tqdm so log lines land above any active bar."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            tqdm.write(self.format(record), file=self.stream)
        except Exception:
            self.handleError(record)


def _formatter(log_format: str) -> logging.Formatter:
    if log_format == 'json':
        return LabJsonFormatter('%(timestamp)s %(level)s %(component)s %(run_id)s %(message)s',
                                datefmt='%Y-%m-%dT%H:%M:%S')
    return logging.Formatter('%(asctime)s [%(run_id)s] %(levelname)-8s [%(name)s] %(message)s',
                             datefmt='%H:%M:%S')


def setup_logging(
    log_level: str = 'WARNING',
    log_format: str = 'text',
    log_dir: Optional[str] = None,
    enable_console: bool = True,
) -> None:
    """
    Configure the root logger.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        log_format: 'json' or 'text'
        log_dir: Directory for a rotating lab.log; no file log when None
        enable_console: Log to stderr

    Example:
        setup_logging(log_level='INFO', log_format='json', log_dir='data/logs')
    """
    level = getattr(logging, log_level.upper(), logging.WARNING)
    formatter = _formatter(log_format)
    run_filter = RunIdFilter()

    root = logging.getLogger()
    root.setLevel(level)
    root.handlers.clear()

    handlers = []
    if enable_console:
        handlers.append(TqdmHandler())
    if log_dir:
        Path(log_dir).mkdir(parents=True, exist_ok=True)
        handlers.append(logging.handlers.RotatingFileHandler(
            Path(log_dir) / LOG_FILE,
            maxBytes=10 * 1024 * 1024,
            backupCount=3,
        ))
    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        handler.addFilter(run_filter)
        root.addHandler(handler)

    logging.getLogger(__name__).debug(
        "Logging initialized",
        extra={'log_level': log_level, 'log_format': log_format, 'log_dir': log_dir},
    )


def get_logger(name: str) -> logging.Logger:
    """
    Logger for a module.

    Example:
        logger = get_logger(__name__)
        logger.info("Closure finished", extra={'n': 4, 'dimension': 131})
    """
    return logging.getLogger(name)
