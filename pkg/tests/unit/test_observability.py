"""
Unit tests for observability module (logging, metrics, run context).
"""

import json
import threading

import pytest

from observability import (
    setup_logging, get_logger, get_run_id,
    set_run_id, run_context, metrics
)
from observability.context import derive_run_id


class TestLogging:
    """Test structured logging functionality."""

    def test_setup_logging_creates_log_directory(self, tmp_path):
        """setup_logging creates the log directory if it doesn't exist."""
        log_dir = tmp_path / "test_logs"
        assert not log_dir.exists()

        setup_logging(log_level="INFO", log_format="json", log_dir=str(log_dir))

        assert log_dir.exists()

    def test_get_logger_returns_logger(self):
        logger = get_logger("test_component")

        assert logger is not None
        assert logger.name == "test_component"

    def test_json_log_format(self, tmp_path):
        """JSON lines carry message, timestamp and the run id."""
        log_dir = tmp_path / "logs"
        setup_logging(log_level="INFO", log_format="json", log_dir=str(log_dir), enable_console=False)

        logger = get_logger("test")
        with run_context(seed=3, command='test'):
            logger.info("Test JSON logging", extra={"n": 3})

        lines = (log_dir / "lab.log").read_text().strip().splitlines()
        entry = json.loads(lines[-1])
        assert entry["message"] == "Test JSON logging"
        assert "timestamp" in entry
        assert entry["run_id"] == derive_run_id(3, 'test')
        assert entry["n"] == 3


class TestRunContext:
    """Run ids are deterministic and scoped to the context."""

    def test_run_id_is_deterministic(self):
        assert derive_run_id(7, 'quot dim') == derive_run_id(7, 'quot dim')
        assert derive_run_id(7, 'quot dim') != derive_run_id(8, 'quot dim')
        assert derive_run_id(7, 'quot dim').startswith('run_')

    def test_context_restores_previous_id(self):
        set_run_id("outside")
        with run_context(seed=1, command='x') as ctx:
            assert get_run_id() == ctx.run_id
            ctx.set('ideal', 'FF')
            assert ctx.get('ideal') == 'FF'
            assert ctx.to_dict()['seed'] == 1
        assert get_run_id() == "outside"

    def test_run_id_is_thread_local(self):
        """Each thread sees its own run id."""
        ids = {}

        def set_and_get(thread_id):
            set_run_id(f"thread_{thread_id}")
            ids[thread_id] = get_run_id()

        threads = [threading.Thread(target=set_and_get, args=(i,)) for i in range(5)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        assert ids == {i: f"thread_{i}" for i in range(5)}


class TestMetrics:
    """Test metrics collection."""

    def test_increment_counter(self):
        metrics.increment("test_counter")
        metrics.increment("test_counter", value=3)

        assert metrics.counter_value("test_counter") == 4
        assert metrics.get_summary()["counters"]["test_counter"]["default"] == 4

    def test_tags_are_separate_series(self):
        metrics.increment("products", tags={"n": "3"})
        metrics.increment("products", tags={"n": "4"})

        assert metrics.counter_value("products", tags={"n": "3"}) == 1
        assert set(metrics.get_summary()["counters"]["products"]) == {"n=3", "n=4"}

    def test_gauge_metric(self):
        metrics.gauge("closure_size", 16)
        metrics.gauge("closure_size", 131)

        assert metrics.get_summary()["gauges"]["closure_size"]["default"] == 131

    def test_timer_records_timing(self):
        with metrics.timer("block"):
            pass

        timing = metrics.get_summary()["timings"]["block"]["default"]
        assert timing["count"] == 1
        assert timing["min"] >= 0

    def test_disabled_collector_ignores_updates(self):
        metrics.disable()
        try:
            metrics.increment("ignored")
        finally:
            metrics.enable()
        assert metrics.counter_value("ignored") == 0


class TestConsoleHandler:
    """Console logs go through tqdm on stderr."""

    def test_console_handler(self):
        import logging
        import sys

        from observability.logging_config import TqdmHandler

        setup_logging(log_level="debug", log_format="text")
        handlers = logging.getLogger().handlers
        assert len(handlers) == 1
        assert isinstance(handlers[0], TqdmHandler)
        assert handlers[0].stream is sys.stderr
        assert logging.getLogger().level == logging.DEBUG
