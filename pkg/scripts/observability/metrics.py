"""
In-process counters, gauges and timings for engine work.

Each metric is a family of series keyed by its tags, e.g. the
``hecke_basis_products`` counter has one series per n. The lab logs the
summary at DEBUG after each command.
"""

import time
from collections import Counter, defaultdict
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional

import numpy as np

Tags = Optional[Dict[str, str]]

DEFAULT_SERIES = 'default'


def series_key(tags: Tags) -> str:
    """``n=3,table=flat`` for tags, ``default`` without."""
    if not tags:
        return DEFAULT_SERIES
    return ','.join(f"{k}={v}" for k, v in sorted(tags.items()))


def _timing_summary(samples: List[float]) -> Dict[str, float]:
    values = np.asarray(samples)
    return {
        'count': int(values.size),
        'min': float(values.min()),
        'max': float(values.max()),
        'avg': float(values.mean()),
        'p50': float(np.percentile(values, 50)),
        'total': float(values.sum()),
    }


class MetricsCollector:
    """Counters, last-value gauges and millisecond timings; can be switched off."""

    def __init__(self):
        self.enabled = True
        self._counters: Dict[str, Counter] = defaultdict(Counter)
        self._gauges: Dict[str, Dict[str, float]] = defaultdict(dict)
        self._timings: Dict[str, Dict[str, List[float]]] = defaultdict(lambda: defaultdict(list))

    def enable(self) -> None:
        self.enabled = True

    def disable(self) -> None:
        self.enabled = False

    def increment(self, name: str, value: float = 1, tags: Tags = None) -> None:
        if self.enabled:
            self._counters[name][series_key(tags)] += value

    def gauge(self, name: str, value: float, tags: Tags = None) -> None:
        if self.enabled:
            self._gauges[name][series_key(tags)] = value

    def timing(self, name: str, duration_ms: float, tags: Tags = None) -> None:
        if self.enabled:
            self._timings[name][series_key(tags)].append(duration_ms)

    @contextmanager
    def timer(self, name: str, tags: Tags = None) -> Iterator[None]:
        """
        Time the enclosed block.

        Example:
            with metrics.timer('quotient_dimension', tags={'ideal': 'FF', 'n': '4'}):
                result = two_point(compute, seed)
        """
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timing(name, (time.perf_counter() - start) * 1000, tags)

    def counter_value(self, name: str, tags: Tags = None) -> float:
        return self._counters.get(name, Counter())[series_key(tags)]

    def get_summary(self) -> Dict[str, Any]:
        return {
            'counters': {name: dict(series) for name, series in self._counters.items()},
            'gauges': {name: dict(series) for name, series in self._gauges.items()},
            'timings': {
                name: {key: _timing_summary(samples) for key, samples in series.items() if samples}
                for name, series in self._timings.items()
            },
        }

    def reset(self) -> None:
        self._counters.clear()
        self._gauges.clear()
        self._timings.clear()


metrics = MetricsCollector()
