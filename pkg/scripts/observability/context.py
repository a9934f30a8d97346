"""
Run context management with deterministic run ids.

A run is one CLI invocation or one library computation driven by a seed.
The run id is derived from the seed and command so that two identical
runs log identical ids.
"""

import hashlib
import time
from contextvars import ContextVar
from typing import Optional, Dict, Any

_run_id: ContextVar[Optional[str]] = ContextVar('run_id', default=None)
_run_context: ContextVar[Optional[Dict[str, Any]]] = ContextVar('run_context', default=None)


def derive_run_id(seed: int, command: str = '') -> str:
    """Derive a stable run id from seed and command."""
    digest = hashlib.sha256(f"{command}:{seed}".encode('utf-8')).hexdigest()
    return f"run_{digest[:12]}"


def get_run_id() -> Optional[str]:
    """Get the current run id from context."""
    return _run_id.get()


def set_run_id(run_id: str) -> None:
    """Set the run id in context."""
    _run_id.set(run_id)


class RunContext:
    """
    Context manager for run tracking.

    Usage:
        with run_context(seed=7, command='quot dim') as ctx:
            ctx.set('ideal', 'FF')
            logger.info("Closing ideal", extra=ctx.to_dict())
    """

    def __init__(self, seed: int = 0, command: str = '', run_id: Optional[str] = None):
        self.seed = seed
        self.command = command
        self.run_id = run_id or derive_run_id(seed, command)
        self._start = time.perf_counter()
        self._data: Dict[str, Any] = {'seed': seed, 'command': command}
        self._previous_run_id: Optional[str] = None
        self._previous_context: Optional[Dict[str, Any]] = None

    def __enter__(self) -> 'RunContext':
        self._previous_run_id = _run_id.get()
        self._previous_context = _run_context.get()

        _run_id.set(self.run_id)
        _run_context.set(self._data)

        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        _run_id.set(self._previous_run_id)
        _run_context.set(self._previous_context)

    def set(self, key: str, value: Any) -> None:
        """Set a value in the run context."""
        self._data[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        """Get a value from the run context."""
        return self._data.get(key, default)

    def to_dict(self) -> Dict[str, Any]:
        """Context as a flat dictionary for log records."""
        return {'run_id': self.run_id, **self._data}

    @property
    def elapsed_ms(self) -> int:
        """Elapsed wall time in milliseconds since the context was created."""
        return int((time.perf_counter() - self._start) * 1000)


def run_context(seed: int = 0, command: str = '', run_id: Optional[str] = None) -> RunContext:
    """
    Create a new run context.

    Args:
        seed: Seed that determines every random choice of the run
        command: Command name, folded into the run id
        run_id: Explicit run id overriding the derived one

    Returns:
        RunContext instance
    """
    return RunContext(seed=seed, command=command, run_id=run_id)


def get_current_context() -> Optional[Dict[str, Any]]:
    """Get the current run context data."""
    return _run_context.get()
