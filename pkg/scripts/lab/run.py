"""
Run configuration and report output for the command line.

Reports are JSON documents with a fixed schema version and sorted keys; no
timestamps go into the body, so an identical RunConfig gives byte-identical
output.
"""

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

import orjson

from observability import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1
JSON = 'json'
TEXT = 'text'


@dataclass
class RunConfig:
    """Everything that determines a run's output."""
    command: str
    seed: int = 0
    output: str = TEXT
    allow_long: bool = False
    progress: bool = False
    options: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out.pop('progress')
        return out


@dataclass
class RunOutcome:
    """Result of one command: a payload and whether its checks passed."""
    result: Dict[str, Any]
    passed: bool = True
    text: Optional[str] = None


def build_report(config: RunConfig, outcome: RunOutcome, run_id: str) -> Dict[str, Any]:
    return {
        'schema': SCHEMA_VERSION,
        'run_id': run_id,
        'config': config.to_dict(),
        'passed': outcome.passed,
        'result': outcome.result,
    }


def dump_report(report: Dict[str, Any]) -> bytes:
    return orjson.dumps(report, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2)


def _text_lines(value: Any, indent: int = 0):
    pad = '  ' * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                yield f"{pad}{key}:"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}{key}: {item}"
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict) and 'name' in item and 'passed' in item:
                status = 'PASS' if item['passed'] else 'FAIL'
                extra = ''
                if 'observed' in item:
                    extra = f" (observed {item['observed']}, expected {item.get('expected')})"
                yield f"{pad}[{status}] {item['name']}{extra}"
            elif isinstance(item, (dict, list)):
                yield from _text_lines(item, indent)
                yield f"{pad}--"
            else:
                yield f"{pad}- {item}"
    else:
        yield f"{pad}{value}"


def format_text(report: Dict[str, Any], outcome: RunOutcome) -> str:
    lines = [f"{report['config']['command']}: {'PASS' if report['passed'] else 'FAIL'}"]
    if outcome.text:
        lines.append(outcome.text)
    lines.extend(_text_lines(report['result']))
    return '\n'.join(lines) + '\n'


def emit(config: RunConfig, outcome: RunOutcome, run_id: str, stream: TextIO,
         report_file: Optional[str] = None) -> Dict[str, Any]:
    """Write the report to stream in the configured format, and as JSON to report_file."""
    report = build_report(config, outcome, run_id)
    payload = dump_report(report)
    if config.output == JSON:
        stream.write(payload.decode('utf-8') + '\n')
    else:
        stream.write(format_text(report, outcome))
    if report_file:
        path = Path(report_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(payload + b'\n')
        logger.info("Report written", extra={'path': str(path)})
    return report
