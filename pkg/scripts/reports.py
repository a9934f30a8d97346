"""
Check results shared by every verification routine.

A CheckReport is a named list of CheckResult entries; the CLI serializes
reports with to_dict() and exits non-zero when any result fails.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    """Outcome of one relation, identity or count."""
    name: str
    passed: bool
    observed: Any = None
    expected: Any = None
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        out = {'name': self.name, 'passed': self.passed}
        if self.observed is not None:
            out['observed'] = self.observed
        if self.expected is not None:
            out['expected'] = self.expected
        if self.detail:
            out['detail'] = self.detail
        return out


@dataclass
class CheckReport:
    """Named collection of check results."""
    name: str
    results: List[CheckResult] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, passed: bool, **kwargs) -> CheckResult:
        result = CheckResult(name, bool(passed), **kwargs)
        self.results.append(result)
        return result

    def extend(self, other: 'CheckReport', prefix: str = '') -> None:
        for result in other.results:
            self.results.append(CheckResult(prefix + result.name, result.passed, result.observed,
                                            result.expected, result.detail))

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'total': len(self.results),
            'failed': len(self.failures),
            'metadata': self.metadata,
            'results': [result.to_dict() for result in self.results],
        }
