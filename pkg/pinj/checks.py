# pinj
# SPDX-License-Identifier: MIT
"""Check results and the report that collects them.

Every verifier in pinj (identities, bijection sweeps, spectral and
asymptotic checks) produces CheckResult records and hands them to a
CheckReport.

>>> report = CheckReport([CheckResult('one', (1, 1), 1, True),
...                       CheckResult('two', (2, 3), None, False)])
>>> report.passed
False
>>> [r.name for r in report.failures]
['two']
"""
from collections import namedtuple
from typing import Iterable, List

# `passed` is None for results that are informational only.
CheckResult = namedtuple('CheckResult', ['name', 'closed_form', 'enumerated', 'passed'])


def outcome(passed) -> str:
    if passed is None:
        return 'info'
    return 'pass' if passed else 'FAIL'


def compare(name, lhs, rhs, enumerated=None) -> CheckResult:
    """Both closed-form sides must agree, and the enumerated side with them."""
    passed = lhs == rhs and (enumerated is None or enumerated == lhs)
    return CheckResult(name, (lhs, rhs), enumerated, passed)


def info(name, value) -> CheckResult:
    return CheckResult(name, value, None, None)


class CheckReport(object):
    def __init__(self, results: Iterable[CheckResult] = ()):
        self.results: List[CheckResult] = list(results)

    def extend(self, results: Iterable[CheckResult]):
        self.results.extend(results)

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def __getitem__(self, name):
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(r.passed is not False for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.passed is False]

    def lines(self):
        for r in self.results:
            line = f'{outcome(r.passed)}\t{r.name}:\t{_short(r.closed_form)}'
            if r.enumerated is not None:
                line += f'\tenumerated {_short(r.enumerated)}'
            yield line

    def rows(self):
        for r in self.results:
            yield {
                'name': r.name,
                'closed_form': r.closed_form,
                'enumerated': r.enumerated,
                'outcome': outcome(r.passed),
            }

    def to_json(self):
        return {
            'passed': self.passed,
            'results': [
                {'name': r.name, 'closed_form': r.closed_form,
                 'enumerated': r.enumerated, 'passed': r.passed}
                for r in self.results],
        }


def _short(v, limit=120):
    # Reports on large n carry numbers with hundreds of digits.
    s = str(v)
    return s if len(s) <= limit else s[:limit - 3] + '...'
