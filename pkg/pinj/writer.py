# pinj
# SPDX-License-Identifier: MIT
"""Serialising elements and reports.

Counts are written as decimal strings so no JSON consumer loses precision;
structural values (sizes, points, ranks, lengths) stay JSON numbers.

>>> from fractions import Fraction
>>> Writer().write_val(Fraction(21, 34))
{'num': '21', 'den': '34'}
>>> Writer().write_val(2 ** 70)
'1180591620717411303424'
"""
import csv
import json
from fractions import Fraction

import attr

from pinj.element import PartialInjection, chart_decomposition

# Integers under these keys are written as numbers.
NUMBER_FIELDS = frozenset([
    'n', 'k', 'm', 'i', 'trials', 'map',
    'rank', 'defect', 'stable_rank', 'nilpotency_index', 'fixed_point_count',
    'cycle_counts', 'chain_counts', 'cycles', 'chains',
    'start', 'points', 'length',
    'x', 'y', 'z', 'index', 'base', 'peak', 'order',
])


def render_chart(a: PartialInjection) -> str:
    """Canonical chart notation of `a`.

    >>> from pinj.element import identity
    >>> render_chart(identity(3))
    '(1)(2)(3)'
    """
    return str(chart_decomposition(a))


def element_json(a: PartialInjection) -> dict:
    return {'n': a.n, 'map': list(a.table)}


class Writer(object):
    def __init__(self, stream=None):
        self.stream = stream

    def write_val(self, v, number=False):
        if isinstance(v, bool) or v is None or isinstance(v, (str, float)):
            return v
        elif isinstance(v, int):
            return v if number else str(v)
        elif isinstance(v, Fraction):
            return {'num': str(v.numerator), 'den': str(v.denominator)}
        elif isinstance(v, PartialInjection):
            return element_json(v)
        elif isinstance(v, dict):
            return {str(key): self.write_val(val, number or key in NUMBER_FIELDS)
                    for key, val in v.items()}
        elif isinstance(v, (list, tuple)):
            return [self.write_val(i, number) for i in v]
        elif attr.has(type(v)):
            result = {}
            kind = getattr(type(v), 'KIND', None)
            if kind is not None:
                result['kind'] = kind
            for field in attr.fields(type(v)):
                if field.name.startswith('_'):
                    continue
                result[field.name] = self.write_val(
                    getattr(v, field.name), number or field.name in NUMBER_FIELDS)
            return result
        elif hasattr(v, 'to_json'):
            return self.write_val(v.to_json())

        raise TypeError(f'cannot serialise {type(v).__name__}')

    def write_json(self, obj):
        json.dump(self.write_val(obj), self.stream, indent=2)
        self.stream.write('\n')

    def write_csv(self, rows):
        rows = list(rows)
        if not rows:
            return
        out = csv.DictWriter(self.stream, fieldnames=list(rows[0].keys()), lineterminator='\n')
        out.writeheader()
        for row in rows:
            out.writerow({key: csv_val(val) for key, val in row.items()})

    def write_lines(self, lines):
        for line in lines:
            self.stream.write(f'{line}\n')


def csv_val(v):
    """Flatten a value into one CSV cell.

    >>> csv_val(Fraction(1, 4)), csv_val(True), csv_val(None)
    ('1/4', 'true', '')
    """
    if isinstance(v, bool):
        return 'true' if v else 'false'
    elif v is None:
        return ''
    elif isinstance(v, Fraction):
        return f'{v.numerator}/{v.denominator}'
    elif isinstance(v, PartialInjection):
        return render_chart(v)
    elif isinstance(v, (list, tuple)):
        return ' '.join(csv_val(i) for i in v)
    return str(v)
