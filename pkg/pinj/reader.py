# pinj
# SPDX-License-Identifier: MIT
"""Reading elements from chart notation and from JSON.

Chart notation is a run of cycles `(p1,...,pk)` and chains `[p1,...,pk]`:

>>> str(parse_chart('(1,7,2,4)[3,5,10][9,6][8]', 10))
'(1,7,2,4)[3,5,10][9,6][8]'
>>> str(parse_chart('[2][3] (2,1)', 3))
Traceback (most recent call last):
    ...
pinj.errors.RepeatedPoint: point 2 appears more than once in the chart
"""
import json
from functools import lru_cache

import jsonschema
from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput

from pinj.element import ChartDecomposition, PartialInjection, from_chart, from_map, from_pairs
from pinj.errors import ChartSyntaxError, InvalidElementJson

CHART_GRAMMAR = r"""
start          : term*
?term          : cycle | chain
cycle          : "(" intlist ")"
chain          : "[" intlist "]"
intlist        : INT ("," INT)*

%import common.INT    -> INT
%import common.WS
%ignore WS
"""

ELEMENT_SCHEMA = {
    'type': 'object',
    'required': ['n', 'map'],
    'properties': {
        'n': {'type': 'integer', 'minimum': 0},
        'map': {
            'type': 'array',
            'items': {'type': ['integer', 'null']},
        },
    },
    'additionalProperties': False,
}

PAIRS_SCHEMA = {
    'type': 'array',
    'items': {
        'type': 'array',
        'items': {'type': 'integer'},
        'minItems': 2,
        'maxItems': 2,
    },
}


class TreeToChart(Transformer):
    def start(self, sk):
        cycles = tuple(body for kind, body in sk if kind == 'cycle')
        chains = tuple(body for kind, body in sk if kind == 'chain')
        return ChartDecomposition(cycles=cycles, chains=chains)

    def cycle(self, sk):
        return ('cycle', sk[0])

    def chain(self, sk):
        return ('chain', sk[0])

    def intlist(self, sk):
        return tuple(sk)

    def INT(self, sk):
        return int(sk.value)


@lru_cache(maxsize=None)
def _parser():
    return Lark(CHART_GRAMMAR, parser='lalr', start='start', transformer=TreeToChart())


def read_chart(text: str) -> ChartDecomposition:
    """Parse chart notation without checking it against a ground set."""
    try:
        return _parser().parse(text)
    except UnexpectedInput as e:
        # end-of-input errors carry no position
        column = getattr(e, 'column', -1)
        where = f'column {column}' if column and column > 0 else 'end of input'
        raise ChartSyntaxError(f'malformed chart at {where}: {text!r}') from e


def parse_chart(text: str, n: int) -> PartialInjection:
    """Parse `text` into an element of IS_n.

    Every point of {1..n} must appear exactly once. Components need not be in
    canonical rotation or order.

    >>> parse_chart('(1,2](3)', 3)  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
        ...
    pinj.errors.ChartSyntaxError: malformed chart
    """
    return from_chart(read_chart(text), n)


def _load(data):
    if isinstance(data, (str, bytes)):
        try:
            return json.loads(data)
        except ValueError as e:
            raise InvalidElementJson(f'not valid JSON: {e}') from e
    return data


def read_element_json(data) -> PartialInjection:
    """Read `{"n": int, "map": [int|null, ...]}` (a string or parsed data).

    >>> str(read_element_json('{"n": 3, "map": [2, null, 1]}'))
    '[3,1,2]'
    """
    data = _load(data)
    try:
        jsonschema.validate(data, ELEMENT_SCHEMA)
    except jsonschema.ValidationError as e:
        raise InvalidElementJson(f'element JSON rejected: {e.message}') from e
    if len(data['map']) != data['n']:
        raise InvalidElementJson(
            f'map has {len(data["map"])} entries but n is {data["n"]}')
    return from_map(data['n'], data['map'])


def read_pairs_json(n: int, data) -> PartialInjection:
    """Read a JSON list of [x, y] pairs into an element of IS_n."""
    data = _load(data)
    try:
        jsonschema.validate(data, PAIRS_SCHEMA)
    except jsonschema.ValidationError as e:
        raise InvalidElementJson(f'pairs JSON rejected: {e.message}') from e
    return from_pairs(n, [tuple(p) for p in data])
