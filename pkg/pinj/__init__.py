# pinj
# SPDX-License-Identifier: MIT
"""The symmetric inverse semigroup IS_n: partial injections of {1..n}, their
chart decomposition, exact counts and the rank of random products.

>>> from pinj import parse_chart, profile
>>> profile(parse_chart('(1,7,2,4)[3,5,10][9,6][8]', 10)).stable_rank
4
"""
from pinj.counting import count_table, is_card, lah_number, t_card
from pinj.element import (ChartDecomposition, PartialInjection, chart_decomposition,
                          compose, from_chart, from_map, from_pairs, identity, inverse,
                          orbit, power, profile, zero)
from pinj.enumeration import enumerate_elements, rank_of, tally, unrank
from pinj.errors import PinjError
from pinj.identities import verify_identities
from pinj.products import rank_distribution
from pinj.reader import parse_chart, read_element_json
from pinj.writer import render_chart

__version__ = '0.1.0'

__all__ = [
    'ChartDecomposition', 'PartialInjection', 'PinjError', 'chart_decomposition', 'compose',
    'count_table', 'enumerate_elements', 'from_chart', 'from_map', 'from_pairs', 'identity',
    'inverse', 'is_card', 'lah_number', 'orbit', 'parse_chart', 'power', 'profile', 'rank_distribution',
    'rank_of', 'read_element_json', 'render_chart', 't_card', 'tally', 'unrank', 'verify_identities', 'zero',
]
