# pinj
# SPDX-License-Identifier: MIT
from hypothesis import strategies as st

from pinj.element import UNDEFINED, from_map


@st.composite
def partial_injections(draw, min_n=0, max_n=8, n=None):
    """A uniform-ish element: a permutation of {1..n} with some entries dropped."""
    if n is None:
        n = draw(st.integers(min_value=min_n, max_value=max_n))
    images = draw(st.permutations(range(1, n + 1)))
    keep = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return from_map(n, [v if k else UNDEFINED for v, k in zip(images, keep)])


@st.composite
def same_size(draw, count, min_n=0, max_n=8):
    """`count` elements of one IS_n."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return tuple(draw(partial_injections(n=n)) for _ in range(count))
