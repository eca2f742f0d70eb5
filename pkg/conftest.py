# pinj
# SPDX-License-Identifier: MIT
import pytest

from pinj.identities import Oracle


@pytest.fixture(scope='session')
def oracle():
    """Enumerated tallies shared across the test session."""
    return Oracle()
