from __future__ import annotations

import pytest

from cayley.core import cyclic_group, symmetric_group
from cayley.products import direct_product


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def c6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def klein():
    return direct_product(cyclic_group(2), cyclic_group(2)).group
