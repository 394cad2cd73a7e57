from __future__ import annotations

import pytest

from hamming_radio.data import golden_document, golden_ordering
from hamming_radio.graphs import make_graph_spec


@pytest.fixture(scope="session")
def k32_spec():
    return make_graph_spec([(3, 2)])


@pytest.fixture(scope="session")
def k34_spec():
    return make_graph_spec([(3, 4)])


@pytest.fixture(scope="session")
def golden_k32():
    return golden_ordering("k3_2")


@pytest.fixture(scope="session")
def golden_k34():
    return golden_ordering("k3_4")


@pytest.fixture(scope="session")
def golden_k34_document():
    return golden_document("k3_4")
