import os

import pytest

from gspline import WeightedGraph

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def k4():
    return WeightedGraph.load(os.path.join(DATA, "k4.json"))


@pytest.fixture
def k4_path():
    return os.path.join(DATA, "k4.json")
