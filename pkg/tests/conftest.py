"""Shared exchange matrices and the graphs built from them."""

import pytest

from cambrian.cluster.exchange import ExchangeMatrix, validate
from cambrian.core.coxeter import CoxeterGroup
from cambrian.core.rootsys import build
from cambrian.geometry.framework import doubled_graph

A2 = [[0, 1], [-1, 0]]
A1_AFFINE = [[0, 2], [-2, 0]]
G2_AFFINE = [[0, 1, 1], [-3, 0, 0], [-1, 0, 0]]
INDEFINITE_344 = [[0, -1, -2], [1, 0, -2], [1, 1, 0]]
NONSTANDARD_CARTAN = [[2, -1], [-4, 2]]


@pytest.fixture(scope="session")
def a2():
    return build(validate(A2))


@pytest.fixture(scope="session")
def a1_affine():
    return build(validate(A1_AFFINE))


@pytest.fixture(scope="session")
def g2_affine():
    return build(validate(G2_AFFINE))


@pytest.fixture(scope="session")
def nonstandard():
    return build(ExchangeMatrix.from_cartan(NONSTANDARD_CARTAN))


@pytest.fixture(scope="session")
def indefinite():
    return build(validate(INDEFINITE_344))


@pytest.fixture(scope="session")
def a2_group(a2):
    return CoxeterGroup(a2.cartan, a2.d)


@pytest.fixture(scope="session")
def a2_graph(a2):
    return doubled_graph(a2, 8)


@pytest.fixture(scope="session")
def a1_graph(a1_affine):
    return doubled_graph(a1_affine, 8)


@pytest.fixture(scope="session")
def g2_graph(g2_affine):
    return doubled_graph(g2_affine, 8)
