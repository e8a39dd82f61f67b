import pytest

from jaccube import PrimeField, QQ, curve_from_coeffs, enumerate_classes
from jaccube.cube import build_model, census
from jaccube.verify import find_curve_by_scan

F13 = PrimeField(13)


@pytest.fixture(scope="session")
def f13_curve():
    return curve_from_coeffs(F13, (0, -1, 0, 0, 0), (0, 1, 12))


@pytest.fixture(scope="session")
def f13_classes(f13_curve):
    return enumerate_classes(f13_curve)


@pytest.fixture(scope="session")
def f13_model(f13_curve):
    return build_model(f13_curve)


@pytest.fixture(scope="session")
def f13_census(f13_curve):
    return census(f13_curve)


@pytest.fixture(scope="session")
def f17_curve():
    return find_curve_by_scan(PrimeField(17))


@pytest.fixture(scope="session")
def q_curve():
    return curve_from_coeffs(QQ, (0, -1, 0, 0, 0), (0, 1, -1))
