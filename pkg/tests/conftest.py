import pytest

from sigma_convolve.eta import CuspTable
from sigma_convolve.modforms import Basis28


@pytest.fixture(scope="session")
def cusp1000() -> CuspTable:
    """Cusp coefficient table shared by the convolution and count checks."""
    return CuspTable(1000)


@pytest.fixture(scope="session")
def basis300() -> Basis28:
    """Fifteen-element basis at order 300 for decomposition checks."""
    return Basis28.at_order(300)
