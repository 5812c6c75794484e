import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from racb.coxeter import CoxeterSystem


@pytest.fixture(scope="session")
def a1():
    """Infinite dihedral group: two non-commuting involutions."""
    return CoxeterSystem.from_pairs(["a", "b"], [])


@pytest.fixture(scope="session")
def d2():
    """(Z/2)^2: two commuting involutions."""
    return CoxeterSystem.from_pairs(["a", "b"], [("a", "b")])


@pytest.fixture(scope="session")
def p5():
    """Right-angled pentagon group: cyclically adjacent generators commute."""
    return CoxeterSystem.cycle(5)
