import pytest

from hkforms.lefschetz import bracket_table, build_basis, root_system
from hkforms.quaternionic import standard_triple


@pytest.fixture(scope="session")
def basis1():
    return build_basis(standard_triple(1))


@pytest.fixture(scope="session")
def basis2():
    return build_basis(standard_triple(2))


@pytest.fixture(scope="session")
def table1(basis1):
    return bracket_table(basis1)


@pytest.fixture(scope="session")
def table2(basis2):
    return bracket_table(basis2)


@pytest.fixture(scope="session")
def roots1(table1):
    return root_system(table1)


@pytest.fixture(scope="session")
def roots2(table2):
    return root_system(table2)


def all_pass(checks):
    """True iff every check record passed; handy across the suite."""
    return all(c["status"] == "pass" for c in checks)


def failed(checks):
    return [c["name"] for c in checks if c["status"] != "pass"]
