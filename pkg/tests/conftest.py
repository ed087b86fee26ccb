import pytest

from silabi import SyllableTokenizer, load_inventory

from oracles import SegmentationOracle


@pytest.fixture(scope="session")
def inventory():
    return load_inventory()


@pytest.fixture(scope="session")
def tokenizer(inventory):
    return SyllableTokenizer(inventory)


@pytest.fixture(scope="session")
def oracle(inventory):
    return SegmentationOracle(inventory.entries)
