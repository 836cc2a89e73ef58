"""Shared fixtures: the semigroups of the residue tables and their distributions."""

import csv
from pathlib import Path

import pytest

from core.semigroup import new_semigroup
from tools.enumeration import length_distribution

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def mcnugget():
    return new_semigroup([6, 9, 20])


@pytest.fixture(scope="session")
def bigger_delta():
    return new_semigroup([17, 29, 47, 65])


@pytest.fixture(scope="session")
def worked_example():
    return new_semigroup([7, 19, 25, 31])


@pytest.fixture(scope="session")
def mcnugget_1000(mcnugget):
    return length_distribution(mcnugget, 1000)


@pytest.fixture(scope="session")
def bigger_delta_5000(bigger_delta):
    return length_distribution(bigger_delta, 5000)


@pytest.fixture(scope="session")
def golden():
    """Loader for the transcribed residue tables: rows of (modulus, residue, count, proportion)."""

    def load(name):
        with open(GOLDEN / name, newline="", encoding="utf-8") as handle:
            return [
                (int(row["modulus"]), int(row["residue"]), int(row["count"]), row["proportion"])
                for row in csv.DictReader(handle)
            ]

    return load
