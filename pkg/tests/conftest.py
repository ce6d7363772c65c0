"""Shared fixtures.

The full dictionary fixtures are session-scoped because parsing 126k
entries takes a couple of seconds and several test modules want them.
"""

import os

import pytest

from lexiforge.align import default_equivalences
from lexiforge.lexicon import read_cmu_dict
from lexiforge.phoneset import default_phoneset
from lexiforge.rules import default_rules

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DICT_PATH = os.path.join(REPO_ROOT, "data", "cmudict.dict")


@pytest.fixture(scope="session")
def phoneset():
    return default_phoneset()


@pytest.fixture(scope="session")
def equiv():
    return default_equivalences()


@pytest.fixture(scope="session")
def ruleset():
    return default_rules()


@pytest.fixture(scope="session")
def dict_path():
    if not os.path.exists(DICT_PATH):
        pytest.skip(f"dictionary not found at {DICT_PATH}")
    return DICT_PATH


@pytest.fixture(scope="session")
def full_lexicon(dict_path, phoneset):
    with open(dict_path, encoding="utf-8") as fh:
        return read_cmu_dict(fh.read(), phoneset, strict=True, path=dict_path)
