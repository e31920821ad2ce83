import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hollowlab.corpus import build_corpus, parse_ring  # noqa: E402
from hollowlab.lattice import enumerate_ideals  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def lattices(corpus):
    return {R.provenance: enumerate_ideals(R) for R in corpus}


def lat(name):
    R = parse_ring(name)
    return enumerate_ideals(R)


def idx(L, label):
    """Lattice index of the ideal printed as ``label``."""
    return L.labels.index(label)
