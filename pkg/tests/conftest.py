import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import P  # noqa: E402


@pytest.fixture(scope="session")
def corpus_polys():
    """The acceptance corpus: all degree <= 4 classics plus x^5 - 2."""
    return {
        "x^2-2": P(-2, 0, 1),
        "x^2+x+1": P(1, 1, 1),
        "x^3-2": P(-2, 0, 0, 1),
        "x^3-3x-1": P(-1, -3, 0, 1),
        "x^4-1": P(-1, 0, 0, 0, 1),
        "x^4+1": P(1, 0, 0, 0, 1),
        "x^4+x+1": P(1, 1, 0, 0, 1),
        "x^5-2": P(-2, 0, 0, 0, 0, 1),
    }


@pytest.fixture(scope="session")
def corpus_fields(corpus_polys):
    from galoiskit.splitting import splitting_field

    return {name: splitting_field(p) for name, p in corpus_polys.items()}


@pytest.fixture(scope="session")
def corpus_groups(corpus_fields):
    from galoiskit.galois import galois_group

    return {name: galois_group(e) for name, e in corpus_fields.items()}
