import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conjlab import verify


@pytest.fixture(scope="session")
def corpus():
    """The bundled corpus, built once per test session."""
    return verify.default_corpus()


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {entry.name: entry for entry in corpus}
