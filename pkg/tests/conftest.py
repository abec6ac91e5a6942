import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eqsig.catalog import build_7_4, build_torus_2_odd, build_unknot_axis_kink  # noqa: E402

CORPUS_DIR = Path(__file__).parent / "corpus"


@pytest.fixture(scope="session")
def unknot():
    return build_unknot_axis_kink()


@pytest.fixture(scope="session")
def trefoil():
    return build_torus_2_odd(1)


@pytest.fixture(scope="session")
def t25():
    return build_torus_2_odd(2)


@pytest.fixture(scope="session")
def k74_plus():
    return build_7_4("plus")


@pytest.fixture(scope="session")
def k74_minus():
    return build_7_4("minus")
