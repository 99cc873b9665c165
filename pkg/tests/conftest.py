from pathlib import Path

import numpy as np
import pytest

import quasilogic
from quasilogic import hilbert

DATA_DIR = Path(quasilogic.__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def tilted_example():
    """Two-level (state, A, B) whose logical joint table has a -0.1 cell.

    state = (|0> - 3|1>)/sqrt(10), A = |0><0|, B = |+><+|.
    """
    psi = np.array([1.0, -3.0]) / np.sqrt(10.0)
    rho = hilbert.validate_density(np.outer(psi, psi.conj()))
    a = hilbert.validate_projector(np.diag([1.0, 0.0]))
    b = hilbert.rank_one_projector(np.array([1.0, 1.0]))
    return rho, a, b
