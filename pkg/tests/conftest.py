from __future__ import annotations

from pathlib import Path

import pytest

from ginikit.mwd import MWDataset

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def two_species() -> MWDataset:
    """The reference two-species distribution: masses 100 and 300, equal parts."""
    return MWDataset([(100.0, 1.0), (300.0, 1.0)], label="two_species")
