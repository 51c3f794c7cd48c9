import pathlib

import pytest

from pedvis.fixtures import make_nine_families_csv, nine_families_dataset
from pedvis.ingest import Dataset


@pytest.fixture(scope="session")
def nine() -> Dataset:
    return nine_families_dataset()


@pytest.fixture(scope="session")
def nine_csv() -> str:
    return make_nine_families_csv()


@pytest.fixture(scope="session")
def nine_csv_path(nine_csv, tmp_path_factory) -> str:
    path = tmp_path_factory.mktemp("data") / "nine.csv"
    path.write_text(nine_csv, encoding="utf-8", newline="")
    return str(path)


@pytest.fixture(scope="session")
def repo_csv_path() -> pathlib.Path:
    return pathlib.Path(__file__).resolve().parent.parent / "data" / "nine_families.csv"
