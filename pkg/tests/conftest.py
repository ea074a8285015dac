import pathlib

import pytest

from conjgen.permgroup import load_group
from conjgen.chartab import load_table

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "conjgen" / "data"


def data_file(name):
    return DATA / name


@pytest.fixture(scope="session")
def groups():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_group(data_file(name + ".grp"))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def tables():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_table(data_file(name + ".ctab"))
        return cache[name]

    return get
