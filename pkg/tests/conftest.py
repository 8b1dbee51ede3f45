import datetime as dt
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from plusshop.api import create_app
from plusshop.seed import seed_demo
from plusshop.store import LedgerStore

GOLDEN_DIR = Path(__file__).parent / "golden"

# fixed timestamp so seeded journals are reproducible byte for byte
SEED_AT = dt.datetime(2008, 8, 5, 8, 0, 0, tzinfo=dt.timezone(dt.timedelta(hours=7)))


@pytest.fixture
def store(tmp_path):
    st = LedgerStore(tmp_path / "journal.plusledger")
    yield st
    st.close()


@pytest.fixture
def seeded(store):
    seed_demo(store, at=SEED_AT)
    return store


@pytest.fixture
def client(store):
    app = create_app(store)
    with TestClient(app) as c:
        yield c


@pytest.fixture
def seeded_client(seeded):
    app = create_app(seeded)
    with TestClient(app) as c:
        yield c


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")
